"""Acceptance gate: every criterion at its stated tolerance.

Each criterion is implemented in the verification registry (the CLI's
`verify` subcommand runs the same code); this module runs them one by one
and prints a pass/fail line per criterion.
"""

import pytest

from bisteklov.verify import acceptance_checks

_CHECKS = acceptance_checks()


def test_all_eleven_criteria_are_registered():
    assert [entry[2] for entry in _CHECKS] == list(range(1, 12))


@pytest.mark.parametrize("suite,name,number,fn", _CHECKS,
                         ids=[f"criterion-{entry[2]:02d}" for entry in _CHECKS])
def test_acceptance_criterion(suite, name, number, fn):
    passed, detail = fn()
    print(f"criterion {number} [{name}]: {'PASS' if passed else 'FAIL'} - {detail}")
    assert passed, f"criterion {number} ({name}): {detail}"
