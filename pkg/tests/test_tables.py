"""Minor transfer tables between Sp(4) and SO(5)."""

import pytest

from sp4gt.exact import QSqrt2
from sp4gt.group import eval_assignment, sample_set
from sp4gt.tables import ALL_ENTRIES, T1, T2, sign_differences, transfer_map

SAMPLES = sample_set(20, seed=17)


def _values(entry, s):
    a = s.a_values[entry.a_symbol] * entry.a_orientation
    b = eval_assignment(entry.b_poly(), s)
    return a, b


@pytest.mark.parametrize("entry", ALL_ENTRIES, ids=lambda e: e.a_name)
def test_identity_exact(entry):
    c = entry.factor()
    for s in SAMPLES:
        a, b = _values(entry, s)
        assert a == c * b


@pytest.mark.parametrize("entry", ALL_ENTRIES, ids=lambda e: e.a_name)
def test_identity_squared_is_rational(entry):
    c2 = entry.factor() * entry.factor()
    assert c2.is_rational()
    for s in SAMPLES:
        a, b = _values(entry, s)
        assert (a * a).is_rational()
        assert a * a == c2 * QSqrt2(b * b)


def test_sign_differences_are_real():
    """Entries whose measured sign differs from the printed one fail with the printed sign."""
    diffs = sign_differences()
    assert {e.a_name for e in diffs} == {"a[1]", "a[2]", "a[-2,0]", "a[-1,0]", "a[0,1]", "a[0,2]", "a[-2,1]", "a[1,2]"}
    for e in diffs:
        wrong = entry_factor_with_sign(e, e.printed_sign)
        pairs = [_values(e, s) for s in SAMPLES]
        assert any(b != 0 and a != wrong * b for a, b in pairs)


def entry_factor_with_sign(entry, sign):
    return entry.factor() * QSqrt2(sign * entry.sign)


def test_table_sizes():
    assert len(T1) == 5 and len(T2) == 10
    assert len(transfer_map()) == 15
