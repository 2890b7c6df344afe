from fractions import Fraction

import pytest

from jkdp.cyclic import (
    CyclicType,
    ValidationError,
    all_types,
    h_series,
    hj_expand,
    i_series,
    inverse_weight,
    j_series,
)


def test_type_validation():
    with pytest.raises(ValidationError):
        CyclicType(1, 1)
    with pytest.raises(ValidationError):
        CyclicType(4, 2)
    with pytest.raises(ValidationError):
        CyclicType(5, 5)
    with pytest.raises(ValidationError):
        CyclicType(5, 0)
    assert CyclicType(5, 3).a == 3


@pytest.mark.parametrize(
    "r, a, alphas",
    [
        (5, 3, (2, 3)),
        (7, 1, (7,)),
        (9, 4, (3, 2, 2, 2)),
        (7, 3, (3, 2, 2)),
    ],
)
def test_hj_expand_known(r, a, alphas):
    assert hj_expand(CyclicType(r, a)).alphas == alphas


def test_hj_value_roundtrip():
    exp = hj_expand(CyclicType(7, 3))
    assert exp.value() == Fraction(7, 3)


@pytest.mark.parametrize(
    "r, a, values",
    [
        (5, 3, (5, 3, 1, 0)),
        (7, 1, (7, 1, 0)),
        (9, 4, (9, 4, 3, 2, 1, 0)),
    ],
)
def test_i_series_known(r, a, values):
    assert i_series(CyclicType(r, a)).values == values


@pytest.mark.parametrize(
    "r, a, values",
    [
        (5, 2, (0, 1, 3, 5)),
        (7, 1, (0, 1, 7)),
    ],
)
def test_j_series_known(r, a, values):
    assert j_series(CyclicType(r, a)).values == values


def test_j_reversal_is_i_of_inverse():
    t = CyclicType(5, 3)
    assert tuple(reversed(j_series(t).values)) == i_series(CyclicType(5, 2)).values
    assert i_series(CyclicType(5, 2)).values == (5, 2, 1, 0)


@pytest.mark.parametrize(
    "r, a, s, values",
    [
        (5, 2, 1, (1, 0, 1, 2)),
        (5, 2, 2, (3, 1, 0, 1)),
    ],
)
def test_h_series_known(r, a, s, values):
    assert h_series(CyclicType(r, a), s).values == values


def test_h_series_boundaries():
    for t in (CyclicType(5, 2), CyclicType(7, 3), CyclicType(11, 4)):
        n = hj_expand(t).n
        assert h_series(t, 0).values == j_series(t).values
        assert h_series(t, n + 1).values == i_series(t).values


@pytest.mark.parametrize(
    "r, a, inv",
    [(5, 3, 2), (7, 3, 5), (7, 1, 1), (12, 5, 5)],
)
def test_inverse_weight(r, a, inv):
    assert inverse_weight(CyclicType(r, a)) == CyclicType(r, inv)


def test_series_identities_sweep():
    """Exhaustive exact identities for every type with r <= 200."""
    for t in all_types(200):
        exp = hj_expand(t)
        assert exp.value() == Fraction(t.r, t.a)
        ser = i_series(t)
        n = exp.n
        assert ser[0] == t.r and ser[1] == t.a
        assert ser[n] == 1 and ser[n + 1] == 0
        assert all(ser[p] > ser[p + 1] for p in range(n + 1))
        for p in range(2, n + 2):
            assert ser[p] == exp.alphas[p - 2] * ser[p - 1] - ser[p - 2]
        from math import gcd

        assert all(gcd(ser[p], ser[p + 1]) == 1 for p in range(n + 1))
        jser = j_series(t)
        assert jser[0] == 0 and jser[1] == 1 and jser[n + 1] == t.r
        inv = inverse_weight(t)
        assert tuple(reversed(exp.alphas)) == hj_expand(inv).alphas
        assert tuple(reversed(jser.values)) == i_series(inv).values


def test_h_series_recursions_sweep():
    """Three-term relation alpha_t h_t = h_{t-1} + h_{t+1} away from the zero."""
    for t in all_types(200):
        exp = hj_expand(t)
        n = exp.n
        for s in range(n + 2):
            hs = h_series(t, s)
            assert hs[s] == 0
            if s >= 1:
                assert hs[s - 1] == 1
            if s <= n:
                assert hs[s + 1] == 1
            for p in range(1, n + 1):
                if p == s:
                    continue
                assert exp.alphas[p - 1] * hs[p] == hs[p - 1] + hs[p + 1], (t, s, p)


def test_h_series_truncations():
    """Upper truncation of H(s) is the increasing series of (i_s, i_{s+1})."""
    for t in all_types(40):
        ser = i_series(t)
        n = hj_expand(t).n
        for s in range(1, n):
            hs = h_series(t, s)
            sub = CyclicType(ser[s], ser[s + 1]) if ser[s] > 1 else None
            if sub is not None:
                assert hs.values[s:] == j_series(sub).values
