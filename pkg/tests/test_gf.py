import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fareysub import BivarPoly, FareyError, UnivarPoly, coprime_count, coprime_powersum, farey_oracle, gf_lower, gf_upper
from fareysub.gf import reflect, render_terms
from fareysub.numeric import ceil_div


@pytest.mark.parametrize("i, lo, hi, expected", [(4, 3, 10, 4), (1, 1, 9, 9), (6, 7, 6, 0)])
def test_coprime_count_examples(i, lo, hi, expected):
    assert coprime_count(i, lo, hi) == expected


def test_coprime_count_random_against_scan():
    rng = random.Random(20240611)
    for _ in range(10_000):
        i = rng.randint(1, 500)
        hi = rng.randint(0, 10_000)
        lo = rng.randint(1, hi + 1)
        assert coprime_count(i, lo, hi) == sum(1 for j in range(lo, hi + 1) if gcd(i, j) == 1)


def test_coprime_powersum_examples():
    assert coprime_powersum(2, 3, 6) == UnivarPoly({3: 1, 5: 1})
    assert coprime_powersum(1, 2, 3) == UnivarPoly({2: 1, 3: 1})
    assert coprime_powersum(5, 4, 3) == UnivarPoly()


def test_coprime_powersum_exhaustive():
    for i in range(1, 61):
        for lo in range(1, 201, 7):
            for hi in range(lo - 1, 201, 11):
                direct = UnivarPoly({j: 1 for j in range(lo, hi + 1) if gcd(i, j) == 1})
                got = coprime_powersum(i, lo, hi, check=False)
                assert got == direct
                assert got.evaluate(1) == coprime_count(i, lo, hi)


def test_coprime_powersum_rejects():
    with pytest.raises(FareyError):
        coprime_powersum(0, 1, 3)
    with pytest.raises(FareyError):
        coprime_powersum(3, 0, 3)


def test_gf_lower_worked_example():
    expected = BivarPoly({(1, 3): 1, (1, 4): 1, (1, 5): 1, (2, 5): 1})
    assert gf_lower(5, "closed_form") == expected
    assert gf_lower(5, "enumerate") == expected


def test_gf_upper_m5():
    expected = BivarPoly({(3, 5): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1})
    assert gf_upper(5, "closed_form") == expected
    assert gf_upper(5, "enumerate") == expected


@pytest.mark.parametrize("fn", [gf_lower, gf_upper])
def test_gf_m2_is_zero(fn):
    assert fn(2, "closed_form") == BivarPoly()
    assert fn(2, "enumerate") == BivarPoly()


def test_gf_lower_m7_mass():
    assert gf_lower(7).evaluate(1, 1) == 8


def test_gf_rejects():
    with pytest.raises(FareyError):
        gf_lower(1)
    with pytest.raises(FareyError):
        gf_upper(5, "symbolic")


def lower_by_inner_sums(m):
    """Middle expression of the identity: x^i times the coprime power sum over [2i+1, m]."""
    out = {}
    for i in range(1, ceil_div(m, 2)):
        for j, c in coprime_powersum(i, 2 * i + 1, m, check=False).coeffs.items():
            out[(i, j)] = c
    return BivarPoly(out)


@pytest.mark.parametrize("m", range(2, 50))
def test_gf_lower_inner_sum_form(m):
    assert lower_by_inner_sums(m) == gf_lower(m, "enumerate")


@pytest.mark.parametrize("m", [3, 10, 31, 64, 97])
def test_gf_methods_agree_sample(m):
    assert gf_lower(m, "closed_form") == gf_lower(m, "enumerate")
    assert gf_upper(m, "closed_form") == gf_upper(m, "enumerate")


def test_gf_symmetry_and_mass():
    for m in range(2, 121):
        lower = gf_lower(m, "enumerate")
        upper = gf_upper(m, "enumerate")
        assert reflect(lower) == upper
        assert lower.at_x1() == upper.at_x1()
        assert 2 * lower.evaluate(1, 1) == len(farey_oracle(m)) - 3


def test_bivar_truncated_mul():
    p = BivarPoly({(0, 0): 1, (1, 1): 1})
    assert p.mul(p, cap=(1, 1)) == BivarPoly({(0, 0): 1, (1, 1): 2})
    assert p.mul(p) == BivarPoly({(0, 0): 1, (1, 1): 2, (2, 2): 1})


@given(st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)), st.integers(-3, 3)))
def test_bivar_canonical_form(coeffs):
    p = BivarPoly(coeffs)
    assert all(c != 0 for c in p.coeffs.values())
    assert p - p == BivarPoly()
    assert p + BivarPoly() == p


def test_render_terms():
    assert render_terms([(1, 5, 1), (2, 5, 1), (1, 3, 1), (1, 4, 1)]) == "x*y^3 + x*y^4 + x*y^5 + x^2*y^5"
    assert render_terms([(0, 0, 3), (0, 2, -2), (3, 0, 1)]) == "3 + x^3 + -2*y^2"
    assert render_terms([]) == "0"
    assert str(gf_lower(5)) == "x*y^3 + x*y^4 + x*y^5 + x^2*y^5"
