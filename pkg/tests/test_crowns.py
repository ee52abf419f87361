from fractions import Fraction
from math import comb, factorial

import pytest

from torusk33.crowns import (CycleTooShort, bc_series, bc_series_sum, brute_matching_poly, cc_closed_form,
                             cc_series, crown_counts_by_automorphisms, cycle_matching_poly,
                             homogeneous_cycle_poly, path_matching_poly)
from torusk33.series import BivariateSeries


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def test_small_matching_polys():
    assert path_matching_poly(0) == path_matching_poly(1) == (1,)
    assert path_matching_poly(2) == (1, 1)
    assert path_matching_poly(5) == (1, 4, 3)
    assert cycle_matching_poly(3) == (1, 3)
    assert cycle_matching_poly(4) == (1, 4, 2)
    with pytest.raises(CycleTooShort):
        cycle_matching_poly(2)


@pytest.mark.parametrize("n", range(13))
def test_path_poly_matches_enumeration(n):
    assert path_matching_poly(n) == brute_matching_poly(n, path_edges(n))


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_poly_matches_enumeration(n):
    assert cycle_matching_poly(n) == brute_matching_poly(n, cycle_edges(n))


def test_homogeneous_cycle_poly():
    assert homogeneous_cycle_poly(3) == {(0, 3): 1, (1, 2): 3}
    for n in range(3, 9):
        assert tuple(homogeneous_cycle_poly(n).get((k, n - k), 0) for k in range(n // 2 + 1)) == cycle_matching_poly(n)
    assert [sum(homogeneous_cycle_poly(n).values()) for n in (3, 4, 5)] == [4, 7, 11]


def test_path_generating_function():
    N = 20
    U = BivariateSeries.from_terms({(n, k): c for n in range(N + 1) for k, c in enumerate(path_matching_poly(n))}, N)
    f = BivariateSeries.from_terms({(0, 0): 1, (1, 0): -1, (2, 1): -1}, N)
    assert U * f == BivariateSeries.one(N)


def test_cycle_generating_function():
    N = 20
    T = BivariateSeries.from_terms({(n, k): c for n in range(3, N + 1) for k, c in enumerate(cycle_matching_poly(n))}, N)
    num = BivariateSeries.from_terms({(3, 0): 1, (3, 1): 3, (4, 1): 1, (4, 2): 2}, N)
    den = BivariateSeries.from_terms({(0, 0): 1, (1, 0): -1, (2, 1): -1}, N)
    assert T * den == num


def test_bc_low_coefficients():
    bc = bc_series(10)
    assert all(not bc.coeffs[n] for n in range(3))
    assert bc.coeffs[3] == {(0, 3): Fraction(1, 6), (1, 2): Fraction(1, 2)}
    assert bc.labelled_count(3, (0, 3)) == 1


def test_bc_closed_form_equals_sum():
    assert bc_series(20) == bc_series_sum(20)


def test_cc_substitution_equals_closed_form():
    assert cc_series(20) == cc_closed_form(20)


def test_cc_full_c3_crown_count():
    cc = cc_series(13)
    want = comb(12, 3) * factorial(9) // factorial(3) ** 3
    assert cc.labelled_count(12, 27) == want == factorial(12) // 1296


def test_cc_matches_automorphism_count():
    direct = crown_counts_by_automorphisms(16)
    got = {k: v for k, v in cc_series(16).counts().items() if v}
    assert direct == got
    assert got[(13, 28)] == factorial(13) // 432


def test_cc_support_starts_at_nine_vertices():
    # a triangle with two bricks and a plain edge already has 9 vertices
    cc = cc_series(12)
    assert cc.min_x_degree() == 9
    assert cc.labelled_count(9, 19) == 5040
    assert cc.labelled_count(10, 20) == 25200
