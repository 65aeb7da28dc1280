from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest

from arrcount.enumeration import (
    LINE, POINT, CharNumberTable, CurveSpec, InexactDivision, braid_char_number,
    char_number_generic_lines, char_number_table, conic, count_0coned, count_dconed,
    count_generic, dconed_dim, dconed_terms, dim_generic, exact_div, gamma_tuples,
    generic_lines_table, incidence_class, labeled_char_degree, multinomial,
    naive_dconed_count, pencil_char_numbers, point_condition_class, zeuthen_transfer,
)
from arrcount.ring import chow_degree
from arrcount.schubert import catalan

N3 = [15, 30, 48, 57, 48, 30, 15]
N4 = [16695, 17955, 13185, 8190, 4410, 2070, 855, 315, 105]


def double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def zeuthen_oracle(table, p, curves):
    """Expand by choosing mu or nu from every factor."""
    total = 0
    for picks in product((0, 1), repeat=len(curves)):
        coeff, mu = 1, p
        for c, pick in zip(curves, picks):
            if pick:
                coeff *= c.class_number
                mu += 1
            else:
                coeff *= c.degree
        total += coeff * table[mu]
    return total


def test_multinomial():
    assert multinomial(6, [(2, 3)]) == 90
    assert multinomial(7, [(7, 1)]) == 1
    assert multinomial(8, [(2, 2), (4, 1)]) == 420
    assert multinomial(5, [(0, 3), (5, 1)]) == 1
    with pytest.raises(ValueError):
        multinomial(8, [(2, 2)])


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(InexactDivision):
        exact_div(13, 4)


def test_dim_and_count_generic():
    assert dim_generic(3, 2) == 6
    assert dim_generic(4, 2) == 8
    assert dim_generic(2, 1) == 2
    assert count_generic(3, 2) == 15
    assert count_generic(4, 2) == 105
    with pytest.raises(ValueError):
        count_generic(2, 2)
    with pytest.raises(ValueError):
        dim_generic(3, 0)


@pytest.mark.parametrize("k", range(3, 9))
def test_generic_lines_double_factorial(k):
    assert count_generic(k, 2) == double_factorial(2 * k - 1)


@pytest.mark.parametrize("k,n", [(k, n) for n in range(1, 5) for k in range(n + 1, 7)])
def test_count_generic_division_exact(k, n):
    assert count_generic(k, n) * factorial(k) * factorial(n) ** k == factorial(k * n)
    product_of_binomials = 1
    for i in range(k):
        product_of_binomials *= comb(k * n - i * n, n)
    assert product_of_binomials == count_generic(k, n) * factorial(k)


def test_point_condition_class():
    ring, _ = incidence_class(3)
    xs = ["x1", "x2", "x3"]
    assert point_condition_class(ring, xs, 0) == ring.one()
    assert point_condition_class(ring, xs, 1) == ring.gen("x1") + ring.gen("x2") + ring.gen("x3")
    top_x = ring.monomial({"x1": 2, "x2": 2, "x3": 2})
    assert point_condition_class(ring, xs, 6).coefficient(top_x) == 90
    with pytest.raises(ValueError):
        point_condition_class(ring, ["z"], 2)


def test_incidence_class_k3_coefficients():
    ring, m3 = incidence_class(3)
    assert ring.variables == ("x1", "x2", "x3", "y12", "y13", "y23")
    assert m3.coefficient("x1^2*x2^2*x3^2") == 1
    assert m3.coefficient("x1^2*y12^2*x2^2") == 0
    assert m3.coefficient("x1*x2*x3*y12*y13*y23") == 2
    with pytest.raises(ValueError):
        incidence_class(5)


def test_char_numbers():
    assert [char_number_generic_lines(3, p) for p in range(7)] == N3
    assert char_number_generic_lines(4, 0) == 16695
    assert char_number_generic_lines(4, 8) == 105 == count_generic(4, 2)
    assert char_number_generic_lines(3, 6) == count_generic(3, 2)
    with pytest.raises(ValueError):
        char_number_generic_lines(3, 7)
    with pytest.raises(ValueError):
        char_number_generic_lines(5, 0)


def test_n3_palindromic():
    t = generic_lines_table(3).as_list()
    assert t == t[::-1]


def test_labeled_identities_k4():
    assert labeled_char_degree(4, 0) == 24 * 16695 + multinomial(8, [(2, 2), (4, 1)]) * factorial(6) // 2
    assert labeled_char_degree(4, 0) == 551880
    assert labeled_char_degree(4, 1) == 24 * 17955 + comb(7, 2) * factorial(6)
    assert labeled_char_degree(4, 2) == 24 * 13185 + factorial(6)
    for p in range(3, 9):
        assert labeled_char_degree(4, p) == 24 * N4[p]


def test_labeled_k3_is_six_times_table():
    for p in range(7):
        assert labeled_char_degree(3, p) == 6 * N3[p]


def test_braid():
    assert braid_char_number(8) == 16695
    assert braid_char_number(0) == 105
    assert braid_char_number(4) == 4410
    with pytest.raises(ValueError):
        braid_char_number(9)


@pytest.mark.parametrize("k", range(3, 9))
def test_pencil(k):
    t = pencil_char_numbers(k)
    assert t.D == k + 2
    expected = [0] * (k + 3)
    expected[k + 2] = 3 * comb(k + 2, 4)
    expected[k + 1] = comb(k + 1, 2)
    expected[k] = 1
    assert t.as_list() == expected


def test_pencil_examples():
    t = pencil_char_numbers(3)
    assert t[5] == 15 == count_0coned(3, 2)
    assert t[3] == 1 and t[2] == 0
    with pytest.raises(ValueError):
        pencil_char_numbers(2)


def test_char_number_table_validation():
    with pytest.raises(ValueError):
        CharNumberTable("x", 2, {0: 1, 1: 1})
    with pytest.raises(ValueError):
        char_number_table("pencil")
    with pytest.raises(ValueError):
        char_number_table("cubic")


def test_zeuthen_examples():
    t4 = generic_lines_table(4)
    assert zeuthen_transfer(t4, 3, [LINE] + [conic()] * 4) == 671760
    # written out term by term as in the worked example
    assert 16 * (315 + 4 * 855 + 6 * 2070 + 4 * 4410 + 8190) == 671760
    t3 = generic_lines_table(3)
    assert zeuthen_transfer(t3, 6, []) == 15
    assert zeuthen_transfer(t3, 5, [LINE]) == 30
    with pytest.raises(ValueError):
        zeuthen_transfer(t3, 3, [LINE])


@pytest.mark.parametrize("family,k", [("generic3", None), ("generic4", None),
                                      ("braid", None), ("pencil", 5)])
def test_zeuthen_lines_and_points_reproduce_table(family, k):
    t = char_number_table(family, k)
    for p in range(t.D + 1):
        assert zeuthen_transfer(t, p, [LINE] * (t.D - p)) == t[p]
        # a point condition is a curve of degree 0 and class 1
        assert zeuthen_transfer(t, 0, [POINT] * p + [LINE] * (t.D - p)) == t[p]


def test_zeuthen_matches_oracle():
    t4 = generic_lines_table(4)
    curves = [CurveSpec(3, 6), CurveSpec(2, 2), LINE, CurveSpec(4, 12), POINT]
    assert zeuthen_transfer(t4, 3, curves) == zeuthen_oracle(t4, 3, curves)
    with pytest.raises(ValueError):
        CurveSpec(0, 0)


def test_dconed_dim():
    for k in range(3, 8):
        assert dconed_dim(0, k, 2) == k + 2
    assert dconed_dim(1, 9, 5) == 35
    for n in range(2, 6):
        assert dconed_dim(n - 2, n + 3, n) == (n - 1) * 2 + n + 3
    with pytest.raises(ValueError):
        dconed_dim(2, 9, 3)
    with pytest.raises(ValueError):
        dconed_dim(0, 2, 2)


def test_count_0coned():
    assert count_0coned(3, 2) == 15
    assert count_0coned(4, 2) == 45 == 3 * comb(6, 4)
    assert count_0coned(2, 2) == 3 == factorial(4) // (factorial(2) ** 3)
    with pytest.raises(ValueError):
        count_0coned(1, 2)


def test_gamma_tuples():
    assert gamma_tuples(1, 9, 5) == [(5, 0, 4), (4, 2, 3), (3, 4, 2), (2, 6, 1), (1, 8, 0)]
    for k, n in [(3, 2), (5, 3), (7, 4)]:
        assert gamma_tuples(0, k, n) == [(k - n, n)]
    assert gamma_tuples(1, 4, 3) == [(2, 0, 2), (1, 2, 1), (0, 4, 0)]


@pytest.mark.parametrize("d,k,n", [(1, 4, 3), (1, 9, 5), (2, 6, 4), (1, 7, 6)])
def test_gamma_tuples_exhaustive(d, k, n):
    found = [s for s in product(range(k + 1), repeat=d + 2)
             if sum(s) == k and sum(i * x for i, x in enumerate(s)) == (d + 1) * (n - d)]
    assert sorted(found, reverse=True) == gamma_tuples(d, k, n)


def dconed_oracle_d1(k, n):
    """Term-by-term evaluation for d = 1 with Catalan Schubert degrees."""
    D = 2 * (n - 1) + k * (n - 2)
    total = 0
    for s2 in range(k + 1):
        for s1 in range(k + 1 - s2):
            s0 = k - s1 - s2
            if s1 + 2 * s2 != 2 * (n - 1):
                continue
            sigma = catalan(n - s2)
            lab = factorial(k) // (factorial(s0) * factorial(s1) * factorial(s2))
            pts = factorial(D) // (factorial(n - 2) ** s0 * factorial(n - 1) ** s1
                                   * factorial(n) ** s2)
            total += sigma * lab * pts
    return Fraction(total, factorial(k))


def test_count_dconed_flagship():
    assert count_dconed(1, 9, 5) == 148467792706702950173442750
    assert [t[1] for t in dconed_terms(1, 9, 5)] == [1, 1, 2, 5, 14]


@pytest.mark.parametrize("k,n", [(4, 3), (5, 3), (9, 5), (6, 4), (7, 5)])
def test_count_dconed_d1_oracle(k, n):
    assert count_dconed(1, k, n) == dconed_oracle_d1(k, n)


def test_count_dconed_small():
    assert count_dconed(1, 4, 3) == 1330 == dconed_oracle_d1(4, 3)


@pytest.mark.parametrize("k,n", [(3, 2), (4, 2), (4, 3), (5, 3), (6, 2), (7, 4)])
def test_dconed_reduces_to_0coned(k, n):
    assert count_dconed(0, k, n) == count_0coned(k, n)


@pytest.mark.parametrize("k,n", [(4, 3), (9, 5), (6, 4), (7, 5)])
def test_d1_terms_are_catalan(k, n):
    for s, deg, _, _ in dconed_terms(1, k, n):
        assert deg == catalan(n - s[2])


def test_naive_count():
    assert naive_dconed_count(0, 3, 2) == 15 == count_0coned(3, 2)
    assert naive_dconed_count(1, 9, 5) < count_dconed(1, 9, 5)
    assert naive_dconed_count(1, 4, 3) == 280 < count_dconed(1, 4, 3)
    for k, n in [(4, 2), (5, 3), (6, 4)]:
        assert naive_dconed_count(0, k, n) == count_0coned(k, n)


@pytest.mark.parametrize("d,k,n", [(1, 4, 3), (1, 9, 5), (2, 6, 4), (1, 6, 4), (2, 7, 5)])
def test_naive_is_the_pure_apex_term(d, k, n):
    s = (k - n + d,) + (0,) * d + (n - d,)
    terms = {t[0]: t for t in dconed_terms(d, k, n)}
    _, deg, lab, pts = terms[s]
    assert deg == 1
    assert naive_dconed_count(d, k, n) * factorial(k) == lab * pts
    if d >= 1:
        assert naive_dconed_count(d, k, n) < count_dconed(d, k, n)


def test_chow_degree_point_class_for_generic():
    ring, _ = incidence_class(3)
    pts = point_condition_class(ring, ["x1", "x2", "x3"], 6)
    top_x = ring.monomial({"x1": 2, "x2": 2, "x3": 2})
    assert pts.coefficient(top_x) // factorial(3) == count_generic(3, 2)
    assert chow_degree(pts) == 0
