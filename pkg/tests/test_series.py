from fractions import Fraction

import pytest

from ineqcert.errors import DomainError
from ineqcert.interval import Interval, elem_enclose
from ineqcert.series import (LEMMA_KINDS, eval_series, get_series, lemma_coeff,
                             tail_bound, theorem_coeff)

from oracles import LemmaSeriesOracle

F = Fraction
ORACLE = LemmaSeriesOracle(46)


def test_lemma_coeff_spot_values():
    assert lemma_coeff("X_OVER_SIN", 1) == F(1, 6)
    assert lemma_coeff("X_OVER_SIN", 2) == F(7, 360)
    assert lemma_coeff("X_OVER_SIN", 3) == F(31, 15120)
    assert lemma_coeff("COT", 1) == F(-1, 3)
    assert lemma_coeff("CSC2", 1) == F(1, 3)
    assert lemma_coeff("CSC3", 1) == F(17, 120)
    assert lemma_coeff("COS_OVER_SIN3", 2) == F(-1, 15)
    assert lemma_coeff("SINH", 0) == 1
    assert get_series("COS_OVER_SIN3").exponent_of(2) == 1
    assert get_series("CSC3").exponent_of(1) == 1


def test_lemma_coeff_matches_series_algebra_oracle():
    for kind in LEMMA_KINDS:
        start = get_series(kind).start_index
        for n in range(start, 21):
            assert lemma_coeff(kind, n) == ORACLE.lemma_coeff(kind, n), (kind, n)


def test_lemma_coeff_domain_errors():
    with pytest.raises(DomainError):
        lemma_coeff("COT", 0)
    with pytest.raises(DomainError):
        lemma_coeff("COS_OVER_SIN3", 1)
    with pytest.raises(DomainError):
        lemma_coeff("NOPE", 1)


def test_theorem_coeff_spot_values():
    assert theorem_coeff("T3.1", "f", 2) == F(1, 60)
    assert theorem_coeff("T3.2", "b", 2) == 17
    assert theorem_coeff("T3.2", "g", 2) == F(17, 720)
    assert theorem_coeff("T3.3", "c", 2) == F(3, 20)
    assert theorem_coeff("T3.3", "c", 3) == F(9, 70)
    assert theorem_coeff("T3.3", "a", 3) == F(108, 720)
    assert theorem_coeff("T3.3", "b", 3) == F(840, 720)
    assert theorem_coeff("T3.4", "c", 3) == F(23, 720)
    assert theorem_coeff("T3.4", "c", 4) == F(17, 336)
    assert theorem_coeff("T3.4", "c", 5) == F(5099, 85680)
    assert theorem_coeff("T3.5", "f", 2) == F(1, 10)


def test_theorem_coeff_domain_errors():
    with pytest.raises(DomainError):
        theorem_coeff("T3.4", "c", 2)   # starts at n=3
    with pytest.raises(DomainError):
        theorem_coeff("T3.1", "b", 2)   # no such role
    with pytest.raises(DomainError):
        theorem_coeff("T9.9", "f", 2)


def test_theorem_series_reconstructions():
    # term-by-term against the composition of the lemma expansions
    f31 = ORACLE.t31_f_times_x4()
    g32 = ORACLE.t32_g_times_4x4()
    f35 = ORACLE.t35_f_times_x4()
    assert f31[0] == 0 and f31[2] == 0
    assert g32[0] == 0 and g32[2] == 0
    assert f35[0] == 0 and f35[2] == 0
    for n in range(2, 21):
        assert f31[2 * n] == theorem_coeff("T3.1", "f", n), n
        assert g32[2 * n] == 4 * theorem_coeff("T3.2", "g", n), n
        assert f35[2 * n] == theorem_coeff("T3.5", "f", n), n


def test_hyperbolic_series_reconstructions():
    f33 = ORACLE.t33_f_series()
    g33 = ORACLE.t33_g_series()
    f34 = ORACLE.t34_f_series()
    g34 = ORACLE.t34_g_series()
    for n in range(2, 21):
        # f' coefficient a_n at x^(2n) equals (2n+1) * [x^(2n+1)] f
        assert theorem_coeff("T3.3", "a", n) == (2 * n + 1) * f33[2 * n + 1], n
        assert theorem_coeff("T3.3", "b", n) == (2 * n + 1) * g33[2 * n + 1], n
    for n in range(3, 21):
        assert theorem_coeff("T3.4", "a", n) == f34[2 * n], n
        assert theorem_coeff("T3.4", "b", n) == g34[2 * n], n


def test_diff_series_cancellation_and_leading_terms():
    d33 = get_series("T3.3_DIFF")
    assert d33.coeff(2) == 0
    assert d33.coeff(3) == F(-1, 40)
    d34 = get_series("T3.4_DIFF")
    assert d34.coeff(3) == 0
    assert d34.coeff(4) == F(47, 3024)


def test_theorem_series_positivity():
    for n in range(2, 201):
        assert theorem_coeff("T3.1", "f", n) > 0
        assert theorem_coeff("T3.2", "g", n) > 0
        assert theorem_coeff("T3.5", "f", n) > 0


def test_dominating_bounds_cover_coefficients():
    # each tail component sum must dominate |coeff(n)| * x^exponent(n)
    for kind in ("X_OVER_SIN", "COT", "CSC2", "COS_OVER_SIN2", "CSC3",
                 "COS_OVER_SIN3", "SINH", "COSH", "T3.1_F", "T3.2_G",
                 "T3.5_F", "T3.3_A", "T3.3_B", "T3.3_DIFF", "T3.4_A",
                 "T3.4_B", "T3.4_DIFF"):
        seq = get_series(kind)
        xs = (F(1, 2), F(3, 2)) if seq.radius == "pi" else (F(1, 2), F(8))
        for x in xs:
            for n in range(max(seq.start_index, 1), 61):
                dom = sum(c.term(n, x) for c in seq.components)
                assert abs(seq.coeff(n)) * x ** seq.exponent_of(n) <= dom, (kind, n, x)


def test_tail_bound_soundness_partial_sums():
    # extending the partial sum by 50 terms never escapes the bound
    cases = [
        ("X_OVER_SIN", 5, F(1, 2)),
        ("COT", 4, F(1)),
        ("CSC2", 4, F(3, 2)),
        ("CSC3", 3, F(1)),
        ("COS_OVER_SIN3", 4, F(2)),
        ("SINH", 10, F(2)),
        ("COSH", 8, F(5)),
        ("T3.1_F", 6, F(3, 2)),
        ("T3.2_G", 6, F(3, 2)),
        ("T3.5_F", 6, F(3, 2)),
        ("T3.3_DIFF", 6, F(10)),
        ("T3.4_DIFF", 7, F(10)),
    ]
    for kind, N, x in cases:
        seq = get_series(kind)
        U = tail_bound(kind, N, x).bound
        partial = F(0)
        for n in range(N + 1, N + 51):
            partial += abs(seq.coeff(n)) * x ** seq.exponent_of(n)
            assert partial <= U, (kind, n)


def test_tail_bound_sinh_example():
    U = tail_bound("SINH", 10, F(2)).bound
    direct = sum(F(2 ** (2 * n + 1), 1) / _fact(2 * n + 1) for n in range(11, 60))
    assert U >= direct


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_tail_bound_monotone_in_x():
    for kind in ("X_OVER_SIN", "SINH", "T3.1_F"):
        x = F(3, 2)
        prev = tail_bound(kind, 6, x).bound
        for _ in range(8):
            x /= 2
            cur = tail_bound(kind, 6, x).bound
            assert cur <= prev
            prev = cur
        assert cur < F(1, 10 ** 6)


def test_tail_bound_domain_errors():
    with pytest.raises(DomainError):
        tail_bound("X_OVER_SIN", 5, F(31, 10))   # too close to pi
    with pytest.raises(DomainError):
        tail_bound("X_OVER_SIN", 5, F(0))
    with pytest.raises(DomainError):
        tail_bound("COS_OVER_SIN3", 1, F(1))     # N below start index


def test_eval_series_point_values():
    # 0.5/sin(0.5) = 1.0429148214667440928862508...
    e = eval_series("X_OVER_SIN", Interval.point(F(1, 2)), 8)
    assert e.lo <= F("1.0429148214667441") <= e.hi
    assert e.width < F(1, 10 ** 9)
    # ratio series at x=1: 0.022440259773049676601...
    e = eval_series("T3.1_F", Interval.point(1), 12)
    assert e.lo <= F("0.0224402597730497") <= e.hi
    assert e.width < F(1, 10 ** 6)


def test_eval_series_tiny_x_leading_term():
    for kind in ("X_OVER_SIN", "T3.1_F", "T3.5_F"):
        seq = get_series(kind)
        n0 = max(seq.start_index, 1)
        x = F(1, 10 ** 4)
        e = eval_series(kind, Interval.point(x), n0 + 40)
        lead = seq.coeff(n0) * x ** seq.exponent_of(n0)
        tb = 2 * tail_bound(kind, n0 + 40, x).bound
        base = seq.coeff(0) if seq.start_index == 0 else F(0)
        assert abs((e.lo + e.hi) / 2 - base - lead) <= lead * F(1, 100) + tb


def test_eval_series_full_value_matches_direct_evaluation():
    # lemma kinds against closed-form evaluation through elem_enclose
    wt = F(1, 10 ** 25)
    for x in (F(1, 10), F(1, 2), F(1), F(3, 2)):
        xi = Interval.point(x)
        s = elem_enclose("sin", xi, wt)
        c = elem_enclose("cos", xi, wt)
        direct = {
            "X_OVER_SIN": xi / s,
            "COT": c / s,
            "CSC2": Interval.point(1) / s ** 2,
            "COS_OVER_SIN2": c / s ** 2,
            "CSC3": Interval.point(1) / s ** 3,
            "COS_OVER_SIN3": c / s ** 3,
        }
        sh = elem_enclose("sinh", xi, wt)
        ch = elem_enclose("cosh", xi, wt)
        direct["SINH"] = sh
        direct["COSH"] = ch
        for kind, dv in direct.items():
            ev = eval_series(kind, xi, 20, full_value=True)
            assert ev.intersects(dv), (kind, x)


def test_eval_series_domain_errors():
    with pytest.raises(DomainError):
        eval_series("COT", Interval(0, 1), 10)          # needs x > 0
    with pytest.raises(DomainError):
        eval_series("X_OVER_SIN", Interval(F(1, 2), F(32, 10)), 10)
