"""Exact series coefficients and rigorous truncation tails.

Lemma kinds (coefficient of x^exponent_of(n), signed; singular parts such
as 1/x^3 are excluded and listed in `singular_part`):

  X_OVER_SIN      x/sin x        = 1 + sum_{n>=1} 2(2^(2n-1)-1)|B_2n|/(2n)! x^(2n)
  COT             cot x          = 1/x - sum_{n>=1} 2^(2n)|B_2n|/(2n)! x^(2n-1)
  CSC2            1/sin^2 x      = 1/x^2 + sum_{n>=1} 2^(2n)(2n-1)|B_2n|/(2n)! x^(2n-2)
  COS_OVER_SIN2   cos x/sin^2 x  = 1/x^2 - sum_{n>=1} 2(2n-1)(2^(2n-1)-1)|B_2n|/(2n)! x^(2n-2)
  CSC3            1/sin^3 x      = 1/x^3 + 1/(2x) + (1/2) sum_{n>=1} [....] x^(2n-1)
  COS_OVER_SIN3   cos x/sin^3 x  = 1/x^3 - sum_{n>=2} (2n-1)(n-1)2^(2n)|B_2n|/(2n)! x^(2n-3)
  SINH, COSH      entire expansions

Theorem-proof series (the ratio numerator/denominator expansions used to
prove the sharp bounds; `_DIFF` entries are the exact difference series that
settle each claim near 0):

  T3.1_F   ((n-2)2^(2n+1)+4(n+1)) |B_2n|/(2n)!        x^(2n-4), n>=2
  T3.2_G   (4^n(2n-3)+3+3n-2n^2)  |B_2n|/(2n)!        x^(2n-4), n>=2
  T3.5_F   ((6n-8)2^(2n)+8)       |B_2n|/(2n)!        x^(2n-4), n>=2
  T3.3_A/B (2^(2n+1)-6n-2)/(2n)!  and 4n(n-1)(4n^2-1)/(2n)!,  x^(2n), n>=2
  T3.4_A/B see theorem_coeff,                          x^(2n), n>=3
  T3.3_DIFF = A - (3/20) B   (vanishes at n=2; leading term -x^6/40)
  T3.4_DIFF = A - (23/720) B (vanishes at n=3; leading term 47 x^8/3024)

Tail bounds replace |B_2n|/(2n)! by 4/(2 pi)^(2n) (valid since
|B_2n|/(2n)! = 2 zeta(2n)/(2 pi)^(2n) and zeta(2n) <= zeta(2) < 2) and close
the remaining sum geometrically, so truncated evaluation is a certified
enclosure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Optional

from .errors import DomainError
from .exact import bernoulli
from .interval import Interval

__all__ = [
    "CoeffSeq", "TailBound", "get_series", "series_ids",
    "lemma_coeff", "theorem_coeff", "tail_bound", "eval_series",
    "LEMMA_KINDS", "THEOREM_START",
]

# Certified rational bound pi > PI_LO; tails only need a lower bound.
PI_LO = Fraction(314159265358979, 10 ** 14)
# delta-margin 1/64 from the radius for trigonometric tails.
TRIG_X_MAX = PI_LO * Fraction(63, 64)
_RHO_MAX = 1 - Fraction(1, 1024)


def _babs(n: int) -> Fraction:
    return abs(bernoulli(2 * n))


def _poly(coeffs: tuple, n: int) -> Fraction:
    acc = Fraction(0)
    p = 1
    for c in coeffs:
        acc += Fraction(c) * p
        p *= n
    return acc


@dataclass(frozen=True)
class _Geo:
    """Dominating term poly(n) * (x/PI_LO)^(2n) * x^shift (trig kinds)."""

    poly: tuple
    shift: int

    def term(self, n: int, x: Fraction) -> Fraction:
        u = (x / PI_LO) ** 2
        return _poly(self.poly, n) * u ** n * x ** self.shift

    def ratio(self, n: int, x: Fraction) -> Fraction:
        u = (x / PI_LO) ** 2
        deg = len(self.poly) - 1
        return u * Fraction(n + 1, n) ** deg


@dataclass(frozen=True)
class _Fact:
    """Dominating term poly(n) * (base*x)^(2n)/(2n)! * x^shift (entire kinds)."""

    poly: tuple
    base: int
    shift: int

    def term(self, n: int, x: Fraction) -> Fraction:
        return (_poly(self.poly, n) * (self.base * x) ** (2 * n)
                / factorial(2 * n) * x ** self.shift)

    def ratio(self, n: int, x: Fraction) -> Fraction:
        deg = len(self.poly) - 1
        return ((self.base * x) ** 2 / ((2 * n + 1) * (2 * n + 2))
                * Fraction(n + 1, n) ** deg)


@dataclass(frozen=True)
class CoeffSeq:
    """A named exact coefficient sequence with tail metadata."""

    id: str
    start_index: int
    expo_offset: int                       # exponent_of(n) = 2n + expo_offset
    coeff_fn: Callable[[int], Fraction]
    radius: str                            # "pi" or "inf"
    singular_part: Optional[str]
    components: tuple

    def exponent_of(self, n: int) -> int:
        return 2 * n + self.expo_offset

    def coeff(self, n: int) -> Fraction:
        if n < self.start_index:
            raise DomainError(
                f"{self.id}: index {n} below start index {self.start_index}")
        return self.coeff_fn(n)


@dataclass(frozen=True)
class TailBound:
    """bound >= sum_{n>N} |coeff(n)| * x_upper^exponent_of(n)."""

    kind: str
    N: int
    x_upper: Fraction
    bound: Fraction


# --- coefficient formulas ---------------------------------------------------

def _c_x_over_sin(n):
    if n == 0:
        return Fraction(1)
    return Fraction(2 * (2 ** (2 * n - 1) - 1)) * _babs(n) / factorial(2 * n)


def _c_cot(n):
    return -Fraction(2 ** (2 * n)) * _babs(n) / factorial(2 * n)


def _c_csc2(n):
    return Fraction(2 ** (2 * n) * (2 * n - 1)) * _babs(n) / factorial(2 * n)


def _c_cos_over_sin2(n):
    return (-Fraction(2 * (2 * n - 1) * (2 ** (2 * n - 1) - 1))
            * _babs(n) / factorial(2 * n))


def _c_csc3(n):
    inner = (Fraction(2 ** (2 * n + 1) - 1) * _babs(n + 1) / (n + 1)
             + Fraction(2 ** (2 * n - 1) - 1) * _babs(n) / n)
    return inner / (2 * factorial(2 * n - 1))


def _c_cos_over_sin3(n):
    return (-Fraction((2 * n - 1) * (n - 1) * 2 ** (2 * n))
            * _babs(n) / factorial(2 * n))


def _c_sinh(n):
    return Fraction(1, factorial(2 * n + 1))


def _c_cosh(n):
    return Fraction(1, factorial(2 * n))


def _c_t31(n):
    return (Fraction((n - 2) * 2 ** (2 * n + 1) + 4 * (n + 1))
            * _babs(n) / factorial(2 * n))


def _b_t32(n):
    return Fraction(4 ** n * (2 * n - 3) + 3 + 3 * n - 2 * n * n)


def _c_t32(n):
    return _b_t32(n) * _babs(n) / factorial(2 * n)


def _c_t35(n):
    return Fraction((6 * n - 8) * 2 ** (2 * n) + 8) * _babs(n) / factorial(2 * n)


def _a_t33(n):
    return Fraction(2 ** (2 * n + 1) - 6 * n - 2, factorial(2 * n))


def _b_t33(n):
    return Fraction(4 * n * (n - 1) * (4 * n * n - 1), factorial(2 * n))


def _d_t33(n):
    return _a_t33(n) - Fraction(3, 20) * _b_t33(n)


def _a_t34(n):
    num = (Fraction(n) * (Fraction(3 ** (2 * n - 1), 2)
                          - (n - 1) * 2 ** (2 * n) - 8 * n + Fraction(9, 2))
           + 2 ** (2 * n + 1) - 4)
    return num / factorial(2 * n)


def _b_t34(n):
    num = ((1 + 2 ** (2 * n - 6)) * (2 * n - 4) * (2 * n - 3)
           * (2 * n - 2) * (2 * n - 1) * 2 * n)
    return Fraction(num, factorial(2 * n))


def _d_t34(n):
    return _a_t34(n) - Fraction(23, 720) * _b_t34(n)


_REGISTRY = {}


def _register(seq: CoeffSeq):
    _REGISTRY[seq.id] = seq
    return seq


_register(CoeffSeq("X_OVER_SIN", 0, 0, _c_x_over_sin, "pi", None,
                   (_Geo((4,), 0),)))
_register(CoeffSeq("COT", 1, -1, _c_cot, "pi", "1/x",
                   (_Geo((4,), -1),)))
_register(CoeffSeq("CSC2", 1, -2, _c_csc2, "pi", "1/x^2",
                   (_Geo((0, 8), -2),)))
_register(CoeffSeq("COS_OVER_SIN2", 1, -2, _c_cos_over_sin2, "pi", "1/x^2",
                   (_Geo((0, 8), -2),)))
_register(CoeffSeq("CSC3", 1, -1, _c_csc3, "pi", "1/x^3 + 1/(2x)",
                   (_Geo((4, Fraction(8, 9), Fraction(16, 9)), -1),)))
_register(CoeffSeq("COS_OVER_SIN3", 2, -3, _c_cos_over_sin3, "pi", "1/x^3",
                   (_Geo((0, 0, 8), -3),)))
_register(CoeffSeq("SINH", 0, 1, _c_sinh, "inf", None,
                   (_Fact((1,), 1, 1),)))
_register(CoeffSeq("COSH", 0, 0, _c_cosh, "inf", None,
                   (_Fact((1,), 1, 0),)))

_register(CoeffSeq("T3.1_F", 2, -4, _c_t31, "pi", None,
                   (_Geo((0, 12), -4),)))
_register(CoeffSeq("T3.2_G", 2, -4, _c_t32, "pi", None,
                   (_Geo((0, 12), -4),)))
_register(CoeffSeq("T3.5_F", 2, -4, _c_t35, "pi", None,
                   (_Geo((0, 24), -4),)))
_register(CoeffSeq("T3.3_A", 2, 0, _a_t33, "inf", None,
                   (_Fact((2,), 2, 0),)))
_register(CoeffSeq("T3.3_B", 2, 0, _b_t33, "inf", None,
                   (_Fact((0, 0, 0, 0, 16), 1, 0),)))
_register(CoeffSeq("T3.3_DIFF", 2, 0, _d_t33, "inf", None,
                   (_Fact((2,), 2, 0),
                    _Fact((0, 0, 0, 0, Fraction(12, 5)), 1, 0))))
_T34_A_COMPONENTS = (
    _Fact((0, Fraction(1, 6)), 3, 0),
    _Fact((0, 0, 1), 2, 0),
    _Fact((4, Fraction(9, 2), 8), 1, 0),
    _Fact((2,), 2, 0),
)
_T34_B_COMPONENTS = (
    _Fact((0, 0, 0, 0, 0, 32), 1, 0),
    _Fact((0, 0, 0, 0, 0, Fraction(1, 2)), 2, 0),
)
_register(CoeffSeq("T3.4_A", 3, 0, _a_t34, "inf", None, _T34_A_COMPONENTS))
_register(CoeffSeq("T3.4_B", 3, 0, _b_t34, "inf", None, _T34_B_COMPONENTS))
_register(CoeffSeq(
    "T3.4_DIFF", 3, 0, _d_t34, "inf", None,
    _T34_A_COMPONENTS + tuple(
        _Fact(tuple(Fraction(23, 720) * Fraction(c) for c in comp.poly),
              comp.base, comp.shift)
        for comp in _T34_B_COMPONENTS)))

LEMMA_KINDS = ("X_OVER_SIN", "COT", "CSC2", "COS_OVER_SIN2", "CSC3",
               "COS_OVER_SIN3", "SINH", "COSH")

THEOREM_START = {"T3.1": 2, "T3.2": 2, "T3.3": 2, "T3.4": 3, "T3.5": 2}

_THEOREM_ROLES = {
    ("T3.1", "f"): "T3.1_F",
    ("T3.2", "g"): "T3.2_G",
    ("T3.2", "b"): None,
    ("T3.3", "a"): "T3.3_A",
    ("T3.3", "b"): "T3.3_B",
    ("T3.3", "c"): None,
    ("T3.4", "a"): "T3.4_A",
    ("T3.4", "b"): "T3.4_B",
    ("T3.4", "c"): None,
    ("T3.5", "f"): "T3.5_F",
}


def series_ids():
    return tuple(_REGISTRY)


def get_series(kind: str) -> CoeffSeq:
    seq = _REGISTRY.get(kind)
    if seq is None:
        raise DomainError(f"unknown series kind {kind!r}")
    return seq


@lru_cache(maxsize=None)
def lemma_coeff(kind: str, n: int) -> Fraction:
    """Signed coefficient of x^exponent_of(n) in the named lemma expansion."""
    if kind not in LEMMA_KINDS:
        raise DomainError(f"unknown lemma kind {kind!r}")
    return get_series(kind).coeff(n)


@lru_cache(maxsize=None)
def theorem_coeff(thm: str, role: str, n: int) -> Fraction:
    """Exact theorem-proof sequence values.

    Roles: f/g are full series coefficients (including the |B_2n|/(2n)!
    factor where the proof carries it), a/b are the hyperbolic numerator /
    denominator series coefficients, b of T3.2 is the integer sequence b_n,
    and c is the ratio a_n/b_n.
    """
    if (thm, role) not in _THEOREM_ROLES:
        raise DomainError(f"no sequence for theorem {thm!r} role {role!r}")
    if n < THEOREM_START[thm]:
        raise DomainError(
            f"{thm} sequences start at n={THEOREM_START[thm]}, got {n}")
    if role == "c":
        return (theorem_coeff(thm, "a", n) / theorem_coeff(thm, "b", n))
    if (thm, role) == ("T3.2", "b"):
        return _b_t32(n)
    return get_series(_THEOREM_ROLES[(thm, role)]).coeff(n)


def tail_bound(kind: str, N: int, x_upper) -> TailBound:
    """Certified U >= sum_{n>N} |coeff(n)| x_upper^exponent_of(n)."""
    seq = get_series(kind)
    x = Fraction(x_upper)
    if N < seq.start_index:
        raise DomainError(f"{kind}: N={N} below start index")
    if x <= 0:
        raise DomainError("x_upper must be positive")
    if seq.radius == "pi" and x > TRIG_X_MAX:
        raise DomainError(
            f"{kind}: x_upper={x} too close to the radius pi "
            f"(limit {TRIG_X_MAX})")
    total = Fraction(0)
    for comp in seq.components:
        m = N + 1
        for _ in range(600):
            rho = comp.ratio(m, x)
            if rho < Fraction(1, 2) or (m - N > 200 and rho < _RHO_MAX):
                total += comp.term(m, x) / (1 - rho)
                break
            total += comp.term(m, x)
            m += 1
        else:
            raise DomainError(f"{kind}: tail does not contract at x={x}")
    return TailBound(kind, N, x, total)


def eval_series(kind: str, x: Interval, N: int, full_value: bool = False) -> Interval:
    """Certified enclosure of the series over the interval x.

    The partial sum through index N is evaluated in exact interval
    arithmetic and widened by the tail bound at x.hi.  With `full_value`,
    singular parts (e.g. 1/x^3) are added so the result encloses the
    closed-form function.
    """
    seq = get_series(kind)
    if N < seq.start_index:
        raise DomainError(f"{kind}: N={N} below start index")
    needs_positive = (seq.expo_offset < 0 or seq.singular_part is not None
                      or full_value)
    if x.lo < 0 or (needs_positive and x.lo == 0):
        raise DomainError(f"{kind}: interval must lie in x > 0")
    if seq.radius == "pi" and x.hi > TRIG_X_MAX:
        raise DomainError(f"{kind}: interval exceeds the radius margin")
    acc = Interval.point(0)
    for n in range(seq.start_index, N + 1):
        c = seq.coeff(n)
        if c:
            acc = acc + (x ** seq.exponent_of(n)) * c
    tb = tail_bound(kind, N, x.hi).bound
    acc = acc + Interval(-tb, tb)
    if full_value and seq.singular_part is not None:
        inv = Interval.point(1) / x
        if seq.id == "COT":
            acc = acc + inv
        elif seq.id in ("CSC2", "COS_OVER_SIN2"):
            acc = acc + inv ** 2
        elif seq.id == "CSC3":
            acc = acc + inv ** 3 + inv * Fraction(1, 2)
        elif seq.id == "COS_OVER_SIN3":
            acc = acc + inv ** 3
    return acc
