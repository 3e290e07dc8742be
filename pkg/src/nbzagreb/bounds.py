"""Sharp bounds on NM_a with structural equality detection.

Dropping the interior correction terms of either reconstruction identity
turns it into a bound whose direction depends on the exponent regime:

* secant form: the interior coefficients are <= 0 for a < 0 or a > 1 and
  >= 0 for 0 < a < 1, so the base term alone is an upper (resp. lower)
  bound, attained exactly by graphs whose neighborhood degrees take only
  the two extreme values;
* unit form: the coefficient signs flip, the base term plus the top
  histogram term bounds NM_a from below (resp. above), with equality on
  paths and more generally whenever no interior entry carries a nonzero
  coefficient;
* congruence form: writing M1 - n*lo = q*(hi - lo) + r, a single interior
  correction at degree lo + r sharpens the secant bound whenever r >= 1
  and that degree is occupied; equality needs the histogram to be exactly
  {hi: q, lo + r: 1, lo: n - q - 1}.

Equality flags are structural (decided from the histogram), not numeric;
sweeps cross-check them against the numeric slack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GapTooSmall,
    NeighborhoodRegular,
    NonPositiveQuotient,
    OutOfRangeIndex,
    RemainderZero,
    UnoccupiedRemainderDegree,
)
from .graphs import DegreeProfile
from .indices import HIGH, LOW, Alpha, _pow, as_alpha, nm_direct

__all__ = [
    "BoundReport",
    "CongruenceData",
    "UPPER",
    "LOWER",
    "secant_coefficient",
    "unit_coefficient",
    "nm_bound_secant",
    "nm_bound_unit",
    "congruence_classify",
    "nm_bound_congruence",
    "BOUND_SOURCES",
]

UPPER = "UPPER"
LOWER = "LOWER"

BOUND_SOURCES = ("secant", "unit", "congruence")

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: value, direction, slack and equality flags."""

    source: str
    alpha: float
    regime: str
    direction: str
    bound: float
    computed: float
    slack: float
    tolerance: float
    holds: bool
    equality: bool


@dataclass(frozen=True)
class CongruenceData:
    """Euclidean division M1 - n*lo = q*(hi - lo) + r plus the two
    histogram classifications it supports.

    ``is_bi_degree_case`` records whether the hypothesis (r = 0 and the top
    degree is hit exactly q times) holds, in which case the histogram must
    be supported on the two extremes only.  ``part2_constraints_hold`` is
    True when r >= 1, the top degree is hit exactly q times, and the forced
    consequences (no entries strictly between lo + r and hi, at most one
    vertex at lo + r) are satisfied.
    """

    q: int
    r: int
    is_bi_degree_case: bool
    part2_constraints_hold: bool


def secant_coefficient(p: int, q: int, i: int, a: float | Alpha) -> float:
    """Interior coefficient of the secant identity:
    (p+i)**a - p**a - i*(q**a - p**a)/(q - p).

    Nonpositive for a < 0 or a > 1, nonnegative for 0 < a < 1.
    """
    alpha = as_alpha(a)
    if p < 1 or q <= p:
        raise OutOfRangeIndex(f"need 1 <= p < q, got p={p}, q={q}")
    if not 1 <= i <= q - p - 1:
        raise OutOfRangeIndex(f"need 1 <= i <= q-p-1, got i={i} for p={p}, q={q}")
    p_pow = _pow(p, alpha)
    return _pow(p + i, alpha) - p_pow - i * (_pow(q, alpha) - p_pow) / (q - p)


def unit_coefficient(p: int, i: int, a: float | Alpha) -> float:
    """Interior coefficient of the unit-step identity:
    (p+i)**a - p**a - i*((p+1)**a - p**a).

    Nonnegative for a < 0 or a > 1, nonpositive for 0 < a < 1.
    """
    alpha = as_alpha(a)
    if p < 1:
        raise OutOfRangeIndex(f"need p >= 1, got p={p}")
    if i < 2:
        raise OutOfRangeIndex(f"need i >= 2, got i={i}")
    p_pow = _pow(p, alpha)
    return _pow(p + i, alpha) - p_pow - i * (_pow(p + 1, alpha) - p_pow)


def _report(
    source: str,
    alpha: Alpha,
    direction: str,
    bound: float,
    computed: float,
    equality: bool,
    tolerance: float,
) -> BoundReport:
    tol = tolerance * max(1.0, abs(computed))
    slack = abs(computed - bound)
    if direction == UPPER:
        holds = computed <= bound + tol
    else:
        holds = computed >= bound - tol
    return BoundReport(
        source=source,
        alpha=alpha.value,
        regime=alpha.regime,
        direction=direction,
        bound=bound,
        computed=computed,
        slack=slack,
        tolerance=tol,
        holds=holds,
        equality=equality,
    )


def nm_bound_secant(
    p: DegreeProfile, a: float | Alpha, tolerance: float = DEFAULT_TOLERANCE
) -> BoundReport:
    """Secant-form bound n*lo**a + (M1 - n*lo)*s_a.

    Upper bound for a < 0 or a > 1, lower bound for 0 < a < 1; equality
    exactly when the neighborhood-degree histogram is supported on the two
    extreme values.
    """
    alpha = as_alpha(a)
    lo, hi = p.delta_min, p.delta_max
    if lo == hi:
        raise NeighborhoodRegular("all neighborhood degrees are equal")
    lo_pow = _pow(lo, alpha)
    slope = (_pow(hi, alpha) - lo_pow) / (hi - lo)
    bound = p.n * lo_pow + (p.m1 - p.n * lo) * slope
    direction = UPPER if alpha.regime in (LOW, HIGH) else LOWER
    equality = set(p.nbr_hist) == {lo, hi}
    return _report("secant", alpha, direction, bound, nm_direct(p, alpha), equality, tolerance)


def nm_bound_unit(
    p: DegreeProfile, a: float | Alpha, tolerance: float = DEFAULT_TOLERANCE
) -> BoundReport:
    """Unit-form bound n*lo**a + (M1 - n*lo)*step + n_hi*(hi**a - lo**a - (hi-lo)*step).

    Lower bound for a < 0 or a > 1, upper bound for 0 < a < 1; equality
    whenever no histogram entry strictly between lo + 1 and hi exists
    (paths in particular).
    """
    alpha = as_alpha(a)
    lo, hi = p.delta_min, p.delta_max
    if lo == hi:
        raise NeighborhoodRegular("all neighborhood degrees are equal")
    lo_pow = _pow(lo, alpha)
    step = _pow(lo + 1, alpha) - lo_pow
    n_hi = p.nbr_hist.get(hi, 0)
    bound = (
        p.n * lo_pow
        + (p.m1 - p.n * lo) * step
        + n_hi * (_pow(hi, alpha) - lo_pow - (hi - lo) * step)
    )
    direction = LOWER if alpha.regime in (LOW, HIGH) else UPPER
    equality = all(p.nbr_hist.get(lo + i, 0) == 0 for i in range(2, hi - lo))
    return _report("unit", alpha, direction, bound, nm_direct(p, alpha), equality, tolerance)


def congruence_classify(p: DegreeProfile) -> CongruenceData:
    """Divide M1 - n*lo by the degree gap and classify the histogram.

    Requires a gap of at least 2 and a positive quotient.  Note that any
    real profile with lo != hi has M1 - n*lo >= hi - lo (the vertex
    attaining hi contributes that much), so NonPositiveQuotient can only
    fire on synthetic inputs.
    """
    lo, hi = p.delta_min, p.delta_max
    gap = hi - lo
    if gap < 2:
        raise GapTooSmall(f"need max - min >= 2, got {gap}")
    excess = p.m1 - p.n * lo
    if excess < gap:
        raise NonPositiveQuotient(f"M1 - n*min = {excess} is below the gap {gap}")
    q, r = divmod(excess, gap)
    n_hi = p.nbr_hist.get(hi, 0)
    is_bi = r == 0 and n_hi == q
    part2 = (
        r >= 1
        and n_hi == q
        and all(p.nbr_hist.get(d, 0) == 0 for d in range(lo + r + 1, hi))
        and p.nbr_hist.get(lo + r, 0) <= 1
    )
    return CongruenceData(q=q, r=r, is_bi_degree_case=is_bi, part2_constraints_hold=part2)


def nm_bound_congruence(
    p: DegreeProfile, a: float | Alpha, tolerance: float = DEFAULT_TOLERANCE
) -> BoundReport:
    """Congruence-refined secant bound with the lo + r correction term.

    Requires gap >= 2, remainder r >= 1 and an occupied degree lo + r.
    Upper bound for a < 0 or a > 1, lower bound for 0 < a < 1; equality for
    the histogram {hi: q, lo + r: 1, lo: n - q - 1}.
    """
    alpha = as_alpha(a)
    cd = congruence_classify(p)
    lo, hi = p.delta_min, p.delta_max
    if cd.r == 0:
        raise RemainderZero("remainder is 0; the secant bound is already tight here")
    if p.nbr_hist.get(lo + cd.r, 0) == 0:
        raise UnoccupiedRemainderDegree(f"no vertex has neighborhood degree {lo + cd.r}")
    lo_pow = _pow(lo, alpha)
    slope = (_pow(hi, alpha) - lo_pow) / (hi - lo)
    bound = (
        p.n * lo_pow
        + (p.m1 - p.n * lo) * slope
        + _pow(lo + cd.r, alpha)
        - lo_pow
        - cd.r * slope
    )
    direction = UPPER if alpha.regime in (LOW, HIGH) else LOWER
    expected_hist = {hi: cd.q, lo + cd.r: 1, lo: p.n - cd.q - 1}
    equality = p.nbr_hist == {d: c for d, c in expected_hist.items() if c > 0}
    return _report(
        "congruence", alpha, direction, bound, nm_direct(p, alpha), equality, tolerance
    )
