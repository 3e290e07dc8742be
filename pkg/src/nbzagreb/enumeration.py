"""Exhaustive small-graph sweeps, canonical forms and extremal search.

Connected graphs on up to 8 vertices (8 behind an explicit flag) are
enumerated as edge-subset bitmasks.  ``verify_all`` replays every identity,
bound and spectral check over the whole space and aggregates failures and
precondition skips into a report; nothing is ever skipped silently.

Two engines produce identical reports: ``bulk`` runs the vectorized kernels
from :mod:`nbzagreb._bulk`, ``scalar`` routes every graph through the
public per-graph operations.  The scalar engine is the reference; the bulk
engine is what makes n = 7 sweeps take seconds instead of hours.

Isomorphism dedup is by full permutation minimization: the canonical form
of a graph is the lexicographically smallest adjacency bitstring over all
vertex relabelings, which is also the smallest graph6 encoding.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _bulk
from ._bulk import (
    BOUND_CHAIN_EPS,
    CHECK_NAMES,
    REGULAR_BOUND_EPS,
    REGULAR_RHO_EPS,
    RHO_CHAIN_EPS,
    Tally,
)
from .bounds import (
    BOUND_SOURCES,
    congruence_classify,
    nm_bound_congruence,
    nm_bound_secant,
    nm_bound_unit,
    secant_coefficient,
    unit_coefficient,
)
from .errors import (
    GapTooSmall,
    NoConvergence,
    NonPositiveQuotient,
    NTooLarge,
    NeighborhoodRegular,
    RemainderZero,
    UnknownBoundSource,
    UnoccupiedRemainderDegree,
)
from .graphs import Graph, degree_profile, encode_graph6, is_path
from .indices import (
    MID,
    Alpha,
    as_alpha,
    nm2_direct,
    nm2_reconstruct_secant,
    nm2_reconstruct_unit,
    nm_direct,
    nm_reconstruct_secant,
    nm_reconstruct_unit,
)
from .spectral import spectral_radius

__all__ = [
    "VerificationReport",
    "ExtremalRecord",
    "enumerate_connected",
    "canonical_form",
    "verify_all",
    "find_equality_graphs",
    "coefficient_sign_grid",
    "CHECK_NAMES",
]

MAX_UNGATED_N = 7
FAILURE_CAP = 1000


def _check_n(n: int, allow_n8: bool) -> None:
    if n < 1:
        raise NTooLarge(f"need n >= 1, got {n}")
    if n > 8 or (n == 8 and not allow_n8):
        raise NTooLarge(
            f"n = {n} exceeds the limit ({MAX_UNGATED_N} without the n=8 override)"
        )


def _graph_of_mask(n: int, mask: int) -> Graph:
    return Graph.from_edges(n, _bulk.edges_of_mask(n, mask))


def _mask_of_graph(g: Graph) -> int:
    return _bulk.mask_of_edges(g.n, g.edges())


@lru_cache(maxsize=8)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Edge-slot permutation table (n!, npairs) and lex weights."""
    pairs = _bulk.pair_list(n)
    npairs = len(pairs)
    index = np.zeros((n, n), dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        index[i, j] = index[j, i] = k
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    table = np.empty((perms.shape[0], npairs), dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        table[:, k] = index[perms[:, i], perms[:, j]]
    weights = (1 << (npairs - 1 - np.arange(npairs, dtype=np.int64))).astype(np.int64)
    return table, weights


def _orbit_keys(n: int, mask: int) -> np.ndarray:
    """Masks of every relabeling of the graph encoded by ``mask``."""
    table, weights = _perm_tables(n)
    npairs = weights.size
    bits = np.array(
        [(mask >> (npairs - 1 - k)) & 1 for k in range(npairs)], dtype=np.int64
    )
    if npairs == 0:
        return np.zeros(1, dtype=np.int64)
    return bits[table] @ weights


def canonical_form(g: Graph) -> Graph:
    """Representative with the lexicographically smallest adjacency
    bitstring (hence smallest graph6 string) over all relabelings."""
    _check_n(g.n, allow_n8=True)
    keys = _orbit_keys(g.n, _mask_of_graph(g))
    return _graph_of_mask(g.n, int(keys.min()))


def enumerate_connected(
    n: int, dedup: bool = False, *, allow_n8: bool = False
) -> Iterator[Graph]:
    """Yield every connected labeled graph on n vertices in ascending mask
    order; with ``dedup``, one canonical representative per isomorphism
    class.

    Dedup keeps a seen-bitmap over the whole mask space and expands the
    isomorphism orbit of each new representative, so representatives are
    exactly the orbit-minimal masks (256 MB bitmap at n = 8).
    """
    _check_n(n, allow_n8)
    if not dedup:
        for lo, hi in _bulk.iter_mask_ranges(n):
            for mask in _bulk.connected_masks(n, lo, hi).tolist():
                yield _graph_of_mask(n, mask)
        return
    seen = np.zeros(1 << _bulk.pair_count(n), dtype=bool)
    for lo, hi in _bulk.iter_mask_ranges(n):
        for mask in _bulk.connected_masks(n, lo, hi).tolist():
            if seen[mask]:
                continue
            seen[_orbit_keys(n, mask)] = True
            yield _graph_of_mask(n, mask)


# ---------------------------------------------------------------------------
# Coefficient sign grid


def coefficient_sign_grid(
    alphas, p_max: int = 12, sign_tol: float = 1e-12
) -> tuple[int, list[dict]]:
    """Exhaustively check the coefficient signs for all 1 <= p < q <= p_max.

    Secant coefficients must be <= 0 for a < 0 or a > 1 and >= 0 for
    0 < a < 1; unit coefficients the other way around.  A violation needs
    magnitude above ``sign_tol``.  Returns (evaluations, violations).
    """
    alphas = [as_alpha(a) for a in alphas]
    evaluations = 0
    violations: list[dict] = []

    def record(kind, p, q, i, alpha, value):
        violations.append(
            {
                "graph6": None,
                "check": "coefficient_sign_grid",
                "alpha": alpha.value,
                "expected": f"{kind} coefficient sign for regime {alpha.regime}",
                "got": f"p={p}, q={q}, i={i}, value={value!r}",
            }
        )

    for p in range(1, p_max):
        for q in range(p + 1, p_max + 1):
            for alpha in alphas:
                mid = alpha.regime == MID
                for i in range(1, q - p):
                    value = secant_coefficient(p, q, i, alpha)
                    evaluations += 1
                    if (value > sign_tol) if not mid else (value < -sign_tol):
                        record("secant", p, q, i, alpha, value)
                for i in range(2, q - p + 1):
                    value = unit_coefficient(p, i, alpha)
                    evaluations += 1
                    if (value < -sign_tol) if not mid else (value > sign_tol):
                        record("unit", p, q, i, alpha, value)
    return evaluations, violations


# ---------------------------------------------------------------------------
# Scalar engine


def _scalar_graph_checks(g: Graph, alphas: list[Alpha], tolerance: float, tally: Tally):
    p = degree_profile(g)
    n = p.n
    g6 = encode_graph6(g)
    nalpha = len(alphas)

    tally.checks["m1_identity"] += 1
    nbr_total = sum(p.nbr_deg)
    if nbr_total != p.m1:
        tally.fail(g6, "m1_identity", f"sum nbr_deg == {p.m1}", nbr_total)

    nm_checks = (
        "nm_reconstruct_secant",
        "nm_reconstruct_unit",
        "nm_bound_secant",
        "nm_bound_unit",
    )
    if n < 3:
        for check in nm_checks + ("nm_bound_congruence",):
            tally.skip(check, "n_lt_3", nalpha)
        tally.skip("congruence_classify", "n_lt_3", 1)
    else:
        lo, hi = p.delta_min, p.delta_max
        regular = lo == hi
        gap = hi - lo
        excess = p.m1 - n * lo

        if gap < 2:
            tally.skip("congruence_classify", "gap_too_small", 1)
        elif excess < gap:
            tally.skip("congruence_classify", "non_positive_quotient", 1)
        else:
            tally.checks["congruence_classify"] += 1
            cd = congruence_classify(p)
            if cd.is_bi_degree_case and set(p.nbr_hist) != {lo, hi}:
                tally.fail(
                    g6, "congruence_classify",
                    "bi-degree case implies support {min, max}",
                    sorted(p.nbr_hist),
                )
            if cd.r >= 1 and p.nbr_hist.get(hi, 0) == cd.q and not cd.part2_constraints_hold:
                tally.fail(
                    g6, "congruence_classify",
                    "top-count q forces empty interior above min+r and at most one vertex at min+r",
                    dict(p.nbr_hist),
                )

        for alpha in alphas:
            if regular:
                for check in nm_checks:
                    tally.skip(check, "neighborhood_regular", 1)
            else:
                direct = nm_direct(p, alpha)
                tol = tolerance * max(1.0, abs(direct))
                for check, fn in (
                    ("nm_reconstruct_secant", nm_reconstruct_secant),
                    ("nm_reconstruct_unit", nm_reconstruct_unit),
                ):
                    tally.checks[check] += 1
                    value = fn(p, alpha)
                    if abs(value - direct) > tol:
                        tally.fail(g6, check, direct, value, alpha=alpha.value)
                for check, fn in (
                    ("nm_bound_secant", nm_bound_secant),
                    ("nm_bound_unit", nm_bound_unit),
                ):
                    tally.checks[check] += 1
                    rep = fn(p, alpha, tolerance)
                    ok = rep.holds and (not rep.equality or rep.slack <= rep.tolerance)
                    if not ok:
                        tally.fail(
                            g6, check,
                            f"{rep.direction} bound {rep.bound!r}"
                            + (" with equality" if rep.equality else ""),
                            rep.computed,
                            alpha=alpha.value,
                        )
            if gap < 2:
                tally.skip("nm_bound_congruence", "gap_too_small", 1)
            elif excess < gap:
                tally.skip("nm_bound_congruence", "non_positive_quotient", 1)
            else:
                quot, rem = divmod(excess, gap)
                if rem == 0:
                    tally.skip("nm_bound_congruence", "remainder_zero", 1)
                elif p.nbr_hist.get(lo + rem, 0) == 0:
                    tally.skip("nm_bound_congruence", "unoccupied_remainder_degree", 1)
                else:
                    tally.checks["nm_bound_congruence"] += 1
                    rep = nm_bound_congruence(p, alpha, tolerance)
                    ok = rep.holds and (not rep.equality or rep.slack <= rep.tolerance)
                    if not ok:
                        tally.fail(
                            g6, "nm_bound_congruence",
                            f"{rep.direction} bound {rep.bound!r}"
                            + (" with equality" if rep.equality else ""),
                            rep.computed,
                            alpha=alpha.value,
                        )

    if p.diameter != 2:
        tally.skip("dist2_identity", "not_diameter_two", 1)
        for check in ("nm2_reconstruct_secant", "nm2_reconstruct_unit"):
            tally.skip(check, "not_diameter_two", nalpha)
    else:
        tally.checks["dist2_identity"] += 1
        total2 = 2 * p.m * (n - 1) - p.m1
        d2_total = sum(p.dist2_deg)
        if d2_total != total2:
            tally.fail(g6, "dist2_identity", f"sum dist2_deg == {total2}", d2_total)
        if p.d2_min == 0:
            reason = "zero_min_dist2_degree"
        elif p.d2_min == p.d2_max:
            reason = "dist2_regular"
        else:
            reason = None
        for alpha in alphas:
            if reason is not None:
                tally.skip("nm2_reconstruct_secant", reason, 1)
                tally.skip("nm2_reconstruct_unit", reason, 1)
                continue
            direct = nm2_direct(p, alpha)
            tol = tolerance * max(1.0, abs(direct))
            for check, fn in (
                ("nm2_reconstruct_secant", nm2_reconstruct_secant),
                ("nm2_reconstruct_unit", nm2_reconstruct_unit),
            ):
                tally.checks[check] += 1
                value = fn(p, alpha)
                if abs(value - direct) > tol:
                    tally.fail(g6, check, direct, value, alpha=alpha.value)

    if p.m1 == 0:
        tally.skip("spectral_chain", "no_edges", 1)
        tally.skip("spectral_regular", "no_edges", 1)
        return
    tally.checks["spectral_chain"] += 1
    try:
        sr = spectral_radius(g)
    except NoConvergence:
        sr = None
        tally.fail(g6, "spectral_chain", "convergence", "no_convergence")
    ratio_bound = sum(d * d for d in p.nbr_deg) / p.m1
    lo = p.delta_min
    min_nbr_bound = (p.m1 * (2 * lo + 1) - n * lo * lo - n * lo) / p.m1
    if sr is not None:
        ok = (
            sr.rho_squared + RHO_CHAIN_EPS >= ratio_bound
            and ratio_bound >= min_nbr_bound - BOUND_CHAIN_EPS
        )
        if not ok:
            tally.fail(
                g6, "spectral_chain",
                f"rho^2 >= {ratio_bound!r} >= {min_nbr_bound!r}",
                sr.rho_squared,
            )
    if min(p.deg) == max(p.deg):
        tally.checks["spectral_regular"] += 1
        if sr is None:
            tally.fail(g6, "spectral_regular", "convergence", "no_convergence")
        else:
            k = float(p.deg[0])
            ok = (
                abs(sr.rho - k) <= REGULAR_RHO_EPS
                and abs(ratio_bound - k * k) <= REGULAR_BOUND_EPS
                and abs(min_nbr_bound - k * k) <= REGULAR_BOUND_EPS
            )
            if not ok:
                tally.fail(
                    g6, "spectral_regular",
                    f"rho == {k!r} and both bounds == {k * k!r}",
                    f"rho={sr.rho!r}, ratio={ratio_bound!r}, min_nbr={min_nbr_bound!r}",
                )
    else:
        tally.skip("spectral_regular", "not_regular", 1)


# ---------------------------------------------------------------------------
# Whole-space verification


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a whole-space sweep.

    ``checks_run`` counts evaluated (graph, alpha) instances per check;
    ``skips`` names the violated precondition for everything not checked.
    ``failures`` keeps the first FAILURE_CAP records, ``failure_count`` is
    exact.
    """

    n_range: tuple[int, ...]
    alpha_set: tuple[float, ...]
    engine: str
    jobs: int
    tolerance: float
    graphs_checked: int
    graphs_checked_by_n: dict[int, int]
    checks_run: dict[str, int]
    skips: dict[str, dict[str, int]]
    failures: tuple[dict, ...]
    failure_count: int
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "alpha_set": list(self.alpha_set),
            "engine": self.engine,
            "jobs": self.jobs,
            "tolerance": self.tolerance,
            "graphs_checked": self.graphs_checked,
            "graphs_checked_by_n": {str(k): v for k, v in self.graphs_checked_by_n.items()},
            "checks_run": dict(self.checks_run),
            "skips": {k: dict(v) for k, v in self.skips.items()},
            "failure_count": self.failure_count,
            "failures": list(self.failures),
            "elapsed": self.elapsed,
        }


def verify_all(
    n_max: int,
    alphas,
    *,
    tolerance: float = 1e-9,
    jobs: int = 1,
    allow_n8: bool = False,
    engine: str = "bulk",
) -> VerificationReport:
    """Run every applicable check on every connected graph with n <= n_max.

    The coefficient sign grid (graph-independent) runs once per call with
    the same exponents.  With ``jobs`` > 1 the mask space is partitioned
    into ranges processed by worker processes; reports are merged in range
    order, so results are identical to a sequential run.
    """
    _check_n(n_max, allow_n8)
    alpha_objs = [as_alpha(a) for a in alphas]
    if not alpha_objs:
        raise ValueError("need at least one exponent")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if engine not in ("bulk", "scalar"):
        raise ValueError(f"unknown engine {engine!r}")
    start = time.perf_counter()
    total = Tally()
    by_n: dict[int, int] = {}

    if engine == "scalar":
        for n in range(1, n_max + 1):
            tally = Tally()
            for g in enumerate_connected(n, allow_n8=allow_n8):
                tally.graphs += 1
                _scalar_graph_checks(g, alpha_objs, tolerance, tally)
            by_n[n] = tally.graphs
            total.merge(tally)
    else:
        alpha_values = tuple(a.value for a in alpha_objs)
        tasks = [
            (n, lo, hi)
            for n in range(1, n_max + 1)
            for lo, hi in _bulk.iter_mask_ranges(n)
        ]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [
                    pool.submit(_bulk.sweep_chunk, n, lo, hi, alpha_values, tolerance)
                    for n, lo, hi in tasks
                ]
                tallies = [f.result() for f in futures]
        else:
            tallies = [
                _bulk.sweep_chunk(n, lo, hi, alpha_values, tolerance)
                for n, lo, hi in tasks
            ]
        for (n, _lo, _hi), tally in zip(tasks, tallies):
            by_n[n] = by_n.get(n, 0) + tally.graphs
            total.merge(tally)

    grid_count, grid_violations = coefficient_sign_grid(alpha_objs)
    total.checks["coefficient_sign_grid"] += grid_count
    for violation in grid_violations:
        total.failure_count += 1
        total.failures.append(violation)

    checks_run = {name: total.checks.get(name, 0) for name in CHECK_NAMES}
    skips = {
        name: dict(sorted(total.skips.get(name, Counter()).items()))
        for name in CHECK_NAMES
        if name in total.skips
    }
    return VerificationReport(
        n_range=tuple(range(1, n_max + 1)),
        alpha_set=tuple(a.value for a in alpha_objs),
        engine=engine,
        jobs=jobs,
        tolerance=tolerance,
        graphs_checked=total.graphs,
        graphs_checked_by_n=by_n,
        checks_run=checks_run,
        skips=skips,
        failures=tuple(total.failures[:FAILURE_CAP]),
        failure_count=total.failure_count,
        elapsed=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# Extremal (equality-attaining) graph search


@dataclass(frozen=True)
class ExtremalRecord:
    """An isomorphism-class representative attaining a bound exactly.

    ``structural_match`` records membership in the expected equality family
    of the bound: two-valued histogram support for the secant form, paths
    for the unit form, the {hi: q, min+r: 1, min: n-q-1} histogram for the
    congruence form.
    """

    graph: str
    bound_source: str
    alpha: float
    slack: float
    structural_match: bool

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "bound_source": self.bound_source,
            "alpha": self.alpha,
            "slack": self.slack,
            "structural_match": self.structural_match,
        }


_SOURCE_OPS = {
    "secant": nm_bound_secant,
    "unit": nm_bound_unit,
    "congruence": nm_bound_congruence,
}

_SOURCE_SKIPS = (
    NeighborhoodRegular,
    GapTooSmall,
    NonPositiveQuotient,
    RemainderZero,
    UnoccupiedRemainderDegree,
)


def find_equality_graphs(
    n: int, alpha, source: str, *, allow_n8: bool = False
) -> list[ExtremalRecord]:
    """All isomorphism classes on n vertices attaining the named bound with
    equality, sorted by graph6 encoding."""
    if source not in BOUND_SOURCES:
        raise UnknownBoundSource(
            f"unknown bound source {source!r}; expected one of {', '.join(BOUND_SOURCES)}"
        )
    _check_n(n, allow_n8)
    a = as_alpha(alpha)
    op = _SOURCE_OPS[source]
    records = []
    for g in enumerate_connected(n, dedup=True, allow_n8=allow_n8):
        p = degree_profile(g)
        try:
            rep = op(p, a)
        except _SOURCE_SKIPS:
            continue
        if not rep.equality:
            continue
        if source == "secant":
            structural = set(p.nbr_hist) == {p.delta_min, p.delta_max}
        elif source == "unit":
            structural = is_path(g)
        else:
            cd = congruence_classify(p)
            expected = {
                p.delta_max: cd.q,
                p.delta_min + cd.r: 1,
                p.delta_min: p.n - cd.q - 1,
            }
            structural = p.nbr_hist == {d: c for d, c in expected.items() if c > 0}
        records.append(
            ExtremalRecord(
                graph=encode_graph6(g),
                bound_source=source,
                alpha=a.value,
                slack=rep.slack,
                structural_match=structural,
            )
        )
    records.sort(key=lambda r: r.graph)
    return records
