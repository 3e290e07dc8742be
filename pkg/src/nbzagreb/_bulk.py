"""Vectorized kernels for exhaustive edge-mask sweeps.

Graphs on n vertices are encoded as integers whose bits select edge slots.
Slot k is the k-th pair in graph6 column-major order ((0,1),(0,2),(1,2),
(0,3),...) and is stored at bit position npairs-1-k, so numeric order on
masks equals lexicographic order on graph6 bitstreams.  All kernels work on
contiguous mask ranges in numpy batches; n <= 8 keeps every intermediate
array small.

The sweep kernel mirrors the scalar operations in :mod:`nbzagreb.indices`,
:mod:`nbzagreb.bounds` and :mod:`nbzagreb.spectral` check for check,
including the skip-reason accounting, so that reports from both engines are
directly comparable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL

CHUNK_BITS = 15

# Fixed slacks of the spectral chain and the regular-graph equalities.
RHO_CHAIN_EPS = 1e-7
BOUND_CHAIN_EPS = 1e-9
REGULAR_RHO_EPS = 1e-8
REGULAR_BOUND_EPS = 1e-9

CHECK_NAMES = (
    "m1_identity",
    "nm_reconstruct_secant",
    "nm_reconstruct_unit",
    "nm_bound_secant",
    "nm_bound_unit",
    "nm_bound_congruence",
    "congruence_classify",
    "dist2_identity",
    "nm2_reconstruct_secant",
    "nm2_reconstruct_unit",
    "spectral_chain",
    "spectral_regular",
    "coefficient_sign_grid",
)

FAILURE_CAP_PER_CHUNK = 200


def pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def mask_of_edges(n: int, edges) -> int:
    npairs = pair_count(n)
    index = {}
    for k, (i, j) in enumerate(pair_list(n)):
        index[(i, j)] = k
    mask = 0
    for u, v in edges:
        k = index[(min(u, v), max(u, v))]
        mask |= 1 << (npairs - 1 - k)
    return mask


def edges_of_mask(n: int, mask: int) -> list[tuple[int, int]]:
    npairs = pair_count(n)
    pairs = pair_list(n)
    return [pairs[k] for k in range(npairs) if (mask >> (npairs - 1 - k)) & 1]


def graph6_of_mask(n: int, mask: int) -> str:
    """graph6 string of a mask; matches graphs.encode_graph6."""
    npairs = pair_count(n)
    bits = [(mask >> (npairs - 1 - k)) & 1 for k in range(npairs)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


@dataclass
class Tally:
    """Mergeable per-chunk result: counts, skip reasons and failures."""

    graphs: int = 0
    checks: Counter = field(default_factory=Counter)
    skips: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    failure_count: int = 0

    def skip(self, check: str, reason: str, count: int = 1) -> None:
        if count:
            self.skips.setdefault(check, Counter())[reason] += count

    def fail(self, graph6, check, expected, got, alpha=None) -> None:
        self.failure_count += 1
        if len(self.failures) < FAILURE_CAP_PER_CHUNK:
            self.failures.append(
                {
                    "graph6": graph6,
                    "check": check,
                    "alpha": alpha,
                    "expected": expected,
                    "got": got,
                }
            )

    def merge(self, other: "Tally") -> None:
        self.graphs += other.graphs
        self.checks.update(other.checks)
        for check, reasons in other.skips.items():
            self.skips.setdefault(check, Counter()).update(reasons)
        self.failures.extend(other.failures)
        self.failure_count += other.failure_count


# ---------------------------------------------------------------------------
# Batch construction


def _bits_of(masks: np.ndarray, npairs: int) -> np.ndarray:
    shifts = (npairs - 1 - np.arange(npairs)).astype(np.int64)
    return ((masks[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


def _adj_of(bits: np.ndarray, n: int) -> np.ndarray:
    pairs = pair_list(n)
    rows = np.array([p[0] for p in pairs], dtype=np.int64)
    cols = np.array([p[1] for p in pairs], dtype=np.int64)
    adj = np.zeros((bits.shape[0], n, n), dtype=np.uint8)
    adj[:, rows, cols] = bits
    adj[:, cols, rows] = bits
    return adj


def _connected(adj: np.ndarray) -> np.ndarray:
    b, n, _ = adj.shape
    reach = np.zeros((b, n), dtype=np.uint8)
    reach[:, 0] = 1
    for _ in range(n - 1):
        hop = np.matmul(adj, reach[:, :, None])[:, :, 0]
        reach = ((reach + hop) > 0).astype(np.uint8)
    return reach.all(axis=1)


def iter_mask_ranges(n: int):
    """Split the full mask space of n-vertex graphs into chunk ranges."""
    total = 1 << pair_count(n)
    step = 1 << CHUNK_BITS
    for lo in range(0, total, step):
        yield lo, min(lo + step, total)


def connected_masks(n: int, mask_lo: int, mask_hi: int) -> np.ndarray:
    """Ascending array of connected masks within [mask_lo, mask_hi)."""
    masks = np.arange(mask_lo, mask_hi, dtype=np.int64)
    adj = _adj_of(_bits_of(masks, pair_count(n)), n)
    return masks[_connected(adj)]


# ---------------------------------------------------------------------------
# Batched power iteration (same semantics as spectral.spectral_radius)


def batched_power_iteration(
    adj: np.ndarray, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
):
    """Per-graph dominant eigenvalue of A + I minus one.

    Returns (rho, iterations, residual, converged); rows that never reach
    tolerance have converged=False.
    """
    b, n, _ = adj.shape
    shifted = adj.astype(np.float64)
    diag = np.arange(n)
    shifted[:, diag, diag] += 1.0
    v = np.full((b, n), 1.0 / np.sqrt(n))
    prev = np.full(b, np.inf)
    rayleigh_out = np.zeros(b)
    iterations = np.zeros(b, dtype=np.int64)
    residual = np.zeros(b)
    active = np.arange(b)
    it = 0
    while active.size and it < max_iter:
        it += 1
        w = np.matmul(shifted[active], v[active][:, :, None])[:, :, 0]
        ray = np.einsum("bi,bi->b", v[active], w)
        change = np.abs(ray - prev[active])
        done = change < tol
        if done.any():
            hit = active[done]
            rayleigh_out[hit] = ray[done]
            iterations[hit] = it
            residual[hit] = change[done]
        cont = ~done
        keep = active[cont]
        prev[keep] = ray[cont]
        wk = w[cont]
        v[keep] = wk / np.linalg.norm(wk, axis=1, keepdims=True)
        active = keep
    converged = iterations > 0
    return rayleigh_out - 1.0, iterations, residual, converged


# ---------------------------------------------------------------------------
# Sweep kernel


def _row_hist(values: np.ndarray, width: int) -> np.ndarray:
    b = values.shape[0]
    flat = values + width * np.arange(b, dtype=np.int64)[:, None]
    return np.bincount(flat.ravel(), minlength=b * width).reshape(b, width)


def _powers(width: int, alpha: float) -> np.ndarray:
    # Slot 0 stays 0; callers only use it where the count is zero.
    pw = np.zeros(width)
    if width > 1:
        pw[1:] = np.arange(1, width, dtype=np.float64) ** alpha
    return pw


def _gather(mat: np.ndarray, idx: np.ndarray) -> np.ndarray:
    return np.take_along_axis(mat, idx[:, None], axis=1)[:, 0]


def _interval_sum(cum: np.ndarray, lo_idx: np.ndarray, hi_idx: np.ndarray) -> np.ndarray:
    """Sum of histogram entries in [lo_idx, hi_idx] per row (0 when empty)."""
    width = cum.shape[1]
    hi_c = np.clip(hi_idx, 0, width - 1)
    lo_c = np.clip(lo_idx - 1, 0, width - 1)
    total = _gather(cum, hi_c) - np.where(lo_idx > 0, _gather(cum, lo_c), 0)
    return np.where(hi_idx >= lo_idx, total, 0)


def _tolerances(tolerance: float, reference: np.ndarray) -> np.ndarray:
    return tolerance * np.maximum(1.0, np.abs(reference))


def _report_rows(tally, check, masks, n, rows, expected, got, alpha=None):
    for row in np.nonzero(rows)[0]:
        tally.fail(
            graph6_of_mask(n, int(masks[row])),
            check,
            expected(row) if callable(expected) else expected,
            got(row) if callable(got) else got,
            alpha=alpha,
        )


def sweep_chunk(
    n: int,
    mask_lo: int,
    mask_hi: int,
    alphas: tuple[float, ...],
    tolerance: float,
) -> Tally:
    """Run every applicable check on all connected masks in a range."""
    tally = Tally()
    npairs = pair_count(n)
    masks = np.arange(mask_lo, mask_hi, dtype=np.int64)
    adj = _adj_of(_bits_of(masks, npairs), n)
    keep = _connected(adj)
    masks = masks[keep]
    adj = adj[keep]
    b = masks.size
    tally.graphs = b
    if b == 0:
        return tally
    nalpha = len(alphas)

    deg = adj.sum(axis=2, dtype=np.int64)
    m = deg.sum(axis=1) // 2
    m1 = (deg * deg).sum(axis=1)
    nbr = np.matmul(adj.astype(np.int64), deg[:, :, None])[:, :, 0]
    nm2_exact = (nbr * nbr).sum(axis=1)
    delta = nbr.min(axis=1)
    big_delta = nbr.max(axis=1)

    adj_b = adj.astype(bool)
    eye = np.eye(n, dtype=bool)
    two_step = np.matmul(adj, adj) > 0
    d2_mask = two_step & ~adj_b & ~eye
    d2 = np.matmul(d2_mask.astype(np.int64), deg[:, :, None])[:, :, 0]
    d2_min = d2.min(axis=1)
    d2_max = d2.max(axis=1)
    covered = adj_b | two_step | eye
    complete = (adj_b | eye).all(axis=(1, 2))
    diam2 = covered.all(axis=(1, 2)) & ~complete

    width = n * (n - 1) + 1
    hist = _row_hist(nbr, width)
    hist_cum = hist.cumsum(axis=1)
    hist2 = _row_hist(d2, width)

    # --- M1 identity: sum of neighborhood degrees equals sum of deg^2.
    tally.checks["m1_identity"] += b
    bad = nbr.sum(axis=1) != m1
    _report_rows(
        tally, "m1_identity", masks, n, bad,
        lambda r: f"sum nbr_deg == {int(m1[r])}",
        lambda r: int(nbr.sum(axis=1)[r]),
    )

    # --- Neighborhood-degree checks (hypothesis n >= 3).
    nm_checks = (
        "nm_reconstruct_secant",
        "nm_reconstruct_unit",
        "nm_bound_secant",
        "nm_bound_unit",
    )
    if n < 3:
        for check in nm_checks + ("nm_bound_congruence",):
            tally.skip(check, "n_lt_3", b * nalpha)
        tally.skip("congruence_classify", "n_lt_3", b)
    else:
        sel = delta != big_delta
        n_regular = int(b - sel.sum())
        gap = big_delta - delta
        excess = m1 - n * delta
        gap_ok = gap >= 2
        pos_q = gap_ok & (excess >= gap)
        safe_gap = np.maximum(gap, 1)
        quot = np.where(pos_q, excess // safe_gap, 0)
        rem = np.where(pos_q, excess - quot * safe_gap, 0)
        rem_pos = pos_q & (rem >= 1)
        occupied = rem_pos & (_gather(hist, delta + rem) >= 1)

        n_gap_small = int((~gap_ok).sum())
        n_no_quot = int((gap_ok & ~pos_q).sum())
        n_rem_zero = int((pos_q & (rem == 0)).sum())
        n_unocc = int((rem_pos & ~occupied).sum())

        # Classification consistency (alpha-independent).
        tally.checks["congruence_classify"] += int(pos_q.sum())
        tally.skip("congruence_classify", "gap_too_small", n_gap_small)
        tally.skip("congruence_classify", "non_positive_quotient", n_no_quot)
        hist_hi = _gather(hist, big_delta)
        hist_lo = _gather(hist, delta)
        bi_rows = pos_q & (rem == 0) & (hist_hi == quot)
        bad = bi_rows & (hist_lo + hist_hi != n)
        _report_rows(
            tally, "congruence_classify", masks, n, bad,
            "bi-degree case implies support {min, max}",
            lambda r: f"support mass {int(hist_lo[r] + hist_hi[r])} of {n}",
        )
        p2_rows = rem_pos & (hist_hi == quot)
        interior = _interval_sum(hist_cum, delta + rem + 1, big_delta - 1)
        at_rem = _gather(hist, delta + np.clip(rem, 0, width - 1 - delta))
        bad = p2_rows & ((interior != 0) | (at_rem > 1))
        _report_rows(
            tally, "congruence_classify", masks, n, bad,
            "top-count q forces empty interior above min+r and at most one vertex at min+r",
            lambda r: f"interior={int(interior[r])}, at_rem={int(at_rem[r])}",
        )

        idx_sel = np.nonzero(sel)[0]
        idx_occ = np.nonzero(occupied)[0]
        vals = np.arange(width, dtype=np.int64)
        for alpha in alphas:
            upper = alpha < 0.0 or alpha > 1.0
            for check in nm_checks:
                tally.skip(check, "neighborhood_regular", n_regular)
            tally.skip("nm_bound_congruence", "gap_too_small", n_gap_small)
            tally.skip("nm_bound_congruence", "non_positive_quotient", n_no_quot)
            tally.skip("nm_bound_congruence", "remainder_zero", n_rem_zero)
            tally.skip("nm_bound_congruence", "unoccupied_remainder_degree", n_unocc)
            if idx_sel.size:
                pw = _powers(width, alpha)
                h = hist[idx_sel]
                lo = delta[idx_sel]
                hi = big_delta[idx_sel]
                nvert = float(n)
                m1_s = m1[idx_sel]
                direct = h @ pw
                tol = _tolerances(tolerance, direct)
                lo_pow = pw[lo]
                hi_pow = pw[hi]
                slope = (hi_pow - lo_pow) / (hi - lo)
                step = pw[lo + 1] - lo_pow
                base_secant = nvert * lo_pow + (m1_s - n * lo) * slope
                base_unit = nvert * lo_pow + (m1_s - n * lo) * step

                coef = pw[None, :] - lo_pow[:, None] - (vals[None, :] - lo[:, None]) * slope[:, None]
                inner = (vals[None, :] > lo[:, None]) & (vals[None, :] < hi[:, None])
                recon_s = base_secant + (h * coef * inner).sum(axis=1)
                tally.checks["nm_reconstruct_secant"] += idx_sel.size
                bad = np.abs(recon_s - direct) > tol
                _report_rows(
                    tally, "nm_reconstruct_secant", masks[idx_sel], n, bad,
                    lambda r: float(direct[r]), lambda r: float(recon_s[r]), alpha,
                )

                coef = pw[None, :] - lo_pow[:, None] - (vals[None, :] - lo[:, None]) * step[:, None]
                inner = (vals[None, :] >= (lo + 2)[:, None]) & (vals[None, :] <= hi[:, None])
                recon_u = base_unit + (h * coef * inner).sum(axis=1)
                tally.checks["nm_reconstruct_unit"] += idx_sel.size
                bad = np.abs(recon_u - direct) > tol
                _report_rows(
                    tally, "nm_reconstruct_unit", masks[idx_sel], n, bad,
                    lambda r: float(direct[r]), lambda r: float(recon_u[r]), alpha,
                )

                # Secant-form bound; equality demanded exactly on bi-supported rows.
                tally.checks["nm_bound_secant"] += idx_sel.size
                if upper:
                    ok = direct <= base_secant + tol
                else:
                    ok = direct >= base_secant - tol
                h_lo = _gather(hist, delta)[idx_sel]
                h_hi = _gather(hist, big_delta)[idx_sel]
                bi_support = h_lo + h_hi == n
                ok &= ~bi_support | (np.abs(direct - base_secant) <= tol)
                _report_rows(
                    tally, "nm_bound_secant", masks[idx_sel], n, ~ok,
                    lambda r: f"{'<=' if upper else '>='} {float(base_secant[r])!r}"
                    + (" with equality" if bi_support[r] else ""),
                    lambda r: float(direct[r]), alpha,
                )

                # Unit-form bound with the top histogram term.
                tally.checks["nm_bound_unit"] += idx_sel.size
                bound_u = base_unit + h_hi * (hi_pow - lo_pow - (hi - lo) * step)
                if upper:
                    ok = direct >= bound_u - tol
                else:
                    ok = direct <= bound_u + tol
                interior2 = _interval_sum(hist_cum, delta + 2, big_delta - 1)[idx_sel]
                ok &= (interior2 != 0) | (np.abs(direct - bound_u) <= tol)
                _report_rows(
                    tally, "nm_bound_unit", masks[idx_sel], n, ~ok,
                    lambda r: f"{'>=' if upper else '<='} {float(bound_u[r])!r}"
                    + ("" if interior2[r] else " with equality"),
                    lambda r: float(direct[r]), alpha,
                )

            if idx_occ.size:
                pw = _powers(width, alpha)
                h = hist[idx_occ]
                lo = delta[idx_occ]
                hi = big_delta[idx_occ]
                r_c = rem[idx_occ]
                q_c = quot[idx_occ]
                direct = h @ pw
                tol = _tolerances(tolerance, direct)
                lo_pow = pw[lo]
                slope = (pw[hi] - lo_pow) / (hi - lo)
                bound_c = (
                    n * lo_pow
                    + (m1[idx_occ] - n * lo) * slope
                    + pw[lo + r_c]
                    - lo_pow
                    - r_c * slope
                )
                tally.checks["nm_bound_congruence"] += idx_occ.size
                if upper:
                    ok = direct <= bound_c + tol
                else:
                    ok = direct >= bound_c - tol
                pattern = (
                    (_gather(hist, big_delta)[idx_occ] == q_c)
                    & (_gather(hist, delta + rem)[idx_occ] == 1)
                    & (_gather(hist, delta)[idx_occ] == n - q_c - 1)
                )
                ok &= ~pattern | (np.abs(direct - bound_c) <= tol)
                _report_rows(
                    tally, "nm_bound_congruence", masks[idx_occ], n, ~ok,
                    lambda r: f"{'<=' if upper else '>='} {float(bound_c[r])!r}"
                    + (" with equality" if pattern[r] else ""),
                    lambda r: float(direct[r]), alpha,
                )

    # --- Distance-2 identities (diameter exactly 2).
    n_diam2 = int(diam2.sum())
    tally.checks["dist2_identity"] += n_diam2
    tally.skip("dist2_identity", "not_diameter_two", b - n_diam2)
    total2 = 2 * m * (n - 1) - m1
    bad = diam2 & (d2.sum(axis=1) != total2)
    _report_rows(
        tally, "dist2_identity", masks, n, bad,
        lambda r: f"sum dist2_deg == {int(total2[r])}",
        lambda r: int(d2.sum(axis=1)[r]),
    )

    elig2 = diam2 & (d2_min >= 1) & (d2_min != d2_max)
    n_zero_min = int((diam2 & (d2_min == 0)).sum())
    n_d2_regular = int((diam2 & (d2_min >= 1) & (d2_min == d2_max)).sum())
    idx2 = np.nonzero(elig2)[0]
    vals = np.arange(width, dtype=np.int64)
    for alpha in alphas:
        for check in ("nm2_reconstruct_secant", "nm2_reconstruct_unit"):
            tally.skip(check, "not_diameter_two", b - n_diam2)
            tally.skip(check, "zero_min_dist2_degree", n_zero_min)
            tally.skip(check, "dist2_regular", n_d2_regular)
        if not idx2.size:
            continue
        pw = _powers(width, alpha)
        h = hist2[idx2]
        lo = d2_min[idx2]
        hi = d2_max[idx2]
        tot = total2[idx2]
        direct = h @ pw
        tol = _tolerances(tolerance, direct)
        lo_pow = pw[lo]
        slope = (pw[hi] - lo_pow) / (hi - lo)
        step = pw[lo + 1] - lo_pow

        coef = pw[None, :] - lo_pow[:, None] - (vals[None, :] - lo[:, None]) * slope[:, None]
        inner = (vals[None, :] > lo[:, None]) & (vals[None, :] < hi[:, None])
        recon = n * lo_pow + (tot - n * lo) * slope + (h * coef * inner).sum(axis=1)
        tally.checks["nm2_reconstruct_secant"] += idx2.size
        bad = np.abs(recon - direct) > tol
        _report_rows(
            tally, "nm2_reconstruct_secant", masks[idx2], n, bad,
            lambda r: float(direct[r]), lambda r: float(recon[r]), alpha,
        )

        coef = pw[None, :] - lo_pow[:, None] - (vals[None, :] - lo[:, None]) * step[:, None]
        inner = (vals[None, :] >= (lo + 2)[:, None]) & (vals[None, :] <= hi[:, None])
        recon = n * lo_pow + (tot - n * lo) * step + (h * coef * inner).sum(axis=1)
        tally.checks["nm2_reconstruct_unit"] += idx2.size
        bad = np.abs(recon - direct) > tol
        _report_rows(
            tally, "nm2_reconstruct_unit", masks[idx2], n, bad,
            lambda r: float(direct[r]), lambda r: float(recon[r]), alpha,
        )

    # --- Spectral chain and regular-graph equalities.
    if n == 1:
        tally.skip("spectral_chain", "no_edges", b)
        tally.skip("spectral_regular", "no_edges", b)
        return tally
    rho, _iters, _resid, converged = batched_power_iteration(adj)
    ratio_bound = nm2_exact / m1
    lo_f = delta.astype(np.float64)
    min_nbr_bound = (m1 * (2 * lo_f + 1) - n * lo_f * lo_f - n * lo_f) / m1

    tally.checks["spectral_chain"] += b
    _report_rows(
        tally, "spectral_chain", masks, n, ~converged, "convergence", "no_convergence"
    )
    chain_ok = (rho * rho + RHO_CHAIN_EPS >= ratio_bound) & (
        ratio_bound >= min_nbr_bound - BOUND_CHAIN_EPS
    )
    bad = converged & ~chain_ok
    _report_rows(
        tally, "spectral_chain", masks, n, bad,
        lambda r: f"rho^2 >= {float(ratio_bound[r])!r} >= {float(min_nbr_bound[r])!r}",
        lambda r: float(rho[r] * rho[r]),
    )

    regular = deg.min(axis=1) == deg.max(axis=1)
    n_regular_deg = int(regular.sum())
    tally.checks["spectral_regular"] += n_regular_deg
    tally.skip("spectral_regular", "not_regular", b - n_regular_deg)
    k = deg[:, 0].astype(np.float64)
    reg_ok = (
        (np.abs(rho - k) <= REGULAR_RHO_EPS)
        & (np.abs(ratio_bound - k * k) <= REGULAR_BOUND_EPS)
        & (np.abs(min_nbr_bound - k * k) <= REGULAR_BOUND_EPS)
    )
    bad = regular & converged & ~reg_ok
    _report_rows(
        tally, "spectral_regular", masks, n, bad,
        lambda r: f"rho == {float(k[r])!r} and both bounds == {float(k[r] * k[r])!r}",
        lambda r: f"rho={float(rho[r])!r}, ratio={float(ratio_bound[r])!r}, min_nbr={float(min_nbr_bound[r])!r}",
    )
    bad = regular & ~converged
    _report_rows(tally, "spectral_regular", masks, n, bad, "convergence", "no_convergence")
    return tally


# ---------------------------------------------------------------------------
# Standalone sweeps used by the acceptance suite


def m1_identity_all_graphs(n: int) -> tuple[int, int]:
    """Check sum(nbr_deg) == M1 over ALL graphs on n vertices, connected or
    not.  Returns (graphs checked, mismatches)."""
    npairs = pair_count(n)
    mismatches = 0
    total = 0
    for lo, hi in iter_mask_ranges(n):
        masks = np.arange(lo, hi, dtype=np.int64)
        adj = _adj_of(_bits_of(masks, npairs), n)
        deg = adj.sum(axis=2, dtype=np.int64)
        m1 = (deg * deg).sum(axis=1)
        nbr_total = np.matmul(adj.astype(np.int64), deg[:, :, None])[:, :, 0].sum(axis=1)
        mismatches += int((nbr_total != m1).sum())
        total += masks.size
    return total, mismatches


def tree_identity_sweep(n: int) -> tuple[int, int, int]:
    """Check M1 == 6n - 10 - 2*n2 - 2*n3 on every chemical tree (max degree
    <= 4) with n >= 2 vertices.

    Trees are enumerated as connected graphs with exactly n-1 edges, built
    from (n-1)-subsets of the edge slots.  Returns (labeled trees, chemical
    trees among them, identity mismatches).
    """
    if n < 2:
        raise ValueError("tree sweep needs n >= 2")
    npairs = pair_count(n)
    trees = 0
    chemical = 0
    mismatches = 0
    combo_iter = combinations(range(npairs), n - 1)
    batch_size = 1 << CHUNK_BITS
    while True:
        batch = []
        for combo in combo_iter:
            batch.append(combo)
            if len(batch) == batch_size:
                break
        if not batch:
            break
        slots = np.array(batch, dtype=np.int64)
        bits = np.zeros((len(batch), npairs), dtype=np.uint8)
        bits[np.arange(len(batch))[:, None], slots] = 1
        adj = _adj_of(bits, n)
        keep = _connected(adj)
        adj = adj[keep]
        trees += int(keep.sum())
        if not adj.size:
            continue
        deg = adj.sum(axis=2, dtype=np.int64)
        chem = deg.max(axis=1) <= 4
        chemical += int(chem.sum())
        deg = deg[chem]
        m1 = (deg * deg).sum(axis=1)
        n2 = (deg == 2).sum(axis=1)
        n3 = (deg == 3).sum(axis=1)
        predicted = 6 * n - 10 - 2 * n2 - 2 * n3
        mismatches += int((m1 != predicted).sum())
    return trees, chemical, mismatches
