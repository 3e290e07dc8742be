"""
Sharp bounds and the graphs that attain them
============================================

Dropping the correction terms of either reconstruction turns it into a
bound on NM_a.  The direction flips with the exponent regime: for a < 0 or
a > 1 the secant base term bounds from above and the unit form from below;
for 0 < a < 1 the roles swap.

A third, finer bound comes from Euclidean division: writing
M1 - n*lo = q*(hi - lo) + r with remainder r >= 1, a single correction at
degree lo + r sharpens the secant bound.  Equality pins the histogram down
completely: q vertices at hi, one at lo + r, the rest at lo.
"""

from pathlib import Path

from nbzagreb import (
    congruence_classify,
    degree_profile,
    nm_bound_congruence,
    nm_bound_secant,
    nm_bound_unit,
    parse_edge_list,
    path_graph,
)
from nbzagreb.errors import PreconditionError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def show(tag, profile, alpha):
    print(f"--- {tag}, a = {alpha}")
    for fn in (nm_bound_secant, nm_bound_unit, nm_bound_congruence):
        try:
            r = fn(profile, alpha)
        except PreconditionError as exc:
            print(f"  {fn.__name__:<22} inapplicable: {type(exc).__name__}")
            continue
        marker = "equality" if r.equality else f"slack {r.slack:.6g}"
        print(
            f"  {r.source:<10} {r.direction:<5} bound {r.bound:<14.6f} "
            f"value {r.computed:<14.6f} holds={r.holds} ({marker})"
        )


fig1 = degree_profile(parse_edge_list((FIXTURES / "figure1.edges").read_text()))
fig2 = degree_profile(parse_edge_list((FIXTURES / "figure2.edges").read_text()))

# figure1 has a two-valued histogram {4: 8, 10: 4}: the secant bound is
# attained exactly, in both regimes.
show("figure1", fig1, 2)
show("figure1", fig1, 0.5)

# figure2 realizes the congruence equality family: M1 - n*min = 7 splits as
# 3 * gap + 1, and the histogram is exactly {5: 3, 4: 1, 3: 1}.
cd = congruence_classify(fig2)
print(f"\nfigure2 division: q={cd.q}, r={cd.r}, "
      f"bi-degree case: {cd.is_bi_degree_case}")
show("figure2", fig2, 2)
show("figure2", fig2, -1)

# Paths attain the unit-form bound with equality.
show("P5", degree_profile(path_graph(5)), 2)
