"""
Exhaustive verification over every small graph
==============================================

Every identity and bound in the library is checkable by brute force: the
sweep enumerates all connected labeled graphs up to a vertex count (edge
subsets filtered by connectivity), runs every applicable check on each,
and reports failures and precondition skips.  Nothing is skipped silently,
so an identity that never fires on the swept space would be visible as a
zero check count.

n <= 5 takes well under a second; the full n = 7 space (2,097,152 edge
masks, 1,866,256 of them connected) runs in under a minute.
"""

import json

from nbzagreb import verify_all

report = verify_all(5, alphas=[-1, 0.5, 2, 3])

print(f"graphs checked: {report.graphs_checked} {report.graphs_checked_by_n}")
print(f"failures:       {report.failure_count}")
print(f"elapsed:        {report.elapsed:.2f} s")
print("\nchecks run:")
for name, count in report.checks_run.items():
    print(f"  {name:<24} {count:>8}")
print("\nskips (precondition, count):")
for name, reasons in report.skips.items():
    print(f"  {name:<24} {reasons}")

# The same run through the scalar per-graph operations produces the exact
# same accounting; this is how the vectorized engine is validated.
scalar = verify_all(4, alphas=[2], engine="scalar")
bulk = verify_all(4, alphas=[2], engine="bulk")
print("\nscalar == bulk at n <= 4:",
      scalar.checks_run == bulk.checks_run and scalar.skips == bulk.skips)

# Reports serialize to JSON for CI consumption.
print("\nreport keys:", list(json.loads(json.dumps(report.to_dict())).keys()))
