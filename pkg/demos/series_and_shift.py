"""Ascending series and the shift move.

Run with ``python demos/series_and_shift.py``.
"""
# %%
from lpagraph import (Closure, Pc, ShiftSpec, cross_check_series, parse_graph,
                      series, shift_continuity_report, shift_graph)

# A chain of looped vertices, each one pointing down to the previous.
chain = parse_graph("""
vertex v1
vertex v2
vertex v3
vertex v4
edge l1 v1 v1
edge l2 v2 v2
edge l3 v3 v3
edge l4 v4 v4
edge e2 v2 v1
edge e3 v3 v2
edge e4 v4 v3
""")

# %% [markdown]
# Only the bottom loop lacks an exit.  Each quotient removes one exit, so the
# exitless-cycle series climbs the chain one vertex at a time.

# %%
for k, H in enumerate(series(chain, Closure(Pc), 4).sets, start=1):
    print(k, chain.ordered(H))

# %% [markdown]
# The closed-form description agrees with the quotient route stage by stage.

# %%
print("\n".join(cross_check_series(chain, "pc", 5).lines(chain)))

# %% [markdown]
# Shift: move u's edges over to v (matching ranges) and add one edge v -> u.
# Reachability survives, so the identity on vertices stays continuous.

# %%
g = parse_graph("vertex u\nvertex v\nvertex w\nedge a u w\nedge b v w\n")
spec = ShiftSpec("u", "v", {"a": "b"})
F = shift_graph(g, spec)
print([(e.name, e.source, e.target) for e in F.edges])
print(shift_continuity_report(g, spec))
