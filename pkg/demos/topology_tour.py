"""A walk through the DCC topology on a small graph.

Run with ``python demos/topology_tour.py``.
"""
# %%
from lpagraph import (boundary, closed_sets, continuity_check, dcc_closure,
                      exterior, interior, is_topologically_connected,
                      parse_graph)

# A vertex with a loop that feeds two sinks.
g = parse_graph("""
vertex v
vertex u
vertex w
edge e v v
edge f v u
edge g v w
""")

# %% [markdown]
# The closure of a set is everything that can reach it.  Since v reaches
# both sinks, closing {u} pulls v in.

# %%
print("c({u})   =", g.ordered(dcc_closure(g, {"u"})))
print("ext({u}) =", g.ordered(exterior(g, {"u"})))
print("int({u,w}) =", g.ordered(interior(g, {"u", "w"})))
print("bd({u})  =", g.ordered(boundary(g, {"u"})))

# %% [markdown]
# Closed sets are the predecessor-closed ones.  They come out ordered by
# size, then by declaration order.

# %%
for C in closed_sets(g):
    print("closed:", g.ordered(C))

print("connected:", is_topologically_connected(g))

# %% [markdown]
# Continuity of a vertex map.  Collapsing a path onto a two-cycle keeps
# reachability, the reverse map does not, and the checker names a closed
# set whose preimage fails to be closed.

# %%
E = parse_graph("vertex u1\nvertex u2\nvertex u3\n"
                "edge f1 u1 u2\nedge f2 u2 u3\nedge f3 u3 u3\n")
F = parse_graph("vertex v1\nvertex v2\nvertex v3\n"
                "edge g1 v1 v2\nedge g2 v2 v3\nedge g3 v3 v2\n")
fwd = {"u1": "v1", "u2": "v2", "u3": "v3"}
print(continuity_check(E, F, fwd))
print(continuity_check(F, E, {b: a for a, b in fwd.items()}))
