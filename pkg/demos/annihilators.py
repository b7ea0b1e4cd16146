"""Hereditary saturated sets, their lattice and annihilators.

Run with ``python demos/annihilators.py``.
"""
# %%
from lpagraph import (annihilator_set, double_annihilator, hs_closure,
                      is_regular_ideal_set, lattice, parse_graph, quotient)
from lpagraph.hsets import saturation_layers

g = parse_graph("""
vertex v
vertex u
vertex w
edge e v v
edge f v u
edge g v w
""")

# %% [markdown]
# Every hereditary saturated set stands for a graded ideal.  On this graph
# there are five of them.

# %%
for H in lattice(g):
    print(H.ordered())

# %% [markdown]
# Saturation runs in layers: start from the tree, then keep adding regular
# vertices whose edges all land inside.  On a path every step adds one.

# %%
path = parse_graph("vertex a\nvertex b\nvertex c\nedge x a b\nedge y b c\n")
for k, layer in enumerate(saturation_layers(path, {"c"})):
    print(k, path.ordered(layer))
print(hs_closure(path, {"c"}))

# %% [markdown]
# H' is the set of vertices that never reach H.  The set-level test for a
# regular ideal is H'' inside H.

# %%
for H in lattice(g):
    print(H.ordered(), "->", annihilator_set(g, H).ordered(),
          double_annihilator(g, H).ordered(),
          "regular" if is_regular_ideal_set(g, H) else "not regular")

# %% [markdown]
# Quotients keep the original names, so a set in E/H is already a set in E.

# %%
q = quotient(g, {"u"})
print(q.quotient.vertices, [e.name for e in q.quotient.edges])
