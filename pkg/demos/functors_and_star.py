"""Point functors and the star composition.

Run with ``python demos/functors_and_star.py``.
"""
# %%
from lpagraph import Closure, Pc, Pl, Star, evaluate, parse_functor_expr, parse_graph
from lpagraph.functors import p_c, p_ec, p_l

# Two looped vertices in a row, ending in a sink.
g = parse_graph("""
vertex u
vertex v
vertex w
edge a u u
edge b u v
edge c v v
edge d v w
""")

print("line points:", g.ordered(p_l(g)))
print("exitless cycles:", g.ordered(p_c(g)))
print("extreme cycles:", g.ordered(p_ec(g)))

# %% [markdown]
# ``star(outer, inner)`` first closes ``inner``, passes to the quotient by it,
# applies ``outer`` there and lifts the answer back.  Removing w strips the
# exit from v's loop, so the exitless-cycle functor now sees v.

# %%
cPl, cPc = Closure(Pl), Closure(Pc)
for e in (cPl, cPc, Star(cPc, cPl), Star(cPc, Star(cPc, cPl)), Star(cPl, cPc)):
    print(f"{str(e):45s}", g.ordered(evaluate(e, g)))

# %% [markdown]
# The same thing through the text syntax.

# %%
expr = parse_functor_expr("star(closure(Pc), star(closure(Pc), closure(Pl)))")
print(expr, "=", g.ordered(expr.eval(g)))
