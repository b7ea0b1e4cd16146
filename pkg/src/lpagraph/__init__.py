"""Vertex-set invariants of Leavitt path algebra ideals, computed on finite graphs."""

from .errors import (CapExceededError, DomainError, GraphStructureError,
                     GraphSyntaxError, InfiniteEmitterError, InvariantError,
                     LPAGraphError, NotHereditarySaturatedError, ShiftSpecError,
                     UnknownVertexError)
from .graph import (INFINITE, Edge, Graph, classify_boundary_vertices,
                    condition_L, connects, cycle_vertices, on_cycle, opposite,
                    parse_graph, read_graph, rename, sccs, to_dot, to_text,
                    tree, vertex_profile)
from .topology import (boundary, closed_sets, continuity_check, dcc_closure,
                       exterior, interior, is_clopen, is_closed, is_dense,
                       is_open, is_topologically_connected, iter_closed_sets)
from .hsets import (HSet, annihilator_set, double_annihilator,
                    hereditary_closure, hs_closure, is_hereditary,
                    is_regular_ideal_set, is_saturated, join, lattice, meet,
                    quotient)
from .functors import (Closure, Empty, Ext, Full, Inter, Pbinf, Pbpinf, Pc,
                       Pec, Pl, Plce, Series, Star, Union, evaluate, p_binf,
                       p_bpinf, p_c, p_ec, p_l, p_lce, parse_functor_expr)
from .series import (cross_check_series, pc_series_direct, pl_series_direct,
                     series, series_step, subset_except_one)
from .moves import ShiftSpec, shift_continuity_report, shift_graph, validate_shift

__version__ = "0.1.0"
