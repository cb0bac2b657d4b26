"""Python surface over the C++ core: big integers come back as ints, and
structured results (trees, polynomials, reports) as parsed JSON."""

import json

try:
    from . import _cayley as _core
except ImportError:  # module built outside the package (plain CMake builds)
    import _cayley as _core

SizeError = _core.SizeError
ValidationError = _core.ValidationError


def count_unitype_degree(degrees):
    return int(_core.count_unitype_degree(list(degrees)))


def count_plane_trees(distribution):
    return int(_core.count_plane_trees(list(distribution)))


def count_by_edge_types(profile, root, m):
    """m: iterable of (s, t, count) triples."""
    return int(_core.count_by_edge_types(list(profile), root, [tuple(e) for e in m]))


def count_by_indegree(profile, root, gamma):
    """gamma: iterable of (s, t, i, count) quadruples."""
    return int(_core.count_by_indegree(list(profile), root, [tuple(e) for e in gamma]))


def count_cacti_total(d, profile):
    return int(_core.count_cacti_total(d, list(profile)))


def count_trees(profile, root):
    return _core.count_trees(list(profile), root)


def list_trees(profile, root):
    return [json.loads(t) for t in _core.list_trees(list(profile), root)]


def list_cacti(d, profile):
    return [json.loads(c) for c in _core.list_cacti(d, list(profile))]


def gf_multitype(profile, root):
    return json.loads(_core.gf_multitype(list(profile), root))


def gf_forests(profile):
    return json.loads(_core.gf_forests(list(profile)))


def solve_functional_system(system):
    return [json.loads(f) for f in _core.solve_functional_system(json.dumps(system))]


def tree_sum_coefficient(system, root, n):
    from fractions import Fraction

    return Fraction(_core.tree_sum_coefficient(json.dumps(system), root, list(n)))


def lagrange_rhs_coefficient(system, n):
    from fractions import Fraction

    return Fraction(_core.lagrange_rhs_coefficient(json.dumps(system), list(n)))


def observable_coefficient(system, n):
    from fractions import Fraction

    return Fraction(_core.observable_coefficient(json.dumps(system), list(n)))


def apply_indegree_move(marked_tree, s, t, i, j):
    return json.loads(_core.apply_indegree_move(json.dumps(marked_tree), s, t, i, j))


def apply_cactus_phi(cactus, s, j, k):
    return json.loads(_core.apply_cactus_phi(json.dumps(cactus), s, j, k))


def verify(suite="all", max_vertices=5, max_d=2):
    return json.loads(_core.verify(suite, max_vertices, max_d))
