"""Connectivity, components, bipartiteness, and the closed-form component count.

Two independent routes to the component structure are kept side by side:
plain breadth-first search on the built graph, and the closed formula

    [H : U] + |G - H| - |union of the cosets met by the outside part|

with U generated by the elements of H reachable as either inside generators or
pairwise quotients of outside generators.  The two must agree on every input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import ValidationError
from .graphs import PairGraph
from .groups import (
    FiniteGroup,
    GeneratingSet,
    Subgroup,
    difference_set,
    generated_elements,
    subgroup_from_elements,
)


@dataclass(frozen=True)
class ComponentDecomposition:
    component_of: tuple[int, ...]
    count: int
    sizes: tuple[int, ...]
    identity_component: tuple[int, ...]


def connected_components(graph: PairGraph) -> ComponentDecomposition:
    """Breadth-first component labeling; ids ordered by minimal contained vertex."""
    m = graph.order
    component_of = [-1] * m
    sizes = []
    for start in range(m):
        if component_of[start] != -1:
            continue
        cid = len(sizes)
        queue = deque([start])
        component_of[start] = cid
        size = 0
        while queue:
            u = queue.popleft()
            size += 1
            for v in graph.neighbors[u]:
                if component_of[v] == -1:
                    component_of[v] = cid
                    queue.append(v)
        sizes.append(size)
    e = graph.group.identity
    identity_component = tuple(v for v in range(m) if component_of[v] == component_of[e])
    return ComponentDecomposition(
        component_of=tuple(component_of),
        count=len(sizes),
        sizes=tuple(sizes),
        identity_component=identity_component,
    )


def reachable_subgroup(gen: GeneratingSet) -> Subgroup:
    """The subgroup U of H generated by H ∩ (inside ∪ outside·outside^-1)."""
    group = gen.group
    seeds = set(gen.inside)
    for d in difference_set(group, gen.outside, gen.outside):
        if gen.subgroup.contains(d):
            seeds.add(d)
    return subgroup_from_elements(group, generated_elements(group, seeds))


@dataclass(frozen=True)
class ComponentCountBreakdown:
    """The three terms of the closed component-count formula and their total."""

    subgroup_index_term: int
    outside_term: int
    covered_term: int

    @property
    def total(self) -> int:
        return self.subgroup_index_term + self.outside_term - self.covered_term


def component_count_by_formula(gen: GeneratingSet) -> ComponentCountBreakdown:
    u = reachable_subgroup(gen)
    return ComponentCountBreakdown(
        subgroup_index_term=gen.subgroup.order // u.order,
        outside_term=gen.group.order - gen.subgroup.order,
        covered_term=gen.covered_vertex_count(),
    )


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    closure_generates: bool
    closure_order: int
    uncovered_cosets: tuple[int, ...]
    witness: Optional[str]


def is_connected(gen: GeneratingSet) -> ConnectivityReport:
    """Closed-form connectivity criterion with a witness for the failing clause.

    Connected exactly when the reachable subgroup is all of H and the outside
    part meets every nontrivial coset.
    """
    u = reachable_subgroup(gen)
    closure_ok = u.order == gen.subgroup.order
    covered = set(gen.covered_cosets())
    uncovered = tuple(i for i in range(1, gen.subgroup.index) if i not in covered)
    connected = closure_ok and not uncovered
    witness = None
    if not closure_ok:
        witness = f"reachable subgroup has order {u.order} < {gen.subgroup.order}"
    elif uncovered:
        witness = f"cosets {list(uncovered)} contain no generating element"
    return ConnectivityReport(
        connected=connected,
        closure_generates=closure_ok,
        closure_order=u.order,
        uncovered_cosets=uncovered,
        witness=witness,
    )


def identity_component_by_closure(gen: GeneratingSet) -> tuple[int, ...]:
    """Vertices of the identity's component: U together with its outside translates."""
    group = gen.group
    u = reachable_subgroup(gen)
    vertices = set(u.elements)
    for s in gen.outside:
        for x in u.elements:
            vertices.add(group.mul(x, s))
    return tuple(sorted(vertices))


def translate_component(graph: PairGraph, h: int, component: tuple[int, ...]) -> tuple[int, ...]:
    """Left translate of a component by a subgroup element; lands on a component."""
    if not graph.subgroup.contains(h):
        raise ValidationError(f"translating element {h} is not in the subgroup")
    group = graph.group
    return tuple(sorted(group.mul(h, x) for x in component))


@dataclass(frozen=True)
class BipartiteReport:
    bipartite: bool
    coloring: Optional[tuple[int, ...]]


def is_bipartite(graph: PairGraph) -> BipartiteReport:
    """Exact two-coloring test by breadth-first search."""
    m = graph.order
    color = [-1] * m
    for start in range(m):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteReport(False, None)
    return BipartiteReport(True, tuple(color))


def sign_homomorphism_exists(group: FiniteGroup, s_elements) -> bool:
    """Is there a homomorphism G -> {-1, 1} sending every element of the set to -1?

    Equivalently: an index-2 subgroup disjoint from the set.  Index-2 subgroups
    all contain the subgroup generated by the squares, so they are enumerated
    through the elementary abelian 2-quotient by that subgroup.
    """
    s_elements = sorted(set(int(x) for x in s_elements))
    for x in s_elements:
        if not 0 <= x < group.order:
            raise ValidationError(f"element {x} out of range")
    squares = {group.mul(g, g) for g in group.elements()}
    q = subgroup_from_elements(group, generated_elements(group, squares))
    quotient_order = group.order // q.order
    if quotient_order == 1:
        return False
    reps = q.coset_reps
    cos = q.coset_of

    def coset_product(c1: int, c2: int) -> int:
        return cos[group.mul(reps[c1], reps[c2])]

    # F_2 coordinates on the quotient
    coords = {0: 0}
    basis_size = 0
    for c in range(1, quotient_order):
        if c not in coords:
            bit = 1 << basis_size
            basis_size += 1
            for known, vec in list(coords.items()):
                coords[coset_product(known, c)] = vec | bit
    if len(coords) != quotient_order:  # pragma: no cover
        raise ValidationError("quotient by squares is not elementary abelian")
    s_vectors = {coords[cos[x]] for x in s_elements}
    for functional in range(1, 1 << basis_size):
        if all(bin(functional & vec).count("1") & 1 for vec in s_vectors):
            return True
    return False
