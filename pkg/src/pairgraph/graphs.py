"""Group-subgroup pair graphs.

The pair graph on (G, H, S) has vertex set G and an undirected edge {h, h*s}
for every h in H and s in S.  Vertices outside H are only ever adjacent to
vertices of H; inside H the edges come from the part of S that lies in H,
which must be closed under inversion so the graph is undirected.  With H = G
the construction reduces to the ordinary Cayley graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .errors import IndexNotTwo, PairGraphError, ValidationError
from .groups import FiniteGroup, GeneratingSet, Subgroup, validate_generating_set


@dataclass(frozen=True, eq=False)
class PairGraph:
    """Immutable pair graph with both matrix and neighbor-list views."""

    gen: GeneratingSet
    adjacency: np.ndarray
    neighbors: tuple[tuple[int, ...], ...]
    degrees: np.ndarray

    @property
    def group(self) -> FiniteGroup:
        return self.gen.group

    @property
    def subgroup(self) -> Subgroup:
        return self.gen.subgroup

    @property
    def order(self) -> int:
        return self.group.order

    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def __repr__(self) -> str:
        return f"PairGraph(order={self.order}, edges={self.edge_count()})"


def _as_generating_set(subgroup: Subgroup, s: Union[GeneratingSet, Iterable[int]]) -> GeneratingSet:
    if isinstance(s, GeneratingSet):
        if s.subgroup is not subgroup:
            raise ValidationError("generating set was validated against a different subgroup")
        return s
    return validate_generating_set(subgroup, s)


def build_pair_graph(subgroup: Subgroup, s: Union[GeneratingSet, Iterable[int]]) -> PairGraph:
    """Build the pair graph for the parent group of ``subgroup`` and the set ``s``."""
    gen = _as_generating_set(subgroup, s)
    group = subgroup.parent
    m = group.order
    adjacency = np.zeros((m, m), dtype=np.int8)
    for h in subgroup.elements:
        row = group.left_row(h)
        for s_elem in gen.elements:
            v = int(row[s_elem])
            adjacency[h, v] = 1
            adjacency[v, h] = 1
    neighbors = tuple(tuple(int(v) for v in np.flatnonzero(adjacency[u])) for u in range(m))
    degrees = adjacency.sum(axis=1, dtype=np.int64)
    return PairGraph(gen=gen, adjacency=adjacency, neighbors=neighbors, degrees=degrees)


def adjacency_rows_via_group_matrix(
    subgroup: Subgroup, s: Union[GeneratingSet, Iterable[int]]
) -> np.ndarray:
    """The |H| x |G| 0/1 matrix with a one at (i, j) exactly when h_i * s = g_j for some s.

    Evaluates the group-subgroup matrix (x_{h_i^-1 g_j}) at the indicator of the
    set: entry (i, j) is 1 iff h_i^-1 g_j lies in the set.  Rows follow the
    sorted subgroup elements, columns the natural element order.  This is an
    independent construction of the subgroup rows of the adjacency matrix and
    is used as an oracle against ``build_pair_graph``.
    """
    gen = _as_generating_set(subgroup, s)
    group = subgroup.parent
    indicator = np.zeros(group.order, dtype=np.int8)
    indicator[list(gen.elements)] = 1
    rows = np.empty((subgroup.order, group.order), dtype=np.int8)
    for i, h in enumerate(subgroup.elements):
        rows[i] = indicator[group.left_row(group.inv(h))]
    return rows


def cayley_adjacency(group: FiniteGroup, s: Iterable[int]) -> np.ndarray:
    """Adjacency matrix of the Cayley graph on a symmetric set without the identity."""
    elems = sorted(set(int(x) for x in s))
    if group.identity in elems:
        raise ValidationError("the identity element is not allowed in a generating set")
    elem_set = set(elems)
    for x in elems:
        if group.inv(x) not in elem_set:
            raise ValidationError(f"Cayley generating set must be symmetric; inverse of {x} missing")
    indicator = np.zeros(group.order, dtype=np.int8)
    indicator[elems] = 1
    adjacency = np.empty((group.order, group.order), dtype=np.int8)
    for i in range(group.order):
        adjacency[i] = indicator[group.left_row(group.inv(i))]
    return adjacency


def degree_profile(graph: PairGraph) -> list[tuple[int, int, int]]:
    """Per coset: (coset id, common degree, coset size).

    Entry 0 is the subgroup, whose vertices all have degree |S|; the vertices
    of a nontrivial coset share the degree |S ∩ coset|.
    """
    out = []
    for cid, members in enumerate(graph.subgroup.coset_members):
        out.append((cid, int(graph.degrees[members[0]]), len(members)))
    return out


def isolated_vertices(graph: PairGraph) -> tuple[int, ...]:
    return tuple(int(v) for v in np.flatnonzero(graph.degrees == 0))


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    degree: Optional[int]
    matches_criterion: Optional[bool]
    reason: str


def regularity_check(graph: PairGraph) -> RegularityReport:
    """Whether all degrees are equal, cross-checked against the structural criterion.

    A nontrivial pair graph is regular exactly when the generating set avoids
    the subgroup and the subgroup has index 2, or the subgroup is the whole
    group.
    """
    degrees = graph.degrees
    regular = bool(degrees.min() == degrees.max())
    degree = int(degrees[0]) if regular else None
    gen = graph.gen
    if gen.size == 0:
        return RegularityReport(regular, degree, None, "trivial graph (empty generating set)")
    criterion = (len(gen.inside) == 0 and graph.subgroup.index == 2) or graph.subgroup.index == 1
    if criterion == regular:
        reason = f"criterion agrees: inside={len(gen.inside)}, index={graph.subgroup.index}"
    else:  # pragma: no cover - the criterion is exact, disagreement means a bug
        reason = "criterion DISAGREES with observed degrees"
    return RegularityReport(regular, degree, criterion, reason)


def is_cayley_reduction(graph: PairGraph) -> bool:
    """For an index-2 subgroup and a set outside it: is the pair graph a Cayley graph?

    True exactly when the set is symmetric; in that case the adjacency matrix
    is checked to coincide with the Cayley graph of the whole group on the
    same set.
    """
    gen = graph.gen
    if graph.subgroup.index != 2:
        raise IndexNotTwo("Cayley reduction needs a subgroup of index 2")
    if gen.inside:
        raise ValidationError("Cayley reduction needs the generating set outside the subgroup")
    group = graph.group
    symmetric = all(group.inv(x) in set(gen.elements) for x in gen.elements)
    if not symmetric:
        return False
    expected = cayley_adjacency(group, gen.elements)
    if not np.array_equal(graph.adjacency, expected):  # pragma: no cover
        raise PairGraphError("symmetric index-2 pair graph does not match its Cayley graph")
    return True


def left_translation_matrix(group: FiniteGroup, h: int) -> np.ndarray:
    """Permutation matrix of left multiplication by h (column j maps to h*j)."""
    m = group.order
    p = np.zeros((m, m), dtype=np.int8)
    row = group.left_row(h)
    for j in range(m):
        p[int(row[j]), j] = 1
    return p


def graph_to_json(graph: PairGraph) -> dict:
    return {
        "n": graph.order,
        "edges": [[u, v] for u, v in graph.edges()],
        "coset_of": list(graph.subgroup.coset_of),
        "degrees": [int(d) for d in graph.degrees],
    }


def graph_to_dot(graph: PairGraph) -> str:
    """DOT export; subgroup vertices are drawn as boxes."""
    lines = ["graph pairgraph {"]
    for v in range(graph.order):
        shape = "box" if graph.subgroup.contains(v) else "ellipse"
        label = graph.group.labels[v].replace('"', "'")
        lines.append(f'  v{v} [label="{label}", shape={shape}];')
    for u, v in graph.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
