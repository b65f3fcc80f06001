"""Pair-graph construction, the group-matrix oracle, degrees, and exports."""

import json
import random

import numpy as np
import pytest

from pairgraph.errors import IdentityInGeneratingSet, IndexNotTwo, SymmetryViolation
from pairgraph.graphs import (
    adjacency_rows_via_group_matrix,
    build_pair_graph,
    cayley_adjacency,
    degree_profile,
    graph_to_dot,
    graph_to_json,
    is_cayley_reduction,
    isolated_vertices,
    left_translation_matrix,
    regularity_check,
)
from pairgraph.groups import (
    make_cyclic,
    make_symmetric,
    perm_index,
    subgroup_from_elements,
    validate_generating_set,
)

from helpers import instance_corpus


@pytest.fixture(scope="module")
def z12_sub():
    z12 = make_cyclic(12)
    return subgroup_from_elements(z12, [0, 3, 6, 9])


def test_example_degree_profile(z12_sub):
    graph = build_pair_graph(z12_sub, [2, 4, 5, 7, 8])
    assert degree_profile(graph) == [(0, 5, 4), (1, 2, 4), (2, 3, 4)]
    assert graph.degrees.sum() == 4 * 5 + 4 * 2 + 4 * 3


def test_adjacency_shape_invariants(z12_sub):
    graph = build_pair_graph(z12_sub, [2, 4, 5, 7, 8])
    a = graph.adjacency
    assert np.array_equal(a, a.T)
    assert not a.diagonal().any()
    outside = [v for v in range(12) if not z12_sub.contains(v)]
    assert not a[np.ix_(outside, outside)].any()  # no edges between outer vertices


def test_inner_edges_only_from_inside_part():
    z12 = make_cyclic(12)
    sub = subgroup_from_elements(z12, [0, 3, 6, 9])
    gen = validate_generating_set(sub, [3, 9, 1])
    graph = build_pair_graph(sub, gen)
    inside = list(sub.elements)
    block = graph.adjacency[np.ix_(inside, inside)]
    for i, h in enumerate(inside):
        for j, h2 in enumerate(inside):
            expected = 1 if any(z12.mul(h, s) == h2 for s in gen.inside) else 0
            assert block[i, j] == expected


def test_group_matrix_printed_example(z12_sub):
    expected = np.array(
        [
            [0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
            [0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1],
            [0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1],
        ],
        dtype=np.int8,
    )
    assert np.array_equal(adjacency_rows_via_group_matrix(z12_sub, [2, 4, 5, 7, 8]), expected)


def test_group_matrix_empty_set(z12_sub):
    assert not adjacency_rows_via_group_matrix(z12_sub, []).any()


def test_s3_cayley_matrix():
    s3 = make_symmetric(3)
    whole = subgroup_from_elements(s3, range(6))
    gen = [perm_index(s3, w) for w in ("(1,2)", "(1,2,3)", "(1,3,2)")]
    expected = np.array(
        [
            [0, 0, 1, 1, 1, 0],
            [0, 0, 1, 1, 0, 1],
            [1, 1, 0, 0, 0, 1],
            [1, 1, 0, 0, 1, 0],
            [1, 0, 0, 1, 0, 1],
            [0, 1, 1, 0, 1, 0],
        ],
        dtype=np.int8,
    )
    graph = build_pair_graph(whole, gen)
    assert np.array_equal(graph.adjacency, expected)
    assert np.array_equal(adjacency_rows_via_group_matrix(whole, gen), expected)
    assert np.array_equal(cayley_adjacency(s3, gen), expected)


def test_oracle_equivalence_on_corpus():
    for gen in instance_corpus(150, seed=23):
        graph = build_pair_graph(gen.subgroup, gen)
        rows = adjacency_rows_via_group_matrix(gen.subgroup, gen)
        assert np.array_equal(rows, graph.adjacency[list(gen.subgroup.elements), :])


def test_degree_laws_on_corpus():
    for gen in instance_corpus(150, seed=29):
        graph = build_pair_graph(gen.subgroup, gen)
        sub = gen.subgroup
        for cid, members in enumerate(sub.coset_members):
            degs = {int(graph.degrees[v]) for v in members}
            assert len(degs) == 1  # one degree per coset
            expected = gen.size if cid == 0 else gen.coset_counts[cid]
            assert degs == {expected}
        # degree sum identity and the subgroup-degree inequality
        total = sub.order * gen.size + sub.order * sum(gen.coset_counts[1:])
        assert int(graph.degrees.sum()) == total
        assert gen.size >= len(gen.outside)
        if not gen.inside:
            assert gen.size == len(gen.outside)


def test_empty_set_graph(z12_sub):
    graph = build_pair_graph(z12_sub, [])
    assert graph.edge_count() == 0
    assert isolated_vertices(graph) == tuple(range(12))
    assert degree_profile(graph)[0] == (0, 0, 4)


def test_validation_errors(z12_sub):
    with pytest.raises(IdentityInGeneratingSet):
        build_pair_graph(z12_sub, [0, 2])
    with pytest.raises(SymmetryViolation):
        build_pair_graph(z12_sub, [3])
    # empty intersection with the subgroup is vacuously symmetric
    graph = build_pair_graph(z12_sub, [1, 2])
    assert graph.edge_count() > 0


def test_isolated_vertices_examples(z12_sub):
    graph = build_pair_graph(z12_sub, [1, 7])
    assert isolated_vertices(graph) == (2, 5, 8, 11)
    star_group = make_cyclic(6)
    star = build_pair_graph(subgroup_from_elements(star_group, [0]), range(1, 6))
    assert isolated_vertices(star) == ()
    assert sorted(star.degrees) == [1, 1, 1, 1, 1, 5]


def test_regularity_examples(z12_sub):
    z20 = make_cyclic(20)
    evens = subgroup_from_elements(z20, range(0, 20, 2))
    report = regularity_check(build_pair_graph(evens, [3, 5, 7]))
    assert report.regular and report.degree == 3 and report.matches_criterion
    report = regularity_check(build_pair_graph(z12_sub, [2, 4, 5, 7, 8]))
    assert not report.regular and report.matches_criterion is False
    s3 = make_symmetric(3)
    whole = subgroup_from_elements(s3, range(6))
    gen = [perm_index(s3, w) for w in ("(1,2)", "(1,2,3)", "(1,3,2)")]
    report = regularity_check(build_pair_graph(whole, gen))
    assert report.regular and report.degree == 3


def test_regularity_criterion_on_corpus():
    for gen in instance_corpus(150, seed=31):
        report = regularity_check(build_pair_graph(gen.subgroup, gen))
        if gen.size:
            assert report.matches_criterion == report.regular


def test_cayley_reduction():
    z20 = make_cyclic(20)
    evens = subgroup_from_elements(z20, range(0, 20, 2))
    cycle = build_pair_graph(evens, [1, 19])
    assert is_cayley_reduction(cycle)
    assert np.array_equal(cycle.adjacency, cayley_adjacency(z20, [1, 19]))
    assert sorted(cycle.degrees) == [2] * 20
    assert not is_cayley_reduction(build_pair_graph(evens, [3, 5, 7]))  # inv(3)=17 missing
    z12 = make_cyclic(12)
    sub3 = subgroup_from_elements(z12, [0, 3, 6, 9])
    with pytest.raises(IndexNotTwo):
        is_cayley_reduction(build_pair_graph(sub3, [1, 11]))


def test_involution_sets_always_reduce():
    # sets of self-inverse outside elements are symmetric
    s4 = make_symmetric(4)
    a4 = subgroup_from_elements(s4, [i for i, p in enumerate(s4.perms) if sum(
        1 for x in range(4) for y in range(x + 1, 4) if p[x] > p[y]) % 2 == 0])
    transpositions = [perm_index(s4, w) for w in ("(1,2)", "(3,4)")]
    assert is_cayley_reduction(build_pair_graph(a4, transpositions))


def test_left_translation_commutes():
    rng = random.Random(17)
    for gen in instance_corpus(40, seed=37):
        if gen.group.order > 48:
            continue
        graph = build_pair_graph(gen.subgroup, gen)
        a = graph.adjacency.astype(np.int32)
        for h in gen.subgroup.elements:
            p = left_translation_matrix(gen.group, h).astype(np.int32)
            assert np.array_equal(p @ a, a @ p)
        # a random non-subgroup element usually breaks commutation on non-regular graphs
        outside = gen.subgroup.outside()
        if outside and gen.size and not regularity_check(graph).regular:
            g = outside[rng.randrange(len(outside))]
            p = left_translation_matrix(gen.group, g).astype(np.int32)
            degs = graph.degrees
            if degs[gen.group.mul(g, gen.subgroup.elements[0])] != degs[gen.subgroup.elements[0]]:
                assert not np.array_equal(p @ a, a @ p)


def test_json_export(z12_sub):
    graph = build_pair_graph(z12_sub, [2, 4, 5, 7, 8])
    payload = graph_to_json(graph)
    assert payload["n"] == 12
    assert sorted(payload["coset_of"]) == sorted(z12_sub.coset_of)
    assert len(payload["edges"]) == graph.edge_count()
    assert all(u < v for u, v in payload["edges"])
    json.dumps(payload)  # serializable


def test_dot_export(z12_sub):
    graph = build_pair_graph(z12_sub, [1, 7])
    dot = graph_to_dot(graph)
    assert dot.startswith("graph pairgraph {")
    assert dot.count("shape=box") == 4
    assert dot.count(" -- ") == graph.edge_count()
