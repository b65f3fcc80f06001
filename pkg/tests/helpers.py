"""Shared seeded instance corpus for the property suites."""

from __future__ import annotations

import random
from functools import lru_cache

from pairgraph.descriptors import builtin_subgroup
from pairgraph.groups import (
    GeneratingSet,
    Subgroup,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_gl2,
    make_sl2,
    make_symmetric,
    subgroup_generated,
    validate_generating_set,
)


@lru_cache(maxsize=None)
def subgroup_pool() -> tuple[Subgroup, ...]:
    """Mixed-family (group, subgroup) pairs, all of group order <= 48."""
    pool: list[Subgroup] = []
    for n, gens in [
        (4, [2]), (4, [1]), (6, [3]), (6, [2]), (8, [2]), (9, [3]), (10, [2]),
        (12, [3]), (12, [2]), (12, [6]), (15, [5]), (16, [2]), (18, [3]),
        (20, [2]), (20, [4]), (24, [2]),
    ]:
        pool.append(subgroup_generated(make_cyclic(n), gens))
    d4 = make_dihedral(4)
    pool.append(subgroup_generated(d4, [1]))
    pool.append(subgroup_generated(d4, [4]))
    d6 = make_dihedral(6)
    pool.append(subgroup_generated(d6, [1]))
    pool.append(subgroup_generated(d6, [3, 6]))
    s3 = make_symmetric(3)
    pool.append(builtin_subgroup(s3, "alternating_in_symmetric"))
    s4 = make_symmetric(4)
    pool.append(builtin_subgroup(s4, "alternating_in_symmetric"))
    pool.append(subgroup_generated(s4, [s4.perms.index((1, 0, 2, 3)), s4.perms.index((1, 2, 0, 3))]))
    a4 = make_alternating(4)
    pool.append(builtin_subgroup(a4, "klein_in_a4"))
    p26 = make_direct_product(make_cyclic(2), make_cyclic(6))
    pool.append(subgroup_generated(p26, [1]))
    pool.append(subgroup_generated(p26, [9]))
    sl3 = make_sl2(3)
    involution = next(i for i in range(sl3.order) if sl3.element_order(i) == 2)
    pool.append(subgroup_generated(sl3, [involution]))
    gl3 = make_gl2(3)
    pool.append(builtin_subgroup(gl3, "sl2_in_gl2"))
    return tuple(pool)


@lru_cache(maxsize=None)
def index_two_pool() -> tuple[Subgroup, ...]:
    """Index-2 pairs: even parts of Z/2m, the alternating group in S4, SL2 in GL2(F3)."""
    pool: list[Subgroup] = [subgroup_generated(make_cyclic(2 * m), [2]) for m in range(2, 13)]
    pool.append(builtin_subgroup(make_symmetric(4), "alternating_in_symmetric"))
    pool.append(builtin_subgroup(make_gl2(3), "sl2_in_gl2"))
    return tuple(pool)


def random_generating_set(
    rng: random.Random,
    subgroup: Subgroup,
    max_size: int = 10,
    outside_only: bool = False,
    min_size: int = 0,
) -> GeneratingSet:
    """Seeded random valid generating set; the inside part is symmetrized."""
    group = subgroup.parent
    if outside_only:
        candidates = list(subgroup.outside())
    else:
        candidates = [x for x in range(group.order) if x != group.identity]
    size = rng.randint(min_size, min(len(candidates), max_size))
    chosen = set(rng.sample(candidates, size))
    for x in list(chosen):
        if subgroup.contains(x):
            chosen.add(group.inv(x))
    return validate_generating_set(subgroup, chosen)


def instance_corpus(count: int, seed: int, outside_only: bool = False) -> list[GeneratingSet]:
    pool = subgroup_pool()
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        sub = pool[rng.randrange(len(pool))]
        out.append(random_generating_set(rng, sub, outside_only=outside_only))
    return out
