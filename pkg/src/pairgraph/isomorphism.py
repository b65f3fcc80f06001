"""Backtracking graph isomorphism for small graphs.

Intended for cross-validation at small orders (tests use it up to 24
vertices): vertices are first partitioned by iterated neighbor-degree
refinement, then a straight backtracking search assigns images class by
class with adjacency consistency checks.
"""

from __future__ import annotations

from typing import Optional

import numpy as np


def _refined_colors(adjacency: np.ndarray, rounds: int = 3) -> list[tuple]:
    n = adjacency.shape[0]
    colors: list[tuple] = [(int(adjacency[v].sum()),) for v in range(n)]
    for _ in range(rounds):
        colors = [
            (colors[v], tuple(sorted(colors[u] for u in np.flatnonzero(adjacency[v]))))
            for v in range(n)
        ]
    return colors


def find_isomorphism(a: np.ndarray, b: np.ndarray) -> Optional[list[int]]:
    """A vertex bijection carrying graph ``a`` onto graph ``b``, or None."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return None
    n = a.shape[0]
    colors_a = _refined_colors(a)
    colors_b = _refined_colors(b)
    if sorted(colors_a) != sorted(colors_b):
        return None
    candidates = [
        [u for u in range(n) if colors_b[u] == colors_a[v]] for v in range(n)
    ]
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    mapping = [-1] * n
    used = [False] * n

    def place(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in order[:pos]:
                if a[v, w] != b[u, mapping[w]]:
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if place(pos + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    return mapping if place(0) else None


def are_isomorphic(a: np.ndarray, b: np.ndarray) -> bool:
    mapping = find_isomorphism(a, b)
    if mapping is None:
        return False
    a = np.asarray(a)
    b = np.asarray(b)
    perm = np.asarray(mapping)
    return bool(np.array_equal(b[np.ix_(perm, perm)], a))
