"""Exact finite group arithmetic on dense integer element indices.

Concrete structure (permutations, matrices, field elements) lives only in the
constructors and in element labels; every other module works with indices
0..order-1, the multiplication table/function and the inverse map.

Multiplication is stored as a full order x order table up to ``TABLE_CAP`` and
computed on demand above it; the hard cap on group order is ``ORDER_CAP``.
Permutations compose left to right: ``(p*q)(x) = q(p(x))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    IdentityInGeneratingSet,
    NotASubgroup,
    SizeCapExceeded,
    SymmetryViolation,
    ValidationError,
)
from .fields import PrimePowerField, is_prime

TABLE_CAP = 4096
ORDER_CAP = 20000
PERMUTATION_DEGREE_CAP = 8
PRIME_CAP = 13


class FiniteGroup:
    """A finite group on element indices 0..order-1."""

    def __init__(
        self,
        *,
        name: str,
        labels: Sequence[str],
        identity: int,
        inverse: Sequence[int],
        table: Optional[np.ndarray] = None,
        mul_fn: Optional[Callable[[int, int], int]] = None,
        descriptor: Optional[dict] = None,
    ) -> None:
        order = len(labels)
        if order == 0:
            raise ValidationError("a group needs at least the identity element")
        if order > ORDER_CAP:
            raise SizeCapExceeded(f"group order {order} exceeds the cap {ORDER_CAP}")
        if table is None and mul_fn is None:
            raise ValidationError("either a multiplication table or a function is required")
        self.order = order
        self.name = name
        self.labels = [str(x) for x in labels]
        self.identity = int(identity)
        self.descriptor = descriptor or {}
        self._inverse = np.asarray(inverse, dtype=np.int32)
        self.table = None if table is None else np.asarray(table, dtype=np.int32)
        self._mul_fn = mul_fn
        # concrete views, set by the constructors that have them
        self.perms: Optional[list[tuple[int, ...]]] = None
        self.matrices: Optional[list[tuple[int, int, int, int]]] = None
        self.field: Optional[PrimePowerField] = None

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return int(self.table[a, b])
        return self._mul_fn(a, b)

    def inv(self, a: int) -> int:
        return int(self._inverse[a])

    def left_row(self, a: int) -> np.ndarray:
        """Products a*g for every g, as one vector."""
        if self.table is not None:
            return self.table[a]
        fn = self._mul_fn
        return np.fromiter((fn(a, j) for j in range(self.order)), dtype=np.int32, count=self.order)

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        n = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def label(self, a: int) -> str:
        return self.labels[a]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def _table_from_mul(order: int, mul_obj, elems, index) -> np.ndarray:
    table = np.empty((order, order), dtype=np.int32)
    for i, a in enumerate(elems):
        table[i] = [index[mul_obj(a, b)] for b in elems]
    return table


# ---------------------------------------------------------------------------
# constructors


def make_cyclic(n: int) -> FiniteGroup:
    """Z/nZ with addition; the identity is 0."""
    if n < 1:
        raise ValidationError("cyclic group order must be >= 1")
    if n > ORDER_CAP:
        raise SizeCapExceeded(f"order {n} exceeds the cap {ORDER_CAP}")
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n if n <= TABLE_CAP else None
    mul_fn = None if table is not None else (lambda a, b: (a + b) % n)
    return FiniteGroup(
        name=f"Z/{n}",
        labels=[str(i) for i in range(n)],
        identity=0,
        inverse=(-idx) % n,
        table=table,
        mul_fn=mul_fn,
        descriptor={"kind": "cyclic", "params": [n]},
    )


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # left-to-right: apply p first, then q
    return tuple(q[x] for x in p)


def perm_from_cycles(n: int, spec) -> tuple[int, ...]:
    """Permutation of degree n from 1-indexed cycles, e.g. "(1,2)(3,4)" or [(1,2),(3,4)].

    Cycles are applied left to right in the written order.
    """
    if isinstance(spec, str):
        text = spec.replace(" ", "")
        if text in ("", "e", "()"):
            cycles = []
        else:
            if not (text.startswith("(") and text.endswith(")")):
                raise ValidationError(f"cannot parse cycles {spec!r}")
            cycles = [
                tuple(int(v) for v in part.split(",") if v)
                for part in text[1:-1].split(")(")
            ]
    else:
        cycles = [tuple(c) for c in spec]
    result = tuple(range(n))
    for cyc in cycles:
        if any(not 1 <= v <= n for v in cyc):
            raise ValidationError(f"cycle entry out of range 1..{n}: {cyc}")
        images = list(range(n))
        for i, v in enumerate(cyc):
            images[v - 1] = cyc[(i + 1) % len(cyc)] - 1
        result = _compose(result, tuple(images))
    return result


def perm_cycle_label(perm: tuple[int, ...]) -> str:
    """Canonical 1-indexed cycle notation, "e" for the identity."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + ",".join(str(v + 1) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def perm_parity(perm: tuple[int, ...]) -> int:
    """0 for even permutations, 1 for odd."""
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def perm_index(group: FiniteGroup, spec) -> int:
    """Index of a permutation given by cycles (or image tuple) in a permutation group."""
    if group.perms is None:
        raise ValidationError(f"{group.name} is not a permutation group")
    n = len(group.perms[0])
    if isinstance(spec, str) or any(isinstance(c, (list, tuple)) for c in spec):
        perm = perm_from_cycles(n, spec)
    else:
        perm = tuple(int(v) for v in spec)
    try:
        return group.perms.index(perm)
    except ValueError:
        raise ValidationError(f"permutation {spec!r} not in {group.name}") from None


def _permutation_group(name: str, n: int, perms: list[tuple[int, ...]], descriptor: dict) -> FiniteGroup:
    order = len(perms)
    if order > ORDER_CAP:
        raise SizeCapExceeded(f"group order {order} exceeds the cap {ORDER_CAP}")
    index = {p: i for i, p in enumerate(perms)}
    identity = index[tuple(range(n))]
    inverse = []
    for p in perms:
        q = [0] * n
        for i, v in enumerate(p):
            q[v] = i
        inverse.append(index[tuple(q)])
    table = _table_from_mul(order, _compose, perms, index) if order <= TABLE_CAP else None
    mul_fn = None if table is not None else (lambda a, b: index[_compose(perms[a], perms[b])])
    g = FiniteGroup(
        name=name,
        labels=[perm_cycle_label(p) for p in perms],
        identity=identity,
        inverse=inverse,
        table=table,
        mul_fn=mul_fn,
        descriptor=descriptor,
    )
    g.perms = perms
    return g


def make_symmetric(n: int) -> FiniteGroup:
    """S_n on image tuples in lexicographic order."""
    if not 1 <= n <= PERMUTATION_DEGREE_CAP:
        raise ValidationError(f"symmetric group degree must be 1..{PERMUTATION_DEGREE_CAP}")
    perms = list(itertools.permutations(range(n)))
    return _permutation_group(f"S{n}", n, perms, {"kind": "symmetric", "params": [n]})


def make_alternating(n: int) -> FiniteGroup:
    """A_n: the even permutations of S_n, lexicographic order."""
    if not 1 <= n <= PERMUTATION_DEGREE_CAP:
        raise ValidationError(f"alternating group degree must be 1..{PERMUTATION_DEGREE_CAP}")
    perms = [p for p in itertools.permutations(range(n)) if perm_parity(p) == 0]
    return _permutation_group(f"A{n}", n, perms, {"kind": "alternating", "params": [n]})


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of the n-gon, order 2n; elements s^f r^j with r s = s r^-1."""
    if not 1 <= n <= 8:
        raise ValidationError("dihedral parameter must be 1..8")
    order = 2 * n

    def mul(a: int, b: int) -> int:
        f1, j1 = divmod(a, n)
        f2, j2 = divmod(b, n)
        j = (j2 + (j1 if f2 == 0 else -j1)) % n
        return ((f1 + f2) % 2) * n + j

    labels = []
    for f in (0, 1):
        for j in range(n):
            if f == 0:
                labels.append("e" if j == 0 else f"r^{j}")
            else:
                labels.append("s" if j == 0 else f"s·r^{j}")
    inverse = [(-a) % n if a < n else a for a in range(order)]
    table = _table_from_mul(order, mul, range(order), {i: i for i in range(order)})
    return FiniteGroup(
        name=f"D{n}",
        labels=labels,
        identity=0,
        inverse=inverse,
        table=table,
        descriptor={"kind": "dihedral", "params": [n]},
    )


def make_direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product; element a*|G2| + b represents the pair (a, b)."""
    order = g1.order * g2.order
    if order > ORDER_CAP:
        raise SizeCapExceeded(f"product order {order} exceeds the cap {ORDER_CAP}")
    o2 = g2.order
    labels = [f"({g1.labels[a]},{g2.labels[b]})" for a in range(g1.order) for b in range(o2)]
    inverse = [g1.inv(a) * o2 + g2.inv(b) for a in range(g1.order) for b in range(o2)]
    table = None
    mul_fn = None
    if order <= TABLE_CAP and g1.table is not None and g2.table is not None:
        a = np.arange(order, dtype=np.int64) // o2
        b = np.arange(order, dtype=np.int64) % o2
        table = g1.table[a[:, None], a[None, :]].astype(np.int64) * o2
        table += g2.table[b[:, None], b[None, :]]
    else:
        def mul_fn(x: int, y: int) -> int:
            a1, b1 = divmod(x, o2)
            a2, b2 = divmod(y, o2)
            return g1.mul(a1, a2) * o2 + g2.mul(b1, b2)

    return FiniteGroup(
        name=f"{g1.name}x{g2.name}",
        labels=labels,
        identity=g1.identity * o2 + g2.identity,
        inverse=inverse,
        table=table,
        mul_fn=mul_fn,
        descriptor={"kind": "product", "params": [g1.descriptor, g2.descriptor]},
    )


def _matrix_group(name: str, p: int, keep_det, descriptor: dict) -> FiniteGroup:
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if p > PRIME_CAP:
        raise ValidationError(f"prime {p} exceeds the cap {PRIME_CAP}")
    mats = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if keep_det((a * d - b * c) % p):
                        mats.append((a, b, c, d))
    order = len(mats)
    if order > ORDER_CAP:
        raise SizeCapExceeded(f"group order {order} exceeds the cap {ORDER_CAP}")
    lookup = np.full(p**4, -1, dtype=np.int32)
    for i, (a, b, c, d) in enumerate(mats):
        lookup[((a * p + b) * p + c) * p + d] = i
    arr = np.array(mats, dtype=np.int64)
    A, B, C, D = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
    table = np.empty((order, order), dtype=np.int32)
    for i, (a, b, c, d) in enumerate(mats):
        ra = (a * A + b * C) % p
        rb = (a * B + b * D) % p
        rc = (c * A + d * C) % p
        rd = (c * B + d * D) % p
        table[i] = lookup[((ra * p + rb) * p + rc) * p + rd]
    inverse = []
    for a, b, c, d in mats:
        det = (a * d - b * c) % p
        di = pow(det, p - 2, p)
        key = (((d * di) % p * p + (-b * di) % p) * p + (-c * di) % p) * p + (a * di) % p
        inverse.append(int(lookup[key]))
    g = FiniteGroup(
        name=name,
        labels=[f"[[{a},{b}],[{c},{d}]]" for a, b, c, d in mats],
        identity=int(lookup[((1 * p + 0) * p + 0) * p + 1]),
        inverse=inverse,
        table=table,
        descriptor=descriptor,
    )
    g.matrices = mats
    return g


def make_gl2(p: int) -> FiniteGroup:
    """GL_2(F_p), order (p^2-1)(p^2-p), matrices in lexicographic (a,b,c,d) order."""
    return _matrix_group(f"GL2(F{p})", p, lambda det: det != 0, {"kind": "gl2", "params": [p]})


def make_sl2(p: int) -> FiniteGroup:
    """SL_2(F_p), order p(p^2-1)."""
    return _matrix_group(f"SL2(F{p})", p, lambda det: det == 1, {"kind": "sl2", "params": [p]})


def make_field_additive(p: int, k: int) -> FiniteGroup:
    """The additive group of F_{p^k}; the field structure rides along in ``.field``."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if p > PRIME_CAP:
        raise ValidationError(f"prime {p} exceeds the cap {PRIME_CAP}")
    if k < 1:
        raise ValidationError("extension degree must be >= 1")
    if p**k > TABLE_CAP:
        raise SizeCapExceeded(f"field order {p}^{k} exceeds the cap {TABLE_CAP}")
    gf = PrimePowerField.create(p, k)
    m = gf.order
    digits = np.empty((m, k), dtype=np.int64)
    v = np.arange(m)
    for d in range(k):
        digits[:, d] = v % p
        v = v // p
    table = np.zeros((m, m), dtype=np.int64)
    for d in range(k):
        table += ((digits[:, d][:, None] + digits[:, d][None, :]) % p) * p**d
    inverse = np.zeros(m, dtype=np.int64)
    for d in range(k):
        inverse += ((-digits[:, d]) % p) * p**d
    g = FiniteGroup(
        name=f"F{p}^{k}" if k > 1 else f"F{p}",
        labels=[gf.label(i) for i in range(m)],
        identity=0,
        inverse=inverse,
        table=table,
        descriptor={"kind": "field_additive", "params": [p, k]},
    )
    g.field = gf
    return g


def field_norm_preimage(group: FiniteGroup, values: Iterable[int]) -> tuple[int, ...]:
    """Elements of F_{p^k} whose field norm lies in the given prime-field values."""
    if group.field is None:
        raise ValidationError("norm preimages need a group built by make_field_additive")
    gf = group.field
    values = set(int(v) for v in values)
    for v in values:
        if not 0 <= v < gf.p:
            raise ValidationError(f"value {v} is outside the prime field F_{gf.p}")
    return tuple(x for x in range(gf.order) if gf.norm(x) in values)


# ---------------------------------------------------------------------------
# subgroups and generating sets


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup together with the right-coset decomposition of its parent.

    Coset 0 is the subgroup itself; the remaining cosets are numbered by
    ascending minimal element index, and each representative is the minimal
    element of its coset.
    """

    parent: FiniteGroup
    elements: tuple[int, ...]
    coset_of: tuple[int, ...]
    coset_reps: tuple[int, ...]
    coset_members: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return len(self.coset_reps)

    def contains(self, x: int) -> bool:
        return self.coset_of[x] == 0

    def outside(self) -> tuple[int, ...]:
        return tuple(x for x in self.parent.elements() if self.coset_of[x] != 0)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, index={self.index} in {self.parent.name})"


def subgroup_from_elements(group: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    """Validate closure and build the right-coset decomposition."""
    members = sorted(set(int(x) for x in elems))
    if not members:
        raise NotASubgroup("a subgroup cannot be empty")
    for x in members:
        if not 0 <= x < group.order:
            raise NotASubgroup(f"element {x} out of range")
    member_set = set(members)
    if group.identity not in member_set:
        raise NotASubgroup("the identity is missing")
    for a in members:
        if group.inv(a) not in member_set:
            raise NotASubgroup(f"inverse of {a} is missing")
        for b in members:
            if group.mul(a, b) not in member_set:
                raise NotASubgroup(f"product of {a} and {b} escapes the set")
    m = group.order
    coset_of = [-1] * m
    reps: list[int] = []
    all_members: list[tuple[int, ...]] = []

    def assign(x: int) -> None:
        cid = len(reps)
        coset = sorted(group.mul(h, x) for h in members)
        for y in coset:
            coset_of[y] = cid
        reps.append(coset[0])
        all_members.append(tuple(coset))

    assign(group.identity)  # coset 0 = the subgroup itself
    for x in range(m):
        if coset_of[x] == -1:
            assign(x)
    return Subgroup(
        parent=group,
        elements=tuple(members),
        coset_of=tuple(coset_of),
        coset_reps=tuple(reps),
        coset_members=tuple(all_members),
    )


def generated_elements(group: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    """Elements of the subgroup generated by ``gens`` (worklist closure)."""
    gens = sorted(set(int(x) for x in gens))
    for x in gens:
        if not 0 <= x < group.order:
            raise ValidationError(f"generator {x} out of range")
    seen = {group.identity}
    queue = [group.identity]
    while queue:
        u = queue.pop()
        for g in gens:
            v = group.mul(u, g)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return tuple(sorted(seen))


def subgroup_generated(group: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``; the empty set yields {e}."""
    return subgroup_from_elements(group, generated_elements(group, gens))


def difference_set(group: FiniteGroup, a_set: Iterable[int], b_set: Iterable[int]) -> tuple[int, ...]:
    """All products a * b^-1 for a in A, b in B."""
    bs = [group.inv(b) for b in set(b_set)]
    out = {group.mul(a, bi) for a in set(a_set) for bi in bs}
    return tuple(sorted(out))


@dataclass(frozen=True, eq=False)
class GeneratingSet:
    """A validated generating set split along the subgroup.

    ``coset_counts[0]`` is the size of the part inside the subgroup,
    ``coset_counts[i]`` for i >= 1 the intersection size with coset i.
    """

    subgroup: Subgroup
    elements: tuple[int, ...]
    inside: tuple[int, ...]
    outside: tuple[int, ...]
    coset_counts: tuple[int, ...]

    @property
    def group(self) -> FiniteGroup:
        return self.subgroup.parent

    @property
    def size(self) -> int:
        return len(self.elements)

    def covered_cosets(self) -> tuple[int, ...]:
        """Nontrivial coset ids met by the outside part."""
        return tuple(i for i in range(1, len(self.coset_counts)) if self.coset_counts[i] > 0)

    def covered_vertex_count(self) -> int:
        """Size of the union of the cosets met by the outside part."""
        return len(self.covered_cosets()) * self.subgroup.order

    def __repr__(self) -> str:
        return f"GeneratingSet(size={self.size}, inside={len(self.inside)}, outside={len(self.outside)})"


def validate_generating_set(subgroup: Subgroup, elements: Iterable[int]) -> GeneratingSet:
    """Check the generating-set rules and compute the coset split.

    Rejects the identity (loops) and any set whose part inside the subgroup is
    not closed under inversion.
    """
    group = subgroup.parent
    elems = sorted(set(int(x) for x in elements))
    for x in elems:
        if not 0 <= x < group.order:
            raise ValidationError(f"generating element {x} out of range")
    if group.identity in elems:
        raise IdentityInGeneratingSet("the identity element is not allowed in a generating set")
    inside = [x for x in elems if subgroup.contains(x)]
    inside_set = set(inside)
    for x in inside:
        if group.inv(x) not in inside_set:
            raise SymmetryViolation(
                f"element {x} lies in the subgroup but its inverse {group.inv(x)} is not in the set"
            )
    outside = [x for x in elems if not subgroup.contains(x)]
    counts = [0] * subgroup.index
    counts[0] = len(inside)
    for x in outside:
        counts[subgroup.coset_of[x]] += 1
    return GeneratingSet(
        subgroup=subgroup,
        elements=tuple(elems),
        inside=tuple(inside),
        outside=tuple(outside),
        coset_counts=tuple(counts),
    )
