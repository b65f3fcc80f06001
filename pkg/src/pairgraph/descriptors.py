"""Parsing of group / subgroup / generating-set descriptors.

Groups are described either as JSON ``{"kind": ..., "params": [...]}`` or as
the shorthand ``kind:param[,param]`` (e.g. ``cyclic:12``, ``gl2:5``,
``field_additive:7,2``).  Subgroups are element lists, builtin names, or
generator lists; the builtins cover the stock pairings used throughout.
"""

from __future__ import annotations

import json
from typing import Iterable, Union

from .errors import ValidationError
from .groups import (
    FiniteGroup,
    Subgroup,
    field_norm_preimage,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_field_additive,
    make_gl2,
    make_sl2,
    make_symmetric,
    perm_from_cycles,
    perm_parity,
    subgroup_from_elements,
    subgroup_generated,
)

GROUP_KINDS = {
    "cyclic": (make_cyclic, 1),
    "symmetric": (make_symmetric, 1),
    "alternating": (make_alternating, 1),
    "dihedral": (make_dihedral, 1),
    "gl2": (make_gl2, 1),
    "sl2": (make_sl2, 1),
    "field_additive": (make_field_additive, 2),
}

SUBGROUP_BUILTINS = ("sl2_in_gl2", "alternating_in_symmetric", "evens", "klein_in_a4")


def group_from_descriptor(descriptor: Union[str, dict]) -> FiniteGroup:
    if isinstance(descriptor, str):
        text = descriptor.strip()
        if text.startswith("{"):
            descriptor = json.loads(text)
        else:
            kind, _, rest = text.partition(":")
            params = [int(v) for v in rest.split(",") if v != ""]
            descriptor = {"kind": kind, "params": params}
    kind = descriptor.get("kind")
    params = descriptor.get("params", [])
    if kind == "product":
        if len(params) != 2:
            raise ValidationError("product descriptor needs exactly two factor descriptors")
        return make_direct_product(group_from_descriptor(params[0]), group_from_descriptor(params[1]))
    if kind not in GROUP_KINDS:
        raise ValidationError(f"unknown group kind {kind!r}")
    maker, arity = GROUP_KINDS[kind]
    if len(params) != arity:
        raise ValidationError(f"group kind {kind!r} takes {arity} parameter(s), got {params}")
    return maker(*[int(v) for v in params])


def builtin_subgroup(group: FiniteGroup, name: str) -> Subgroup:
    kind = group.descriptor.get("kind")
    if name == "sl2_in_gl2":
        if kind != "gl2" or group.matrices is None:
            raise ValidationError("sl2_in_gl2 needs a gl2 group")
        p = group.descriptor["params"][0]
        elems = [i for i, (a, b, c, d) in enumerate(group.matrices) if (a * d - b * c) % p == 1]
        return subgroup_from_elements(group, elems)
    if name == "alternating_in_symmetric":
        if kind != "symmetric" or group.perms is None:
            raise ValidationError("alternating_in_symmetric needs a symmetric group")
        return subgroup_from_elements(
            group, [i for i, p in enumerate(group.perms) if perm_parity(p) == 0]
        )
    if name == "evens":
        if kind != "cyclic" or group.order % 2 != 0:
            raise ValidationError("evens needs a cyclic group of even order")
        return subgroup_from_elements(group, range(0, group.order, 2))
    if name == "klein_in_a4":
        if kind != "alternating" or group.descriptor.get("params") != [4]:
            raise ValidationError("klein_in_a4 needs the alternating group on 4 letters")
        wanted = ["e", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
        elems = [group.perms.index(perm_from_cycles(4, w)) for w in wanted]
        return subgroup_from_elements(group, elems)
    raise ValidationError(f"unknown builtin subgroup {name!r}; known: {SUBGROUP_BUILTINS}")


def subgroup_from_descriptor(group: FiniteGroup, descriptor: Union[str, dict, Iterable[int]]) -> Subgroup:
    if isinstance(descriptor, str):
        text = descriptor.strip()
        if text.startswith("{"):
            descriptor = json.loads(text)
        elif text.replace(",", "").replace(" ", "").isdigit():
            descriptor = {"elements": [int(v) for v in text.split(",") if v != ""]}
        else:
            descriptor = {"builtin": text}
    elif not isinstance(descriptor, dict):
        descriptor = {"elements": [int(v) for v in descriptor]}
    if "builtin" in descriptor:
        return builtin_subgroup(group, descriptor["builtin"])
    if "elements" in descriptor:
        return subgroup_from_elements(group, descriptor["elements"])
    if "generators" in descriptor:
        return subgroup_generated(group, descriptor["generators"])
    raise ValidationError("subgroup descriptor needs 'elements', 'generators' or 'builtin'")


def set_from_descriptor(group: FiniteGroup, descriptor: Union[str, dict, Iterable[int]]) -> tuple[int, ...]:
    """Generating-set elements from an explicit list or a norm-preimage rule."""
    if isinstance(descriptor, str):
        text = descriptor.strip()
        if text.startswith("{"):
            descriptor = json.loads(text)
        else:
            return tuple(int(v) for v in text.split(",") if v != "")
    if isinstance(descriptor, dict):
        if "norm_preimage" in descriptor:
            return field_norm_preimage(group, descriptor["norm_preimage"])
        if "elements" in descriptor:
            return tuple(int(v) for v in descriptor["elements"])
        raise ValidationError("set descriptor needs 'elements' or 'norm_preimage'")
    return tuple(int(v) for v in descriptor)
