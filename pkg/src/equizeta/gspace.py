"""Symbolic G-space expressions and their equivariant virtual Poincare series.

Expressions are built from a catalog of atoms (spaces whose series is known)
and the closure operations the theory actually provides: finite disjoint
unions, complements of closed invariant subsets, products with affine spaces,
and products with punctured lines.  There is deliberately no general binary
product: the series is not known to be multiplicative beyond those two rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple, Union

from .errors import SchemaError, UnknownAtom
from .ratpoly import RatFunc


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Rational:
    value: RatFunc


@dataclass(frozen=True)
class DisjointUnion:
    parts: Tuple["GSpace", ...]

    def __init__(self, *parts):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class ClosedComplement:
    """whole minus a closed invariant part; series subtract."""

    whole: "GSpace"
    closed_part: "GSpace"


@dataclass(frozen=True)
class ProductWithAffine:
    """base x R^n (any action on the affine factor): series times u^n."""

    base: "GSpace"
    n: int


@dataclass(frozen=True)
class ProductWithPuncturedLines:
    """base x (R*)^m (actions stabilizing 0): series times (u-1)^m."""

    base: "GSpace"
    m: int


GSpace = Union[
    Atom, Rational, DisjointUnion, ClosedComplement, ProductWithAffine,
    ProductWithPuncturedLines,
]


# -- atom catalog -----------------------------------------------------------
#
# Equivariant values are for a nontrivial finite group action (the action is
# implicit in the atom name); the *_trivial atoms carry the classical virtual
# Poincare polynomial values used when the group is trivial.

_POINT = RatFunc((0, 1), (-1, 1))                 # u/(u-1)
_CIRCLE_FIXED = RatFunc((0, 1, 1), (-1, 1))       # u + 2u/(u-1)

_FIXED_ATOMS = {
    "point_fixed": _POINT,
    "point_pair_swapped": RatFunc(1),
    "circle_with_fixed_point": _CIRCLE_FIXED,
    "projective_line_G": _CIRCLE_FIXED,
    "sphere_free": RatFunc((1, 1, 1)),
    "sphere_with_fixed_point": RatFunc((0, 1, 0, 1), (-1, 1)),
    "point_trivial": RatFunc(1),
    "circle_trivial": RatFunc((1, 1)),
}

_AFFINE_RE = re.compile(r"^affine\((\d+)\)$")
_AFFINE_TRIVIAL_RE = re.compile(r"^affine_trivial\((\d+)\)$")


def atom_value(name: str) -> RatFunc:
    """Series of a catalog atom; UnknownAtom for anything else."""
    if name in _FIXED_ATOMS:
        return _FIXED_ATOMS[name]
    m = _AFFINE_RE.match(name)
    if m:
        n = int(m.group(1))
        return RatFunc.monomial(n + 1) / RatFunc.poly((-1, 1))
    m = _AFFINE_TRIVIAL_RE.match(name)
    if m:
        return RatFunc.monomial(int(m.group(1)))
    raise UnknownAtom(f"unknown atom {name!r}")


def atom_table(max_affine: int = 8):
    """Full catalog listing in a deterministic order.

    The affine families are listed through dimension ``max_affine``;
    ``atom_value`` accepts any dimension.
    """
    rows = [(name, value) for name, value in _FIXED_ATOMS.items()]
    for n in range(max_affine + 1):
        rows.append((f"affine({n})", atom_value(f"affine({n})")))
    for n in range(max_affine + 1):
        rows.append((f"affine_trivial({n})", atom_value(f"affine_trivial({n})")))
    return rows


def beta_value(expr: GSpace) -> RatFunc:
    """Evaluate the equivariant virtual Poincare series of an expression."""
    if isinstance(expr, Atom):
        return atom_value(expr.name)
    if isinstance(expr, Rational):
        return expr.value
    if isinstance(expr, DisjointUnion):
        total = RatFunc(0)
        for part in expr.parts:
            total = total + beta_value(part)
        return total
    if isinstance(expr, ClosedComplement):
        return beta_value(expr.whole) - beta_value(expr.closed_part)
    if isinstance(expr, ProductWithAffine):
        if expr.n < 0:
            raise ValueError("affine factor dimension must be non-negative")
        return beta_value(expr.base) * RatFunc.monomial(expr.n)
    if isinstance(expr, ProductWithPuncturedLines):
        if expr.m < 0:
            raise ValueError("punctured-line count must be non-negative")
        factor = RatFunc(1)
        for _ in range(expr.m):
            factor = factor * RatFunc.poly((-1, 1))
        return beta_value(expr.base) * factor
    raise TypeError(f"not a G-space expression: {expr!r}")


# -- serialization -----------------------------------------------------------

def expr_to_json(expr: GSpace) -> dict:
    if isinstance(expr, Atom):
        return {"kind": "atom", "name": expr.name}
    if isinstance(expr, Rational):
        return {"kind": "rational", "value": expr.value.to_json()}
    if isinstance(expr, DisjointUnion):
        return {"kind": "disjoint_union", "parts": [expr_to_json(p) for p in expr.parts]}
    if isinstance(expr, ClosedComplement):
        return {
            "kind": "closed_complement",
            "whole": expr_to_json(expr.whole),
            "closed_part": expr_to_json(expr.closed_part),
        }
    if isinstance(expr, ProductWithAffine):
        return {"kind": "product_affine", "base": expr_to_json(expr.base), "n": expr.n}
    if isinstance(expr, ProductWithPuncturedLines):
        return {"kind": "product_punctured", "base": expr_to_json(expr.base), "m": expr.m}
    raise TypeError(f"not a G-space expression: {expr!r}")


def expr_from_json(obj) -> GSpace:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError("G-space expression must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "atom":
        name = obj.get("name")
        if not isinstance(name, str):
            raise SchemaError("atom needs a string 'name'")
        try:
            atom_value(name)  # rejects unknown names early
        except UnknownAtom as exc:
            raise SchemaError(str(exc)) from exc
        return Atom(name)
    if kind == "rational":
        return Rational(RatFunc.from_json(obj.get("value")))
    if kind == "disjoint_union":
        parts = obj.get("parts")
        if not isinstance(parts, list):
            raise SchemaError("disjoint_union needs a 'parts' array")
        return DisjointUnion(*[expr_from_json(p) for p in parts])
    if kind == "closed_complement":
        return ClosedComplement(
            expr_from_json(obj.get("whole")), expr_from_json(obj.get("closed_part"))
        )
    if kind == "product_affine":
        n = obj.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise SchemaError("product_affine needs a non-negative integer 'n'")
        return ProductWithAffine(expr_from_json(obj.get("base")), n)
    if kind == "product_punctured":
        m = obj.get("m")
        if not isinstance(m, int) or isinstance(m, bool) or m < 0:
            raise SchemaError("product_punctured needs a non-negative integer 'm'")
        return ProductWithPuncturedLines(expr_from_json(obj.get("base")), m)
    raise SchemaError(f"unknown G-space expression kind {kind!r}")
