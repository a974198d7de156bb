"""The bowtie product of two baric algebras.

Given baric algebras (A1, w1) and (A2, w2) over the same field, the
product on A1 (+) A2 is

    (a1, a2) * (b1, b2) = (a1 b1 + w2(b2) a1,  a2 b2 + w1(b1) a2)

and the combined weight is (w1 | w2), i.e. w(a1, a2) = w1(a1) + w2(a2).
The result carries a BowtieTag so that factor-aware operations (block
embeddings, projections, the ideal calculus) never have to guess the
split.

The module also provides the closed forms for commutators and
associators of the product, the family of weight-one idempotents built
from factor idempotents, the iterated power of the base field, the
structural isomorphisms (swap, regrouping, transport along a factor
isomorphism), and the associativity characterization in terms of the
scalar-action law x*y = w(y)*x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, Element, commutator, property_flags
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NotABowtie,
    NotIdempotentInput,
    NotWeightPreserving,
    WeightNotOne,
)
from .fields import FieldElement, FieldSpec
from .linalg import Matrix, Subspace, span
from .weights import (
    BaricAlgebra,
    BowtieTag,
    Weight,
    _scalar_power,
    baric_isomorphic_by,
    is_scalar_action,
)


def bowtie(b1: BaricAlgebra, b2: BaricAlgebra) -> BaricAlgebra:
    """Build (A1 bowtie A2, w1 bowtie w2) on the concatenated bases."""
    if b1.field is not b2.field:
        raise FieldMismatch("factors must share a field")
    n1, n2 = b1.dim, b2.dim
    table: dict[tuple[int, int, int], FieldElement] = {}
    for (i, j, k), v in b1.algebra.table.items():
        table[(i, j, k)] = v
    for (i, j, k), v in b2.algebra.table.items():
        table[(n1 + i, n1 + j, n1 + k)] = v
    w1, w2 = b1.weight.coords, b2.weight.coords
    for i in range(n1):
        for j, w2j in enumerate(w2):
            if w2j:
                table[(i, n1 + j, i)] = w2j
    for i in range(n2):
        for j, w1j in enumerate(w1):
            if w1j:
                table[(n1 + i, j, n1 + i)] = w1j
    weight = Weight(b1.field, w1 + w2)
    tag = BowtieTag(n1, n2, b1.weight, b2.weight)
    return BaricAlgebra(Algebra(b1.field, n1 + n2, table), weight, tag)


def _tag(b: BaricAlgebra) -> BowtieTag:
    if b.provenance is None:
        raise NotABowtie("operation needs factor provenance")
    return b.provenance


def factor(b: BaricAlgebra, side: str) -> BaricAlgebra:
    """Recover a factor from its block of the structure constants."""
    tag = _tag(b)
    n1, n2 = tag.left_dim, tag.right_dim
    if side == "left":
        lo, size, weight = 0, n1, tag.left_weight
    elif side == "right":
        lo, size, weight = n1, n2, tag.right_weight
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    table = {
        (i - lo, j - lo, k - lo): v
        for (i, j, k), v in b.algebra.table.items()
        if lo <= i < lo + size and lo <= j < lo + size and lo <= k < lo + size
    }
    names = None
    if b.algebra.basis_names is not None:
        names = b.algebra.basis_names[lo : lo + size]
    return BaricAlgebra(Algebra(b.field, size, table, names), weight)


def factors(b: BaricAlgebra) -> tuple[BaricAlgebra, BaricAlgebra]:
    return factor(b, "left"), factor(b, "right")


def embed(b: BaricAlgebra, side: str, x) -> Element:
    """Block-extend a factor element into the product algebra."""
    tag = _tag(b)
    coords = x.coords if isinstance(x, Element) else tuple(x)
    n1, n2 = tag.left_dim, tag.right_dim
    zero = b.field.zero
    if side == "left":
        if len(coords) != n1:
            raise DimensionMismatch(f"left factor has dimension {n1}")
        return b.element(tuple(coords) + (zero,) * n2)
    if side == "right":
        if len(coords) != n2:
            raise DimensionMismatch(f"right factor has dimension {n2}")
        return b.element((zero,) * n1 + tuple(coords))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def project(b: BaricAlgebra, side: str, s: Subspace) -> Subspace:
    """Coordinate projection of a subspace onto one block, in the factor."""
    tag = _tag(b)
    if s.ambient_dim != b.dim:
        raise DimensionMismatch("subspace does not live in the product algebra")
    n1 = tag.left_dim
    if side == "left":
        rows = [r[:n1] for r in s.basis]
        return span(b.field, n1, rows)
    if side == "right":
        rows = [r[n1:] for r in s.basis]
        return span(b.field, tag.right_dim, rows)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def split_element(b: BaricAlgebra, x: Element) -> tuple[Element, Element]:
    """Split a product-algebra element into its factor components."""
    left, right = factors(b)
    n1 = left.dim
    return (
        Element(left.algebra, x.coords[:n1]),
        Element(right.algebra, x.coords[n1:]),
    )


def commutator_closed_form(
    b1: BaricAlgebra,
    b2: BaricAlgebra,
    x: tuple[Element, Element],
    y: tuple[Element, Element],
) -> tuple[FieldElement, ...]:
    """[x, y] in the product, computed from factor data only.

    For x = (a1, a2) and y = (c1, c2) the commutator is the pair

        ([a1, c1] + w2(c2) a1 - w2(a2) c1,
         [a2, c2] + w1(c1) a2 - w1(a1) c2)

    returned as concatenated coordinates.
    """
    a1, a2 = x
    c1, c2 = y
    _check_pair(b1, b2, a1, a2)
    _check_pair(b1, b2, c1, c2)
    w1, w2 = b1.weight, b2.weight
    left = commutator(a1, c1) + a1.scaled(w2(c2)) - c1.scaled(w2(a2))
    right = commutator(a2, c2) + a2.scaled(w1(c1)) - c2.scaled(w1(a1))
    return left.coords + right.coords


def associator_closed_form(
    b1: BaricAlgebra,
    b2: BaricAlgebra,
    x: tuple[Element, Element],
    y: tuple[Element, Element],
    z: tuple[Element, Element],
) -> tuple[FieldElement, ...]:
    """(x, y, z) in the product, computed from factor data only.

    For x = (a1, a2), y = (b1, b2), z = (c1, c2) the associator is

        ((a1, b1, c1) + w2(b2)(a1 c1 - w1(c1) a1),
         (a2, b2, c2) + w1(b1)(a2 c2 - w2(c2) a2))

    returned as concatenated coordinates.
    """
    a1, a2 = x
    p1, p2 = y
    c1, c2 = z
    _check_pair(b1, b2, a1, a2)
    _check_pair(b1, b2, p1, p2)
    _check_pair(b1, b2, c1, c2)
    w1, w2 = b1.weight, b2.weight
    assoc1 = (a1 * p1) * c1 - a1 * (p1 * c1)
    assoc2 = (a2 * p2) * c2 - a2 * (p2 * c2)
    left = assoc1 + (a1 * c1 - a1.scaled(w1(c1))).scaled(w2(p2))
    right = assoc2 + (a2 * c2 - a2.scaled(w2(c2))).scaled(w1(p1))
    return left.coords + right.coords


def _check_pair(b1: BaricAlgebra, b2: BaricAlgebra, x1: Element, x2: Element) -> None:
    if len(x1.coords) != b1.dim or len(x2.coords) != b2.dim:
        raise DimensionMismatch("component sizes do not match the factors")


def idempotent_family(
    b: BaricAlgebra, e1: Element, e2: Element, lam: FieldElement
) -> Element:
    """The weight-one idempotent (lam e1, (1 - lam) e2) of the product.

    e1 and e2 must be weight-one idempotents of the factors. Any two
    members e, f of the family satisfy e*f = e.
    """
    left, right = factors(b)
    for fac, e in ((left, e1), (right, e2)):
        e = fac.algebra.element(e.coords)
        if e * e != e:
            raise NotIdempotentInput(f"{e!r} is not idempotent in its factor")
        if fac.weight(e) != fac.field.one:
            raise WeightNotOne(f"{e!r} does not have weight one")
    mu = b.field.one - lam
    return embed(b, "left", e1.scaled(lam)) + embed(b, "right", e2.scaled(mu))


def kpow(field: FieldSpec, n: int) -> BaricAlgebra:
    """The n-th bowtie power of the base field (left-associated).

    Its structure constants are c[i,j,k] = 1{k=i} with all weights one;
    iterating bowtie() over n copies of the one-dimensional baric algebra
    produces exactly this table.
    """
    if n < 1:
        raise DimensionMismatch("the power needs at least one factor")
    return _scalar_power(field, n)


@dataclass(frozen=True)
class StructuralIsos:
    """Explicit matrices for the swap / regrouping isomorphisms, verified."""

    swap: Matrix
    assoc: Matrix
    swap_verified: bool
    assoc_verified: bool


def swap_matrix(b1: BaricAlgebra, b2: BaricAlgebra) -> Matrix:
    """Matrix of (a1, a2) -> (a2, a1) from b1|b2 to b2|b1 coordinates."""
    n1, n2 = b1.dim, b2.dim
    field = b1.field
    zero, one = field.zero, field.one
    rows = []
    for i in range(n1):
        row = [zero] * (n1 + n2)
        row[n2 + i] = one
        rows.append(tuple(row))
    for i in range(n2):
        row = [zero] * (n1 + n2)
        row[i] = one
        rows.append(tuple(row))
    return Matrix(field, rows, n1 + n2)


def structural_isos(
    b1: BaricAlgebra, b2: BaricAlgebra, b3: BaricAlgebra
) -> StructuralIsos:
    """Build and verify the swap and regrouping isomorphisms.

    swap: (a1, a2) -> (a2, a1) between b1|b2 and b2|b1.
    assoc: ((a1, a2), a3) -> (a1, (a2, a3)), which is the identity on the
    concatenated coordinates.
    """
    bow12 = bowtie(b1, b2)
    bow21 = bowtie(b2, b1)
    f_swap = swap_matrix(b1, b2)
    swap_ok = baric_isomorphic_by(f_swap, bow12, bow21)

    left_grouped = bowtie(bowtie(b1, b2), b3)
    right_grouped = bowtie(b1, bowtie(b2, b3))
    f_assoc = Matrix.identity(b1.field, b1.dim + b2.dim + b3.dim)
    assoc_ok = baric_isomorphic_by(f_assoc, left_grouped, right_grouped)

    return StructuralIsos(f_swap, f_assoc, swap_ok, assoc_ok)


def transport_iso(
    f: Matrix, src: BaricAlgebra, dst: BaricAlgebra, other: BaricAlgebra
) -> tuple[Matrix, bool]:
    """Extend an isomorphism f: src -> dst to src|other -> dst|other.

    f must be a weight-preserving isomorphism of the left factors; the
    extension acts as f on the left block and as the identity on the
    right block. Returns the extended matrix and its verification.
    """
    if not baric_isomorphic_by(f, src, dst):
        raise NotWeightPreserving("f is not a weight-preserving isomorphism")
    n1, n2 = src.dim, other.dim
    field = src.field
    zero, one = field.zero, field.one
    rows = []
    for i in range(n1):
        rows.append(tuple(f.row(i)) + (zero,) * n2)
    for i in range(n2):
        row = [zero] * (n1 + n2)
        row[n1 + i] = one
        rows.append(tuple(row))
    extended = Matrix(field, rows, n1 + n2)
    ok = baric_isomorphic_by(extended, bowtie(src, other), bowtie(dst, other))
    return extended, ok


@dataclass(frozen=True)
class AssociativityCharacter:
    bowtie_associative: bool
    scalar_action_left: bool
    scalar_action_right: bool


def associativity_character(b1: BaricAlgebra, b2: BaricAlgebra) -> AssociativityCharacter:
    """Associativity of the product vs the scalar-action law in the factors.

    The product is associative exactly when both factors satisfy
    x*y = w(y)*x, and in that case the product satisfies the law as well.
    """
    if b1.field is not b2.field:
        raise FieldMismatch("factors must share a field")
    bow = bowtie(b1, b2)
    return AssociativityCharacter(
        bowtie_associative=property_flags(bow.algebra).associative,
        scalar_action_left=is_scalar_action(b1.algebra, b1.weight),
        scalar_action_right=is_scalar_action(b2.algebra, b2.weight),
    )
