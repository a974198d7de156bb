"""Ideal calculus for baric algebras and their bowtie products.

Covers ideal closures, sidedness tests, the behaviour of ideals under
the block embeddings and projections of a bowtie product, the pairing
between factor kernel-ideals and kernel-ideals of the product, and
decomposability of the kernel into two nonzero ideals.

Exhaustive decisions (ideal lattices, decomposability) are only offered
over prime fields, where subspace enumeration is finite; over the
rationals the same questions are answered relative to supplied
candidates, or reported as undecided.
"""

from __future__ import annotations

from enum import Enum
from itertools import chain, combinations
from typing import Iterable, Sequence

from dataclasses import dataclass

from .algebra import Algebra, Element, property_flags
from .bowtie import embed, factors, project
from .errors import (
    DimensionMismatch,
    FactorsNotCommutativeUnital,
)
from .linalg import Subspace, enumerate_subspaces, span
from .weights import BaricAlgebra, find_weight_one_idempotents


class Sided(Enum):
    RIGHT = "right"
    TWO_SIDED = "two_sided"
    NONE = "none"


@dataclass(frozen=True)
class Ideal:
    space: Subspace
    sided: Sided


def _closed_right(a: Algebra, s: Subspace) -> bool:
    for v in s.basis:
        for j in range(a.dim):
            image = a.product_coords(v, _basis_coords(a, j))
            if not s.contains_vector(image):
                return False
    return True


def _closed_left(a: Algebra, s: Subspace) -> bool:
    for v in s.basis:
        for j in range(a.dim):
            image = a.product_coords(_basis_coords(a, j), v)
            if not s.contains_vector(image):
                return False
    return True


def _basis_coords(a: Algebra, i: int):
    zero, one = a.field.zero, a.field.one
    coords = [zero] * a.dim
    coords[i] = one
    return coords


def sidedness(a: Algebra, s: Subspace) -> Sided:
    """Strongest ideal label of a subspace, by direct multiplication tests."""
    if s.ambient_dim != a.dim:
        raise DimensionMismatch("subspace does not live in the algebra")
    if not _closed_right(a, s):
        return Sided.NONE
    if _closed_left(a, s):
        return Sided.TWO_SIDED
    return Sided.RIGHT


def is_two_sided_ideal(a: Algebra, s: Subspace) -> bool:
    return _closed_right(a, s) and _closed_left(a, s)


def ideal_closure(a: Algebra, gens: Sequence[Element], side: Sided | str = Sided.TWO_SIDED) -> Ideal:
    """Least subspace containing gens closed under the requested products.

    Fixpoint iteration: multiply the current basis by every algebra basis
    vector on the required sides and re-span until the dimension stops
    growing; it terminates because the dimension is bounded by dim A.
    """
    side = Sided(side) if not isinstance(side, Sided) else side
    if side is Sided.NONE:
        raise ValueError("closure side must be right or two_sided")
    for g in gens:
        if g.algebra != a:
            raise DimensionMismatch("generator from a different algebra")
    current = span(a.field, a.dim, [g.coords for g in gens])
    while True:
        new_vectors = list(current.basis)
        for v in current.basis:
            for j in range(a.dim):
                new_vectors.append(a.product_coords(v, _basis_coords(a, j)))
                if side is Sided.TWO_SIDED:
                    new_vectors.append(a.product_coords(_basis_coords(a, j), v))
        grown = span(a.field, a.dim, new_vectors)
        if grown.dim == current.dim:
            return Ideal(current, sidedness(a, current))
        current = grown


def embedded_ideal_check(bow: BaricAlgebra, side: str, ideal: Ideal) -> bool:
    """Does a two-sided factor ideal stay two-sided inside the product?

    Computed directly on the embedded subspace. This is equivalent to
    the ideal being contained in the kernel of its factor's weight.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if ideal.sided is not Sided.TWO_SIDED:
        raise ValueError("embedded_ideal_check needs a two-sided factor ideal")
    embedded = span(
        bow.field,
        bow.dim,
        [embed(bow, side, row).coords for row in ideal.space.basis],
    )
    return is_two_sided_ideal(bow.algebra, embedded)


@dataclass(frozen=True)
class IdealProjection:
    left: Subspace
    right: Subspace
    left_is_ideal: bool
    right_is_ideal: bool


def project_ideal(bow: BaricAlgebra, ideal: Ideal) -> IdealProjection:
    """Block projections of a two-sided product ideal, with ideal flags."""
    if ideal.sided is not Sided.TWO_SIDED:
        raise ValueError("project_ideal needs a two-sided ideal")
    left_fac, right_fac = factors(bow)
    p1 = project(bow, "left", ideal.space)
    p2 = project(bow, "right", ideal.space)
    return IdealProjection(
        left=p1,
        right=p2,
        left_is_ideal=is_two_sided_ideal(left_fac.algebra, p1),
        right_is_ideal=is_two_sided_ideal(right_fac.algebra, p2),
    )


def kernel_ideals(b: BaricAlgebra, cap: int | None = None) -> list[Subspace]:
    """All two-sided ideals of the algebra contained in Ker w."""
    return [
        s
        for s in enumerate_subspaces(b.kernel(), cap)
        if is_two_sided_ideal(b.algebra, s)
    ]


@dataclass(frozen=True)
class KernelIdealBijection:
    """The pairing between factor kernel-ideals and product kernel-ideals.

    phi maps a pair (I, J) to the block sum I (+) J; psi maps a product
    ideal to its pair of block projections. `verified` records that over
    the enumerated lattices phi and psi are mutually inverse between the
    pair set and the product kernel-ideals minus the kernel itself.
    """

    bow: BaricAlgebra
    left_ideals: tuple[Subspace, ...]
    right_ideals: tuple[Subspace, ...]
    bowtie_ideals: tuple[Subspace, ...]
    verified: bool

    def phi(self, left: Subspace, right: Subspace) -> Subspace:
        rows = [embed(self.bow, "left", r).coords for r in left.basis]
        rows += [embed(self.bow, "right", r).coords for r in right.basis]
        return span(self.bow.field, self.bow.dim, rows)

    def psi(self, s: Subspace) -> tuple[Subspace, Subspace]:
        return project(self.bow, "left", s), project(self.bow, "right", s)


def kernel_ideal_bijection(bow: BaricAlgebra, cap: int | None = None) -> KernelIdealBijection:
    """Verify the kernel-ideal pairing for commutative unital factors."""
    left, right = factors(bow)
    for fac in (left, right):
        flags = property_flags(fac.algebra)
        if not (flags.commutative and flags.unital):
            raise FactorsNotCommutativeUnital(
                "the kernel ideal pairing needs commutative unital factors"
            )
    left_ideals = tuple(kernel_ideals(left, cap))
    right_ideals = tuple(kernel_ideals(right, cap))
    kernel = bow.kernel()
    bowtie_ideals = tuple(s for s in kernel_ideals(bow, cap) if s != kernel)

    result = KernelIdealBijection(
        bow, left_ideals, right_ideals, bowtie_ideals, verified=False
    )
    images = []
    ok = True
    for i in left_ideals:
        for j in right_ideals:
            image = result.phi(i, j)
            images.append(image)
            if result.psi(image) != (i, j):
                ok = False
    if len(set(images)) != len(images):
        ok = False
    if set(images) != set(bowtie_ideals):
        ok = False
    for s in bowtie_ideals:
        p1, p2 = result.psi(s)
        if result.phi(p1, p2) != s:
            ok = False
    return KernelIdealBijection(
        bow, left_ideals, right_ideals, bowtie_ideals, verified=ok
    )


class DecompOutcome(Enum):
    DECOMPOSABLE = "decomposable"
    INDECOMPOSABLE = "indecomposable"
    NO_WEIGHT1_IDEMPOTENT = "no_weight1_idempotent"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Decomposability:
    outcome: DecompOutcome
    idempotent: Element | None = None
    n1: Subspace | None = None
    n2: Subspace | None = None


def decomposability(
    b: BaricAlgebra,
    cap: int | None = None,
    idempotent_candidates: Sequence[Element] = (),
    ideal_candidate_basis: Sequence[Element] | None = None,
) -> Decomposability:
    """Split Ker w into two nonzero ideals, if possible.

    The algebra must have an idempotent of weight one to qualify; absent
    one the outcome is NO_WEIGHT1_IDEMPOTENT. Over a prime field the
    kernel-ideal lattice is enumerated exhaustively and the decision is
    exact. Over the rationals only the ideals generated by subsets of
    `ideal_candidate_basis` are tried, and the outcome is UNDECIDED when
    no witness pair turns up.
    """
    idems = find_weight_one_idempotents(
        b, cap, candidates=idempotent_candidates, limit=1
    )
    if not idems:
        return Decomposability(DecompOutcome.NO_WEIGHT1_IDEMPOTENT)
    idem = idems[0]
    kernel = b.kernel()

    if b.field.is_finite:
        candidates = [s for s in kernel_ideals(b, cap) if s.dim > 0]
    else:
        if ideal_candidate_basis is None:
            return Decomposability(DecompOutcome.UNDECIDED, idem)
        seen = set()
        candidates = []
        for subset in _powerset(ideal_candidate_basis):
            if not subset:
                continue
            closure = ideal_closure(b.algebra, list(subset), Sided.TWO_SIDED)
            s = closure.space
            if s.dim > 0 and kernel.contains(s) and s not in seen:
                seen.add(s)
                candidates.append(s)

    for i, n1 in enumerate(candidates):
        for n2 in candidates[i:]:
            if n1.intersect(n2).dim == 0 and n1.sum(n2) == kernel:
                return Decomposability(DecompOutcome.DECOMPOSABLE, idem, n1, n2)
    if b.field.is_finite:
        return Decomposability(DecompOutcome.INDECOMPOSABLE, idem)
    return Decomposability(DecompOutcome.UNDECIDED, idem)


def _powerset(items: Sequence) -> Iterable[tuple]:
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))
