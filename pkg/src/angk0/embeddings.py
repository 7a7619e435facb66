"""Induced maps from an n-angle presentation into a triangulated one.

When the domain category sits inside a triangulated category (arity 3) as a
subcategory closed under the (n-2)-fold suspension, sending each symbol to
its image induces a homomorphism of Grothendieck groups.  Only the
consequences visible at the object level are checked here: the suspension
intertwining, well-definedness on relations, and surjectivity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotWellDefinedError
from .k0 import euler_vector, k0, relation_lattice, suspension_rows
from .lattices import GroupHom, IntMatrix, apply_matrix, hom_from_generator_images, is_surjective
from .presentations import Presentation


@dataclass(frozen=True)
class Embedding:
    """An injective symbol map from `domain` into a target of arity 3.

    images[x] is the target index of domain symbol x.  Compatibility
    requires the domain suspension to match the (n-2)-fold target
    suspension under the map.
    """

    domain: Presentation
    target: Presentation
    images: tuple[int, ...]


@dataclass(frozen=True)
class EmbeddingReport:
    violations: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_embedding(e: Embedding) -> EmbeddingReport:
    """Check injectivity and the suspension intertwining.

    Hom-vanishing conditions live at the morphism level and are out of
    reach of object data; they are deliberately not checked.
    """
    violations = []
    if e.target.n != 3:
        violations.append(f"target arity must be 3, found {e.target.n}")
    if len(e.images) != e.domain.rank:
        violations.append("image list length does not match domain symbol count")
        return EmbeddingReport(tuple(violations))
    if any(not 0 <= i < e.target.rank for i in e.images):
        violations.append("image index out of range")
        return EmbeddingReport(tuple(violations))
    if len(set(e.images)) != len(e.images):
        violations.append("not injective")
    power = e.domain.n - 2
    for x in range(e.domain.rank):
        lhs = e.images[e.domain.suspension.images[x]]
        rhs = e.images[x]
        for _ in range(power):
            rhs = e.target.suspension.images[rhs]
        if lhs != rhs:
            violations.append(
                f"suspension intertwining fails at {e.domain.indec_names[x]}"
            )
    return EmbeddingReport(tuple(violations))


def embedding_matrix(e: Embedding) -> IntMatrix:
    """Row x is the target basis vector at images[x] (row-vector action)."""
    return IntMatrix(
        [
            [int(j == e.images[x]) for j in range(e.target.rank)]
            for x in range(e.domain.rank)
        ],
        cols=e.target.rank,
    )


def induced_hom(e: Embedding) -> GroupHom:
    """The induced homomorphism on Grothendieck groups.

    Each generating relation of the domain (suspension rows and Euler
    vectors of listed angles) must land in the target relation lattice;
    the first offender is reported as the witness.
    """
    report = validate_embedding(e)
    if not report.valid:
        raise ValueError("invalid embedding: " + "; ".join(report.violations))
    matrix = embedding_matrix(e)
    target_lattice = relation_lattice(e.target)
    for idx, angle in enumerate(e.domain.angles):
        row = euler_vector(e.domain, angle)
        if apply_matrix(row, matrix) not in target_lattice:
            raise NotWellDefinedError(
                f"Euler vector of listed angle {idx} maps outside the target relations",
                witness=row,
            )
    for row in suspension_rows(e.domain):
        if apply_matrix(row, matrix) not in target_lattice:
            raise NotWellDefinedError(
                f"suspension row {list(row)} maps outside the target relations",
                witness=row,
            )
    return hom_from_generator_images(k0(e.domain).group, k0(e.target).group, matrix)


def check_surjective(e: Embedding) -> bool:
    return is_surjective(induced_hom(e))
