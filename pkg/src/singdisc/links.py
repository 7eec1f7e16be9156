"""Homology of singularity links.

Links of normal surface singularities are closed oriented 3-manifolds.
For a plumbing boundary, H1 torsion is the cokernel of the intersection
matrix and the free rank comes from genera and graph cycles; lens spaces
and Brieskorn manifolds get their classical closed forms.  In every case
H2 torsion agrees with H1 torsion (universal coefficients on a closed
oriented 3-manifold), so the degree-two group is transferred rather than
recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exact import FiniteAbelianGroup, ValidationError, cokernel, is_negative_definite
from .graphs import ResolutionGraph


class NotResolutionGraphError(ValidationError):
    """Intersection matrix is not negative definite."""


@dataclass(frozen=True)
class LinkHomology:
    """H1 of a singularity link, split into free rank and torsion.

    h2_torsion always equals h1_torsion; the constructor enforces this
    structural identity.
    """

    h1_free_rank: int
    h1_torsion: FiniteAbelianGroup
    h2_torsion: FiniteAbelianGroup

    def __post_init__(self) -> None:
        if self.h1_free_rank < 0:
            raise ValidationError("free rank must be nonnegative")
        if self.h2_torsion != self.h1_torsion:
            raise ValidationError("H2 torsion must equal H1 torsion for a closed "
                                  "oriented 3-manifold")

    @property
    def is_rational_homology_sphere(self) -> bool:
        """True iff b1 of the link vanishes."""
        return self.h1_free_rank == 0


def link_from_plumbing(g: ResolutionGraph) -> LinkHomology:
    """Homology of the boundary of the plumbed neighborhood of a graph.

    Requires a negative-definite intersection matrix (the graph of an
    actual resolution).  H1 torsion is the cokernel of that matrix; the
    free rank is 2 * (total genus) + (cycle rank of the graph).
    """
    m = g.intersection_matrix()
    if not is_negative_definite(m):
        raise NotResolutionGraphError(
            "intersection matrix is not negative definite; the graph is not a "
            "resolution graph")
    cok = cokernel(m)
    # negative definite => nonsingular, so the cokernel is all torsion
    assert cok.free_rank == 0
    free_rank = 2 * g.total_genus() + g.cycle_rank()
    return LinkHomology(
        h1_free_rank=free_rank,
        h1_torsion=cok.torsion,
        h2_torsion=cok.torsion,
    )


def lens_space_h1(n: int, q: int) -> LinkHomology:
    """Homology of the lens space L(n, q), the link of a cyclic quotient.

    H1 is cyclic of order n regardless of q (which only affects the
    homeomorphism type); L(1, 0) is the 3-sphere.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if not (0 <= q < n):
        raise ValidationError(f"q must satisfy 0 <= q < n, got q={q}")
    if gcd(n, q) != 1:
        raise ValidationError(f"({n}, {q}) are not coprime")
    group = FiniteAbelianGroup.cyclic(n)
    return LinkHomology(h1_free_rank=0, h1_torsion=group, h2_torsion=group)


def brieskorn_h1_order(a: int, b: int, c: int) -> int:
    """Order of H1 of the Brieskorn manifold Sigma(a, b, c).

    For pairwise coprime exponents the Seifert computation gives
    |ab + ac + bc - abc|.  Order only: the closed formula carries no group
    structure, so structural claims must come from another route.
    """
    for x in (a, b, c):
        if x < 2:
            raise ValidationError(f"exponents must be >= 2, got {x}")
    if gcd(a, b) != 1 or gcd(a, c) != 1 or gcd(b, c) != 1:
        raise ValidationError(f"exponents ({a}, {b}, {c}) must be pairwise coprime")
    return abs(a * b + a * c + b * c - a * b * c)
