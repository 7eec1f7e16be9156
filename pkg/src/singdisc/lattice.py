"""Integral lattices with nondegenerate symmetric bilinear forms.

A lattice is a free abelian group of finite rank with an integer Gram
matrix, assumed nondegenerate over the rationals.  Its discriminant group
is the finite cokernel of the Gram matrix viewed as the embedding of the
lattice into its dual; the group order always equals |det| of the Gram
matrix.
"""

from __future__ import annotations

from .exact import (
    FiniteAbelianGroup,
    IntMatrix,
    ValidationError,
    cokernel,
    determinant,
)


class DegenerateFormError(ValidationError):
    """The bilinear form is singular over the rationals."""


class Lattice:
    """Integral lattice carrying a nondegenerate symmetric form.

    The stored Gram matrix is the geometric one (negative definite for
    exceptional lattices of resolutions); order statements downstream only
    ever use absolute values, so the sign convention never matters there.
    """

    def __init__(self, gram: IntMatrix):
        if not gram.is_square:
            raise ValidationError(f"Gram matrix must be square, got {gram.rows}x{gram.cols}")
        if not gram.is_symmetric():
            raise ValidationError("Gram matrix must be symmetric")
        det = determinant(gram)
        if det == 0:
            raise DegenerateFormError("Gram matrix is singular over Q")
        self._gram = gram
        self._det = det

    @property
    def gram(self) -> IntMatrix:
        return self._gram

    @property
    def rank(self) -> int:
        return self._gram.rows

    @property
    def det(self) -> int:
        return self._det

    def discriminant_group(self) -> FiniteAbelianGroup:
        """Quotient of the dual lattice by the image of the Gram embedding.

        Finite because the form is nondegenerate; its order is |det(gram)|.
        """
        cok = cokernel(self._gram)
        # nondegeneracy forces a finite quotient
        assert cok.free_rank == 0, "nondegenerate form cannot have free cokernel"
        return cok.torsion

    def is_unimodular(self) -> bool:
        """True iff the lattice equals its dual.

        Three equivalent characterizations (trivial discriminant group,
        |det| == 1, all invariant factors 1) are cross-asserted here.
        """
        by_det = abs(self._det) == 1
        by_group = self.discriminant_group().is_trivial
        assert by_det == by_group, "determinant and discriminant group disagree"
        return by_det

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self._gram == other._gram

    def __hash__(self) -> int:
        return hash(self._gram)

    def __repr__(self) -> str:
        return f"Lattice(rank={self.rank}, det={self._det})"
