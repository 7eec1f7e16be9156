"""Integral monodromy models on vanishing cohomology.

Two families are covered exactly.  For the rational double points the
monodromy is the Coxeter transformation of the corresponding root system,
built as a product of simple reflections over the positive Cartan matrix.
For Brieskorn-Pham germs x^a + y^b + z^c the classical integral model is
the Kronecker product of companion matrices of 1 + t + ... + t^(m-1), one
per exponent, acting on a lattice of rank (a-1)(b-1)(c-1).

The variation map is the operator minus the identity; its kernel rank,
torsion cokernel and determinant are extracted in one place so that every
consumer sees consistent data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import (
    FiniteAbelianGroup,
    IntMatrix,
    ValidationError,
    cokernel,
    determinant,
)
from .graphs import ade_graph


@dataclass(frozen=True)
class MonodromyOperator:
    """Integer automorphism of the vanishing cohomology lattice.

    mu is the lattice rank (the Milnor number); the matrix must be
    invertible over the integers.
    """

    matrix: IntMatrix
    mu: int

    def __post_init__(self) -> None:
        if not self.matrix.is_square:
            raise ValidationError("monodromy matrix must be square")
        if self.mu != self.matrix.rows:
            raise ValidationError(
                f"mu={self.mu} does not match matrix size {self.matrix.rows}")
        if abs(determinant(self.matrix)) != 1:
            raise ValidationError("monodromy must be unimodular (|det| == 1)")


@dataclass(frozen=True)
class VariationResult:
    """Kernel and cokernel data of (monodromy - identity).

    kernel_rank equals cokernel_free_rank (a square integer map has a
    symmetric rational rank defect), and whenever the determinant is
    nonzero the cokernel is finite of that absolute order.  Both facts are
    enforced at construction.
    """

    kernel_rank: int
    cokernel_torsion: FiniteAbelianGroup
    cokernel_free_rank: int
    det_t_minus_id: int

    def __post_init__(self) -> None:
        if self.kernel_rank != self.cokernel_free_rank:
            raise ValidationError("kernel rank must equal cokernel free rank")
        if self.det_t_minus_id != 0:
            if self.cokernel_free_rank != 0:
                raise ValidationError("nonzero determinant forces a finite cokernel")
            if abs(self.det_t_minus_id) != self.cokernel_torsion.order:
                raise ValidationError("|det| must equal the cokernel order")


def _simple_reflection(cartan: IntMatrix, i: int) -> IntMatrix:
    # s_i(alpha_j) = alpha_j - C[i][j] alpha_i in the simple-root basis
    n = cartan.rows
    entries = []
    for r in range(n):
        for j in range(n):
            x = 1 if r == j else 0
            if r == i:
                x -= cartan.at(i, j)
            entries.append(x)
    return IntMatrix(n, n, tuple(entries))


def coxeter_operator(kind: str, n: int,
                     reflection_order: Sequence[int] | None = None) -> MonodromyOperator:
    """Coxeter transformation of an ADE root system.

    The product of all simple reflections, taken in the fixed vertex order
    of ade_graph unless `reflection_order` permutes it.  Any order yields a
    conjugate element, so all reported invariants are order-independent;
    the default keeps output reproducible.
    """
    graph = ade_graph(kind, n)
    cartan = -graph.intersection_matrix()
    if reflection_order is None:
        order = list(range(n))
    else:
        order = list(reflection_order)
        if sorted(order) != list(range(n)):
            raise ValidationError(
                f"reflection order must be a permutation of 0..{n - 1}")
    t = IntMatrix.identity(n)
    for i in order:
        t = t @ _simple_reflection(cartan, i)
    return MonodromyOperator(matrix=t, mu=n)


def _companion_all_ones(m: int) -> IntMatrix:
    # companion matrix of 1 + t + ... + t^(m-1), size (m-1) x (m-1)
    size = m - 1
    a = [[0] * size for _ in range(size)]
    for i in range(1, size):
        a[i][i - 1] = 1
    for i in range(size):
        a[i][size - 1] = -1
    return IntMatrix.from_rows(a)


def brieskorn_pham_operator(a: int, b: int, c: int) -> MonodromyOperator:
    """Integral monodromy of the germ x^a + y^b + z^c.

    Kronecker product of the three cyclotomic-quotient companion matrices;
    the rank is the Milnor number (a-1)(b-1)(c-1).  Exponents need not be
    coprime: non-coprime triples give an operator whose variation map is
    singular over Q, which downstream reporting must detect.
    """
    for x in (a, b, c):
        if x < 2:
            raise ValidationError(f"exponents must be >= 2, got {x}")
    t = _companion_all_ones(a).kron(_companion_all_ones(b)).kron(_companion_all_ones(c))
    return MonodromyOperator(matrix=t, mu=(a - 1) * (b - 1) * (c - 1))


def variation(t: MonodromyOperator) -> VariationResult:
    """Kernel rank, torsion cokernel and determinant of (t - identity).

    The cokernel data comes from the Smith normal form; the determinant is
    computed independently by fraction-free elimination, and the two are
    cross-checked by the VariationResult invariants.
    """
    tm = t.matrix - IntMatrix.identity(t.mu)
    cok = cokernel(tm)
    det = determinant(tm)
    return VariationResult(
        kernel_rank=cok.free_rank,
        cokernel_torsion=cok.torsion,
        cokernel_free_rank=cok.free_rank,
        det_t_minus_id=det,
    )
