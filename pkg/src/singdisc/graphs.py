"""Weighted dual graphs of exceptional divisors.

A resolution graph records one vertex per irreducible exceptional curve
(self-intersection and genus) and one edge per intersection point.  This
module also generates the standard configurations: ADE curve arrangements
and the Hirzebruch-Jung chains of cyclic quotient singularities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import IntMatrix, ValidationError


@dataclass(frozen=True)
class Vertex:
    """One exceptional curve: self-intersection number and genus."""

    self_intersection: int
    genus: int = 0

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValidationError(f"genus must be nonnegative, got {self.genus}")


@dataclass(frozen=True)
class ResolutionGraph:
    """Connected weighted dual graph of an exceptional divisor.

    Edges are unordered pairs of distinct vertex indices; multi-edges are
    allowed (each raises the first Betti number of the boundary), loops are
    not.  Edges are normalized to sorted pairs in lexicographic order so
    that equal graphs compare equal.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        if not verts:
            raise ValidationError("a resolution graph needs at least one vertex")
        for vtx in verts:
            if not isinstance(vtx, Vertex):
                raise ValidationError(f"expected Vertex, got {vtx!r}")
        n = len(verts)
        norm = []
        for e in self.edges:
            i, j = e
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"edge {e} has an endpoint outside 0..{n - 1}")
            if i == j:
                raise ValidationError(f"edge {e} is a loop")
            norm.append((i, j) if i < j else (j, i))
        norm.sort()
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(norm))
        if not self._is_connected():
            raise ValidationError("resolution graph must be connected")

    def _is_connected(self) -> bool:
        n = len(self.vertices)
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * n
        stack = [0]
        seen[0] = True
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return all(seen)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def cycle_rank(self) -> int:
        """First Betti number of the graph (it is connected)."""
        return len(self.edges) - len(self.vertices) + 1

    def total_genus(self) -> int:
        return sum(v.genus for v in self.vertices)

    def intersection_matrix(self) -> IntMatrix:
        """Symmetric matrix: self-intersections on the diagonal, edge
        multiplicities off it."""
        n = len(self.vertices)
        a = [[0] * n for _ in range(n)]
        for i, v in enumerate(self.vertices):
            a[i][i] = v.self_intersection
        for i, j in self.edges:
            a[i][j] += 1
            a[j][i] += 1
        return IntMatrix.from_rows(a)


def _chain(weights: list[int]) -> ResolutionGraph:
    verts = tuple(Vertex(w) for w in weights)
    edges = tuple((i, i + 1) for i in range(len(weights) - 1))
    return ResolutionGraph(verts, edges)


def ade_graph(kind: str, n: int) -> ResolutionGraph:
    """Exceptional configuration of a rational double point.

    All curves are rational with self-intersection -2; the edges follow
    the Dynkin diagram of the given type.  Vertex order is fixed: A_n is a
    chain; D_n is the chain 0..n-3 with leaves n-2 and n-1 attached to
    vertex n-3; E_n is the chain 0..n-2 with vertex n-1 attached to
    vertex 2.
    """
    if kind == "A":
        if n < 1:
            raise ValidationError(f"A requires n >= 1, got {n}")
        return _chain([-2] * n)
    if kind == "D":
        if n < 4:
            raise ValidationError(f"D requires n >= 4, got {n}")
        verts = tuple(Vertex(-2) for _ in range(n))
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
        return ResolutionGraph(verts, tuple(edges))
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValidationError(f"E requires n in (6, 7, 8), got {n}")
        verts = tuple(Vertex(-2) for _ in range(n))
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((2, n - 1))
        return ResolutionGraph(verts, tuple(edges))
    raise ValidationError(f"unknown ADE kind {kind!r}, expected 'A', 'D' or 'E'")


@dataclass(frozen=True)
class ContinuedFraction:
    """Hirzebruch-Jung expansion n/q = b1 - 1/(b2 - 1/(...)), all bi >= 2.

    Construction re-evaluates the terms exactly and rejects anything that
    does not reproduce n/q.

    >>> ContinuedFraction(5, 2, (3, 2)).evaluate()
    Fraction(5, 2)
    """

    numerator: int
    denominator: int
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        n, q = self.numerator, self.denominator
        if n < 2:
            raise ValidationError(f"numerator must be >= 2, got {n}")
        if not (1 <= q < n):
            raise ValidationError(f"denominator must satisfy 1 <= q < n, got q={q}")
        if gcd(n, q) != 1:
            raise ValidationError(f"({n}, {q}) are not coprime")
        terms = tuple(int(b) for b in self.terms)
        object.__setattr__(self, "terms", terms)
        for b in terms:
            if b < 2:
                raise ValidationError(f"every term must be >= 2, got {b}")
        if self.evaluate() != Fraction(n, q):
            raise ValidationError(f"terms {terms} do not evaluate to {n}/{q}")

    def evaluate(self) -> Fraction:
        val = Fraction(self.terms[-1])
        for b in reversed(self.terms[:-1]):
            val = b - Fraction(1, 1) / val
        return val


@dataclass(frozen=True)
class HirzebruchJungExpansion:
    """Continued fraction of n/q together with the resolution chain it encodes."""

    fraction: ContinuedFraction
    graph: ResolutionGraph


def hirzebruch_jung(n: int, q: int) -> HirzebruchJungExpansion:
    """Resolve the cyclic quotient of type (n, q).

    Expands n/q by the recursion n/q = b - 1/(n'/q') with b = ceil(n/q),
    then builds the chain of rational curves with self-intersections
    -b1, ..., -bs.

    >>> hirzebruch_jung(5, 2).fraction.terms
    (3, 2)
    """
    if n < 2:
        raise ValidationError(f"n must be >= 2, got {n}")
    if not (1 <= q < n):
        raise ValidationError(f"q must satisfy 1 <= q < n, got q={q}")
    if gcd(n, q) != 1:
        raise ValidationError(f"({n}, {q}) are not coprime")
    terms = []
    a, b = n, q
    while b:
        t = -(-a // b)
        terms.append(t)
        a, b = b, t * b - a
    cf = ContinuedFraction(n, q, tuple(terms))
    return HirzebruchJungExpansion(cf, _chain([-t for t in terms]))
