"""Exact linear algebra over the integers.

Dense matrices with arbitrary-precision integer entries, fraction-free
determinants, Smith normal form with unimodular transforms, and cokernels
of integer maps presented as finite abelian groups.  Everything here is
plain Python int arithmetic: no floats, no fixed-width overflow.
"""

from __future__ import annotations

from dataclasses import dataclass


class DimensionError(ValueError):
    """Matrix shapes do not admit the requested operation."""


class ValidationError(ValueError):
    """Input violates a structural precondition."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, entries stored row-major.

    The 0x0 matrix is allowed and treated as the empty matrix (its
    determinant is 1, its Smith normal form is empty).
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        for x in self.entries:
            if not isinstance(x, int):
                raise ValidationError(f"matrix entries must be integers, got {x!r}")

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        data = [list(r) for r in rows]
        n = len(data)
        m = len(data[0]) if data else 0
        for r in data:
            if len(r) != m:
                raise DimensionError("ragged rows")
        return cls(n, m, tuple(x for r in data for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range")
        return self.entries[i * self.cols + j]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.at(*ij)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self.entries[i * self.cols + j] == self.entries[j * self.cols + i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j]
                  for j in range(self.cols) for i in range(self.rows)),
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in subtraction")
        return IntMatrix(
            self.rows, self.cols,
            tuple(x - y for x, y in zip(self.entries, other.entries)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                out.append(sum(arow[t] * b[t * m + j] for t in range(k)))
        return IntMatrix(n, m, tuple(out))

    def kron(self, other: IntMatrix) -> IntMatrix:
        """Kronecker product self (x) other."""
        r = self.rows * other.rows
        c = self.cols * other.cols
        out = [0] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                x = self.entries[i * self.cols + j]
                if x == 0:
                    continue
                for p in range(other.rows):
                    base = (i * other.rows + p) * c + j * other.cols
                    orow = other.entries[p * other.cols : (p + 1) * other.cols]
                    for q in range(other.cols):
                        out[base + q] = x * orow[q]
        return IntMatrix(r, c, tuple(out))

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.rows}x{self.cols}>"
        cells = [[str(self.at(i, j)) for j in range(self.cols)] for i in range(self.rows)]
        width = max(len(s) for r in cells for s in r)
        return "\n".join("[" + " ".join(s.rjust(width) for s in r) + "]" for r in cells)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group in invariant-factor normal form.

    `invariant_factors` is a divisibility chain (f1 | f2 | ...), every
    factor at least 2; the empty chain is the trivial group.  This is the
    canonical form used to compare groups computed along different routes.

    >>> str(FiniteAbelianGroup((2, 2)))
    'Z/2 + Z/2'
    >>> FiniteAbelianGroup.cyclic(1).is_trivial
    True
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        fs = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for f in fs:
            if f < 2:
                raise ValidationError(f"invariant factor {f} < 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValidationError(f"invariant factors {a}, {b} break divisibility")

    @classmethod
    def trivial(cls) -> FiniteAbelianGroup:
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> FiniteAbelianGroup:
        if n < 1:
            raise ValidationError(f"cyclic group order must be positive, got {n}")
        return cls(()) if n == 1 else cls((n,))

    @classmethod
    def from_factors(cls, factors) -> FiniteAbelianGroup:
        """Build from a divisibility chain, dropping factors equal to 1."""
        return cls(tuple(f for f in factors if f != 1))

    @property
    def order(self) -> int:
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{f}" for f in self.invariant_factors)


@dataclass(frozen=True)
class SmithDecomposition:
    """Smith normal form u @ m @ v == d with u, v unimodular.

    d is diagonal with nonnegative entries forming a divisibility chain
    (zeros trailing); `invariant_factors` is that diagonal in order,
    including any 1s and 0s.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    invariant_factors: tuple[int, ...]


@dataclass(frozen=True)
class Cokernel:
    """Cokernel of a square integer map: torsion part plus free rank."""

    torsion: FiniteAbelianGroup
    free_rank: int


# ---------------------------------------------------------------------------
# fraction-free elimination
#
# Rows are held as {column: nonzero value} so that banded inputs (the long
# exceptional chains of cyclic quotients) eliminate in O(n^2) instead of
# O(n^3).  Divisions below are exact: every intermediate value is a minor
# of the (row-permuted) input.


def _dict_rows(m: IntMatrix) -> list[dict[int, int]]:
    n, c = m.rows, m.cols
    out = []
    for i in range(n):
        base = i * c
        row = {}
        for j in range(c):
            x = m.entries[base + j]
            if x:
                row[j] = x
        out.append(row)
    return out


def _eliminate_step(rows: list[dict[int, int]], k: int, prev: int, n: int) -> None:
    """One fraction-free elimination step with pivot rows[k][k]."""
    pk = rows[k][k]
    rk = rows[k]
    for i in range(k + 1, n):
        ri = rows[i]
        aik = ri.pop(k, 0)
        if aik:
            new = {}
            for j in ri.keys() | rk.keys():
                if j <= k:
                    continue
                val = pk * ri.get(j, 0) - aik * rk.get(j, 0)
                if val:
                    new[j] = val // prev
            rows[i] = new
        elif pk != prev:
            rows[i] = {j: (pk * x) // prev for j, x in ri.items()}


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The sign is preserved; no rational intermediates ever appear.  This
    route is independent of the Smith normal form, so the two can be
    cross-checked against each other.
    """
    if not m.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    rows = _dict_rows(m)
    sign = 1
    prev = 1
    for k in range(n):
        if not rows[k].get(k):
            for i in range(k + 1, n):
                if rows[i].get(k):
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        if k == n - 1:
            break
        _eliminate_step(rows, k, prev, n)
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def is_negative_definite(m: IntMatrix) -> bool:
    """Exact negative-definiteness test for a symmetric integer matrix.

    True iff every k-th leading principal minor has sign (-1)^k.  The
    minors are read off as the pivots of a fraction-free elimination, so
    the test never leaves the integers.  Raises on non-square or
    asymmetric input.
    """
    if not m.is_square:
        raise ValidationError(f"definiteness needs a square matrix, got {m.rows}x{m.cols}")
    if not m.is_symmetric():
        raise ValidationError("definiteness needs a symmetric matrix")
    n = m.rows
    rows = _dict_rows(m)
    prev = 1
    for k in range(n):
        pk = rows[k].get(k, 0)
        # pivot equals the (k+1)-st leading principal minor
        if (pk < 0) != (k % 2 == 0) or pk == 0:
            return False
        if k == n - 1:
            break
        _eliminate_step(rows, k, prev, n)
        prev = pk
    return True


# ---------------------------------------------------------------------------
# Smith normal form


def _min_abs_pivot(a: list[list[int]], k: int, rows_n: int, cols_n: int):
    """Nonzero entry of minimal |value| in a[k:, k:], ties by (row, col).

    Scanning row-major means the first entry seen at any given absolute
    value is already the lexicographic winner, so |value| == 1 exits
    immediately.
    """
    best = None
    for i in range(k, rows_n):
        ai = a[i]
        for j in range(k, cols_n):
            x = ai[j]
            if x:
                ax = -x if x < 0 else x
                if ax == 1:
                    return i, j
                if best is None or ax < best[0]:
                    best = (ax, i, j)
    if best is None:
        return None
    return best[1], best[2]


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular row/column transforms.

    Pivoting is deterministic: at each step the nonzero entry of minimal
    absolute value in the remaining submatrix is chosen, ties broken by
    smallest (row, col).  Diagonal entries come out nonnegative, in a
    divisibility chain with zeros trailing.
    """
    rows_n, cols_n = m.rows, m.cols
    a = m.to_rows()
    u = [[1 if i == j else 0 for j in range(rows_n)] for i in range(rows_n)]
    v = [[1 if i == j else 0 for j in range(cols_n)] for i in range(cols_n)]
    limit = min(rows_n, cols_n)
    k = 0
    while k < limit:
        pos = _min_abs_pivot(a, k, rows_n, cols_n)
        if pos is None:
            break
        i0, j0 = pos
        if i0 != k:
            a[k], a[i0] = a[i0], a[k]
            u[k], u[i0] = u[i0], u[k]
        if j0 != k:
            for r in range(k, rows_n):
                ar = a[r]
                ar[k], ar[j0] = ar[j0], ar[k]
            for r in range(cols_n):
                vr = v[r]
                vr[k], vr[j0] = vr[j0], vr[k]
        if a[k][k] < 0:
            ak, uk = a[k], u[k]
            for j in range(k, cols_n):
                ak[j] = -ak[j]
            for j in range(rows_n):
                uk[j] = -uk[j]
        p = a[k][k]
        ak, uk = a[k], u[k]
        dirty = False
        for i in range(k + 1, rows_n):
            ai = a[i]
            aik = ai[k]
            if aik:
                q = aik // p
                if q:
                    ui = u[i]
                    for j in range(k, cols_n):
                        x = ak[j]
                        if x:
                            ai[j] -= q * x
                    for j in range(rows_n):
                        x = uk[j]
                        if x:
                            ui[j] -= q * x
                if ai[k]:
                    dirty = True
        for j in range(k + 1, cols_n):
            akj = ak[j]
            if akj:
                q = akj // p
                if q:
                    for r in range(k, rows_n):
                        ar = a[r]
                        x = ar[k]
                        if x:
                            ar[j] -= q * x
                    for r in range(cols_n):
                        vr = v[r]
                        x = vr[k]
                        if x:
                            vr[j] -= q * x
                if ak[j]:
                    dirty = True
        if dirty:
            continue
        if p != 1:
            bad = None
            for i in range(k + 1, rows_n):
                ai = a[i]
                for j in range(k + 1, cols_n):
                    if ai[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                abad, ubad = a[bad], u[bad]
                for j in range(k, cols_n):
                    ak[j] += abad[j]
                for j in range(rows_n):
                    uk[j] += ubad[j]
                continue
        k += 1
    factors = tuple(a[i][i] for i in range(limit))
    return SmithDecomposition(
        u=IntMatrix.from_rows(u) if rows_n else IntMatrix(0, 0, ()),
        d=IntMatrix.from_rows(a) if rows_n else IntMatrix(0, cols_n, ()),
        v=IntMatrix.from_rows(v) if cols_n else IntMatrix(0, 0, ()),
        invariant_factors=factors,
    )


def cokernel(m: IntMatrix) -> Cokernel:
    """Cokernel of the map Z^n -> Z^n given by a square matrix.

    The torsion part is read off the Smith diagonal (entries > 1); the
    free rank is the number of zero diagonal entries.
    """
    if not m.is_square:
        raise DimensionError(f"cokernel needs a square matrix, got {m.rows}x{m.cols}")
    snf = smith_normal_form(m)
    torsion = FiniteAbelianGroup.from_factors(f for f in snf.invariant_factors if f != 0)
    free_rank = sum(1 for f in snf.invariant_factors if f == 0)
    return Cokernel(torsion=torsion, free_rank=free_rank)


def char_poly(m: IntMatrix) -> list[int]:
    """Characteristic polynomial det(t*I - m), exactly.

    Returns coefficients [1, c1, ..., cn] of t^n + c1 t^(n-1) + ... + cn,
    computed by the Faddeev-LeVerrier recurrence; the divisions involved
    are exact over the integers.
    """
    if not m.is_square:
        raise DimensionError("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [1]
    mk = IntMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk
        trace = sum(mk.at(i, i) for i in range(n))
        c = -trace // k
        assert c * k == -trace, "Faddeev-LeVerrier division must be exact"
        coeffs.append(c)
        if k < n:
            mk = IntMatrix(
                n, n,
                tuple(
                    mk.entries[i * n + j] + (c if i == j else 0)
                    for i in range(n) for j in range(n)
                ),
            )
    return coeffs
