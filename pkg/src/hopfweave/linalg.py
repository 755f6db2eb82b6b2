# Exact integer linear algebra: determinants, Smith invariants, signatures,
# Alexander polynomials and homological monodromy from Seifert matrices.
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPolynomial


class NonSquareError(ValueError):
    pass


class NonSymmetricError(ValueError):
    pass


class NonFiberedError(ValueError):
    """Raised when |det V| != 1, i.e. V is not a fibered presentation."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; entries stored row-major as nested tuples.

    The 0x0 matrix is legal (unknot case).
    """

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(int(x) for x in row) for row in rows]
        if rows:
            ncols = len(rows[0])
        elif cols is not None:
            ncols = cols
        else:
            ncols = 0
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        ))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, tuple(tuple(0 for _ in range(cols))
                                     for _ in range(rows)))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        if not self.is_square():
            return False
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rows) for j in range(i))

    def transpose(self):
        return IntMatrix(self.cols, self.rows, tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        ))

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        ))

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        ))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j]
                      for k in range(self.cols))
                  for j in range(other.cols))
            for i in range(self.rows)
        ))

    def to_lists(self):
        return [list(row) for row in self.entries]


def det_exact(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination.

    The 0x0 determinant is 1 by the empty-product convention.
    """
    if not m.is_square():
        raise NonSquareError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_invariants(m: IntMatrix) -> list:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    Nonzero factors come first, zeros last; length is min(rows, cols).
    """
    a = m.to_lists()
    rows, cols = m.rows, m.cols
    size = min(rows, cols)
    factors = []
    t = 0
    while t < size:
        # locate a pivot: smallest nonzero entry in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (pivot is None
                                     or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        # clear row and column t by Euclidean steps
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j] != 0:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                # enforce divisibility: pivot must divide the rest
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % a[t][t] != 0:
                            for jj in range(t, cols):
                                a[t][jj] += a[i][jj]
                            dirty = True
                            break
                    if dirty:
                        break
        factors.append(abs(a[t][t]))
        t += 1
    factors.extend(0 for _ in range(size - len(factors)))
    return factors


def signature_symmetric(s: IntMatrix) -> int:
    """Signature of a symmetric integer matrix, exactly.

    Congruence diagonalization over the rationals; no floating point.
    """
    if not s.is_symmetric():
        raise NonSymmetricError("signature needs a symmetric matrix")
    n = s.rows
    a = [[Fraction(x) for x in row] for row in s.entries]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            # try to bring a nonzero entry onto the diagonal
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                for j in range(k, n):
                    a[k][j], a[swap][j] = a[swap][j], a[k][j]
                for i in range(k, n):
                    a[i][k], a[i][swap] = a[i][swap], a[i][k]
            else:
                off = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if off is None:
                    continue  # zero row: null direction
                # congruence: add row/col `off` into k; diagonal becomes 2*a[k][off]
                for j in range(k, n):
                    a[k][j] += a[off][j]
                for i in range(k, n):
                    a[i][k] += a[i][off]
        pivot = a[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor == 0:
                continue
            for j in range(k + 1, n):
                a[i][j] -= factor * a[k][j]
            a[i][k] = Fraction(0)
        for j in range(k + 1, n):
            a[k][j] = Fraction(0)
    return pos - neg


def _poly_det(grid):
    """Determinant of a square matrix of LaurentPolynomials.

    Minor expansion memoized on the set of live columns.
    """
    n = len(grid)
    if n == 0:
        return LaurentPolynomial.one()
    cache = {}

    def minor(row, colmask):
        if colmask == 0:
            return LaurentPolynomial.one()
        key = colmask
        hit = cache.get(key)
        if hit is not None:
            return hit
        total = LaurentPolynomial.zero()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not colmask & bit:
                continue
            entry = grid[row][j]
            if not entry.is_zero():
                total = total + sign * entry * minor(row + 1, colmask & ~bit)
            sign = -sign
        cache[key] = total
        return total

    return minor(0, (1 << n) - 1)


def alexander_from_seifert(v: IntMatrix) -> LaurentPolynomial:
    """det(V - t*V^T), normalized so the lowest exponent is 0 and the
    leading coefficient is positive."""
    if not v.is_square():
        raise NonSquareError("Seifert matrix must be square")
    n = v.rows
    grid = [
        [
            LaurentPolynomial({0: v[i, j], 1: -v[j, i]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(grid).normalize_units()


def char_poly(m: IntMatrix) -> LaurentPolynomial:
    """Characteristic polynomial det(t*I - M) as a LaurentPolynomial."""
    if not m.is_square():
        raise NonSquareError("characteristic polynomial needs a square matrix")
    n = m.rows
    grid = [
        [
            LaurentPolynomial({0: -m[i, j], 1: 1} if i == j else {0: -m[i, j]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(grid)


def inverse_unimodular(v: IntMatrix) -> IntMatrix:
    """Inverse of a matrix with determinant +-1, as an integer matrix."""
    d = det_exact(v)
    if d not in (1, -1):
        raise NonFiberedError(f"matrix is not unimodular (det = {d})")
    n = v.rows
    a = [[Fraction(x) for x in row] for row in v.entries]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot_row = next(i for i in range(k, n) if a[i][k] != 0)
        a[k], a[pivot_row] = a[pivot_row], a[k]
        inv[k], inv[pivot_row] = inv[pivot_row], inv[k]
        pivot = a[k][k]
        for j in range(n):
            a[k][j] /= pivot
            inv[k][j] /= pivot
        for i in range(n):
            if i != k and a[i][k] != 0:
                factor = a[i][k]
                for j in range(n):
                    a[i][j] -= factor * a[k][j]
                    inv[i][j] -= factor * inv[k][j]
    entries = []
    for row in inv:
        out_row = []
        for x in row:
            if x.denominator != 1:
                raise AssertionError("unimodular inverse must be integral")
            out_row.append(int(x))
        entries.append(tuple(out_row))
    return IntMatrix(n, n, tuple(entries))


def homological_monodromy(v: IntMatrix) -> IntMatrix:
    """h = V^-1 * V^T, the homology action of the open-book monodromy.

    Requires |det V| = 1; char(h) equals the Alexander polynomial up to
    units.
    """
    if not v.is_square():
        raise NonSquareError("Seifert matrix must be square")
    if v.rows == 0:
        return IntMatrix.identity(0)
    return inverse_unimodular(v) @ v.transpose()
