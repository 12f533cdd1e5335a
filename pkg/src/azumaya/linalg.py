"""Dense exact matrices over one field context.

Project-wide flattening convention: the tensor index pair (i, j), with j
running over a space of dimension m, flattens to ``i * m + j``.  The
Kronecker product below and every tensor bookkeeping step elsewhere use
this convention.

Determinants and kernels over the rationals run fraction-free (rows are
scaled to integers, then eliminated Bareiss-style) to keep coefficient
growth under control; over a prime field plain Gaussian elimination is
used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .fields import FieldContext, PrimeField, Scalar


class LinAlgError(ValueError):
    """Dimension mismatch or an unsolvable linear problem."""


def pair_index(i: int, j: int, second_dim: int) -> int:
    """Flatten the tensor pair (i, j); j runs over ``second_dim`` values."""
    return i * second_dim + j


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix; entries stored row-major."""

    rows: int
    cols: int
    entries: tuple
    field: FieldContext

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise LinAlgError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )

    # -- construction ------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldContext, rows: Sequence[Sequence]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise LinAlgError("ragged rows")
            flat.extend(field(x) for x in r)
        return cls(nrows, ncols, tuple(flat), field)

    @classmethod
    def identity(cls, field: FieldContext, n: int) -> "ExactMatrix":
        zero, one = field.zero, field.one
        ent = [zero] * (n * n)
        for i in range(n):
            ent[i * n + i] = one
        return cls(n, n, tuple(ent), field)

    @classmethod
    def zeros(cls, field: FieldContext, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def from_columns(cls, field: FieldContext, cols: Sequence[Sequence]) -> "ExactMatrix":
        return cls.from_rows(field, cols).transpose()

    # -- access ------------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not x for x in self.entries)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        ent = tuple(a + b for a, b in zip(self.entries, other.entries))
        return ExactMatrix(self.rows, self.cols, ent, self.field)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        ent = tuple(a - b for a, b in zip(self.entries, other.entries))
        return ExactMatrix(self.rows, self.cols, ent, self.field)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-x for x in self.entries), self.field)

    def scale(self, s) -> "ExactMatrix":
        s = self.field(s)
        return ExactMatrix(self.rows, self.cols, tuple(s * x for x in self.entries), self.field)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise LinAlgError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m, k = self.rows, other.cols, self.cols
        zero = self.field.zero
        out = [zero] * (n * m)
        for i in range(n):
            arow = self.entries[i * k:(i + 1) * k]
            for t in range(k):
                a = arow[t]
                if not a:
                    continue
                brow = other.entries[t * m:(t + 1) * m]
                base = i * m
                for j in range(m):
                    b = brow[j]
                    if b:
                        out[base + j] = out[base + j] + a * b
        return ExactMatrix(n, m, tuple(out), self.field)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product; ``vec`` has length ``cols``."""
        if len(vec) != self.cols:
            raise LinAlgError("vector length mismatch")
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            acc = zero
            row = self.entries[i * self.cols:(i + 1) * self.cols]
            for a, v in zip(row, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "ExactMatrix":
        ent = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return ExactMatrix(self.cols, self.rows, ent, self.field)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product under the (i, j) -> i*m + j flattening."""
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        out = []
        for i1 in range(r1):
            for i2 in range(r2):
                row1 = self.entries[i1 * c1:(i1 + 1) * c1]
                row2 = other.entries[i2 * c2:(i2 + 1) * c2]
                for a in row1:
                    out.extend(a * b for b in row2)
        return ExactMatrix(r1 * r2, c1 * c2, tuple(out), self.field)

    def _same_shape(self, other: "ExactMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise LinAlgError("shape mismatch")

    # -- elimination -------------------------------------------------

    def _integer_rows(self):
        """Scale each row to integers (rationals only); row scaling never
        changes the kernel, and the determinant bookkeeping is handled by
        the caller."""
        scaled = []
        factors = []
        for i in range(self.rows):
            row = self.row(i)
            lcm = 1
            for x in row:
                d = x.denominator
                lcm = lcm * d // gcd(lcm, d)
            scaled.append([int(x * lcm) for x in row])
            factors.append(lcm)
        return scaled, factors

    def det(self) -> Scalar:
        """Exact determinant; Bareiss over the rationals."""
        if not self.is_square:
            raise LinAlgError("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return self.field.one
        if isinstance(self.field, PrimeField):
            return self._det_prime()
        m, factors = self._integer_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return self.field.zero
            piv = m[k][k]
            for i in range(k + 1, n):
                fik = m[i][k]
                mi, mk = m[i], m[k]
                for j in range(k + 1, n):
                    mi[j] = (piv * mi[j] - fik * mk[j]) // prev
                mi[k] = 0
            prev = piv
        denom = 1
        for f in factors:
            denom *= f
        return self.field(Fraction(sign * m[n - 1][n - 1], denom))

    def _det_prime(self) -> Scalar:
        p = self.field.p
        n = self.rows
        m = [[x.residue for x in self.row(i)] for i in range(n)]
        det = 1
        for k in range(n):
            piv_row = None
            for i in range(k, n):
                if m[i][k] % p != 0:
                    piv_row = i
                    break
            if piv_row is None:
                return self.field.zero
            if piv_row != k:
                m[k], m[piv_row] = m[piv_row], m[k]
                det = -det
            piv = m[k][k] % p
            det = det * piv % p
            inv = pow(piv, -1, p)
            for i in range(k + 1, n):
                f = m[i][k] * inv % p
                if f == 0:
                    continue
                mi, mk = m[i], m[k]
                for j in range(k, n):
                    mi[j] = (mi[j] - f * mk[j]) % p
        return self.field(det)

    def _echelon(self):
        """Forward elimination preserving the row space.

        Returns (rows, pivots) where pivots is a list of (row, col).  Over
        the rationals rows are integers throughout (fraction-free updates,
        gcd-reduced per row); over a prime field rows are residues.
        """
        if isinstance(self.field, PrimeField):
            p = self.field.p
            m = [[x.residue % p for x in self.row(i)] for i in range(self.rows)]
            pivots = []
            r = 0
            for c in range(self.cols):
                piv_row = None
                for i in range(r, self.rows):
                    if m[i][c] % p != 0:
                        piv_row = i
                        break
                if piv_row is None:
                    continue
                m[r], m[piv_row] = m[piv_row], m[r]
                inv = pow(m[r][c], -1, p)
                for i in range(r + 1, self.rows):
                    f = m[i][c] * inv % p
                    if f == 0:
                        continue
                    mi, mr = m[i], m[r]
                    for j in range(c, self.cols):
                        mi[j] = (mi[j] - f * mr[j]) % p
                pivots.append((r, c))
                r += 1
                if r == self.rows:
                    break
            return m, pivots

        m, _ = self._integer_rows()
        pivots = []
        r = 0
        for c in range(self.cols):
            piv_row = None
            for i in range(r, self.rows):
                if m[i][c] != 0:
                    piv_row = i
                    break
            if piv_row is None:
                continue
            m[r], m[piv_row] = m[piv_row], m[r]
            piv = m[r][c]
            for i in range(r + 1, self.rows):
                f = m[i][c]
                if f == 0:
                    continue
                mi, mr = m[i], m[r]
                for j in range(c, self.cols):
                    mi[j] = piv * mi[j] - f * mr[j]
                g = 0
                for x in mi:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    for j in range(self.cols):
                        mi[j] //= g
            pivots.append((r, c))
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        _, pivots = self._echelon()
        return len(pivots)

    def kernel_basis(self) -> list:
        """Basis of the right null space, one vector per free column."""
        m, pivots = self._echelon()
        pivot_cols = {c for _, c in pivots}
        free_cols = [c for c in range(self.cols) if c not in pivot_cols]
        rational = not isinstance(self.field, PrimeField)
        basis = []
        for fc in free_cols:
            x = [self.field.zero] * self.cols
            x[fc] = self.field.one
            for r, c in reversed(pivots):
                if rational:
                    s = Fraction(0)
                    row = m[r]
                    for j in range(c + 1, self.cols):
                        if row[j] and x[j]:
                            s += row[j] * x[j]
                    x[c] = self.field(-s / row[c])
                else:
                    p = self.field.p
                    s = 0
                    row = m[r]
                    for j in range(c + 1, self.cols):
                        xv = x[j].residue
                        if row[j] and xv:
                            s = (s + row[j] * xv) % p
                    x[c] = self.field(-s * pow(row[c], -1, p))
            basis.append(tuple(x))
        return basis

    def solve_matrix(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """Solve A X = rhs for square invertible A."""
        if not self.is_square:
            raise LinAlgError("solve needs a square matrix")
        if rhs.rows != self.rows:
            raise LinAlgError("right-hand side has wrong height")
        n, w = self.rows, rhs.cols
        aug = ExactMatrix(
            n,
            n + w,
            tuple(
                self.entries[i * n + j] if j < n else rhs.entries[i * w + (j - n)]
                for i in range(n)
                for j in range(n + w)
            ),
            self.field,
        )
        m, pivots = aug._echelon()
        if len(pivots) < n or any(c >= n for _, c in pivots):
            raise LinAlgError("singular matrix")
        rational = not isinstance(self.field, PrimeField)
        p = self.field.p if not rational else None
        out = [[self.field.zero] * w for _ in range(n)]
        for col in range(w):
            x = [Fraction(0) if rational else 0] * n
            for r, c in reversed(pivots):
                row = m[r]
                s = Fraction(row[n + col]) if rational else row[n + col] % p
                for j in range(c + 1, n):
                    if rational:
                        if row[j] and x[j]:
                            s -= row[j] * x[j]
                    else:
                        s = (s - row[j] * x[j]) % p
                if rational:
                    x[c] = s / row[c]
                else:
                    x[c] = s * pow(row[c], -1, p) % p
            for i in range(n):
                out[i][col] = self.field(x[i])
        return ExactMatrix.from_rows(self.field, out)

    def solve(self, vec: Sequence) -> tuple:
        rhs = ExactMatrix(len(vec), 1, tuple(self.field(v) for v in vec), self.field)
        return self.solve_matrix(rhs).column(0)

    def inverse(self) -> "ExactMatrix":
        return self.solve_matrix(ExactMatrix.identity(self.field, self.rows))
