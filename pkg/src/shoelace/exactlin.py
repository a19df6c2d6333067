"""Exact linear algebra over prime fields F_p.

All arithmetic is integer arithmetic mod p; there is no floating point in this
package.  Matrices are immutable and hashable so they can sit in dict keys and
be compared for exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p, for 2 <= p <= 2**31 - 1."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise ValueError(f"field characteristic must be an int, got {self.p!r}")
        if not (2 <= self.p <= 2**31 - 1):
            raise ValueError(f"field characteristic {self.p} out of range [2, 2**31-1]")
        if not _is_prime(self.p):
            raise ValueError(f"field characteristic {self.p} is not prime")

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(x, self.p - 2, self.p)


class Matrix:
    """Immutable matrix over a FieldSpec.

    Entries are stored as a tuple of row tuples, already reduced mod p.
    A 0xN or Nx0 matrix is legal and represents a map to or from the zero
    space.
    """

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, rows: int, cols: int,
                 entries: Iterable[Iterable[int]]):
        if rows < 0 or cols < 0:
            raise ValueError(f"negative matrix shape {rows}x{cols}")
        ent = tuple(tuple(int(x) % field.p for x in row) for row in entries)
        if len(ent) != rows or any(len(r) != cols for r in ent):
            raise ValueError(
                f"entries do not form a {rows}x{cols} array: "
                f"got {len(ent)} rows of lengths {[len(r) for r in ent]}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, ((0,) * cols,) * rows)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, n, n,
                   tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))

    @classmethod
    def of(cls, field: FieldSpec, entries: Sequence[Sequence[int]]) -> "Matrix":
        """Build from a rectangular list of lists, inferring the shape.

        An empty list means a 0x0 matrix; use zeros() for 0xN or Nx0.
        """
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(field, rows, cols, entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix(p={self.field.p}, {self.rows}x{self.cols}, {list(map(list, self.entries))})"


def _check_same_field(a: Matrix, b: Matrix) -> None:
    if a.field != b.field:
        raise ValueError(f"field mismatch: F_{a.field.p} vs F_{b.field.p}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_same_field(a, b)
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch in mat_mul: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    p = a.field.p
    bt = tuple(zip(*b.entries)) if b.entries else ((),) * b.cols
    ent = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt)
        for row in a.entries)
    return Matrix(a.field, a.rows, b.cols, ent)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _check_same_field(a, b)
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError(f"shape mismatch in mat_add: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    p = a.field.p
    return Matrix(a.field, a.rows, a.cols,
                  tuple(tuple((x + y) % p for x, y in zip(ra, rb))
                        for ra, rb in zip(a.entries, b.entries)))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(a, mat_scale(-1, b))


def mat_scale(c: int, a: Matrix) -> Matrix:
    p = a.field.p
    c %= p
    return Matrix(a.field, a.rows, a.cols,
                  tuple(tuple((c * x) % p for x in row) for row in a.entries))


def mat_transpose(a: Matrix) -> Matrix:
    ent = tuple(zip(*a.entries)) if a.entries else ((),) * a.cols
    return Matrix(a.field, a.cols, a.rows, ent)


def _rref(field: FieldSpec, rows: list[list[int]], width: int) -> tuple[int, list[int]]:
    """In-place reduced row echelon form.  Returns (rank, pivot columns)."""
    p = field.p
    pivots: list[int] = []
    r = 0
    for c in range(width):
        # first nonzero entry in column c at or below row r
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % p != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return r, pivots


def mat_rank(a: Matrix) -> int:
    rows = [list(r) for r in a.entries]
    rank, _ = _rref(a.field, rows, a.cols)
    return rank


def mat_inverse(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise ValueError(f"cannot invert non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(a.entries)]
    rank, _ = _rref(a.field, aug, n)
    if rank != n:
        raise ValueError("matrix is singular")
    return Matrix(a.field, n, n, tuple(tuple(row[n:]) for row in aug))


def mat_solve_homogeneous(
    field: FieldSpec,
    shapes: Sequence[tuple[int, int]],
    constraints: Sequence[tuple[Matrix, int, Matrix, int]],
) -> tuple[int, list[tuple[Matrix, ...]]]:
    """Solve a homogeneous linear system over a family of unknown matrices.

    shapes[k] = (rows, cols) of unknown X_k.  Each constraint (A, k, B, l)
    imposes A @ X_k == X_l @ B entrywise.  Returns the solution space
    dimension and a basis, each basis vector a tuple of concrete matrices.

    With no constraints the answer is the full product space and the basis is
    the standard one (one matrix entry set to 1 at a time).
    """
    offsets: list[int] = []
    total = 0
    for (r, c) in shapes:
        if r < 0 or c < 0:
            raise ValueError(f"negative unknown shape {r}x{c}")
        offsets.append(total)
        total += r * c

    def var(k: int, i: int, j: int) -> int:
        return offsets[k] + i * shapes[k][1] + j

    p = field.p
    eq_rows: list[list[int]] = []
    for (a, k, b, l) in constraints:
        rk, ck = shapes[k]
        rl, cl = shapes[l]
        if a.field != field or b.field != field:
            raise ValueError("constraint matrix field does not match the system field")
        if a.cols != rk:
            raise ValueError(f"A is {a.rows}x{a.cols} but X_{k} has {rk} rows")
        if b.rows != cl:
            raise ValueError(f"B is {b.rows}x{b.cols} but X_{l} has {cl} cols")
        if a.rows != rl or b.cols != ck:
            raise ValueError(
                f"constraint shape mismatch: A@X_{k} is {a.rows}x{ck}, "
                f"X_{l}@B is {rl}x{b.cols}")
        for i in range(a.rows):
            for j in range(ck):
                row = [0] * total
                for t in range(rk):
                    row[var(k, t, j)] = (row[var(k, t, j)] + a.entries[i][t]) % p
                for t in range(cl):
                    row[var(l, i, t)] = (row[var(l, i, t)] - b.entries[t][j]) % p
                eq_rows.append(row)

    if not eq_rows:
        pivots: list[int] = []
    else:
        _, pivots = _rref(field, eq_rows, total)
    pivot_set = set(pivots)
    free = [v for v in range(total) if v not in pivot_set]

    basis: list[tuple[Matrix, ...]] = []
    for fv in free:
        vec = [0] * total
        vec[fv] = 1
        for row, pc in zip(eq_rows, pivots):
            vec[pc] = (-row[fv]) % p
        mats = []
        for k, (r, c) in enumerate(shapes):
            o = offsets[k]
            mats.append(Matrix(field, r, c,
                               tuple(tuple(vec[o + i * c + j] for j in range(c))
                                     for i in range(r))))
        basis.append(tuple(mats))
    return len(free), basis
