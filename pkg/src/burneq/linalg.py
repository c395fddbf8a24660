"""Exact linear algebra over rational matrices.

Matrices are tuples of row tuples of Fraction; vectors are tuples of
Fraction. Everything here is pure and exact; floats appear only in
`float_det`, which backs the numerical Jacobian path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def vec(items: Iterable) -> Vector:
    return tuple(Fraction(x) for x in items)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def madd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def msub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def dot(a: Vector, b: Vector) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def norm2(v: Vector) -> Fraction:
    return sum(x * x for x in v)


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Canonical basis of the null space, one vector per free column."""
    if not m:
        return []
    rows, pivots = rref(m)
    ncols = len(m[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def row_space_equal(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    """Whether two vector lists span the same subspace."""
    ra = rref(tuple(a))[0] if a else []
    rb = rref(tuple(b))[0] if b else []
    strip = lambda rows: [tuple(r) for r in rows if any(x != 0 for x in r)]
    return strip(ra) == strip(rb)


def det(m: Matrix) -> Fraction:
    """Exact determinant via Gaussian elimination; det of a 0x0 matrix is 1."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    rows = [list(r) for r in m]
    result = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            result = -result
        result *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve a X = b for square invertible a, exactly."""
    n = len(a)
    rows = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    width = len(rows[0])
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            raise ZeroDivisionError("singular matrix in solve")
        rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [x * inv for x in rows[c]]
        for i in range(n):
            if i != c and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return tuple(tuple(r[n:width]) for r in rows)


def columns(basis: Sequence[Vector]) -> Matrix:
    """Stack vectors as the columns of a matrix."""
    return transpose(tuple(basis))


def restricted_matrix(f: Matrix, basis: Sequence[Vector]) -> Matrix:
    """Matrix of f on the subspace spanned by `basis`, in that basis.

    Requires f to map the subspace into itself; solves C M = f C through
    the normal equations, which is exact for full-column-rank C.
    """
    if not basis:
        return ()
    c = columns(basis)
    ct = transpose(c)
    gram = matmul(ct, c)
    return solve(gram, matmul(ct, matmul(f, c)))


def projection_matrix(basis: Sequence[Vector], dim: int) -> Matrix:
    """Orthogonal projection onto the span of `basis` inside R^dim."""
    if not basis:
        return tuple(tuple(Fraction(0) for _ in range(dim)) for _ in range(dim))
    c = columns(basis)
    ct = transpose(c)
    gram = matmul(ct, c)
    return matmul(c, solve(gram, ct))


def rational_sqrt_floor(s: Fraction) -> Fraction:
    """A positive rational r with r*r <= s, for s > 0."""
    if s <= 0:
        raise ValueError("need a positive value")
    a, b = s.numerator, s.denominator
    return Fraction(isqrt(a * b), b)


def scaled_int_points(points: Sequence[Vector]) -> tuple[list[tuple[int, ...]], int]:
    """Clear denominators: returns integer points and the common scale s.

    Each returned point equals s times the original, so squared distances
    in the integer lattice are s^2 times the exact rational ones.
    """
    scale = 1
    for p in points:
        for x in p:
            scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [tuple(int(x * scale) for x in p) for p in points]
    return ints, scale


def int_norm2(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum((x - y) * (x - y) for x, y in zip(a, b))


def min_pairwise_norm2(points: Sequence[Vector]) -> Fraction | None:
    """Minimum squared distance over distinct point pairs; None if < 2 points."""
    if len(points) < 2:
        return None
    ints, scale = scaled_int_points(points)
    best: int | None = None
    for i in range(len(ints)):
        for j in range(i + 1, len(ints)):
            d = int_norm2(ints[i], ints[j])
            if best is None or d < best:
                best = d
    assert best is not None
    return Fraction(best, scale * scale)


def float_det(rows: list[list[float]]) -> float:
    """Determinant of a small float matrix by partial-pivot elimination."""
    n = len(rows)
    if n == 0:
        return 1.0
    m = [list(r) for r in rows]
    result = 1.0
    for c in range(n):
        pivot_row = max(range(c, n), key=lambda i: abs(m[i][c]))
        if m[pivot_row][c] == 0.0:
            return 0.0
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f != 0.0:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result
