"""Polystandard map descriptors and their Burnside-ring-valued degree.

A standard piece is the data of one orbit of zeros: a rational base point,
its exact isotropy subgroup, a ball radius inside the fixed subspace, the
thickness of the normal tube, and a local map on fixed-subspace coordinates
(an exact linear block, a coordinate expression system, or a declared
integer index). A polystandard map is a finite list of pieces with pairwise
disjoint orbits and tubes; its degree is the sum of local indices times the
classes of the zero orbits.

The local index of a linear block is the sign of its exact determinant.
Expression pieces go through a central-difference Jacobian restricted to
fixed-subspace directions; the determinant is declared singular below
1e-8 * scale^d where scale = max(1, inf-norm of the Jacobian).

Products of maps over V and W live over the block sum V (+) W: each pair of
zero orbits splits into diagonal orbits, and every resulting piece carries
the product of the two local indices as a declared index. The independent
block-determinant recomputation of that shortcut lives in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import expr as expr_mod
from . import linalg
from .burnside import BurnsideElement, mul as ring_mul, zero_element
from .errors import (
    GroupMismatch,
    InvalidPiece,
    OverlappingPieces,
    SingularJacobian,
)
from .expr import Expr
from .group import Subgroup, class_index_of, subgroup_classes
from .linalg import Matrix, Vector
from .representation import (
    OrthogonalRepresentation,
    direct_sum,
    fixed_subspace,
    isotropy,
    orbit,
)

SINGULAR_TOL = 1e-8
GRID_POINTS = 33  # per axis in the second-zero scan
EXPRESSION_DIM_CAP = 3  # the grid scan is exponential in the fixed dimension


@dataclass(frozen=True)
class LinearLocalMap:
    """Exact-rational linear block on fixed-subspace coordinates."""

    matrix: Matrix


@dataclass(frozen=True)
class ExpressionLocalMap:
    """One expression per fixed-subspace output coordinate.

    Expressions are written in ambient variables x1..xn; inputs are mapped
    through base_point + sum u_k b_k over the fixed-subspace basis.
    """

    exprs: tuple[Expr, ...]


@dataclass(frozen=True)
class DeclaredLocalMap:
    """A user-asserted local index."""

    index: int


LocalMapDef = Union[LinearLocalMap, ExpressionLocalMap, DeclaredLocalMap]


@dataclass(frozen=True)
class StandardPiece:
    base_point: Vector
    isotropy: Subgroup
    radius: Fraction
    epsilon: Fraction
    local: LocalMapDef


@dataclass(frozen=True)
class PolystandardMap:
    rep: OrthogonalRepresentation
    pieces: tuple[StandardPiece, ...]


@dataclass(frozen=True)
class OrbitContribution:
    orbit_label: str
    class_index: int
    index: int


@dataclass(frozen=True)
class DegreeResult:
    value: BurnsideElement
    per_orbit: tuple[OrbitContribution, ...]


@dataclass(frozen=True)
class OrbitProductRow:
    base_label: str
    class_index: int
    index_left: int
    index_right: int
    index_product: int
    consistent: bool


@dataclass(frozen=True)
class ProductCheck:
    lhs: BurnsideElement
    rhs: BurnsideElement
    equal: bool
    product_result: DegreeResult
    left_result: DegreeResult
    right_result: DegreeResult
    orbit_rows: tuple[OrbitProductRow, ...]


def _point_label(point: Vector) -> str:
    return "(" + ", ".join(str(c) for c in point) + ")"


# ---------------------------------------------------------------- piece construction

def _orbit_spacing2(points: Sequence[Vector]) -> Fraction | None:
    return linalg.min_pairwise_norm2(points)


def standard_piece(rep: OrthogonalRepresentation, base_point, local: LocalMapDef,
                   radius=None, epsilon=None) -> StandardPiece:
    """Validate and build one standard piece.

    When radius or epsilon are omitted they default to a safe bound below a
    quarter of the minimal spacing of the orbit. Validation covers: exact
    isotropy computation, the epsilon-versus-orbit-spacing bound, arity of
    the local map against dim V^H, the {0,1} constraint on declared indices
    at dimension zero, and the heuristic second-zero grid scan for
    expression pieces.
    """
    x0 = linalg.vec(base_point)
    if len(x0) != rep.dim:
        raise InvalidPiece(
            f"base point has {len(x0)} coordinates, expected {rep.dim}"
        )
    sub = isotropy(rep, x0)
    points = orbit(rep, x0)
    spacing2 = _orbit_spacing2(points)
    if spacing2 is not None:
        default_size = linalg.rational_sqrt_floor(spacing2 / 32)
    else:
        default_size = Fraction(1)
    radius = Fraction(radius) if radius is not None else default_size
    epsilon = Fraction(epsilon) if epsilon is not None else default_size
    if radius <= 0 or epsilon <= 0:
        raise InvalidPiece("radius and epsilon must be positive")
    if spacing2 is not None and 4 * epsilon * epsilon >= spacing2:
        raise InvalidPiece(
            "epsilon must stay below half the minimal spacing of the orbit"
        )

    d = fixed_subspace(rep, sub).dim_fixed
    if isinstance(local, LinearLocalMap):
        matrix = linalg.mat(local.matrix)
        if len(matrix) != d or any(len(row) != d for row in matrix):
            raise InvalidPiece(
                f"linear block must be {d}x{d} for this base point"
            )
        local = LinearLocalMap(matrix)
    elif isinstance(local, ExpressionLocalMap):
        if len(local.exprs) != d:
            raise InvalidPiece(
                f"expression piece needs {d} expressions, got {len(local.exprs)}"
            )
        if any(e.dim != rep.dim for e in local.exprs):
            raise InvalidPiece("expressions must use ambient variables x1..xn")
        if d > EXPRESSION_DIM_CAP:
            raise InvalidPiece(
                f"expression pieces support fixed dimension <= {EXPRESSION_DIM_CAP}"
            )
        if d > 0:
            _scan_for_second_zero(local.exprs, x0, rep, sub, radius)
    elif isinstance(local, DeclaredLocalMap):
        if d == 0 and local.index not in (0, 1):
            raise InvalidPiece(
                "a zero-dimensional piece can only carry index 0 or 1"
            )
    else:
        raise InvalidPiece(f"unknown local map variant: {local!r}")
    return StandardPiece(
        base_point=x0, isotropy=sub, radius=radius, epsilon=epsilon, local=local
    )


def _scan_for_second_zero(exprs: tuple[Expr, ...], x0: Vector,
                          rep: OrthogonalRepresentation, sub: Subgroup,
                          radius: Fraction) -> None:
    """Reject when a sign-change cluster away from the base point shows up.

    Heuristic guard only: samples a 33-per-axis grid on the radius ball in
    fixed-subspace coordinates and flags any cell, outside a small window
    around the origin, on which every output coordinate changes sign. The
    authoritative contract remains the caller's assertion that the base
    point is the only zero inside the ball.
    """
    basis = fixed_subspace(rep, sub).basis
    d = len(basis)
    r = float(radius)
    base = [float(c) for c in x0]
    bf = [[float(c) for c in b] for b in basis]
    n = GRID_POINTS
    half = (n - 1) // 2
    steps = [r * (i - half) / half for i in range(n)]

    values: dict[tuple[int, ...], tuple[float, ...]] = {}
    r2 = r * r
    for idx in itertools.product(range(n), repeat=d):
        u = [steps[i] for i in idx]
        if sum(x * x for x in u) > r2 * (1 + 1e-12):
            continue
        ambient = list(base)
        for k in range(d):
            uk = u[k]
            if uk != 0.0:
                row = bf[k]
                for j in range(len(ambient)):
                    ambient[j] += uk * row[j]
        values[idx] = tuple(expr_mod._ev(e.root, ambient) for e in exprs)

    at_base = values.get((half,) * d)
    if at_base is not None:
        scale = max(1.0, max(abs(v) for vals in values.values() for v in vals))
        if any(abs(v) > 1e-9 * scale for v in at_base):
            raise InvalidPiece("expression local map does not vanish at the base point")

    corners = list(itertools.product((0, 1), repeat=d))
    for cell in itertools.product(range(n - 1), repeat=d):
        if all(half - 3 <= c <= half + 2 for c in cell):
            continue  # window around the known zero at the origin
        cell_values = []
        for delta in corners:
            v = values.get(tuple(c + e for c, e in zip(cell, delta)))
            if v is None:
                break
            cell_values.append(v)
        else:
            if all(
                min(v[i] for v in cell_values) <= 0.0 <= max(v[i] for v in cell_values)
                for i in range(len(exprs))
            ):
                raise InvalidPiece(
                    "possible second zero inside the radius ball; shrink the "
                    "radius or adjust the local map"
                )


def polystandard_map(rep: OrthogonalRepresentation, pieces) -> PolystandardMap:
    """Validate orbit and tube disjointness across pieces and build the map."""
    pieces = tuple(pieces)
    orbits = [orbit(rep, p.base_point) for p in pieces]
    flat: list[Vector] = []
    owner: list[int] = []
    for i, pts in enumerate(orbits):
        flat.extend(pts)
        owner.extend([i] * len(pts))
    if flat:
        ints, scale = linalg.scaled_int_points(flat)
        s2 = scale * scale
        tube = [p.radius + p.epsilon for p in pieces]
        for a in range(len(ints)):
            for b in range(a + 1, len(ints)):
                i, j = owner[a], owner[b]
                if i == j:
                    continue
                threshold = (tube[i] + tube[j]) ** 2
                d2 = linalg.int_norm2(ints[a], ints[b])
                if d2 * threshold.denominator <= threshold.numerator * s2:
                    raise OverlappingPieces(
                        f"pieces {i} and {j} have orbits closer than the sum "
                        f"of their tube radii"
                    )
    return PolystandardMap(rep=rep, pieces=pieces)


# ---------------------------------------------------------------- local index

def expression_local_index(exprs: Sequence[Expr], base_point,
                           basis: Sequence[Vector]) -> int:
    """Sign of the finite-difference Jacobian determinant along a basis.

    This is the numerical path behind expression pieces: central
    differences with step 2^-20 in the basis directions, then the sign of
    the float determinant, guarded by the scaled singularity tolerance.
    """
    d = len(basis)
    if len(exprs) != d:
        raise InvalidPiece(f"need {d} expressions for a {d}-dimensional block")
    if d == 0:
        return 1
    base = [float(c) for c in linalg.vec(base_point)]
    bf = [[float(c) for c in b] for b in basis]
    h = expr_mod.FD_STEP
    jac = [[0.0] * d for _ in range(d)]
    for k in range(d):
        plus = [x + h * y for x, y in zip(base, bf[k])]
        minus = [x - h * y for x, y in zip(base, bf[k])]
        for i, e in enumerate(exprs):
            jac[i][k] = (expr_mod._ev(e.root, plus) - expr_mod._ev(e.root, minus)) / (2.0 * h)
    scale = max(1.0, max(sum(abs(x) for x in row) for row in jac))
    det = linalg.float_det(jac)
    if abs(det) < SINGULAR_TOL * scale ** d:
        raise SingularJacobian(
            f"|det| = {abs(det):.3e} below tolerance {SINGULAR_TOL:.0e} * scale^{d}; "
            "supply a declared index or perturb the map"
        )
    return 1 if det > 0 else -1


def local_index(piece: StandardPiece, rep: OrthogonalRepresentation) -> int:
    """The integer degree of the local map at the base point."""
    fs = fixed_subspace(rep, piece.isotropy)
    local = piece.local
    if isinstance(local, DeclaredLocalMap):
        return local.index
    if isinstance(local, LinearLocalMap):
        if fs.dim_fixed == 0:
            return 1
        det = linalg.det(local.matrix)
        if det == 0:
            raise SingularJacobian("linear block has determinant exactly zero")
        return 1 if det > 0 else -1
    if fs.dim_fixed == 0:
        return 1
    return expression_local_index(local.exprs, piece.base_point, fs.basis)


# ---------------------------------------------------------------- degree

def deg_standard(piece: StandardPiece, rep: OrthogonalRepresentation) -> DegreeResult:
    """Degree of a single piece: local index times the class of its orbit."""
    group = rep.group
    d = local_index(piece, rep)
    if d == 0:
        return DegreeResult(value=zero_element(group), per_orbit=())
    ci = class_index_of(group, piece.isotropy)
    coeffs = [0] * len(subgroup_classes(group))
    coeffs[ci] = d
    return DegreeResult(
        value=BurnsideElement(group, tuple(coeffs)),
        per_orbit=(OrbitContribution(_point_label(piece.base_point), ci, d),),
    )


def deg_polystandard(f: PolystandardMap) -> DegreeResult:
    """Sum of the per-piece degrees; zero-index pieces are dropped."""
    group = f.rep.group
    coeffs = [0] * len(subgroup_classes(group))
    rows: list[OrbitContribution] = []
    for piece in f.pieces:
        d = local_index(piece, f.rep)
        if d == 0:
            continue
        ci = class_index_of(group, piece.isotropy)
        coeffs[ci] += d
        rows.append(OrbitContribution(_point_label(piece.base_point), ci, d))
    return DegreeResult(value=BurnsideElement(group, tuple(coeffs)), per_orbit=tuple(rows))


def existence_check(result: DegreeResult) -> bool:
    """A nonzero degree certifies a zero of the map."""
    return not result.value.is_zero()


# ---------------------------------------------------------------- products

def _product_pieces(f: PolystandardMap, g: PolystandardMap):
    if f.rep.group is not g.rep.group:
        raise GroupMismatch("maps over representations of different groups")
    sum_rep = direct_sum(f.rep, g.rep)
    if not f.pieces or not g.pieces:
        return sum_rep, ()

    left = [(p, local_index(p, f.rep), orbit(f.rep, p.base_point)) for p in f.pieces]
    right = [(q, local_index(q, g.rep), orbit(g.rep, q.base_point)) for q in g.pieces]

    # the minimal nonzero distance between product points is realized with
    # one factor held fixed, so the two factor spacings are enough
    spacings = [
        s
        for s in (
            _orbit_spacing2([pt for _, _, pts in left for pt in pts]),
            _orbit_spacing2([pt for _, _, pts in right for pt in pts]),
        )
        if s is not None
    ]
    parent_cap = min(
        min(p.radius, p.epsilon) for p in (*f.pieces, *g.pieces)
    )
    size = parent_cap / 2
    if spacings:
        size = min(size, linalg.rational_sqrt_floor(min(spacings) / 32))

    order = f.rep.group.order
    out = []
    for p, da, orb_a in left:
        for q, db, orb_b in right:
            covered: set[Vector] = set()
            for y in orb_a:
                for z in orb_b:
                    yz = y + z
                    if yz in covered:
                        continue
                    for w in range(order):
                        covered.add(f.rep.apply(w, y) + g.rep.apply(w, z))
                    piece = standard_piece(
                        sum_rep, yz, DeclaredLocalMap(da * db),
                        radius=size, epsilon=size,
                    )
                    out.append((piece, da, db))
    return sum_rep, tuple(out)


def product_map(f: PolystandardMap, g: PolystandardMap) -> PolystandardMap:
    """The product map over V (+) W as a polystandard descriptor.

    For each pair of zero orbits, one piece per diagonal orbit of their
    product, carrying the declared index d_left * d_right and radii shrunk
    to fit inside the product tube.
    """
    sum_rep, rows = _product_pieces(f, g)
    return polystandard_map(sum_rep, tuple(piece for piece, _, _ in rows))


def verify_product(f: PolystandardMap, g: PolystandardMap) -> ProductCheck:
    """Compare the degree of the product map against the ring product."""
    sum_rep, rows = _product_pieces(f, g)
    prod = polystandard_map(sum_rep, tuple(piece for piece, _, _ in rows))
    product_result = deg_polystandard(prod)
    left_result = deg_polystandard(f)
    right_result = deg_polystandard(g)
    rhs = ring_mul(left_result.value, right_result.value)
    orbit_rows = []
    for piece, da, db in rows:
        dg = local_index(piece, sum_rep)
        orbit_rows.append(
            OrbitProductRow(
                base_label=_point_label(piece.base_point),
                class_index=class_index_of(sum_rep.group, piece.isotropy),
                index_left=da,
                index_right=db,
                index_product=dg,
                consistent=(dg == da * db),
            )
        )
    return ProductCheck(
        lhs=product_result.value,
        rhs=rhs,
        equal=(product_result.value == rhs),
        product_result=product_result,
        left_result=left_result,
        right_result=right_result,
        orbit_rows=tuple(orbit_rows),
    )


# ---------------------------------------------------------------- linear transport

def ambient_linear_map(rep: OrthogonalRepresentation, piece: StandardPiece) -> Matrix:
    """The linear block extended to all of V: A on V^H, identity normal to it."""
    if not isinstance(piece.local, LinearLocalMap):
        raise InvalidPiece("ambient extension needs a linear-variant piece")
    fs = fixed_subspace(rep, piece.isotropy)
    n = rep.dim
    if fs.dim_fixed == 0:
        return linalg.identity(n)
    c = linalg.columns(fs.basis)
    ct = linalg.transpose(c)
    gram = linalg.matmul(ct, c)
    pinv = linalg.solve(gram, ct)  # (C^T C)^-1 C^T
    proj = linalg.matmul(c, pinv)
    on_fixed = linalg.matmul(c, linalg.matmul(piece.local.matrix, pinv))
    return linalg.madd(on_fixed, linalg.msub(linalg.identity(n), proj))


def conjugate_linear_piece(rep: OrthogonalRepresentation, piece: StandardPiece,
                           g: int) -> StandardPiece:
    """Transport a linear piece along a group element.

    The base point moves to rho(g) x0 and the block becomes the restriction
    of rho(g) F rho(g)^-1 to the conjugate fixed subspace; the local index
    is invariant under this transport.
    """
    rg = rep.matrices[g]
    rginv = rep.matrices[rep.group.inverse[g]]
    y = linalg.matvec(rg, piece.base_point)
    moved = linalg.matmul(rg, linalg.matmul(ambient_linear_map(rep, piece), rginv))
    target = isotropy(rep, y)
    basis = fixed_subspace(rep, target).basis
    block = linalg.restricted_matrix(moved, basis)
    return standard_piece(
        rep, y, LinearLocalMap(block), radius=piece.radius, epsilon=piece.epsilon
    )
