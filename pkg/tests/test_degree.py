"""Local indices, degrees, products, and the independent block-matrix route."""

import random
from fractions import Fraction

import pytest

import burneq as bq
import burneq.linalg as la
from burneq import expr, fuzz
from burneq.degree import (
    DeclaredLocalMap,
    ExpressionLocalMap,
    LinearLocalMap,
    ambient_linear_map,
    conjugate_linear_piece,
)
from burneq.errors import (
    GroupMismatch,
    InvalidPiece,
    OverlappingPieces,
    SingularJacobian,
)
from groupdata import PRODUCT_CORPUS_REPS, make_rep

QUARTER = Fraction(1, 4)


def unit_piece(rep, point, size=None):
    if size is None:
        return bq.standard_piece(rep, point, LinearLocalMap(la.identity(_local_dim(rep, point))))
    return bq.standard_piece(
        rep, point, LinearLocalMap(la.identity(_local_dim(rep, point))),
        radius=size, epsilon=size,
    )


def _local_dim(rep, point):
    return bq.fixed_subspace(rep, bq.isotropy(rep, point)).dim_fixed


def block_diag(a, b, na, nb):
    zero = Fraction(0)
    top = [tuple(row) + (zero,) * nb for row in a]
    bottom = [(zero,) * na + tuple(row) for row in b]
    return tuple(top + bottom)


def independent_product_index(f, g, sum_rep, prod_piece):
    """Recompute the product index from block matrices, no index products.

    Transports each factor's ambient linear extension to the relevant orbit
    point, forms the block sum, restricts it to the fixed subspace of the
    product isotropy, and takes the exact determinant sign.
    """
    nv = f.rep.dim
    y = prod_piece.base_point[:nv]
    z = prod_piece.base_point[nv:]

    def transported(poly, point):
        rep = poly.rep
        for piece in poly.pieces:
            for w in range(rep.group.order):
                if rep.apply(w, piece.base_point) == point:
                    rw = rep.matrices[w]
                    rwinv = rep.matrices[rep.group.inverse[w]]
                    amb = ambient_linear_map(rep, piece)
                    return la.matmul(rw, la.matmul(amb, rwinv))
        raise AssertionError("orbit point does not belong to any piece")

    block = block_diag(transported(f, y), transported(g, z), nv, g.rep.dim)
    basis = bq.fixed_subspace(sum_rep, prod_piece.isotropy).basis
    restricted = la.restricted_matrix(block, basis)
    det = la.det(restricted)
    assert det != 0
    return 1 if det > 0 else -1


# ---------------------------------------------------------------- local index

def test_identity_block_has_index_one(z2_sign):
    p = unit_piece(z2_sign, [1])
    assert bq.local_index(p, z2_sign) == 1


def test_sign_block_has_index_minus_one(s3_perm):
    w = la.vec([1, 1, 0])
    p = bq.standard_piece(s3_perm, w, LinearLocalMap(la.mat([[-1, 0], [0, 1]])))
    assert bq.local_index(p, s3_perm) == -1


def test_cubic_is_singular(z2_sign):
    # V^G = {0} for the sign action, so put the cubic on the trivial group
    triv = bq.generate_group([[0]])
    line = bq.trivial_representation(triv, 1)
    p = bq.standard_piece(
        line, [0], ExpressionLocalMap((expr.parse("x1^3", 1),)), radius=1, epsilon=1
    )
    with pytest.raises(SingularJacobian):
        bq.local_index(p, line)


def test_expression_index_plus_one():
    triv = bq.generate_group([[0]])
    plane = bq.trivial_representation(triv, 2)
    local = ExpressionLocalMap(
        (expr.parse("x1 - x2^2", 2), expr.parse("x2 + x1^2", 2))
    )
    p = bq.standard_piece(plane, [0, 0], local, radius=1, epsilon=1)
    assert bq.local_index(p, plane) == 1


def test_singular_linear_block(z2_sign):
    p = bq.standard_piece(z2_sign, [1], LinearLocalMap(((Fraction(0),),)))
    with pytest.raises(SingularJacobian):
        bq.local_index(p, z2_sign)


def test_declared_index_returned_verbatim(s3_perm):
    p = bq.standard_piece(s3_perm, [1, 1, 0], DeclaredLocalMap(-7))
    assert bq.local_index(p, s3_perm) == -7


def test_zero_dim_piece_constraint():
    rep = make_rep("V4-signs")  # dim V^G = 0
    origin = [0, 0]
    assert bq.local_index(bq.standard_piece(rep, origin, DeclaredLocalMap(1)), rep) == 1
    assert bq.local_index(bq.standard_piece(rep, origin, LinearLocalMap(())), rep) == 1
    empty_exprs = bq.standard_piece(rep, origin, ExpressionLocalMap(()))
    assert bq.local_index(empty_exprs, rep) == 1
    with pytest.raises(InvalidPiece):
        bq.standard_piece(rep, origin, DeclaredLocalMap(2))
    with pytest.raises(InvalidPiece):
        bq.standard_piece(rep, origin, DeclaredLocalMap(-1))


# ---------------------------------------------------------------- piece validation

def test_epsilon_bound_enforced(z2_sign):
    with pytest.raises(InvalidPiece):
        bq.standard_piece(
            z2_sign, [1], LinearLocalMap(((Fraction(1),),)), radius=1, epsilon=1
        )


def test_wrong_block_size_rejected(s3_perm):
    with pytest.raises(InvalidPiece):
        bq.standard_piece(s3_perm, [1, 1, 0], LinearLocalMap(la.identity(3)))


def test_expression_arity_checked(s3_perm):
    with pytest.raises(InvalidPiece):
        bq.standard_piece(
            s3_perm, [1, 1, 0], ExpressionLocalMap((expr.parse("x1", 3),))
        )


def test_expression_dimension_cap():
    triv = bq.generate_group([[0]])
    big = bq.trivial_representation(triv, 4)
    local = ExpressionLocalMap(tuple(expr.parse(f"x{i + 1}", 4) for i in range(4)))
    with pytest.raises(InvalidPiece):
        bq.standard_piece(big, [0, 0, 0, 0], local, radius=1, epsilon=1)


def test_expression_must_vanish_at_base():
    triv = bq.generate_group([[0]])
    line = bq.trivial_representation(triv, 1)
    with pytest.raises(InvalidPiece):
        bq.standard_piece(
            line, [0], ExpressionLocalMap((expr.parse("x1 + 1", 1),)),
            radius=1, epsilon=1,
        )


def test_second_zero_detected():
    triv = bq.generate_group([[0]])
    line = bq.trivial_representation(triv, 1)
    # zeros at 0 and 1/2 inside a unit ball
    local = ExpressionLocalMap((expr.parse("x1 * (x1 - 0.5)", 1),))
    with pytest.raises(InvalidPiece):
        bq.standard_piece(line, [0], local, radius=1, epsilon=1)
    # the same map is fine once the ball stops before the second zero
    p = bq.standard_piece(line, [0], local, radius="1/4", epsilon="1/4")
    assert bq.local_index(p, line) == -1


def test_overlapping_pieces_rejected(z2_sign):
    size = Fraction(3, 4)  # valid per piece, but the tubes around 1 and 2 meet
    a = unit_piece(z2_sign, [1], size=size)
    b = unit_piece(z2_sign, [2], size=size)
    with pytest.raises(OverlappingPieces):
        bq.polystandard_map(z2_sign, (a, b))


def test_same_orbit_twice_rejected(z2_sign):
    a = unit_piece(z2_sign, [1], size=QUARTER)
    b = unit_piece(z2_sign, [-1], size=QUARTER)
    with pytest.raises(OverlappingPieces):
        bq.polystandard_map(z2_sign, (a, b))


# ---------------------------------------------------------------- degree

def test_normalization_sign_rep(z2_sign):
    result = bq.deg_standard(unit_piece(z2_sign, [1]), z2_sign)
    assert result.value == bq.basis_element(z2_sign.group, 0)
    assert len(result.per_orbit) == 1


def test_normalization_origin_unit(s3_perm):
    p = bq.standard_piece(s3_perm, [1, 1, 1], DeclaredLocalMap(1))
    result = bq.deg_standard(p, s3_perm)
    assert result.value == bq.unit_element(s3_perm.group)


def test_normalization_three_point_orbit(s3_perm):
    result = bq.deg_standard(unit_piece(s3_perm, [1, 1, 0]), s3_perm)
    assert result.value == bq.basis_element(s3_perm.group, 1)
    # oracle: the orbit itself as a G-set decomposes to the same class
    orbit_points = bq.orbit(s3_perm, [1, 1, 0])
    index = {pt: i for i, pt in enumerate(orbit_points)}
    action = tuple(
        tuple(index[s3_perm.apply(g, pt)] for pt in orbit_points)
        for g in range(s3_perm.group.order)
    )
    gset = bq.FiniteGSet(group=s3_perm.group, size=len(orbit_points), action=action)
    assert bq.decompose_gset(gset) == result.value


def test_empty_map_has_zero_degree(z2_sign):
    f = bq.polystandard_map(z2_sign, ())
    assert bq.deg_polystandard(f).value.is_zero()


def test_two_pieces_add(z2_sign):
    f = bq.polystandard_map(
        z2_sign, (unit_piece(z2_sign, [1], QUARTER), unit_piece(z2_sign, [3], QUARTER))
    )
    assert bq.deg_polystandard(f).value.coeffs == (2, 0)


def test_opposite_indices_cancel(z2_sign):
    minus = bq.standard_piece(
        z2_sign, [3], LinearLocalMap(((Fraction(-1),),)), radius=QUARTER, epsilon=QUARTER
    )
    f = bq.polystandard_map(z2_sign, (unit_piece(z2_sign, [1], QUARTER), minus))
    result = bq.deg_polystandard(f)
    assert result.value.is_zero()
    assert not bq.existence_check(result)


def test_additivity_of_concatenation(s3_perm):
    rng = random.Random(5)
    f = fuzz.random_polystandard_map(s3_perm, rng)
    while len(f.pieces) < 2:
        f = fuzz.random_polystandard_map(s3_perm, rng)
    left = bq.polystandard_map(s3_perm, f.pieces[0::2])
    right = bq.polystandard_map(s3_perm, f.pieces[1::2])
    assert bq.deg_polystandard(f).value == bq.add(
        bq.deg_polystandard(left).value, bq.deg_polystandard(right).value
    )


def test_zero_index_pieces_dropped(s3_perm):
    p = bq.standard_piece(s3_perm, [1, 1, 0], DeclaredLocalMap(0))
    result = bq.deg_polystandard(bq.polystandard_map(s3_perm, (p,)))
    assert result.value.is_zero()
    assert result.per_orbit == ()


def test_existence_check(z2_sign):
    assert bq.existence_check(bq.deg_standard(unit_piece(z2_sign, [1]), z2_sign))
    empty = bq.deg_polystandard(bq.polystandard_map(z2_sign, ()))
    assert not bq.existence_check(empty)


def test_degree_result_recomputable(s3_perm):
    rng = random.Random(11)
    f = fuzz.random_polystandard_map(s3_perm, rng)
    result = bq.deg_polystandard(f)
    total = bq.zero_element(s3_perm.group)
    for row in result.per_orbit:
        total = bq.add(total, row.index * bq.basis_element(s3_perm.group, row.class_index))
    assert total == result.value


# ---------------------------------------------------------------- conjugation invariance

@pytest.mark.parametrize("name", PRODUCT_CORPUS_REPS)
def test_conjugation_invariance_of_linear_pieces(name):
    rep = make_rep(name)
    rng = random.Random(hash(name) % 100000)
    for entry in bq.representation.occupied_classes(rep):
        if entry.dim_fixed == 0:
            continue
        sub = bq.subgroup_classes(rep.group)[entry.class_index].representative
        w = bq.point_with_exact_isotropy(rep, sub)
        block = fuzz.random_nonsingular_matrix(rng, entry.dim_fixed)
        piece = bq.standard_piece(rep, w, LinearLocalMap(block))
        d = bq.local_index(piece, rep)
        for g in range(rep.group.order):
            moved = conjugate_linear_piece(rep, piece, g)
            assert bq.local_index(moved, rep) == d
            assert moved.isotropy == bq.group.conjugate_subgroup(rep.group, sub, g)


# ---------------------------------------------------------------- products

def test_product_z2_example(z2_sign):
    f = bq.polystandard_map(z2_sign, (unit_piece(z2_sign, [1]),))
    check = bq.verify_product(f, f)
    assert check.equal
    assert check.lhs.coeffs == (2, 0)
    assert len(check.orbit_rows) == 2
    assert all(r.index_product == 1 and r.consistent for r in check.orbit_rows)


def test_product_with_empty_factor(z2_sign):
    f = bq.polystandard_map(z2_sign, (unit_piece(z2_sign, [1]),))
    empty = bq.polystandard_map(z2_sign, ())
    prod = bq.product_map(f, empty)
    assert prod.pieces == ()
    assert bq.verify_product(f, empty).equal


def test_minus_times_minus(z2_sign):
    minus = bq.standard_piece(z2_sign, [1], LinearLocalMap(((Fraction(-1),),)))
    f = bq.polystandard_map(z2_sign, (minus,))
    check = bq.verify_product(f, f)
    assert check.equal
    assert all(r.index_product == 1 for r in check.orbit_rows)
    assert check.lhs.coeffs == (2, 0)


def test_product_with_unit_germ(s3_perm):
    f = bq.polystandard_map(s3_perm, (unit_piece(s3_perm, [1, 1, 0]),))
    unit_map = bq.polystandard_map(
        s3_perm, (bq.standard_piece(s3_perm, [1, 1, 1], DeclaredLocalMap(1)),)
    )
    check = bq.verify_product(f, unit_map)
    assert check.equal
    assert check.lhs == bq.deg_polystandard(f).value


def test_product_c2_times_c3(s3_perm):
    reg = make_rep("S3-regular")
    c3 = next(s for s in bq.all_subgroups(s3_perm.group) if s.order == 3)
    w3 = bq.point_with_exact_isotropy(reg, c3)
    f = bq.polystandard_map(s3_perm, (unit_piece(s3_perm, [1, 1, 0]),))
    g = bq.polystandard_map(reg, (unit_piece(reg, w3),))
    check = bq.verify_product(f, g)
    assert check.equal
    assert check.lhs == bq.basis_element(s3_perm.group, 0)


def test_product_group_mismatch(z2_sign):
    other = bq.polystandard_map(make_rep("S3-perm"), ())
    f = bq.polystandard_map(z2_sign, ())
    with pytest.raises(GroupMismatch):
        bq.product_map(f, other)


def test_product_cardinality_conservation(s3_perm):
    rng = random.Random(23)
    f = fuzz.random_polystandard_map(s3_perm, rng)
    g = fuzz.random_polystandard_map(s3_perm, rng)
    sum_rep = bq.direct_sum(s3_perm, s3_perm)
    prod = bq.product_map(f, g)
    left_points = sum(len(bq.orbit(s3_perm, p.base_point)) for p in f.pieces)
    right_points = sum(len(bq.orbit(s3_perm, p.base_point)) for p in g.pieces)
    prod_points = sum(len(bq.orbit(sum_rep, p.base_point)) for p in prod.pieces)
    assert prod_points == left_points * right_points


def test_independent_block_route_on_seeded_pairs():
    rng = random.Random(314)
    for name in PRODUCT_CORPUS_REPS:
        rep = make_rep(name)
        for _ in range(3):
            f = fuzz.random_polystandard_map(rep, rng)
            g = fuzz.random_polystandard_map(rep, rng)
            if not all(isinstance(p.local, LinearLocalMap) for p in (*f.pieces, *g.pieces)):
                continue
            check = bq.verify_product(f, g)
            assert check.equal
            sum_rep = bq.direct_sum(rep, rep)
            prod = bq.product_map(f, g)
            for piece, row in zip(prod.pieces, check.orbit_rows):
                recomputed = independent_product_index(f, g, sum_rep, piece)
                assert recomputed == row.index_left * row.index_right
                assert recomputed == row.index_product
