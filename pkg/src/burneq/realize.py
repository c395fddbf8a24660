"""Construct witnesses: maps realizing a prescribed Burnside element.

Feasibility over a representation V: every class carrying a nonzero
coefficient must have a nonempty stratum of points with exactly that
isotropy, and when dim V^G = 0 the coefficient of [G/G] can only be 0 or 1
(the only candidate orbit is the origin, which admits a single unit germ).

Realization places |c| pieces on distinct orbits inside the stratum of each
class, each a signed diagonal block diag(sign c, 1, ..., 1), with radii
shrunk below a quarter of the minimal spacing of all placed orbit points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .burnside import BurnsideElement
from .degree import LinearLocalMap, PolystandardMap, polystandard_map, standard_piece
from .errors import EmptyOrbitTypeStratum, InfeasibleCoefficient, ZeroDimNegative
from .group import class_labels, subgroup_classes
from .linalg import Matrix, Vector
from .representation import (
    OrthogonalRepresentation,
    fixed_subspace,
    isotropy,
    orbit,
    point_with_exact_isotropy,
)


@dataclass(frozen=True)
class RealizationTarget:
    element: BurnsideElement
    rep: OrthogonalRepresentation


def signed_linear_block(dim: int, sign: int) -> Matrix:
    """diag(sign, 1, ..., 1); the empty block only exists with sign +1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if dim == 0:
        if sign == -1:
            raise ZeroDimNegative("no 0x0 block with determinant -1 exists")
        return ()
    return tuple(
        tuple(Fraction(sign if i == 0 and j == 0 else (1 if i == j else 0))
              for j in range(dim))
        for i in range(dim)
    )


def _witness_points(rep: OrthogonalRepresentation, subgroup, count: int) -> list[Vector]:
    """`count` points with exact isotropy, pairwise on distinct orbits."""
    first = point_with_exact_isotropy(rep, subgroup)
    if count == 1:
        return [first]
    fs = fixed_subspace(rep, subgroup)
    d = fs.dim_fixed
    chosen: list[Vector] = []
    taken: set[Vector] = set()
    t = 0
    cap = 64 * rep.group.order * max(rep.dim, 1) * count
    while len(chosen) < count:
        t += 1
        if t > cap:
            raise AssertionError("witness ladder exhausted on a nonempty stratum")
        x = tuple(
            sum(Fraction(t) ** (k + 1) * b[j] for k, b in enumerate(fs.basis))
            for j in range(rep.dim)
        )
        if x in taken or isotropy(rep, x) != subgroup:
            continue
        chosen.append(x)
        taken.update(orbit(rep, x))
    return chosen


def realize_element(target: RealizationTarget) -> PolystandardMap:
    """A strictly polystandard map whose degree equals the target element."""
    rep = target.rep
    group = rep.group
    if target.element.group is not group:
        raise InfeasibleCoefficient(
            "target element and representation use different groups",
            kind="group-mismatch",
        )
    classes = subgroup_classes(group)
    labels = class_labels(group)
    dim_fixed_full = fixed_subspace(rep, classes[-1].representative).dim_fixed

    placements: list[tuple[Vector, Matrix]] = []
    for cls, coeff in zip(classes, target.element.coeffs):
        if coeff == 0:
            continue
        sub = cls.representative
        d = fixed_subspace(rep, sub).dim_fixed
        try:
            if d == 0:
                # only the origin can carry this class, one unit germ at most
                points = [point_with_exact_isotropy(rep, sub)]
                if coeff != 1:
                    raise InfeasibleCoefficient(
                        f"coefficient of [G/{labels[cls.class_index]}] must be 0 "
                        f"or 1 when dim V^G = {dim_fixed_full}",
                        kind="unit-coefficient",
                        class_index=cls.class_index,
                    )
            else:
                points = _witness_points(rep, sub, abs(coeff))
        except EmptyOrbitTypeStratum as exc:
            raise InfeasibleCoefficient(
                f"class [G/{labels[cls.class_index]}] has an empty stratum "
                f"in this representation",
                kind="empty-stratum",
                class_index=cls.class_index,
            ) from exc
        block = signed_linear_block(d, 1 if coeff > 0 else -1)
        placements.extend((x, block) for x in points)

    if not placements:
        return polystandard_map(rep, ())

    all_points = [pt for x, _ in placements for pt in orbit(rep, x)]
    spacing2 = linalg.min_pairwise_norm2(all_points)
    if spacing2 is None:
        size = Fraction(1)
    else:
        size = linalg.rational_sqrt_floor(spacing2 / 32)
    pieces = tuple(
        standard_piece(rep, x, LinearLocalMap(block), radius=size, epsilon=size)
        for x, block in placements
    )
    return polystandard_map(rep, pieces)


__all__ = [
    "RealizationTarget",
    "point_with_exact_isotropy",
    "realize_element",
    "signed_linear_block",
]
