"""Seeded random generation of feasible targets and polystandard maps.

Backs the CLI self-check and the verification suite. Everything is driven
by a caller-supplied random.Random so runs are reproducible for a fixed
seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .burnside import BurnsideElement
from .degree import (
    DeclaredLocalMap,
    LinearLocalMap,
    PolystandardMap,
    StandardPiece,
    polystandard_map,
    standard_piece,
)
from .group import subgroup_classes
from .linalg import Matrix
from .realize import RealizationTarget, realize_element
from .representation import OrthogonalRepresentation, fixed_subspace, occupied_classes


def random_nonsingular_matrix(rng: random.Random, dim: int, bound: int = 3) -> Matrix:
    """A random integer matrix with nonzero exact determinant."""
    if dim == 0:
        return ()
    for _ in range(200):
        rows = tuple(
            tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
            for _ in range(dim)
        )
        if linalg.det(rows) != 0:
            return rows
    raise AssertionError("could not sample a nonsingular matrix")


def random_feasible_element(rep: OrthogonalRepresentation, rng: random.Random,
                            max_classes: int = 2, max_coeff: int = 2) -> BurnsideElement:
    """A nonzero element supported on occupied classes of the representation."""
    group = rep.group
    entries = occupied_classes(rep)
    count = rng.randint(1, min(max_classes, len(entries)))
    picked = rng.sample(range(len(entries)), count)
    coeffs = [0] * len(subgroup_classes(group))
    for k in picked:
        entry = entries[k]
        if entry.dim_fixed == 0:
            coeffs[entry.class_index] = 1
        else:
            c = rng.randint(1, max_coeff)
            coeffs[entry.class_index] = c if rng.random() < 0.5 else -c
    return BurnsideElement(group, tuple(coeffs))


def _mutate_piece(rep: OrthogonalRepresentation, piece: StandardPiece,
                  rng: random.Random) -> StandardPiece:
    d = fixed_subspace(rep, piece.isotropy).dim_fixed
    if d == 0:
        return piece
    roll = rng.random()
    if roll < 0.15:
        local = DeclaredLocalMap(rng.choice([-3, -2, -1, 1, 2, 3]))
    elif roll < 0.65:
        local = LinearLocalMap(random_nonsingular_matrix(rng, d))
    else:
        return piece
    return standard_piece(
        rep, piece.base_point, local, radius=piece.radius, epsilon=piece.epsilon
    )


def random_polystandard_map(rep: OrthogonalRepresentation, rng: random.Random,
                            mutate: bool = True) -> PolystandardMap:
    """Realize a random feasible element, then vary the local indices.

    Mutation swaps some signed unit blocks for random nonsingular integer
    blocks or declared indices; base points and radii stay put, so the map
    remains valid while the per-orbit indices get interesting.
    """
    target = random_feasible_element(rep, rng)
    f = realize_element(RealizationTarget(element=target, rep=rep))
    if not mutate:
        return f
    pieces = tuple(_mutate_piece(rep, p, rng) for p in f.pieces)
    return polystandard_map(rep, pieces)
