"""Orthogonal representations of finite groups over exact rationals.

All representation algebra is exact: matrices of Fractions, fixed-point
subspaces as kernels of averaging projectors, isotropy by exact equality.
Floats never enter here; they live only in the numerical Jacobian path of
the degree module. Representations that need irrational matrices must be
fed in through a rational orthogonal form; embedding in a permutation
representation (see `permutation_representation`) always works.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    DimensionMismatch,
    EmptyOrbitTypeStratum,
    GroupMismatch,
    NotAHomomorphism,
    NotOrthogonal,
)
from .group import (
    FiniteGroup,
    Perm,
    Subgroup,
    all_subgroups,
    class_index_of,
    class_labels,
    subgroup_classes,
)
from .linalg import Matrix, Vector


class OrthogonalRepresentation:
    """One exact-rational orthogonal matrix per group element.

    Construct through `build_representation`; immutable afterwards. Derived
    data (fixed subspaces) is cached per subgroup.
    """

    def __init__(self, group: FiniteGroup, dim: int, matrices: tuple[Matrix, ...],
                 label: str | None = None):
        self.group = group
        self.dim = dim
        self.matrices = matrices
        self.label = label
        self._fixed_cache: dict[tuple[int, ...], FixedSubspace] = {}

    def matrix(self, g: int) -> Matrix:
        return self.matrices[g]

    def apply(self, g: int, v: Vector) -> Vector:
        return linalg.matvec(self.matrices[g], v)

    def __repr__(self) -> str:
        return f"<OrthogonalRepresentation dim={self.dim} of {self.group!r}>"


@dataclass(frozen=True)
class FixedSubspace:
    """Exact basis of the subspace fixed pointwise by a subgroup."""

    subgroup: Subgroup
    class_index: int
    basis: tuple[Vector, ...]
    dim_fixed: int


@dataclass(frozen=True)
class OrbitTypeEntry:
    class_index: int
    dim_fixed: int
    occupied: bool


@dataclass(frozen=True)
class OrbitTypeTable:
    entries: tuple[OrbitTypeEntry, ...]


def build_representation(group: FiniteGroup, generator_matrices,
                         label: str | None = None) -> OrthogonalRepresentation:
    """Extend generator matrices to the whole group and validate.

    Checks: one square rational matrix per generator, all orthogonal
    exactly, and rho(y g) = rho(y) rho(g) for every element y and generator
    g. Together with rho(e) = I the generator-sided check forces the full
    homomorphism property by induction on word length.
    """
    gens = [linalg.mat(m) for m in generator_matrices]
    if len(gens) != len(group.generator_perms):
        raise DimensionMismatch(
            f"{len(gens)} matrices for {len(group.generator_perms)} generators"
        )
    if not gens:
        raise DimensionMismatch("no generator matrices")
    dim = len(gens[0])
    for m in gens:
        if len(m) != dim or any(len(row) != dim for row in m):
            raise DimensionMismatch("generator matrices must be square and equal-sized")
        if linalg.matmul(linalg.transpose(m), m) != linalg.identity(dim):
            raise NotOrthogonal("generator matrix is not orthogonal")

    matrices: list[Matrix] = [linalg.identity(dim)] * group.order
    for idx in range(1, group.order):
        parent, gi = group.construction[idx]
        matrices[idx] = linalg.matmul(matrices[parent], gens[gi])

    mult = group.mult_table
    for y in range(group.order):
        my = matrices[y]
        for gi, ge in enumerate(group.generator_indices):
            if matrices[mult[y][ge]] != linalg.matmul(my, gens[gi]):
                raise NotAHomomorphism(
                    f"matrices violate the relation at element {y}, generator {gi}"
                )
    return OrthogonalRepresentation(group, dim, tuple(matrices), label=label)


def _perm_matrix(perm: Perm) -> Matrix:
    n = len(perm)
    return tuple(
        tuple(Fraction(1 if i == perm[j] else 0) for j in range(n)) for i in range(n)
    )


def permutation_representation(group: FiniteGroup) -> OrthogonalRepresentation:
    """The defining permutation action as 0/1 orthogonal matrices."""
    return build_representation(
        group, [_perm_matrix(p) for p in group.generator_perms], label="permutation"
    )


def regular_representation(group: FiniteGroup) -> OrthogonalRepresentation:
    """The group permuting itself by left translation."""
    perms = [
        tuple(group.mult_table[ge][x] for x in range(group.order))
        for ge in group.generator_indices
    ]
    return build_representation(group, [_perm_matrix(p) for p in perms], label="regular")


def trivial_representation(group: FiniteGroup, dim: int = 1) -> OrthogonalRepresentation:
    return build_representation(
        group, [linalg.identity(dim) for _ in group.generator_perms], label="trivial"
    )


def direct_sum(a: OrthogonalRepresentation,
               b: OrthogonalRepresentation) -> OrthogonalRepresentation:
    """Block-diagonal sum of two representations of the same group."""
    if a.group is not b.group:
        raise GroupMismatch("representations of different groups")
    zero = Fraction(0)
    gens = []
    for ga, gb in zip(
        (a.matrices[i] for i in a.group.generator_indices),
        (b.matrices[i] for i in b.group.generator_indices),
    ):
        top = [row + (zero,) * b.dim for row in ga]
        bottom = [(zero,) * a.dim + row for row in gb]
        gens.append(tuple(top + bottom))
    return build_representation(a.group, gens)


# ---------------------------------------------------------------- fixed spaces

def fixed_subspace(rep: OrthogonalRepresentation, subgroup: Subgroup) -> FixedSubspace:
    """Exact kernel of (P - I) where P averages the subgroup matrices."""
    cached = rep._fixed_cache.get(subgroup.element_set)
    if cached is not None:
        return cached
    n = rep.dim
    weight = Fraction(1, subgroup.order)
    projector = [[Fraction(0)] * n for _ in range(n)]
    for h in subgroup.element_set:
        m = rep.matrices[h]
        for i in range(n):
            row = m[i]
            acc = projector[i]
            for j in range(n):
                acc[j] += weight * row[j]
    delta = tuple(
        tuple(projector[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    basis = tuple(linalg.kernel_basis(delta))
    result = FixedSubspace(
        subgroup=subgroup,
        class_index=class_index_of(rep.group, subgroup),
        basis=basis,
        dim_fixed=len(basis),
    )
    rep._fixed_cache[subgroup.element_set] = result
    return result


def isotropy(rep: OrthogonalRepresentation, point) -> Subgroup:
    """Exact stabilizer of a point."""
    x = linalg.vec(point)
    if len(x) != rep.dim:
        raise DimensionMismatch(f"point has {len(x)} coordinates, expected {rep.dim}")
    return Subgroup(
        tuple(g for g in range(rep.group.order) if rep.apply(g, x) == x)
    )


def orbit(rep: OrthogonalRepresentation, point) -> tuple[Vector, ...]:
    """The orbit of a point, deduplicated exactly, in first-seen order."""
    x = linalg.vec(point)
    seen: dict[Vector, None] = {}
    for g in range(rep.group.order):
        seen.setdefault(rep.apply(g, x), None)
    return tuple(seen)


def point_with_exact_isotropy(rep: OrthogonalRepresentation,
                              subgroup: Subgroup) -> Vector:
    """A rational point whose stabilizer is exactly the given subgroup.

    The stratum is empty iff some strictly larger subgroup fixes the whole
    of V^H, which is decided exactly by comparing fixed-space dimensions
    (a finite union of proper subspaces cannot cover a rational space).
    When the stratum is nonempty, candidates x_t = sum_k t^k b_k over the
    fixed-space basis are walked for t = 1, 2, ...; each proper subspace
    can absorb at most dim V^H of them, so the ladder provably terminates.
    """
    fs = fixed_subspace(rep, subgroup)
    d = fs.dim_fixed
    group = rep.group
    subs = all_subgroups(group)
    label = class_labels(group)[fs.class_index]
    for k in subs:
        if subgroup.members < k.members and fixed_subspace(rep, k).dim_fixed == d:
            raise EmptyOrbitTypeStratum(
                f"no point has isotropy exactly ({label}): its fixed space is "
                f"covered by a larger subgroup"
            )
    if d == 0:
        # only reachable for the whole group; everything smaller was caught above
        return tuple(Fraction(0) for _ in range(rep.dim))
    cap = max(8 * group.order * rep.dim, d * len(subs) + 1)
    for t in range(1, cap + 1):
        x = tuple(
            sum(Fraction(t) ** (k + 1) * b[j] for k, b in enumerate(fs.basis))
            for j in range(rep.dim)
        )
        if isotropy(rep, x) == subgroup:
            return x
    raise AssertionError("witness ladder exhausted on a nonempty stratum")


def orbit_types(rep: OrthogonalRepresentation) -> OrbitTypeTable:
    """Fixed-space dimension and occupancy for every subgroup class."""
    entries = []
    for cls in subgroup_classes(rep.group):
        fs = fixed_subspace(rep, cls.representative)
        try:
            point_with_exact_isotropy(rep, cls.representative)
            occupied = True
        except EmptyOrbitTypeStratum:
            occupied = False
        entries.append(
            OrbitTypeEntry(
                class_index=cls.class_index, dim_fixed=fs.dim_fixed, occupied=occupied
            )
        )
    return OrbitTypeTable(entries=tuple(entries))


def occupied_classes(rep: OrthogonalRepresentation) -> tuple[OrbitTypeEntry, ...]:
    """The occupied rows of the orbit-type table, cached on the representation."""
    cached = getattr(rep, "_occupied_cache", None)
    if cached is None:
        cached = tuple(e for e in orbit_types(rep).entries if e.occupied)
        rep._occupied_cache = cached  # type: ignore[attr-defined]
    return cached
