"""Finite permutation groups: closure from generators and subgroup structure.

Group elements are integers 0..order-1 with 0 the identity; the whole group
law lives in an explicit multiplication table built once from the permutation
generators. Subgroups, conjugacy classes of subgroups, normalizers and Weyl
data are all derived from that table and cached on the group object.

The class order is canonical and deterministic: ascending subgroup order,
ties broken by the sorted element set of the lexicographically smallest
class member. Coefficient vectors of Burnside elements index into it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import EmptyGeneratorList, GroupMismatch, NotASubgroup, OrderCapExceeded

DEFAULT_ORDER_CAP = 2000

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """Composition p after q: x goes to p[q[x]]."""
    return tuple(p[x] for x in q)


def _check_perm(p: Perm, npoints: int) -> None:
    if len(p) != npoints or sorted(p) != list(range(npoints)):
        raise ValueError(f"not a permutation of {npoints} points: {p!r}")


class FiniteGroup:
    """A finite group presented by permutation generators.

    Built through `generate_group`; immutable once constructed. The map from
    element indices to permutations is an injective homomorphism, with
    mult_table[a][b] the index of perm_a composed after perm_b.
    """

    def __init__(self, generator_perms, order_cap: int = DEFAULT_ORDER_CAP):
        perms = [tuple(int(x) for x in p) for p in generator_perms]
        if not perms:
            raise EmptyGeneratorList("at least one generator is required")
        npoints = len(perms[0])
        for p in perms:
            _check_perm(p, npoints)

        ident = tuple(range(npoints))
        elems: list[Perm] = [ident]
        index: dict[Perm, int] = {ident: 0}
        construction: list[tuple[int, int]] = [(0, -1)]
        i = 0
        while i < len(elems):
            for gi, g in enumerate(perms):
                w = compose(elems[i], g)
                if w not in index:
                    if len(elems) >= order_cap:
                        raise OrderCapExceeded(
                            f"group order exceeds cap {order_cap}"
                        )
                    index[w] = len(elems)
                    elems.append(w)
                    construction.append((i, gi))
            i += 1

        self.points = npoints
        self.generator_perms: tuple[Perm, ...] = tuple(perms)
        self.element_perms: tuple[Perm, ...] = tuple(elems)
        self.order = len(elems)
        self.construction: tuple[tuple[int, int], ...] = tuple(construction)
        self.generator_indices: tuple[int, ...] = tuple(index[p] for p in perms)
        self.mult_table: tuple[tuple[int, ...], ...] = tuple(
            tuple(index[compose(a, b)] for b in elems) for a in elems
        )
        inverse = [0] * self.order
        for a in range(self.order):
            inverse[a] = self.mult_table[a].index(0)
        self.inverse: tuple[int, ...] = tuple(inverse)
        self._cache: dict[str, object] = {}

    def mul(self, a: int, b: int) -> int:
        return self.mult_table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def __repr__(self) -> str:
        return f"<FiniteGroup order={self.order} on {self.points} points>"


def generate_group(generators, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Close a list of permutations under composition.

    Indexing is canonical: identity first, then breadth-first product order
    (each known element multiplied by the generators in their given order).
    """
    return FiniteGroup(generators, order_cap=order_cap)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element indices."""

    element_set: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.element_set)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.element_set)

    def __contains__(self, g: int) -> bool:
        return g in self.members


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups in canonical class order."""

    group: FiniteGroup
    representative: Subgroup
    members: tuple[Subgroup, ...]
    class_index: int


@dataclass(frozen=True)
class WeylData:
    """Normalizer and Weyl group data of a subgroup."""

    subgroup: Subgroup
    normalizer: Subgroup
    weyl_order: int
    weyl_coset_reps: tuple[int, ...]


def _closure_set(mult, seed) -> frozenset[int]:
    """Multiplicative closure; in a finite group this is already a subgroup."""
    elems = {0, *seed}
    queue = list(elems)
    while queue:
        a = queue.pop()
        row = mult[a]
        for b in tuple(elems):
            for c in (row[b], mult[b][a]):
                if c not in elems:
                    elems.add(c)
                    queue.append(c)
    return frozenset(elems)


def is_subgroup(group: FiniteGroup, candidate: Subgroup) -> bool:
    members = candidate.members
    if 0 not in members or not members <= set(range(group.order)):
        return False
    mult = group.mult_table
    return all(mult[a][b] in members for a in members for b in members)


def subgroup_from_elements(group: FiniteGroup, elements) -> Subgroup:
    """The subgroup generated by the given element indices."""
    return Subgroup(tuple(sorted(_closure_set(group.mult_table, elements))))


def conjugate_subgroup(group: FiniteGroup, subgroup: Subgroup, g: int) -> Subgroup:
    mult, inv = group.mult_table, group.inverse
    gi = inv[g]
    return Subgroup(tuple(sorted(mult[mult[g][h]][gi] for h in subgroup.element_set)))


def all_subgroups(group: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup exactly once, sorted by (order, element_set).

    Enumeration grows known subgroups one extra generator at a time, which
    reaches every subgroup without touching the power set of G.
    """
    cached = group._cache.get("subgroups")
    if cached is not None:
        return cached  # type: ignore[return-value]
    mult = group.mult_table
    trivial = frozenset({0})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for h in frontier:
            for g in range(group.order):
                if g in h:
                    continue
                k = _closure_set(mult, h | {g})
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        frontier = nxt
    subs = tuple(
        Subgroup(t)
        for t in sorted((tuple(sorted(s)) for s in found), key=lambda t: (len(t), t))
    )
    group._cache["subgroups"] = subs
    return subs


def subgroup_classes(group: FiniteGroup) -> tuple[SubgroupClass, ...]:
    """Conjugacy classes of subgroups in canonical class order."""
    cached = group._cache.get("classes")
    if cached is not None:
        return cached  # type: ignore[return-value]
    classes: list[SubgroupClass] = []
    assigned: set[frozenset[int]] = set()
    for sub in all_subgroups(group):
        if sub.members in assigned:
            continue
        member_sets = {conjugate_subgroup(group, sub, g).members for g in range(group.order)}
        members = tuple(
            Subgroup(t) for t in sorted(tuple(sorted(s)) for s in member_sets)
        )
        assigned |= member_sets
        # iteration over all_subgroups is already in (order, element_set)
        # order, so `sub` is the lexicographically smallest member
        classes.append(
            SubgroupClass(
                group=group,
                representative=sub,
                members=members,
                class_index=len(classes),
            )
        )
    result = tuple(classes)
    group._cache["classes"] = result
    return result


def class_index_of(group: FiniteGroup, subgroup: Subgroup) -> int:
    """Canonical class index of an arbitrary subgroup."""
    cached = group._cache.get("class_of")
    if cached is None:
        cached = {
            member.members: cls.class_index
            for cls in subgroup_classes(group)
            for member in cls.members
        }
        group._cache["class_of"] = cached
    try:
        return cached[subgroup.members]  # type: ignore[index]
    except KeyError:
        raise NotASubgroup(f"{subgroup.element_set!r} is not a subgroup") from None


def class_leq(a: SubgroupClass, b: SubgroupClass) -> bool:
    """Whether some member of class a sits inside some member of class b."""
    if a.group is not b.group:
        raise GroupMismatch("classes from different groups")
    target = b.representative.members
    return any(m.members <= target for m in a.members)


def weyl_data(group: FiniteGroup, subgroup: Subgroup) -> WeylData:
    if not is_subgroup(group, subgroup):
        raise NotASubgroup(f"{subgroup.element_set!r} is not a subgroup")
    mult, inv = group.mult_table, group.inverse
    hset = subgroup.members
    normalizer_elems = tuple(
        g
        for g in range(group.order)
        if {mult[mult[g][h]][inv[g]] for h in subgroup.element_set} == hset
    )
    reps: list[int] = []
    covered: set[int] = set()
    for g in normalizer_elems:
        if g not in covered:
            reps.append(g)
            covered.update(mult[g][h] for h in subgroup.element_set)
    return WeylData(
        subgroup=subgroup,
        normalizer=Subgroup(normalizer_elems),
        weyl_order=len(normalizer_elems) // subgroup.order,
        weyl_coset_reps=tuple(reps),
    )


# ---------------------------------------------------------------- class labels

def _cycle_string(perm: Perm) -> str:
    """Disjoint cycle notation with 1-based points, fixed points omitted."""
    seen: set[int] = set()
    parts: list[str] = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        if len(cycle) > 1:
            parts.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
    return "".join(parts) if parts else "()"


def _minimal_generators(group: FiniteGroup, subgroup: Subgroup) -> list[int]:
    gens: list[int] = []
    have: frozenset[int] = frozenset({0})
    while have != subgroup.members:
        g = min(x for x in subgroup.element_set if x not in have)
        gens.append(g)
        have = _closure_set(group.mult_table, have | {g})
    return gens


def class_labels(group: FiniteGroup) -> tuple[str, ...]:
    """Canonical text label per subgroup class, used in element strings."""
    cached = group._cache.get("labels")
    if cached is not None:
        return cached  # type: ignore[return-value]
    labels: list[str] = []
    for cls in subgroup_classes(group):
        rep = cls.representative
        if rep.order == 1:
            labels.append("e")
        elif rep.order == group.order:
            labels.append("G")
        else:
            labels.append(
                ",".join(
                    _cycle_string(group.element_perms[g])
                    for g in _minimal_generators(group, rep)
                )
            )
    result = tuple(labels)
    group._cache["labels"] = result
    return result
