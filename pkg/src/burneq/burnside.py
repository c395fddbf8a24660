"""Exact arithmetic in the Burnside ring of a finite group.

An element is an integer coefficient vector over the canonical subgroup-class
order of its group. Multiplication runs through the table of marks: mark
vectors multiply pointwise and the coefficients come back via an exact
triangular solve. `decompose_gset` is the independent brute-force route
(orbit counting plus stabilizers) used to cross-check that engine.

Mark convention: marks[i][j] = |(G/H_i)^{H_j}|, the number of cosets of the
class-i representative fixed by the class-j representative. With classes in
canonical order the matrix is lower triangular with the Weyl group orders on
the diagonal.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import DescriptorError, GroupMismatch, InvalidAction, NonIntegralSolution
from .group import (
    FiniteGroup,
    Subgroup,
    SubgroupClass,
    class_index_of,
    class_labels,
    subgroup_classes,
)


@dataclass(frozen=True)
class BurnsideElement:
    """Ring element: one integer per subgroup class, canonical order."""

    group: FiniteGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        expected = len(subgroup_classes(self.group))
        if len(self.coeffs) != expected:
            raise ValueError(
                f"coefficient vector has {len(self.coeffs)} entries, expected {expected}"
            )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        return add(self, other)

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return add(self, -other)

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(self.group, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BurnsideElement):
            return mul(self, other)
        if isinstance(other, int):
            return BurnsideElement(self.group, tuple(other * c for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_element(self)


def zero_element(group: FiniteGroup) -> BurnsideElement:
    return BurnsideElement(group, tuple(0 for _ in subgroup_classes(group)))


def basis_element(group: FiniteGroup, class_index: int) -> BurnsideElement:
    """The class [G/H] of the given subgroup class."""
    n = len(subgroup_classes(group))
    return BurnsideElement(group, tuple(1 if i == class_index else 0 for i in range(n)))


def unit_element(group: FiniteGroup) -> BurnsideElement:
    """The ring unit [G/G]; the whole group is always the last class."""
    return basis_element(group, len(subgroup_classes(group)) - 1)


@dataclass(frozen=True)
class TableOfMarks:
    group: FiniteGroup
    marks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGSet:
    """A finite G-set as an explicit action table: action[g][x] is g.x."""

    group: FiniteGroup
    size: int
    action: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------- G-sets

def coset_gset(group: FiniteGroup, subgroup: Subgroup) -> FiniteGSet:
    """G acting on the left cosets of a subgroup.

    Cosets are ordered by their minimal element, so the point order is
    deterministic.
    """
    mult = group.mult_table
    helems = subgroup.element_set
    coset_of = [-1] * group.order
    reps: list[int] = []
    for g in range(group.order):
        if coset_of[g] == -1:
            idx = len(reps)
            reps.append(g)
            for h in helems:
                coset_of[mult[g][h]] = idx
    action = tuple(
        tuple(coset_of[mult[g][reps[i]]] for i in range(len(reps)))
        for g in range(group.order)
    )
    return FiniteGSet(group=group, size=len(reps), action=action)


def product_gset(a: SubgroupClass, b: SubgroupClass) -> FiniteGSet:
    """Cartesian product of G/H and G/K with the diagonal action."""
    if a.group is not b.group:
        raise GroupMismatch("classes from different groups")
    group = a.group
    xa = coset_gset(group, a.representative)
    xb = coset_gset(group, b.representative)
    size = xa.size * xb.size
    action = tuple(
        tuple(
            xa.action[g][p // xb.size] * xb.size + xb.action[g][p % xb.size]
            for p in range(size)
        )
        for g in range(group.order)
    )
    return FiniteGSet(group=group, size=size, action=action)


def _validate_action(x: FiniteGSet) -> None:
    group = x.group
    if len(x.action) != group.order:
        raise InvalidAction("action table must have one row per group element")
    for row in x.action:
        if len(row) != x.size or sorted(row) != list(range(x.size)):
            raise InvalidAction("each row must permute the points")
    if x.action[0] != tuple(range(x.size)):
        raise InvalidAction("identity must act trivially")
    mult = group.mult_table
    for g in range(group.order):
        rg = x.action[g]
        for h in range(group.order):
            rh = x.action[h]
            rgh = x.action[mult[g][h]]
            if any(rgh[p] != rg[rh[p]] for p in range(x.size)):
                raise InvalidAction("action is not a homomorphism")


def decompose_gset(x: FiniteGSet) -> BurnsideElement:
    """Orbit decomposition: the brute-force oracle for ring multiplication."""
    _validate_action(x)
    group = x.group
    coeffs = [0] * len(subgroup_classes(group))
    seen = [False] * x.size
    for p in range(x.size):
        if seen[p]:
            continue
        stabilizer = []
        for g in range(group.order):
            q = x.action[g][p]
            seen[q] = True
            if q == p:
                stabilizer.append(g)
        coeffs[class_index_of(group, Subgroup(tuple(stabilizer)))] += 1
    return BurnsideElement(group, tuple(coeffs))


# ---------------------------------------------------------------- marks

def table_of_marks(group: FiniteGroup) -> TableOfMarks:
    cached = group._cache.get("marks")
    if cached is not None:
        return cached  # type: ignore[return-value]
    classes = subgroup_classes(group)
    mult = group.mult_table
    rows: list[tuple[int, ...]] = []
    for ci in classes:
        gset = coset_gset(group, ci.representative)
        # a coset is fixed by K exactly when every k in K keeps it in place
        row = []
        for cj in classes:
            kelems = cj.representative.element_set
            count = 0
            for p in range(gset.size):
                if all(gset.action[k][p] == p for k in kelems):
                    count += 1
            row.append(count)
        rows.append(tuple(row))
    result = TableOfMarks(group=group, marks=tuple(rows))
    group._cache["marks"] = result
    return result


def mark_vector(x: BurnsideElement) -> tuple[int, ...]:
    """Image of x under the mark homomorphism, one integer per class."""
    marks = table_of_marks(x.group).marks
    n = len(marks)
    return tuple(sum(marks[i][j] * x.coeffs[i] for i in range(n)) for j in range(n))


def _coeffs_from_marks(group: FiniteGroup, mk: tuple[int, ...]) -> tuple[int, ...]:
    marks = table_of_marks(group).marks
    n = len(marks)
    coeffs = [0] * n
    for j in range(n - 1, -1, -1):
        s = mk[j] - sum(marks[i][j] * coeffs[i] for i in range(j + 1, n))
        q, r = divmod(s, marks[j][j])
        if r != 0:
            raise NonIntegralSolution(
                f"mark vector is not in the image of the mark homomorphism at class {j}"
            )
        coeffs[j] = q
    return tuple(coeffs)


def add(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    if a.group is not b.group:
        raise GroupMismatch("elements of different Burnside rings")
    return BurnsideElement(a.group, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Ring product via marks: pointwise product then exact triangular solve."""
    if a.group is not b.group:
        raise GroupMismatch("elements of different Burnside rings")
    ma = mark_vector(a)
    mb = mark_vector(b)
    return BurnsideElement(
        a.group, _coeffs_from_marks(a.group, tuple(x * y for x, y in zip(ma, mb)))
    )


# ---------------------------------------------------------------- text and CSV forms

def format_element(x: BurnsideElement) -> str:
    """Text form like "2*[G/e] + 1*[G/(1 2)]"; the zero element is "0"."""
    labels = class_labels(x.group)
    terms = [(c, label) for c, label in zip(x.coeffs, labels) if c != 0]
    if not terms:
        return "0"
    pieces: list[str] = []
    for k, (c, label) in enumerate(terms):
        term = f"{abs(c)}*[G/{label}]"
        if k == 0:
            pieces.append(("-" if c < 0 else "") + term)
        else:
            pieces.append((" - " if c < 0 else " + ") + term)
    return "".join(pieces)


def parse_element(group: FiniteGroup, text: str) -> BurnsideElement:
    """Parse the text form; accepts a bare "[G/label]" as coefficient 1."""
    labels = class_labels(group)
    label_index = {label: i for i, label in enumerate(labels)}
    coeffs = [0] * len(labels)
    s = text.strip()
    if s == "0":
        return BurnsideElement(group, tuple(coeffs))
    i = 0
    first = True
    while i < len(s):
        while i < len(s) and s[i] == " ":
            i += 1
        sign = 1
        if s[i] in "+-":
            if first and s[i] == "+":
                raise DescriptorError(f"unexpected '+' at start of element: {text!r}")
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise DescriptorError(f"expected '+' or '-' at position {i} in {text!r}")
        while i < len(s) and s[i] == " ":
            i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        coeff = 1
        if j > i:
            coeff = int(s[i:j])
            i = j
            if i >= len(s) or s[i] != "*":
                raise DescriptorError(f"expected '*' after coefficient in {text!r}")
            i += 1
        if not s.startswith("[G/", i):
            raise DescriptorError(f"expected '[G/' at position {i} in {text!r}")
        i += 3
        end = s.find("]", i)
        if end == -1:
            raise DescriptorError(f"unterminated class label in {text!r}")
        label = s[i:end].strip()
        if label not in label_index:
            known = ", ".join(labels)
            raise DescriptorError(f"unknown class label {label!r}; known labels: {known}")
        coeffs[label_index[label]] += sign * coeff
        i = end + 1
        first = False
    return BurnsideElement(group, tuple(coeffs))


def marks_csv(tom: TableOfMarks) -> str:
    """Table of marks as CSV with class labels as row and column headers."""
    labels = class_labels(tom.group)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["class", *labels])
    for label, row in zip(labels, tom.marks):
        writer.writerow([label, *row])
    return out.getvalue()
