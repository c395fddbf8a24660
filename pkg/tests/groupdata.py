"""Shared catalog of small test groups and representations.

Groups are cached so the per-group derived data (class tables, marks) is
computed once per session. Q8 acts on itself by left translation with
elements ordered 1, -1, i, -i, j, -j, k, -k.
"""

from __future__ import annotations

from functools import lru_cache

import burneq as bq

GROUP_GENERATORS: dict[str, list[list[int]]] = {
    "Z2": [[1, 0]],
    "Z4": [[1, 2, 3, 0]],
    "V4": [[1, 0, 2, 3], [0, 1, 3, 2]],
    "Z6": [[1, 0, 3, 4, 2]],
    "S3": [[1, 0, 2], [1, 2, 0]],
    "D4": [[1, 2, 3, 0], [3, 2, 1, 0]],
    "Q8": [[2, 3, 1, 0, 6, 7, 5, 4], [4, 5, 7, 6, 1, 0, 2, 3]],
    "A4": [[1, 2, 0, 3], [1, 0, 3, 2]],
}

MARKS_GROUPS = ["Z2", "Z4", "V4", "Z6", "S3", "D4", "Q8", "A4"]

EXPECTED_ORDER = {
    "Z2": 2, "Z4": 4, "V4": 4, "Z6": 6, "S3": 6, "D4": 8, "Q8": 8, "A4": 12,
}


@lru_cache(maxsize=None)
def make_group(name: str) -> bq.FiniteGroup:
    return bq.generate_group(GROUP_GENERATORS[name])


@lru_cache(maxsize=None)
def make_rep(name: str) -> bq.OrthogonalRepresentation:
    """The degree-test representations: one per group in the product corpus."""
    if name == "Z2-sign":
        return bq.build_representation(make_group("Z2"), [[[-1]]], label=name)
    if name == "V4-signs":
        return bq.build_representation(
            make_group("V4"),
            [[[-1, 0], [0, 1]], [[1, 0], [0, -1]]],
            label=name,
        )
    if name == "S3-perm":
        return bq.permutation_representation(make_group("S3"))
    if name == "S3-regular":
        return bq.regular_representation(make_group("S3"))
    if name == "D4-standard":
        return bq.build_representation(
            make_group("D4"),
            [[[0, -1], [1, 0]], [[1, 0], [0, -1]]],
            label=name,
        )
    raise KeyError(name)


PRODUCT_CORPUS_REPS = ["Z2-sign", "V4-signs", "S3-perm", "D4-standard"]
