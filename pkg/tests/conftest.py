"""Shared fixtures: the two worked clusters, printed friezes, and cached
enumeration reports."""

import pytest

from plabic import enumerate_clusters, validate_cluster
from plabic.combinat import KSubset
from plabic.frieze import frieze_from_json


def ks(n, *elems):
    return KSubset.of(n, elems)


FIG1_MEMBERS = [(4, 5), (3, 4), (2, 3), (1, 2), (1, 5), (2, 4), (1, 4)]

FIG3_MEMBERS = [
    (1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6), (4, 5, 6, 7), (5, 6, 7, 8),
    (6, 7, 8, 9), (7, 8, 9, 1), (8, 9, 1, 2), (9, 1, 2, 3),
    (2, 7, 8, 9), (2, 6, 7, 8), (3, 6, 7, 8), (4, 6, 7, 8),
    (1, 2, 7, 8), (2, 3, 7, 8), (2, 3, 6, 7), (3, 4, 6, 7),
    (9, 1, 2, 7), (1, 2, 3, 7), (2, 3, 4, 7), (3, 4, 5, 7),
]

# The six non-interval members of the snake-generated (3,7) cluster.
QUAD37_NON_INTERVALS = [(1, 2, 6), (2, 3, 6), (2, 3, 5), (2, 6, 7), (2, 5, 6), (3, 5, 6)]

# Printed frieze fixtures, transcribed top row first with columns aligned
# down the left diagonal.
SL2_PRINTED = [
    {"variant": "SL2", "n": 5, "rows": [[2, 2, 1, 3, 1], [3, 1, 2, 2, 1]]},
    {
        "variant": "SL2",
        "n": 6,
        "rows": [[3, 1, 3, 1, 3, 1], [2, 2, 2, 2, 2, 2], [3, 1, 3, 1, 3, 1]],
    },
    {
        "variant": "SL2",
        "n": 6,
        "rows": [[2, 2, 2, 1, 4, 1], [3, 3, 1, 3, 3, 1], [4, 1, 2, 2, 2, 1]],
    },
]

SL3_PRINTED = [
    {"variant": "SL3", "n": 6, "rows": [[1, 4, 2, 1, 4, 2], [2, 4, 1, 2, 4, 1]]},
    {"variant": "SL3", "n": 6, "rows": [[1, 3, 3, 1, 3, 3], [2, 3, 2, 1, 6, 1]]},
]


@pytest.fixture(scope="session")
def fig1():
    return validate_cluster(2, 5, [KSubset.of(5, e) for e in FIG1_MEMBERS])


@pytest.fixture(scope="session")
def fig3():
    return validate_cluster(4, 9, [KSubset.of(9, e) for e in FIG3_MEMBERS])


@pytest.fixture(scope="session")
def sl2_printed():
    import json

    return [frieze_from_json(json.dumps(doc)) for doc in SL2_PRINTED]


@pytest.fixture(scope="session")
def sl3_printed():
    import json

    return [frieze_from_json(json.dumps(doc)) for doc in SL3_PRINTED]


@pytest.fixture(scope="session")
def enum_cache():
    cache = {}

    def get(k, n):
        if (k, n) not in cache:
            cache[(k, n)] = enumerate_clusters(k, n)
        return cache[(k, n)]

    return get
