from __future__ import annotations

import itertools

import numpy as np
import pytest

from cutgroups import (
    FiniteGroup,
    build_from_table,
    make_abelian,
    make_metacyclic,
)
from cutgroups.families import dihedral, heisenberg, quaternion


@pytest.fixture(scope="session")
def S3():
    return make_metacyclic(3, 2, 2, 3)


@pytest.fixture(scope="session")
def D8():
    return dihedral(4)


@pytest.fixture(scope="session")
def Q8():
    return quaternion(8)


@pytest.fixture(scope="session")
def C4():
    return make_abelian([4])


@pytest.fixture(scope="session")
def heis27():
    return heisenberg(3)


def sl23() -> FiniteGroup:
    """SL(2,3) from its matrix representation; not strongly monomial."""
    mats = []
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3 == 1:
            mats.append((a, b, c, d))
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)
    index = {m: i for i, m in enumerate(mats)}
    n = len(mats)
    table = np.zeros((n, n), dtype=np.int64)
    for i, (a, b, c, d) in enumerate(mats):
        for j, (e, f, g, h) in enumerate(mats):
            prod = (
                (a * e + b * g) % 3,
                (a * f + b * h) % 3,
                (c * e + d * g) % 3,
                (c * f + d * h) % 3,
            )
            table[i, j] = index[prod]
    return build_from_table(n, table.tolist())
