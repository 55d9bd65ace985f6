import random

import pytest

from albertkit.albert import jbasis, jordan_mul


@pytest.fixture(scope="session")
def basis():
    return jbasis()


@pytest.fixture(scope="session")
def jordan_tensor(basis):
    """coords of b_i o b_j for every basis pair, filled symmetrically."""
    table = [[None] * 27 for _ in range(27)]
    for i in range(27):
        for j in range(i, 27):
            c = jordan_mul(basis[i], basis[j]).coords()
            table[i][j] = c
            table[j][i] = c
    return table


@pytest.fixture()
def rng():
    return random.Random(20260819)
