import io

import pytest

from hashsim import generate_synthetic, load_edge_list

ER_SEED = 42
ER_EDGE_PROB = 20 / 999  # mean degree ~20 on 1000 nodes


@pytest.fixture
def tiny_net():
    return load_edge_list(io.StringIO("0 1\n2 1\n"))


@pytest.fixture
def star11():
    return generate_synthetic("star", 11)


@pytest.fixture(scope="session")
def star101():
    return generate_synthetic("star", 101)


@pytest.fixture(scope="session")
def er1000():
    return generate_synthetic("uniform-random", 1000, edge_prob=ER_EDGE_PROB,
                              seed=ER_SEED)


@pytest.fixture(scope="session")
def er200():
    return generate_synthetic("uniform-random", 200, edge_prob=0.05, seed=7)
