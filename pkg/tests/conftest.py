import itertools

import pytest

from ringlab.constructions import finite_corpus, large_corpus

CORPUS = finite_corpus()
SMALL = {k: r for k, r in CORPUS.items() if r.size <= 16}


def mat_mul2(a, b, p=2):
    """Independent 2x2 matrix product on row-major 4-tuples."""
    a00, a01, a10, a11 = a
    b00, b01, b10, b11 = b
    return ((a00 * b00 + a01 * b10) % p, (a00 * b01 + a01 * b11) % p,
            (a10 * b00 + a11 * b10) % p, (a10 * b01 + a11 * b11) % p)


def all_mats2(p=2):
    return list(itertools.product(range(p), repeat=4))


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture(scope="session")
def big_corpus():
    return large_corpus()
