"""Brute-force oracles shared by the tests.

Subspaces here are plain frozensets of vectors, built by closing a row set
under addition and scalar multiplication. Nothing below touches RREF.
"""

import itertools

import pytest

from grassmann_spectra.field import make_field


def all_vectors(field, n):
    return list(itertools.product(range(field.q), repeat=n))


def span_set(field, n, rows):
    vecs = {tuple([0] * n)}
    for r in rows:
        new = set()
        for v in vecs:
            for c in range(field.q):
                new.add(tuple(field.add(x, field.mul(c, y)) for x, y in zip(v, r)))
        vecs = new
    return frozenset(vecs)


def brute_subspaces(field, n, k):
    """All k-subspaces as vector sets, by spanning every k-tuple of vectors."""
    size = field.q**k
    nonzero = [v for v in all_vectors(field, n) if any(v)]
    out = set()
    for rows in itertools.combinations(nonzero, k):
        s = span_set(field, n, rows)
        if len(s) == size:
            out.add(s)
    return out


def log_q(field, count):
    d = 0
    while field.q**d < count:
        d += 1
    assert field.q**d == count
    return d


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)
