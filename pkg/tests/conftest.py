import random

import pytest

from hopfweave.linalg import IntMatrix
from hopfweave.plumbing import Band, BandSign, PlumbingTree


def random_tree(rng: random.Random, max_mu: int, coord: int = 1) -> PlumbingTree:
    mu = rng.randint(0, max_mu)
    bands = []
    for k in range(mu):
        sign = rng.choice((BandSign.POSITIVE, BandSign.NEGATIVE))
        gluing = tuple(rng.randint(-coord, coord) for _ in range(k))
        bands.append(Band(sign, gluing))
    return PlumbingTree(tuple(bands))


def random_unimodular(rng: random.Random, n: int, steps: int = 12) -> IntMatrix:
    """Random unimodular matrix via elementary row operations on I."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return IntMatrix.from_rows(rows, cols=n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-1, 1))
        for k in range(n):
            rows[i][k] += c * rows[j][k]
    return IntMatrix.from_rows(rows, cols=n)


ATOM_MU = {"U": 0, "H+": 1, "H-": 1, "T+": 2, "E": 2}


def random_expr(rng: random.Random, depth: int):
    """Random dimension-correct expression; returns (ast, mu)."""
    from hopfweave.expr import Atom, KnotPlumb, Plumb, Stab
    from hopfweave.plumbing import KnotMove

    if depth <= 0 or rng.random() < 0.3:
        name = rng.choice(tuple(ATOM_MU))
        return Atom(name), ATOM_MU[name]
    kind = rng.choice(("plumb", "stab", "knotplumb"))
    if kind == "plumb":
        left, mu_l = random_expr(rng, depth - 1)
        right, mu_r = random_expr(rng, depth - 1)
        if rng.random() < 0.5:
            coupling = None
        else:
            coupling = tuple(
                tuple(rng.randint(-1, 1) for _ in range(mu_r))
                for _ in range(mu_l)
            )
        return Plumb(left, right, coupling), mu_l + mu_r
    if kind == "stab":
        child, mu = random_expr(rng, depth - 1)
        sign = rng.choice((BandSign.POSITIVE, BandSign.NEGATIVE))
        x = None if rng.random() < 0.5 else \
            tuple(rng.randint(-1, 1) for _ in range(mu))
        return Stab(child, sign, x), mu + 1
    child, mu = random_expr(rng, depth - 1)
    move = rng.choice((KnotMove.TPLUS, KnotMove.E))
    x = None if rng.random() < 0.5 else \
        tuple(rng.randint(-1, 1) for _ in range(mu))
    return KnotPlumb(child, move, x, rng.choice((1, -1))), mu + 2


@pytest.fixture
def rng():
    return random.Random(20260825)
