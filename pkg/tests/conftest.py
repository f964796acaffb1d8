import itertools
import random

import pytest

from leibniz_aut import Algebra, Field, Matrix, is_left_leibniz, make_lei1, make_lei2, make_lei3
from leibniz_aut.groups import is_endomorphism

Q = Field.rationals()
F2, F3, F5 = Field(2), Field(3), Field(5)
SMALL_FIELDS = (F2, F3, F5)
ALL_FIELDS = (Q, F2, F3, F5)
MAKERS = {"lei1": make_lei1, "lei2": make_lei2, "lei3": make_lei3}

RANDOM_ALGEBRA_SEED = 20240601
RANDOM_ENDO_SEED = 7


def random_leibniz_algebras(field, count, seed=RANDOM_ALGEBRA_SEED, max_dim=3):
    """Sparse random nonzero tensors of dim <= max_dim, kept when left Leibniz."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_dim)
        density = rng.choice([0.05, 0.1, 0.2])
        brackets = {}
        for i, j, k in itertools.product(range(1, n + 1), repeat=3):
            if rng.random() < density:
                brackets.setdefault((i, j), {})[k] = rng.randrange(1, field.p)
        if not brackets:
            continue
        alg = Algebra.from_brackets(field, n, brackets)
        if is_left_leibniz(alg):
            out.append(alg)
    return out


def random_endomorphisms(alg, count, seed=RANDOM_ENDO_SEED):
    """Rejection sampling of uniformly random matrices that preserve the bracket."""
    rng = random.Random(seed)
    n, p = alg.dim, alg.field.p
    out = []
    while len(out) < count:
        m = Matrix(alg.field, n, n, tuple(rng.randrange(p) for _ in range(n * n)))
        if is_endomorphism(alg, m):
            out.append(m)
    return out


def all_matrices(field, n):
    for entries in itertools.product(field.elements(), repeat=n * n):
        yield Matrix(field, n, n, entries)


def all_vectors(field, n):
    return itertools.product(field.elements(), repeat=n)


@pytest.fixture(scope="session")
def aut_cache():
    """Enumerated automorphism groups keyed by (name, p); shared across modules."""
    from leibniz_aut import enumerate_automorphisms

    cache = {}

    def get(name, field):
        key = (name, field.p)
        if key not in cache:
            cache[key] = enumerate_automorphisms(MAKERS[name](field))
        return cache[key]

    return get


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
