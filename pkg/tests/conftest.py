import random

import pytest

from jnf.decomposition import cycle_block_matrix
from jnf.fields import QQ
from jnf.matrix import Matrix, mat_mul, mat_inverse
from jnf.poly import Poly


@pytest.fixture
def fixture_a():
    """3x3 test matrix: eigenvalues 2 (mult 2) and 1."""
    return Matrix.from_ints(QQ, [[3, -1, 1], [2, 0, 1], [1, -1, 2]])


@pytest.fixture
def fixture_b():
    """3x3 test matrix: single eigenvalue 1 with cycles of lengths 2 and 1."""
    return Matrix.from_ints(QQ, [[3, 2, -2], [-1, 0, 1], [1, 1, 0]])


def make_fixture_m6():
    q = QQ.fraction
    return Matrix(QQ, [
        [q(1), q(-2), q(4), q(-2), q(5), q(-4)],
        [q(0), q(1), q(5, 2), q(-7, 2), q(2), q(-5, 2)],
        [q(1), q(-5, 2), q(2), q(-1, 2), q(5, 2), q(-3)],
        [q(0), q(-1), q(9, 2), q(-7, 2), q(3), q(-7, 2)],
        [q(0), q(0), q(2), q(-2), q(3), q(-1)],
        [q(1), q(-3, 2), q(-1, 2), q(1), q(3, 2), q(1, 2)],
    ])


@pytest.fixture
def fixture_m6():
    """6x6 matrix with characteristic polynomial (x-2)^2 (x^2-2)^2."""
    return make_fixture_m6()


def charpoly_oracle(a):
    """det(xI - A) by recursive cofactor expansion over the polynomial ring;
    independent of both Faddeev and Hessenberg."""
    f = a.field
    n = a.rows
    entries = [[Poly(f, [f.neg(a.data[i][j])]) for j in range(n)] for i in range(n)]
    for i in range(n):
        entries[i][i] = entries[i][i] + Poly(f, [f.zero, f.one])

    def det(rows, cols):
        if len(cols) == 1:
            return entries[rows[0]][cols[0]]
        acc = Poly.zero(f)
        r = rows[0]
        for k, c in enumerate(cols):
            term = entries[r][c] * det(rows[1:], cols[:k] + cols[k + 1:])
            acc = acc + term if k % 2 == 0 else acc - term
        return acc

    return det(tuple(range(n)), tuple(range(n)))


def det_oracle(a):
    """Determinant by cofactor expansion (scalar entries)."""
    f = a.field

    def det(rows, cols):
        if len(cols) == 1:
            return a.data[rows[0]][cols[0]]
        acc = f.zero
        r = rows[0]
        for k, c in enumerate(cols):
            term = f.mul(a.data[r][c], det(rows[1:], cols[:k] + cols[k + 1:]))
            acc = f.add(acc, term) if k % 2 == 0 else f.sub(acc, term)
        return acc

    return det(tuple(range(a.rows)), tuple(range(a.cols)))


def adjugate_oracle(a):
    """Classical adjugate from signed cofactors."""
    f = a.field
    n = a.rows
    out = Matrix.zeros(f, n, n)
    rows = tuple(range(n))
    for i in range(n):
        for j in range(n):
            sub = Matrix(f, [[a.data[r][c] for c in rows if c != j]
                             for r in rows if r != i])
            cof = det_oracle(sub) if n > 1 else f.one
            out.data[j][i] = cof if (i + j) % 2 == 0 else f.neg(cof)
    return out


def rand_matrix(rng, field, n, lo=-5, hi=5):
    return Matrix.from_ints(
        field, [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def rand_poly(rng, field, deg, lo=-4, hi=4):
    coeffs = [rng.randint(lo, hi) for _ in range(deg)] + [rng.choice([1, 1, 2, -3])]
    return Poly.from_ints(field, coeffs)


def random_unimodular(rng, field, n, steps=None):
    """Integer matrix with determinant +-1, built from elementary ops."""
    u = Matrix.identity(field, n)
    steps = steps if steps is not None else 3 * n
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        kind = rng.random()
        if kind < 0.7:
            c = field.from_int(rng.choice([-2, -1, 1, 2]))
            u.data[i] = [field.add(x, field.mul(c, y))
                         for x, y in zip(u.data[i], u.data[j])]
        else:
            u.data[i], u.data[j] = u.data[j], u.data[i]
    return u


IRREDUCIBLE_QUADRATICS = [
    [-2, 0, 1],    # x^2 - 2
    [-3, 0, 1],    # x^2 - 3
    [1, 0, 1],     # x^2 + 1
    [1, 1, 1],     # x^2 + x + 1
    [-6, 0, 1],    # x^2 - 6
    [3, -1, 1],    # x^2 - x + 3
]


def random_normal_form(rng, field, n_max=10):
    """Ground-truth rational normal form with mixed linear and quadratic
    factors.  Returns (matrix J, multiset {(factor coeff tuple, k): count})."""
    linear_pool = list(range(-4, 6))
    rng.shuffle(linear_pool)
    quad_pool = list(IRREDUCIBLE_QUADRATICS)
    rng.shuffle(quad_pool)
    budget = rng.randint(2, n_max)
    pieces = []       # (factor Poly, [cycle lengths])
    while budget > 0:
        use_quad = quad_pool and (budget >= 2 and rng.random() < 0.5)
        if use_quad:
            q = Poly.from_ints(field, quad_pool.pop())
            d = 2
        elif linear_pool:
            q = Poly.x_minus(field, field.from_int(linear_pool.pop()))
            d = 1
        else:
            break
        lengths = []
        while budget >= d and (not lengths or rng.random() < 0.5):
            k = rng.randint(1, budget // d)
            lengths.append(k)
            budget -= k * d
        if lengths:
            pieces.append((q, lengths))
    if not pieces:
        lam = field.from_int(linear_pool.pop())
        pieces = [(Poly.x_minus(field, lam), [1])]
    n = sum(q.degree * k for q, ls in pieces for k in ls)
    j = Matrix.zeros(field, n, n)
    offset = 0
    multiset = {}
    for q, lengths in pieces:
        for k in lengths:
            blk = cycle_block_matrix(q, k, "rational", "upper")
            for r in range(blk.rows):
                for c in range(blk.cols):
                    j.data[offset + r][offset + c] = blk.data[r][c]
            offset += blk.rows
            key = (tuple(q.coeffs), k)
            multiset[key] = multiset.get(key, 0) + 1
    return j, multiset


def conjugate_random(rng, j):
    u = random_unimodular(rng, j.field, j.rows)
    return mat_mul(mat_mul(u, j), mat_inverse(u))


def block_multiset(dec):
    out = {}
    for blk in dec.blocks:
        key = (tuple(blk.factor.coeffs), blk.cycle_length)
        out[key] = out.get(key, 0) + 1
    return out


def rng_for(name):
    return random.Random(f"jnf::{name}")
