"""Assembly of transformation matrix P and normal form J from cycles.

A cycle arrives as an ordered list of *groups*; group j holds the d column
vectors (w_j, A*w_j, ..., A^{d-1}*w_j) attached to the j-th link of a
Q(A)-Jordan chain (d = 1 collapses to the classical linear case).  The
per-cycle block is companion matrices of the factor on the diagonal plus a
coupling block between consecutive links: a single top-right 1 for the
pseudo-rational form, the identity for the rational (and split) forms.
"""

from dataclasses import dataclass

from .errors import InternalConsistencyError
from .matrix import Matrix, mat_mul, rank


@dataclass(frozen=True)
class CycleBlock:
    factor: object       # monic Poly
    cycle_length: int
    offset: int          # starting column in P / row in J


@dataclass
class JordanDecomposition:
    p: Matrix
    j: Matrix
    form: str            # "split" | "pseudo_rational" | "rational"
    blocks: list         # [CycleBlock, ...] in layout order
    field: object


def companion(q):
    """Companion matrix of a monic polynomial: subdiagonal 1s, last column
    the negated low-order coefficients."""
    f = q.field
    d = q.degree
    m = Matrix.zeros(f, d, d)
    for i in range(1, d):
        m.data[i][i - 1] = f.one
    for i in range(d):
        m.data[i][d - 1] = f.neg(q.coeffs[i])
    return m


def coupling_block(q, form):
    f = q.field
    d = q.degree
    if form == "pseudo_rational" and d > 1:
        e = Matrix.zeros(f, d, d)
        e.data[0][d - 1] = f.one
        return e
    return Matrix.identity(f, d)


def cycle_block_matrix(q, k, form, orientation):
    """The k*d x k*d block of J for one cycle of length k."""
    f = q.field
    d = q.degree
    comp = companion(q)
    coup = coupling_block(q, form)
    size = k * d
    j = Matrix.zeros(f, size, size)
    for g in range(k):
        for r in range(d):
            for c in range(d):
                j.data[g * d + r][g * d + c] = comp.data[r][c]
    for g in range(k - 1):
        if orientation == "upper":
            br, bc = g, g + 1
        else:
            br, bc = g + 1, g
        for r in range(d):
            for c in range(d):
                j.data[br * d + r][bc * d + c] = coup.data[r][c]
    return j


def assemble(a, factor_cycles, form, orientation):
    """Build P and J from per-factor cycle groups and verify A*P = P*J.

    ``factor_cycles``: ordered [(factor, cycles)], each cycle a list of
    groups, each group a list of column vectors.  Cycles are laid out per
    factor by decreasing length (ties keep discovery order); ``orientation``
    "upper" keeps group order (coupling above the diagonal), "lower"
    reverses it.
    """
    f = a.field
    n = a.rows
    columns = []
    blocks = []
    j = Matrix.zeros(f, n, n)
    for factor, cycles in factor_cycles:
        d = factor.degree
        for cycle in sorted(cycles, key=lambda cy: -len(cy)):
            k = len(cycle)
            offset = len(columns)
            blocks.append(CycleBlock(factor=factor, cycle_length=k, offset=offset))
            groups = cycle if orientation == "upper" else list(reversed(cycle))
            for group in groups:
                if len(group) != d:
                    raise InternalConsistencyError("group size does not match factor degree")
                columns.extend(group)
            jb = cycle_block_matrix(factor, k, form, orientation)
            for r in range(k * d):
                for c in range(k * d):
                    j.data[offset + r][offset + c] = jb.data[r][c]
    if len(columns) != n:
        raise InternalConsistencyError(
            f"collected {len(columns)} basis vectors for dimension {n}")
    p = Matrix.from_columns(f, columns, rows=n)
    if rank(p) != n:
        raise InternalConsistencyError("transformation matrix is singular")
    if mat_mul(a, p) != mat_mul(p, j):
        raise InternalConsistencyError("A*P != P*J after assembly")
    return JordanDecomposition(p=p, j=j, form=form, blocks=blocks, field=f)


def block_diagonal_part(dec):
    """The companion block-diagonal D of J (the N = J - D part carries the
    couplings)."""
    f = dec.field
    n = dec.j.rows
    d_mat = Matrix.zeros(f, n, n)
    for blk in dec.blocks:
        comp = companion(blk.factor)
        d = blk.factor.degree
        for g in range(blk.cycle_length):
            base = blk.offset + g * d
            for r in range(d):
                for c in range(d):
                    d_mat.data[base + r][base + c] = comp.data[r][c]
    return d_mat


def verify(a, dec):
    """Exact checks A*P = P*J and P nonsingular; returns True or raises."""
    if mat_mul(a, dec.p) != mat_mul(dec.p, dec.j):
        raise InternalConsistencyError("A*P != P*J")
    if rank(dec.p) != dec.p.rows:
        raise InternalConsistencyError("P is singular")
    return True
