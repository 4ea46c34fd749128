"""Dense exact matrices, matrix-coefficient polynomials, and the
column-tracking reduction stack used by the cycle-collection algorithms.

Column reduction is realized everywhere as row reduction of the transpose;
there is exactly one reduction engine (``rref_with_ops``).
"""

from .errors import (FieldMismatchError, InternalConsistencyError,
                     NonMonicDivisorError, SingularMatrixError)
from .poly import Poly


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def from_ints(cls, field, rows):
        return cls(field, [[field.from_int(x) for x in row] for row in rows])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        if not columns:
            return cls.zeros(field, rows or 0, 0)
        n = len(columns[0])
        return cls(field, [[col[i] for col in columns] for i in range(n)])

    @property
    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"

    def __getitem__(self, rc):
        return self.data[rc[0]][rc[1]]

    def copy(self):
        return Matrix(self.field, self.data)

    def column(self, j):
        return [row[j] for row in self.data]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self):
        f = self.field
        return all(f.is_zero(x) for row in self.data for x in row)

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        self.field.check_same(other.field)

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.data, other.data)])

    def __neg__(self):
        f = self.field
        return Matrix(f, [[f.neg(x) for x in row] for row in self.data])

    def scale(self, c):
        f = self.field
        return Matrix(f, [[f.mul(c, x) for x in row] for row in self.data])

    def __mul__(self, other):
        return mat_mul(self, other)

    def mul_vector(self, v):
        f = self.field
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for row in self.data:
            acc = f.zero
            for a, b in zip(row, v):
                acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self.cols)])

    def hstack(self, other):
        self._check(other)
        if self.rows != other.rows:
            raise ValueError("shape mismatch")
        return Matrix(self.field, [ra + rb for ra, rb in zip(self.data, other.data)])

    def vstack(self, other):
        self._check(other)
        if self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.data + other.data)

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of non-square matrix")
        return self.field.sum(self.data[i][i] for i in range(self.rows))

    def pow(self, k):
        if not self.is_square:
            raise ValueError("power of non-square matrix")
        acc = Matrix.identity(self.field, self.rows)
        for _ in range(k):
            acc = mat_mul(acc, self)
        return acc


def mat_mul(a, b):
    """Classical O(n^3) exact product."""
    a._check(b)
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    f = a.field
    bt = b.transpose().data
    out = []
    for ra in a.data:
        row = []
        for cb in bt:
            acc = f.zero
            for x, y in zip(ra, cb):
                acc = f.add(acc, f.mul(x, y))
            row.append(acc)
        out.append(row)
    return Matrix(f, out)


def rref_with_ops(m):
    """Reduced row echelon form with pivots normalized to 1.

    Pivot selection scans top-to-bottom for the first nonzero entry (the
    arithmetic is exact, so no magnitude pivoting).  Returns
    (reduced, ops, rank, pivots) where ``ops`` replays the reduction:
    ('swap', i, j), ('scale', i, c), ('addmul', i, j, c) meaning
    row_i += c * row_j.
    """
    f = m.field
    data = [list(row) for row in m.data]
    rows, cols = m.rows, m.cols
    ops = []
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = None
        for i in range(r, rows):
            if not f.is_zero(data[i][c]):
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            data[pr], data[r] = data[r], data[pr]
            ops.append(("swap", pr, r))
        piv = data[r][c]
        if piv != f.one:
            inv = f.inv(piv)
            data[r] = [f.mul(inv, x) for x in data[r]]
            ops.append(("scale", r, inv))
        for i in range(rows):
            if i == r or f.is_zero(data[i][c]):
                continue
            factor = f.neg(data[i][c])
            data[i] = [f.add(x, f.mul(factor, y)) for x, y in zip(data[i], data[r])]
            ops.append(("addmul", i, r, factor))
        pivots.append((r, c))
        r += 1
    return Matrix(f, data), ops, r, pivots


def replay_ops(m, ops):
    """Apply a recorded op list to a matrix with the same row count."""
    f = m.field
    data = [list(row) for row in m.data]
    for op in ops:
        if op[0] == "swap":
            _, i, j = op
            data[i], data[j] = data[j], data[i]
        elif op[0] == "scale":
            _, i, c = op
            data[i] = [f.mul(c, x) for x in data[i]]
        else:
            _, i, j, c = op
            data[i] = [f.add(x, f.mul(c, y)) for x, y in zip(data[i], data[j])]
    return Matrix(f, data)


def rank(m):
    return rref_with_ops(m)[2]


def det(m):
    """Determinant by fraction-full Gaussian elimination."""
    if not m.is_square:
        raise ValueError("determinant of non-square matrix")
    f = m.field
    data = [list(row) for row in m.data]
    n = m.rows
    sign_flip = False
    acc = f.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if not f.is_zero(data[i][c]):
                pr = i
                break
        if pr is None:
            return f.zero
        if pr != c:
            data[pr], data[c] = data[c], data[pr]
            sign_flip = not sign_flip
        piv = data[c][c]
        acc = f.mul(acc, piv)
        inv = f.inv(piv)
        for i in range(c + 1, n):
            if f.is_zero(data[i][c]):
                continue
            factor = f.neg(f.mul(inv, data[i][c]))
            data[i] = [f.add(x, f.mul(factor, y)) for x, y in zip(data[i], data[c])]
    return f.neg(acc) if sign_flip else acc


def mat_inverse(m):
    """Exact inverse via Gauss-Jordan on [m | I]."""
    if not m.is_square:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    aug = m.hstack(Matrix.identity(m.field, n))
    reduced, _, _, pivots = rref_with_ops(aug)
    # invertible iff every pivot of the augmented reduction stays in the
    # left half (the identity half always completes the rank)
    if [c for _, c in pivots[:n]] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Matrix(m.field, [row[n:] for row in reduced.data])


def kernel_basis(m):
    """Basis of the right null space as a list of column vectors."""
    f = m.field
    reduced, _, _, pivots = rref_with_ops(m)
    pivot_cols = {c: r for r, c in pivots}
    free_cols = [c for c in range(m.cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for r, c in pivots:
            v[c] = f.neg(reduced.data[r][fc])
        basis.append(v)
    return basis


class MatPoly:
    """Polynomial with square matrix coefficients, lowest degree first."""

    __slots__ = ("field", "coeffs", "size")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        # remember the size before trimming so an identically zero
        # polynomial still knows its coefficient shape
        size = coeffs[0].rows if coeffs else 0
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = coeffs
        self.size = size
        for c in coeffs:
            if not c.is_square or c.rows != self.size:
                raise ValueError("coefficients must be square of equal size")
            if c.field != field:
                raise FieldMismatchError("coefficient field mismatch")

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def lambda_i_minus(cls, a):
        """The degree-1 matrix polynomial lambda*I - A."""
        return cls(a.field, [-a, Matrix.identity(a.field, a.rows)])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        if k < len(self.coeffs):
            return self.coeffs[k]
        return Matrix.zeros(self.field, self.size, self.size)

    def __eq__(self, other):
        return (isinstance(other, MatPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"MatPoly(degree={self.degree}, size={self.size})"

    def __add__(self, other):
        self.field.check_same(other.field)
        n = max(len(self.coeffs), len(other.coeffs))
        size = max(self.size, other.size)
        zero = Matrix.zeros(self.field, size, size)
        out = []
        for k in range(n):
            a = self.coeffs[k] if k < len(self.coeffs) else zero
            b = other.coeffs[k] if k < len(other.coeffs) else zero
            out.append(a + b)
        return MatPoly(self.field, out)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c):
        return MatPoly(self.field, [m.scale(c) for m in self.coeffs])

    def mul_poly(self, p):
        """Multiply by a scalar polynomial, entrywise."""
        self.field.check_same(p.field)
        if self.is_zero or p.is_zero:
            return MatPoly.zero(self.field)
        size = self.size
        out = [Matrix.zeros(self.field, size, size)
               for _ in range(len(self.coeffs) + len(p.coeffs) - 1)]
        for i, m in enumerate(self.coeffs):
            for j, c in enumerate(p.coeffs):
                if self.field.is_zero(c):
                    continue
                out[i + j] = out[i + j] + m.scale(c)
        return MatPoly(self.field, out)

    def mul_matpoly(self, other):
        self.field.check_same(other.field)
        if self.is_zero or other.is_zero:
            return MatPoly.zero(self.field)
        size = self.size
        out = [Matrix.zeros(self.field, size, size)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + mat_mul(a, b)
        return MatPoly(self.field, out)

    def shift_degree(self, k):
        if self.is_zero:
            return self
        zero = Matrix.zeros(self.field, self.size, self.size)
        return MatPoly(self.field, [zero] * k + self.coeffs)


def horner_eval(mp, a):
    """Evaluate at a scalar by Horner: one scaling + addition per degree."""
    if mp.is_zero:
        raise ValueError("cannot size the value of an empty matrix polynomial")
    acc = mp.coeffs[-1]
    for k in range(len(mp.coeffs) - 2, -1, -1):
        acc = acc.scale(a) + mp.coeffs[k]
    return acc


def horner_shift(mp, a):
    """Synthetic division by (lambda - a): mp = (lambda - a)*quotient + rem.

    Iterating on the quotient yields the Taylor coefficients at ``a``
    without any factorial division, so it is valid in any characteristic.
    """
    f = mp.field
    if mp.is_zero:
        return MatPoly.zero(f), Matrix.zeros(f, mp.size, mp.size)
    if mp.degree == 0:
        return MatPoly.zero(f), mp.coeffs[0]
    quot = [None] * (len(mp.coeffs) - 1)
    carry = mp.coeffs[-1]
    for k in range(len(mp.coeffs) - 2, -1, -1):
        quot[k] = carry
        carry = mp.coeffs[k] + carry.scale(a)
    return MatPoly(f, quot), carry


def matpoly_reconstruct_shifts(shifts, a, field, size):
    """Rebuild sum_k shifts[k] * (lambda - a)^k; oracle helper."""
    lin = Poly.x_minus(field, a)
    acc = MatPoly.zero(field)
    power = Poly.one(field)
    for mat in shifts:
        acc = acc + MatPoly(field, [mat]).mul_poly(power)
        power = power * lin
    return acc


def matpoly_div_q(mp, q):
    """Divide a matrix polynomial by a monic scalar polynomial.

    Returns (quotient, remainder) with mp = quotient*q + remainder and
    deg(remainder) < deg(q); no coefficient division happens since q is
    monic.
    """
    if q.is_zero or not q.is_monic:
        raise NonMonicDivisorError("divisor must be monic and nonzero")
    mp.field.check_same(q.field)
    f = mp.field
    d = q.degree
    if mp.is_zero or mp.degree < d:
        return MatPoly.zero(f), mp
    size = mp.size
    zero = Matrix.zeros(f, size, size)
    rem = list(mp.coeffs)
    quot = [zero] * (len(rem) - d)
    for k in range(len(rem) - 1, d - 1, -1):
        lead = rem[k]
        quot[k - d] = lead
        for j in range(d + 1):
            rem[k - d + j] = rem[k - d + j] - lead.scale(q.coeffs[j])
    return MatPoly(f, quot), MatPoly(f, rem[:d])


def poly_at_matrix(p, a):
    """Evaluate a scalar polynomial at a square matrix (matrix Horner)."""
    p.field.check_same(a.field)
    f = a.field
    acc = Matrix.zeros(f, a.rows, a.rows)
    ident = Matrix.identity(f, a.rows)
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, a) + ident.scale(c)
    return acc


class ReducedStack:
    """Blocks stacked one under another, columns aligned.

    Internally each column chain is one row of ``chain_matrix`` (the
    transpose of the stacked picture): row j = (s_0 | s_1 | ... | s_{L-1})
    where s_t is the chain's segment in block t, block 0 on top.  Every
    elementary operation acts on whole rows, so it hits all blocks at once,
    which is what preserves the inter-block chain relations.
    """

    def __init__(self, field, seg_len, levels, chain_rows):
        self.field = field
        self.seg_len = seg_len
        self.levels = levels
        self.chain_rows = [list(r) for r in chain_rows]
        for r in self.chain_rows:
            if len(r) != seg_len * levels:
                raise ValueError("bad chain row length")

    @classmethod
    def from_blocks(cls, blocks):
        """Build from matrices [block_0, ..., block_{L-1}], block 0 on top.
        Chains are the aligned columns."""
        if not blocks:
            raise ValueError("empty stack")
        field = blocks[0].field
        seg_len = blocks[0].rows
        width = blocks[0].cols
        for b in blocks:
            if b.rows != seg_len or b.cols != width or b.field != field:
                raise ValueError("blocks must agree in shape and field")
        rows = []
        for j in range(width):
            row = []
            for b in blocks:
                row.extend(b.column(j))
            rows.append(row)
        return cls(field, seg_len, len(blocks), rows)

    @property
    def num_chains(self):
        return len(self.chain_rows)

    def chain_segments(self, idx):
        """Segments [s_0, ..., s_{L-1}] of one chain."""
        n = self.seg_len
        row = self.chain_rows[idx]
        return [row[t * n:(t + 1) * n] for t in range(self.levels)]

    def blocks(self):
        """The stacked-matrix view: list of L matrices, block 0 first."""
        n = self.seg_len
        out = []
        for t in range(self.levels):
            cols = [row[t * n:(t + 1) * n] for row in self.chain_rows]
            out.append(Matrix.from_columns(self.field, cols, rows=n))
        return out

    def reduce(self):
        """Row-reduce the chain matrix (full RREF, pivots scanned left to
        right so the top block is reduced first).  Returns (new stack,
        indices of chains whose pivot lies in the top block, ops)."""
        if not self.chain_rows:
            return self, [], []
        m = Matrix(self.field, self.chain_rows)
        reduced, ops, _, pivots = rref_with_ops(m)
        new = ReducedStack(self.field, self.seg_len, self.levels, reduced.data)
        top = [r for r, c in pivots if c < self.seg_len]
        return new, top, ops

    def shift_down(self, idx):
        """Move chain ``idx`` one block lower: the deepest segment drops
        off and a zero segment enters on top.  A single-level chain is
        retired (removed)."""
        f = self.field
        n = self.seg_len
        if self.levels == 1:
            del self.chain_rows[idx]
            return
        row = self.chain_rows[idx]
        self.chain_rows[idx] = [f.zero] * n + row[:(self.levels - 1) * n]

    def drop_zero_chains(self):
        f = self.field
        self.chain_rows = [r for r in self.chain_rows
                           if any(not f.is_zero(x) for x in r)]

    def cut_top(self):
        """Remove the (all-zero) top block; the chain length shrinks by 1."""
        f = self.field
        n = self.seg_len
        for row in self.chain_rows:
            if any(not f.is_zero(x) for x in row[:n]):
                raise InternalConsistencyError("cut_top with nonzero top segment")
        self.chain_rows = [row[n:] for row in self.chain_rows]
        self.levels -= 1
