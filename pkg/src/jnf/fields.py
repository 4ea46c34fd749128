"""Exact coefficient fields: the rationals and prime fields F_p.

Field elements are plain canonical values (``Fraction``/``mpq`` for the
rationals, ints in ``[0, p)`` for F_p); a ``Field`` object supplies the
arithmetic.  Keeping elements raw instead of wrapped makes the inner loops
of the matrix routines considerably cheaper.
"""

from fractions import Fraction

from .errors import FieldMismatchError, ParseError, UnsupportedFieldError

try:  # gmpy2 rationals are drop-in compatible and much faster
    from gmpy2 import mpq as _ratio
except ImportError:  # pragma: no cover
    _ratio = Fraction


def is_prime(n):
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic beyond."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface; subclasses define the arithmetic."""

    char = 0

    @property
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def check_same(self, other):
        if self != other:
            raise FieldMismatchError(f"cannot mix {self!r} and {other!r}")

    def is_zero(self, a):
        return a == self.zero

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc


class Rationals(Field):
    """Arbitrary-precision reduced fractions."""

    char = 0

    def __init__(self):
        self.zero = _ratio(0)
        self.one = _ratio(1)

    @property
    def key(self):
        return ("Q",)

    def __repr__(self):
        return "QQ"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / _ratio(a)

    def from_int(self, k):
        return _ratio(k)

    def fraction(self, num, den=1):
        return _ratio(num, den)

    def parse(self, token):
        try:
            f = Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {token!r}") from exc
        return _ratio(f.numerator, f.denominator)

    def fmt(self, a):
        return str(a)


class PrimeField(Field):
    """Integers modulo a prime p; residues kept in [0, p)."""

    def __init__(self, p):
        if not is_prime(p):
            raise UnsupportedFieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    @property
    def key(self):
        return ("Fp", self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def from_int(self, k):
        return k % self.p

    def parse(self, token):
        if "/" in token:
            num, _, den = token.partition("/")
            try:
                return self.div(int(num) % self.p, int(den) % self.p)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad F_{self.p} element {token!r}") from exc
        try:
            return int(token) % self.p
        except ValueError as exc:
            raise ParseError(f"bad F_{self.p} element {token!r}") from exc

    def fmt(self, a):
        return str(a)


class CountingField(Field):
    """Wraps a field and counts operations; used by the complexity checks."""

    def __init__(self, base):
        self.base = base
        self.char = base.char
        self.zero = base.zero
        self.one = base.one
        self.counts = {"add": 0, "sub": 0, "mul": 0, "inv": 0, "neg": 0}

    @property
    def key(self):
        return self.base.key

    def __repr__(self):
        return f"Counting({self.base!r})"

    @property
    def total(self):
        return sum(self.counts.values())

    def add(self, a, b):
        self.counts["add"] += 1
        return self.base.add(a, b)

    def sub(self, a, b):
        self.counts["sub"] += 1
        return self.base.sub(a, b)

    def mul(self, a, b):
        self.counts["mul"] += 1
        return self.base.mul(a, b)

    def neg(self, a):
        self.counts["neg"] += 1
        return self.base.neg(a)

    def inv(self, a):
        self.counts["inv"] += 1
        return self.base.inv(a)

    def from_int(self, k):
        return self.base.from_int(k)

    def parse(self, token):
        return self.base.parse(token)

    def fmt(self, a):
        return self.base.fmt(a)


QQ = Rationals()
