"""
Exact scalar fields: the rationals and prime fields F_p.

Rational scalars are plain ``fractions.Fraction`` values.  Prime field
scalars are ``Mod`` instances.  Both support the usual arithmetic
operators, so formula code can be written once for either field.
"""

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Mod:
    """An element of F_p.  Immutable."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if k < 0:
            return Mod(pow(self.v, -1, self.p), self.p) ** (-k)
        return Mod(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "Mod(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class Field:
    """Base class for the two supported scalar fields."""

    name = "?"
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s):
        """Parse "p/q", an integer, or an int/Fraction into a field element."""
        if isinstance(s, str):
            s = s.strip()
            if "/" in s:
                num, den = s.split("/")
                return self(Fraction(int(num), int(den)))
            return self(int(s))
        return self(s)

    def format(self, x):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Mod):
            raise TypeError("cannot lift F_p element to Q")
        return Fraction(x)

    def format(self, x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)


class PrimeField(Field):
    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.characteristic = p
        self.name = "Fp:%d" % p

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError("mixed moduli")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(
                    "%s has denominator divisible by %d" % (x, self.p))
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Mod(int(x), self.p)

    def format(self, x):
        return str(self(x).v)


QQ = Rationals()

_prime_fields = {}


def GF(p):
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_descriptor(desc):
    """'Q' -> QQ, 'Fp:7' (or 'F7', 'GF(7)') -> GF(7)."""
    if isinstance(desc, Field):
        return desc
    d = desc.strip()
    if d in ("Q", "QQ"):
        return QQ
    for prefix in ("Fp:", "GF:", "F"):
        if d.startswith(prefix) and d[len(prefix):].isdigit():
            return GF(int(d[len(prefix):]))
    if d.startswith("GF(") and d.endswith(")"):
        return GF(int(d[3:-1]))
    raise ValueError("unknown field descriptor %r" % desc)
