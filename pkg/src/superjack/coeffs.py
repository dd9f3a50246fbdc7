"""The exact coefficient field Q(k).

A RatK is a reduced ratio num/den of integer-coefficient univariate
polynomials in the deformation parameter k, stored as ascending coefficient
tuples. Canonical form (enforced on every construction):

  * den != 0, trailing zeros stripped (the zero polynomial is (0,)),
  * the primitive parts of num and den are coprime in Z[k],
  * the integer contents of num and den are jointly reduced,
  * den has a positive leading coefficient.

Canonical form is unique, so equality is plain representation equality.
No floating point is used anywhere here; specialization returns Fractions.
"""

from fractions import Fraction
from math import gcd


class PoleError(ArithmeticError):
    """Specialization at a zero of the denominator."""


# ---------------------------------------------------------------------------
# integer polynomials as ascending coefficient tuples; zero is (0,)

def _strip(c):
    c = tuple(c)
    i = len(c)
    while i > 1 and c[i - 1] == 0:
        i -= 1
    return c[:i] if i < len(c) else c


def _is_zero(c):
    return len(c) == 1 and c[0] == 0


def _deg(c):
    return -1 if _is_zero(c) else len(c) - 1


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _strip(out)


def _neg(a):
    return tuple(-x for x in a)


def _sub(a, b):
    return _add(a, _neg(b))


def _mul(a, b):
    if _is_zero(a) or _is_zero(b):
        return (0,)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g or 1


def _primitive(a):
    """(content, primitive part); content > 0, sign stays in the part."""
    c = _content(a)
    return c, tuple(x // c for x in a)


def _prem_reduce(a, b):
    """Fraction-free remainder of a by b (up to a nonzero scalar)."""
    db = _deg(b)
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and not (len(r) == 1 and r[0] == 0):
        lead = r[-1]
        if lead == 0:
            r.pop()
            continue
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j, y in enumerate(b):
            r[j + shift] -= lead * y
        while len(r) > 1 and r[-1] == 0:
            r.pop()
    return _strip(r)


def _pp_gcd(a, b):
    """Gcd of primitive nonzero polynomials, primitive with positive lead."""
    if _deg(a) < _deg(b):
        a, b = b, a
    while not _is_zero(b):
        r = _prem_reduce(a, b)
        a, b = b, (_primitive(r)[1] if not _is_zero(r) else (0,))
    if a[-1] < 0:
        a = _neg(a)
    return a


def _gcd_full(a, b):
    """Gcd in Z[k] including integer content, positive leading coefficient."""
    if _is_zero(a):
        return b if b[-1] > 0 else _neg(b)
    if _is_zero(b):
        return a if a[-1] > 0 else _neg(a)
    ca, pa = _primitive(a)
    cb, pb = _primitive(b)
    g = _pp_gcd(pa, pb)
    c = gcd(ca, cb)
    return tuple(c * x for x in g) if c != 1 else g


def _div_exact(a, b):
    """Exact quotient a/b in Z[k]; raises if the division is not exact."""
    if _is_zero(a):
        return (0,)
    db = _deg(b)
    lb = b[-1]
    dq = _deg(a) - db
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    r = list(a)
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = r[db + i]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        qc = c // lb
        q[i] = qc
        if qc:
            for j, y in enumerate(b):
                r[j + i] -= qc * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _strip(q)


def _eval(a, x):
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return v


def _poly_str(a, var="k"):
    if _is_zero(a):
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else "%d*" % abs(c)
            term = "%s%s" % (mag, var if i == 1 else "%s^%d" % (var, i))
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


# ---------------------------------------------------------------------------

_ONE_P = (1,)
_ZERO_P = (0,)


def _canonical(num, den):
    num, den = _strip(num), _strip(den)
    if _is_zero(den):
        raise ZeroDivisionError("zero denominator in Q(k)")
    if _is_zero(num):
        return _ZERO_P, _ONE_P
    cn, pn = _primitive(num)
    cd, pd = _primitive(den)
    g = _pp_gcd(pn, pd) if _deg(pn) > 0 and _deg(pd) > 0 else _ONE_P
    if not _is_zero(g) and g != _ONE_P:
        pn = _div_exact(pn, g)
        pd = _div_exact(pd, g)
    # constant denominators: pd may be (+-1,)
    ci = gcd(cn, cd)
    cn //= ci
    cd //= ci
    if pd[-1] < 0:
        pn, pd = _neg(pn), _neg(pd)
    num = tuple(cn * x for x in pn) if cn != 1 else pn
    den = tuple(cd * x for x in pd) if cd != 1 else pd
    return num, den


class RatK:
    """Element of Q(k) in canonical form. Immutable."""

    __slots__ = ("num", "den")

    def __init__(self, num=(0,), den=(1,)):
        if isinstance(num, int):
            num = (num,)
        if isinstance(den, int):
            den = (den,)
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num, den):
        # trusted constructor: num/den already canonical
        self = object.__new__(cls)
        self.num, self.den = num, den
        return self

    @classmethod
    def from_int(cls, i):
        return cls._raw((int(i),), _ONE_P) if i else ZERO

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls._raw((fr.numerator,), (fr.denominator,)) if fr else ZERO

    def is_zero(self):
        return self.num == _ZERO_P

    def __bool__(self):
        return self.num != _ZERO_P

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        if self.is_zero():
            return self
        return RatK._raw(_neg(self.num), self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if a.den == _ONE_P and b.den == _ONE_P:
            s = _add(a.num, b.num)
            return ZERO if _is_zero(s) else RatK._raw(s, _ONE_P)
        if a.den == b.den:
            return RatK(_add(a.num, b.num), a.den)
        g = _gcd_full(a.den, b.den)
        if g == _ONE_P:
            num = _add(_mul(a.num, b.den), _mul(b.num, a.den))
            if _is_zero(num):
                return ZERO
            return RatK._raw(num, _mul(a.den, b.den))
        # Henrici: denominators b = g*b', d = g*d'
        bp = _div_exact(a.den, g)
        dp = _div_exact(b.den, g)
        t = _add(_mul(a.num, dp), _mul(b.num, bp))
        if _is_zero(t):
            return ZERO
        g2 = _gcd_full(t, g)
        if g2 != _ONE_P:
            t = _div_exact(t, g2)
            g = _div_exact(g, g2)
        return RatK._raw(t, _mul(_mul(bp, dp), g))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.is_zero() or b.is_zero():
            return ZERO
        if a.den == _ONE_P and b.den == _ONE_P:
            return RatK._raw(_mul(a.num, b.num), _ONE_P)
        # cross-cancel so the product is already reduced
        g1 = _gcd_full(a.num, b.den)
        g2 = _gcd_full(b.num, a.den)
        an = a.num if g1 == _ONE_P else _div_exact(a.num, g1)
        bd = b.den if g1 == _ONE_P else _div_exact(b.den, g1)
        bn = b.num if g2 == _ONE_P else _div_exact(b.num, g2)
        ad = a.den if g2 == _ONE_P else _div_exact(a.den, g2)
        return RatK._raw(_mul(an, bn), _mul(ad, bd))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(k)")
        num, den = other.den, other.num
        if den[-1] < 0:
            num, den = _neg(num), _neg(den)
        return self * RatK._raw(num, den)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def specialize(self, k0):
        """Exact value at k = k0 (a Fraction); raises PoleError at poles."""
        k0 = Fraction(k0)
        dv = _eval(self.den, k0)
        if dv == 0:
            raise PoleError("pole at k = %s" % k0)
        return _eval(self.num, k0) / dv

    def to_json(self):
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, obj):
        num = tuple(int(c) for c in obj["num"])
        den = tuple(int(c) for c in obj["den"])
        return cls(num, den)

    def __str__(self):
        ns = _poly_str(self.num)
        if self.den == _ONE_P:
            return ns
        if sum(1 for c in self.num if c) > 1:
            ns = "(%s)" % ns
        ds = _poly_str(self.den)
        if _deg(self.den) > 0:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def __repr__(self):
        return "RatK(%s)" % self


def _coerce(x):
    if isinstance(x, RatK):
        return x
    if isinstance(x, int):
        return RatK.from_int(x)
    if isinstance(x, Fraction):
        return RatK.from_fraction(x)
    return NotImplemented


ZERO = RatK._raw(_ZERO_P, _ONE_P)
ONE = RatK._raw(_ONE_P, _ONE_P)
K = RatK._raw((0, 1), _ONE_P)
INV_K = RatK._raw(_ONE_P, (0, 1))


def ratk(x):
    """Coerce an int, Fraction or RatK to RatK."""
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError("cannot coerce %r to RatK" % (x,))
    return r
