"""Sparse polynomials in two variable blocks and symmetric-function vectors.

SparsePoly lives in x_1..x_n, y_1..y_m with RatK coefficients; variables are
indexed 0..n-1 (x block) and n..n+m-1 (y block). Treat instances as
immutable: every operation returns a fresh polynomial.

SymFuncVec is a basis-tagged, partition-indexed vector (monomial or power
sum). Basis vectors are variable-count independent; the monomial <-> power
sum transition is computed per weight class in the stable range (weight many
variables) and cached.
"""

from fractions import Fraction

from .coeffs import ONE, RatK, ZERO, ratk
from .partitions import Partition, partitions_of, z_factor

MONOMIAL = "monomial"
POWERSUM = "powersum"


class SparsePoly:
    """Sparse polynomial: map from exponent tuples (length n+m) to RatK."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n, m, terms=None):
        self.n = n
        self.m = m
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    @property
    def nvars(self):
        return self.n + self.m

    @classmethod
    def zero(cls, n, m):
        return cls(n, m)

    @classmethod
    def constant(cls, n, m, c):
        c = ratk(c)
        return cls(n, m, {(0,) * (n + m): c} if c else None)

    @classmethod
    def one(cls, n, m):
        return cls.constant(n, m, ONE)

    @classmethod
    def variable(cls, n, m, idx, power=1):
        e = [0] * (n + m)
        e[idx] = power
        return cls(n, m, {tuple(e): ONE})

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def _check_blocks(self, other):
        if self.n != other.n or self.m != other.m:
            raise ValueError("block size mismatch: (%d,%d) vs (%d,%d)"
                             % (self.n, self.m, other.n, other.m))

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and self.m == other.m and self.terms == other.terms

    def __add__(self, other):
        self._check_blocks(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = SparsePoly(self.n, self.m)
        res.terms = out
        return res

    def __neg__(self):
        res = SparsePoly(self.n, self.m)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = ratk(c)
        res = SparsePoly(self.n, self.m)
        if c:
            res.terms = {e: c * v for e, v in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, RatK, Fraction)):
            return self.scale(other)
        self._check_blocks(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                s = p if s is None else s + p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = SparsePoly(self.n, self.m)
        res.terms = out
        return res

    __rmul__ = __mul__

    def euler(self, i):
        """x_i d/dx_i: multiply every term by its i-th exponent."""
        res = SparsePoly(self.n, self.m)
        for e, c in self.terms.items():
            if e[i]:
                res.terms[e] = c * e[i]
        return res

    def deriv(self, i):
        """Partial derivative in variable i."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[e2] = c * e[i]
        res = SparsePoly(self.n, self.m)
        res.terms = out
        return res

    def mul_var(self, i, power=1):
        res = SparsePoly(self.n, self.m)
        for e, c in self.terms.items():
            res.terms[e[:i] + (e[i] + power,) + e[i + 1:]] = c
        return res

    def subst_equal(self, i, j):
        """Substitute variable i := variable j (merge the exponents)."""
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            le[j] += le[i]
            le[i] = 0
            e2 = tuple(le)
            s = out.get(e2, ZERO) + c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        res = SparsePoly(self.n, self.m)
        res.terms = out
        return res

    def swap_vars(self, i, j):
        res = SparsePoly(self.n, self.m)
        for e, c in self.terms.items():
            le = list(e)
            le[i], le[j] = le[j], le[i]
            res.terms[tuple(le)] = c
        return res

    def div_var_diff(self, a, b):
        """Divide exactly by (v_a - v_b); returns (quotient, remainder).

        The remainder is the substitution v_a := v_b of the input, so the
        division is exact iff the remainder is the zero polynomial.
        """
        levels = {}
        for e, c in self.terms.items():
            levels.setdefault(e[a], {})[e] = c
        q = {}
        rem = levels.get(0, {}).copy()
        for d in range(max(levels, default=0), 0, -1):
            for e, c in levels.get(d, {}).items():
                if not c:
                    continue
                eq = e[:a] + (d - 1,) + e[a + 1:]
                s = q.get(eq, ZERO) + c
                if s:
                    q[eq] = s
                else:
                    q.pop(eq, None)
                eb = eq[:b] + (eq[b] + 1,) + eq[b + 1:]
                if d - 1 == 0:
                    t = rem.get(eb, ZERO) + c
                    if t:
                        rem[eb] = t
                    else:
                        rem.pop(eb, None)
                else:
                    lvl = levels.setdefault(d - 1, {})
                    t = lvl.get(eb, ZERO) + c
                    if t:
                        lvl[eb] = t
                    else:
                        lvl.pop(eb, None)
        quo = SparsePoly(self.n, self.m)
        quo.terms = q
        res = SparsePoly(self.n, self.m)
        res.terms = {e: c for e, c in rem.items() if c}
        return quo, res

    def specialize(self, k0):
        """Evaluate every coefficient at k = k0; variables stay symbolic."""
        k0 = Fraction(k0)
        out = {}
        for e, c in self.terms.items():
            v = c.specialize(k0)
            if v:
                out[e] = RatK.from_fraction(v)
        res = SparsePoly(self.n, self.m)
        res.terms = out
        return res

    def evaluate(self, point, k0):
        """Exact value at rational coordinates (x block then y block)."""
        point = [Fraction(p) for p in point]
        if len(point) != self.nvars:
            raise ValueError("expected %d coordinates, got %d" % (self.nvars, len(point)))
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c.specialize(k0)
            for x, p in zip(point, e):
                if p:
                    v *= x ** p
            total += v
        return total

    def sorted_terms(self):
        """Terms in graded-lexicographic descending order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "terms": [{"exp": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj):
        n, m = int(obj["n"]), int(obj["m"])
        poly = cls(n, m)
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["exp"])
            if len(e) != n + m:
                raise ValueError("exponent vector of length %d, expected %d" % (len(e), n + m))
            c = RatK.from_json(t["coeff"])
            if c:
                poly.terms[e] = poly.terms.get(e, ZERO) + c
        poly.terms = {e: c for e, c in poly.terms.items() if c}
        return poly

    def _var_name(self, i):
        return "x%d" % (i + 1) if i < self.n else "y%d" % (i - self.n + 1)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                self._var_name(i) + ("^%d" % p if p > 1 else "")
                for i, p in enumerate(e) if p)
            cs = str(c)
            if mono:
                body = mono if cs == "1" else ("-" + mono if cs == "-1" else "%s*%s" % (cs, mono))
            else:
                body = cs
            if chunks and not body.startswith("-"):
                chunks.append("+ " + body)
            elif chunks:
                chunks.append("- " + body[1:])
            else:
                chunks.append(body)
        return " ".join(chunks)

    def __repr__(self):
        return "SparsePoly(%d, %d, %s)" % (self.n, self.m, self)


class SymFuncVec:
    """Homogeneous symmetric function in the monomial or power-sum basis."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in (MONOMIAL, POWERSUM):
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        self.coeffs = {}
        w = None
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if w is None:
                w = lam.weight
            elif lam.weight != w:
                raise ValueError("mixed weights in one vector: %d and %d" % (w, lam.weight))
            if c:
                self.coeffs[lam] = c

    @property
    def weight(self):
        for lam in self.coeffs:
            return lam.weight
        return None

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, SymFuncVec):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def add(self, other):
        if self.basis != other.basis:
            raise ValueError("basis mismatch")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, ZERO) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return SymFuncVec(self.basis, out)

    def scale(self, c):
        c = ratk(c)
        if not c:
            return SymFuncVec(self.basis)
        return SymFuncVec(self.basis, {lam: c * v for lam, v in self.coeffs.items()})

    def __repr__(self):
        body = " + ".join("(%s)*%s_%s" % (c, self.basis[0], lam.to_string() or "()")
                          for lam, c in sorted(self.coeffs.items()))
        return body or "0"


# ---------------------------------------------------------------------------
# monomial symmetric polynomials

def _distinct_perms(items):
    """All distinct orderings of a multiset, deterministically."""
    counts = {}
    for v in items:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    out = [0] * len(items)

    def rec(pos):
        if pos == len(items):
            yield tuple(out)
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                out[pos] = v
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


def expand_monomial_sym(lam, n):
    """The monomial symmetric polynomial m_lam in x_1..x_n (y block empty)."""
    lam = Partition(lam)
    if lam.length > n:
        return SparsePoly.zero(n, 0)
    padded = list(lam) + [0] * (n - lam.length)
    poly = SparsePoly(n, 0)
    for e in _distinct_perms(padded):
        poly.terms[e] = ONE
    return poly


# ---------------------------------------------------------------------------
# power sum <-> monomial transitions, per weight class, in the stable range

_TRANSITIONS = {}


def _int_psum_times(poly, r, nvars):
    """Multiply an int-coefficient dict polynomial by sum_i x_i^r."""
    out = {}
    for e, c in poly.items():
        for i in range(nvars):
            e2 = e[:i] + (e[i] + r,) + e[i + 1:]
            out[e2] = out.get(e2, 0) + c
    return out


def _transition(d):
    """(partition list, T, Tinv) for weight d.

    T[mu][lam] is the integer coefficient of m_lam in p_mu; Tinv[lam][mu] is
    the Fraction coefficient of p_mu in m_lam.
    """
    if d in _TRANSITIONS:
        return _TRANSITIONS[d]
    plist = partitions_of(d)
    nv = max(d, 1)
    T = {}
    for mu in plist:
        poly = {(0,) * nv: 1}
        for r in mu:
            poly = _int_psum_times(poly, r, nv)
        row = {}
        for lam in plist:
            rep = tuple(lam) + (0,) * (nv - lam.length)
            c = poly.get(rep, 0)
            if c:
                row[lam] = c
        T[mu] = row
    # Gauss-Jordan inversion over Q
    size = len(plist)
    idx = {lam: i for i, lam in enumerate(plist)}
    mat = [[Fraction(T[mu].get(lam, 0)) for lam in plist] for mu in plist]
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if mat[r][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = mat[col][col]
        mat[col] = [x / p for x in mat[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(size):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # row lam of the inverse holds the power-sum expansion of m_lam
    Tinv = {}
    for i, lam in enumerate(plist):
        Tinv[lam] = {plist[j]: inv[i][j] for j in range(size) if inv[i][j]}
    _TRANSITIONS[d] = (plist, T, Tinv)
    return _TRANSITIONS[d]


def powersum_to_monomial(mu):
    """Expansion of p_mu in monomial symmetric functions (stable range)."""
    mu = Partition(mu)
    _, T, _ = _transition(mu.weight)
    return SymFuncVec(MONOMIAL, {lam: RatK.from_int(c) for lam, c in T[mu].items()})


def monomial_to_powersum(lam):
    """Expansion of m_lam in power sums (inverse transition, exact)."""
    lam = Partition(lam)
    _, _, Tinv = _transition(lam.weight)
    return SymFuncVec(POWERSUM, {mu: RatK.from_fraction(c) for mu, c in Tinv[lam].items()})


def to_powersum(vec):
    if vec.basis == POWERSUM:
        return vec
    out = {}
    for lam, c in vec.coeffs.items():
        for mu, f in monomial_to_powersum(lam).coeffs.items():
            s = out.get(mu, ZERO) + c * f
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
    return SymFuncVec(POWERSUM, out)


def to_monomial(vec):
    if vec.basis == MONOMIAL:
        return vec
    out = {}
    for mu, c in vec.coeffs.items():
        for lam, f in powersum_to_monomial(mu).coeffs.items():
            s = out.get(lam, ZERO) + c * f
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
    return SymFuncVec(MONOMIAL, out)


def hall_inner_product(f, g):
    """Deformed Hall pairing <p_lam, p_mu> = delta * z_lam * k^{-len(lam)}."""
    if f.basis != POWERSUM or g.basis != POWERSUM:
        raise ValueError("hall_inner_product expects power-sum vectors")
    if f.is_zero() or g.is_zero():
        return ZERO
    if f.weight != g.weight:
        raise ValueError("weight mismatch: %d vs %d" % (f.weight, g.weight))
    total = ZERO
    for lam, a in f.coeffs.items():
        b = g.coeffs.get(lam)
        if b:
            kpow = (0,) * lam.length + (1,)
            total = total + a * b * RatK._raw((z_factor(lam),), kpow if lam.length else (1,))
    return total


def realize(vec, n):
    """Substitute the basis elements by polynomials in x_1..x_n (no y block)."""
    poly = SparsePoly.zero(n, 0)
    if vec.basis == MONOMIAL:
        for lam, c in vec.coeffs.items():
            poly = poly + expand_monomial_sym(lam, n).scale(c)
        return poly
    for mu, c in vec.coeffs.items():
        prod = SparsePoly.one(n, 0)
        for r in mu:
            ps = SparsePoly(n, 0)
            for i in range(n):
                ps.terms[(0,) * i + (r,) + (0,) * (n - i - 1)] = ONE
            prod = prod * ps
        poly = poly + prod.scale(c)
    return poly


def evaluate(f, point, k0):
    """Exact rational value of a SparsePoly at rational coordinates and k0."""
    return f.evaluate(point, k0)
