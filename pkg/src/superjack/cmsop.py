"""Root data of gl(n|m), the deformed bilinear form, and the rational-form
deformed CMS operator with exact eigenvalue extraction.

The operator acts on the algebra generated by the deformed power sums as

    sum_i (x_i d_i)^2 - k sum_j (y_j dbar_j)^2
    + k   sum_{i<i'} (x_i+x_i')/(x_i-x_i') (x_i d_i - x_i' d_i')
    -     sum_{j<j'} (y_j+y_j')/(y_j-y_j') (y_j dbar_j - y_j' dbar_j')
    -     sum_{i,j}  (x_i+y_j)/(x_i-y_j)  (x_i d_i + k y_j dbar_j)

with every division performed as exact polynomial division and a verified
zero remainder. The mixed term admits several printed sign/weight variants
in the literature; the one above is the unique choice under which each
mixed difference divides exactly and the eigenfunction property holds.
The naive variant (x_i d_i - y_j dbar_j) is available behind
literal_cross=True and fails the divisibility check; the failure is
reported, never papered over.
"""

from .coeffs import K, RatK, ZERO, ratk
from .partitions import Partition
from .sympoly import SparsePoly
from .superjack import super_jack


class AlgebraMembershipError(ArithmeticError):
    """A pairwise division left a nonzero remainder."""

    def __init__(self, message, pair=None, remainder=None):
        super().__init__(message)
        self.pair = pair
        self.remainder = remainder


class EigenfunctionError(ArithmeticError):
    """Operator image is not proportional to the input polynomial."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class Weight:
    """Exact coordinate vector over the basis eps_1..eps_n, epsbar_1..epsbar_m."""

    __slots__ = ("n", "m", "coords")

    def __init__(self, n, m, coords):
        coords = tuple(ratk(c) for c in coords)
        if len(coords) != n + m:
            raise ValueError("expected %d coordinates" % (n + m))
        self.n = n
        self.m = m
        self.coords = coords

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return (self.n, self.m, self.coords) == (other.n, other.m, other.coords)

    def __repr__(self):
        return "Weight(n=%d, m=%d, %s)" % (self.n, self.m,
                                           [str(c) for c in self.coords])


class RootSystemData:
    """Positive even roots and the odd roots of gl(n|m), as index pairs."""

    __slots__ = ("n", "m", "r11_pos", "r22_pos", "r12")

    def __init__(self, n, m):
        if n < 0 or m < 0:
            raise ValueError("block sizes must be nonnegative")
        self.n = n
        self.m = m
        self.r11_pos = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.r22_pos = [(i, j) for i in range(m) for j in range(i + 1, m)]
        self.r12 = [(i, j) for i in range(n) for j in range(m)]
        assert len(self.r11_pos) == n * (n - 1) // 2
        assert len(self.r22_pos) == m * (m - 1) // 2
        assert len(self.r12) == n * m


def bilinear_k(v, w):
    """Deformed pairing: sum over the even block minus k times the odd block."""
    if v.n != w.n or v.m != w.m:
        raise ValueError("dimension mismatch")
    total = ZERO
    for i in range(v.n):
        total = total + v.coords[i] * w.coords[i]
    odd = ZERO
    for j in range(v.m):
        odd = odd + v.coords[v.n + j] * w.coords[v.n + j]
    return total - K * odd


def rho_k(n, m):
    """The deformed half-sum of roots: k rho_1 + (1/k) rho_2 - rho_12."""
    coords = []
    for i in range(1, n + 1):
        # k (n - 2i + 1)/2 - m/2
        coords.append(RatK((-m, n - 2 * i + 1), (2,)))
    for j in range(1, m + 1):
        # (m - 2j + 1)/(2k) + n/2
        coords.append(RatK((m - 2 * j + 1,), (0, 2)) + RatK((n,), (2,)))
    return Weight(n, m, coords)


def rho_norm(n, m):
    r = rho_k(n, m)
    return bilinear_k(r, r)


def _divide(poly, a, b, pair_kind):
    quo, rem = poly.div_var_diff(a, b)
    if not rem.is_zero():
        raise AlgebraMembershipError(
            "input not in the deformed symmetric algebra "
            "(nonzero remainder on the %s pair %s)" % (pair_kind, ((a, b),)),
            pair=(pair_kind, a, b), remainder=rem)
    return quo


def apply_m(f, n=None, m=None, literal_cross=False):
    """Apply the deformed CMS operator exactly.

    Pairwise terms are evaluated in a fixed order (x pairs, then y pairs,
    then mixed pairs, each lexicographic) and every division must be exact.
    """
    if n is None:
        n = f.n
    if m is None:
        m = f.m
    if f.n != n or f.m != m:
        raise ValueError("block size mismatch between polynomial and (n, m)")
    result = SparsePoly.zero(n, m)
    # diagonal squared Euler operators
    diag = {}
    for e, c in f.terms.items():
        w = sum(ei * ei for ei in e[:n]) - sum(ej * ej for ej in e[n:]) * K
        v = c * w
        if v:
            diag[e] = v
    dpoly = SparsePoly(n, m)
    dpoly.terms = diag
    result = result + dpoly
    # x-block pairs, weighted by k
    for i in range(n):
        for i2 in range(i + 1, n):
            g = f.euler(i) - f.euler(i2)
            if g.is_zero():
                continue
            quo = _divide(g, i, i2, "even-even")
            term = quo.mul_var(i) + quo.mul_var(i2)
            result = result + term.scale(K)
    # y-block pairs, unit weight, opposite sign
    for j in range(m):
        for j2 in range(j + 1, m):
            g = f.euler(n + j) - f.euler(n + j2)
            if g.is_zero():
                continue
            quo = _divide(g, n + j, n + j2, "odd-odd")
            result = result - (quo.mul_var(n + j) + quo.mul_var(n + j2))
    # mixed pairs
    for i in range(n):
        for j in range(m):
            if literal_cross:
                g = f.euler(i) - f.euler(n + j)
            else:
                g = f.euler(i) + f.euler(n + j).scale(K)
            if g.is_zero():
                continue
            quo = _divide(g, i, n + j, "mixed")
            result = result - (quo.mul_var(i) + quo.mul_var(n + j))
    return result


def extract_eigenvalue(lam, n, m):
    """Apply the operator to the two-block Jack polynomial and read off the
    eigenvalue, verifying exact proportionality coefficient by coefficient."""
    lam = Partition(lam)
    p = super_jack(lam, n, m).poly
    if p.is_zero():
        raise ValueError("polynomial vanishes for %s in blocks (%d, %d)"
                         % (lam, n, m))
    image = apply_m(p, n, m)
    e0 = next(iter(p.terms))
    c = image.terms.get(e0, ZERO) / p.terms[e0]
    residual = image - p.scale(c)
    if not residual.is_zero():
        raise EigenfunctionError(
            "operator image is not proportional to the input for %s in blocks (%d, %d)"
            % (lam, n, m), residual=residual)
    return c
