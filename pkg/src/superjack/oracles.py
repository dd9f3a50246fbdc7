"""Independent cross-checks.

Three oracles that deliberately avoid the basis-conversion machinery of the
main pipeline (they share only the SparsePoly container):

  * hook_schur_twisted: tableau-generated hook Schur polynomial with the
    y -> -y twist, matching the two-block Jack polynomial at k = 1 with
    constant factor 1.
  * jack_eigenvector_oracle: rebuilds the classical Jack polynomial as the
    unique suitably normalized eigenvector of the m = 0 operator on one
    weight class.
  * classical_eigenvalue: the classical spectrum sum_i lam_i(lam_i + k(n+1-2i)).

Tableau conventions: the alphabet is 1 < ... < n < 1' < ... < m'; unprimed
letters increase weakly along rows and strictly down columns, primed letters
strictly along rows and weakly down columns. Enumeration is brute-force
recursive fill with pruning; everything here is desk scale.
"""

from .coeffs import K, ONE, RatK, ZERO, ratk
from .cmsop import apply_m
from .partitions import Partition, partitions_of
from .sympoly import MONOMIAL, SymFuncVec, SparsePoly


class SuperTableau:
    """A filling of a Young diagram by the ordered superalphabet.

    Letters are encoded 0..n-1 (unprimed) and n..n+m-1 (primed).
    """

    __slots__ = ("shape", "rows", "n", "m")

    def __init__(self, shape, rows, n, m):
        self.shape = Partition(shape)
        self.rows = [tuple(r) for r in rows]
        self.n = n
        self.m = m

    def primed_count(self):
        return sum(1 for r in self.rows for v in r if v >= self.n)

    def weights(self):
        w = [0] * (self.n + self.m)
        for r in self.rows:
            for v in r:
                w[v] += 1
        return tuple(w)

    def __repr__(self):
        def letter(v):
            return str(v + 1) if v < self.n else "%d'" % (v - self.n + 1)
        return "SuperTableau(%s)" % "; ".join(
            " ".join(letter(v) for v in r) for r in self.rows)


def _fillings(shape, n, m):
    shape = Partition(shape)
    cells = [(r, c) for r, len_r in enumerate(shape) for c in range(len_r)]
    rows = [[None] * len_r for len_r in shape]
    nm = n + m

    def ok(r, c, v):
        if c > 0:
            a = rows[r][c - 1]
            # weak along rows for unprimed, strict for primed
            if v < a or (v == a and a >= n):
                return False
        if r > 0:
            u = rows[r - 1][c]
            # strict down columns for unprimed, weak for primed
            if v < u or (v == u and u < n):
                return False
        return True

    def rec(idx):
        if idx == len(cells):
            yield SuperTableau(shape, [tuple(r) for r in rows], n, m)
            return
        r, c = cells[idx]
        lo = 0
        if c > 0:
            lo = rows[r][c - 1]
        if r > 0:
            lo = max(lo, rows[r - 1][c])
        for v in range(lo, nm):
            if ok(r, c, v):
                rows[r][c] = v
                yield from rec(idx + 1)
        rows[r][c] = None

    yield from rec(0)


def super_tableaux(shape, n, m):
    """All valid fillings of the diagram (desk scale)."""
    return list(_fillings(shape, n, m))


def hook_schur_twisted(lam, n, m):
    """Sum over tableaux of (-1)^{#primed} x^{weight} y^{weight}.

    The sign twist is the y -> -y substitution that reconciles the tableau
    convention with deformed power sums; with it the k = 1 polynomial
    comparison is an exact equality.
    """
    lam = Partition(lam)
    poly = SparsePoly(n, m)
    for tab in _fillings(lam, n, m):
        e = tab.weights()
        sign = -1 if tab.primed_count() % 2 else 1
        c = poly.terms.get(e, ZERO) + ratk(sign)
        if c:
            poly.terms[e] = c
        else:
            poly.terms.pop(e, None)
    return poly


def classical_eigenvalue(lam, n):
    """sum_i lam_i (lam_i + k(n + 1 - 2i))."""
    lam = Partition(lam)
    total = ratk(0)
    for i, li in enumerate(lam, start=1):
        total = total + ratk(li) * (ratk(li) + K * (n + 1 - 2 * i))
    return total


# ---------------------------------------------------------------------------
# eigenvector route to the classical Jack polynomial

def _oracle_monomials(lam, nvars):
    """m_lam realized in nvars variables, built by direct enumeration."""
    lam = Partition(lam)
    padded = list(lam) + [0] * (nvars - lam.length)
    seen = set()
    poly = SparsePoly(nvars, 0)

    def rec(pos, remaining):
        if pos == nvars:
            poly.terms[tuple(out)] = ONE
            return
        prev = None
        for idx, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            out.append(v)
            rec(pos + 1, remaining[:idx] + remaining[idx + 1:])
            out.pop()

    out = []
    rec(0, sorted(padded, reverse=True))
    return poly


def _mono_coeffs(poly, plist, nvars):
    """Read the monomial-basis coordinates off the representative exponents."""
    out = {}
    for lam in plist:
        rep = tuple(lam) + (0,) * (nvars - lam.length)
        c = poly.terms.get(rep)
        if c:
            out[lam] = c
    return out


def jack_eigenvector_oracle(lam):
    """The weight-|lam| eigenvector of the classical (m = 0) operator with
    eigenvalue classical_eigenvalue(lam, |lam|) and unit m_lam coefficient.

    Must coincide with the Gram-Schmidt construction; non-uniqueness of the
    eigenvector at generic k signals a bug and raises.
    """
    lam = Partition(lam)
    d = lam.weight
    if d == 0:
        return SymFuncVec(MONOMIAL, {Partition(): ONE})
    plist = partitions_of(d)
    size = len(plist)
    idx = {p: i for i, p in enumerate(plist)}
    # action[mu][nu]: coefficient of m_nu in the operator image of m_mu
    action = []
    for mu in plist:
        img = apply_m(_oracle_monomials(mu, d), d, 0)
        row = _mono_coeffs(img, plist, d)
        action.append([row.get(nu, ZERO) for nu in plist])
    ev = classical_eigenvalue(lam, d)
    # eigen equation: sum_mu v_mu action[mu][nu] = ev * v_nu for all nu
    mat = [[action[mu_i][nu_i] - (ev if mu_i == nu_i else ZERO)
            for mu_i in range(size)] for nu_i in range(size)]
    # Gaussian elimination to reduced row echelon form over Q(k)
    pivots = []
    r = 0
    for c in range(size):
        piv = next((i for i in range(r, size) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = ONE / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(size):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(size) if c not in pivots]
    if len(free) != 1:
        raise ArithmeticError(
            "eigenvector for %s is not unique at generic k (kernel dim %d)"
            % (lam, len(free)))
    fc = free[0]
    v = [ZERO] * size
    v[fc] = ONE
    for row, c in zip(range(len(pivots)), pivots):
        v[c] = -mat[row][fc]
    unit = v[idx[lam]]
    if not unit:
        raise ArithmeticError("eigenvector has zero coefficient at m_%s" % (lam,))
    inv = ONE / unit
    return SymFuncVec(MONOMIAL, {plist[i]: v[i] * inv for i in range(size) if v[i]})
