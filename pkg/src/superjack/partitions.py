"""Integer partitions: the index set for every symmetric-function basis.

A partition is stored as a weakly decreasing tuple of positive integers.
The canonical text form is a comma-separated list of parts ("3,1"; the
empty string for the empty partition); it is used for CLI arguments,
cache keys and JSON keys.
"""

from functools import lru_cache
from math import factorial


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (possibly empty)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError("partition parts must be positive: %r" % (parts,))
            if i and parts[i - 1] < p:
                raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        """Column lengths of the Young diagram."""
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def to_string(self):
        return ",".join(str(p) for p in self)

    @classmethod
    def from_string(cls, s):
        s = s.strip()
        if not s:
            return cls()
        try:
            parts = [int(tok) for tok in s.split(",")]
        except ValueError:
            raise ValueError("cannot parse partition %r" % s) from None
        return cls(parts)

    def __repr__(self):
        return "Partition(%s)" % (self.to_string() or "()")


def dominance_leq(mu, lam):
    """True iff every prefix sum of mu is <= the matching prefix sum of lam.

    Both partitions must have the same weight.
    """
    mu, lam = Partition(mu), Partition(lam)
    if mu.weight != lam.weight:
        raise ValueError("dominance order needs equal weights: |%s| != |%s|" % (mu, lam))
    acc_mu = acc_lam = 0
    for i in range(max(len(mu), len(lam))):
        acc_mu += mu[i] if i < len(mu) else 0
        acc_lam += lam[i] if i < len(lam) else 0
        if acc_mu > acc_lam:
            return False
    return True


def conjugate(lam):
    return Partition(lam).conjugate()


def z_factor(lam):
    """prod_i i^{m_i} * m_i! over part multiplicities m_i."""
    z = 1
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        z *= p ** m * factorial(m)
    return z


def in_hook(lam, n, m):
    """True iff the diagram fits the (n, m) hook, i.e. lam_{n+1} <= m."""
    if n < 0 or m < 0:
        raise ValueError("block sizes must be nonnegative")
    lam = Partition(lam)
    return (lam[n] if len(lam) > n else 0) <= m


@lru_cache(maxsize=None)
def _partitions_of(d):
    if d == 0:
        return (Partition(),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for first in range(min(maxpart, remaining), 0, -1):
            rec(remaining - first, first, prefix + (first,))

    rec(d, d, ())
    return tuple(out)


def partitions_of(d):
    """All partitions of weight d, in reverse-lexicographic (descending) order."""
    if d < 0:
        raise ValueError("weight must be nonnegative")
    return list(_partitions_of(d))
