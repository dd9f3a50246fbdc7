"""Classical Jack polynomials, monic in the monomial basis.

Construction: Gram-Schmidt over Q(k) against the deformed Hall pairing
<p_lam, p_mu> = delta * z_lam * k^{-len(lam)}, processing each weight class
in a dominance-compatible order. The parameter k is the inverse of the
alpha normalization common elsewhere; the weight-2 polynomial
P_(2) = m_(2) + (2k/(k+1)) m_(1,1) pins the convention and is a unit test.

chi_table(lam) gives the power-sum expansion coefficients used to build the
deformed (two-block) polynomials downstream.
"""

from .coeffs import ONE, ZERO
from .partitions import Partition, partitions_of
from .sympoly import (MONOMIAL, POWERSUM, SymFuncVec, hall_inner_product,
                      monomial_to_powersum)

_CLASSES = {}


def _weight_class(d):
    """All Jack polynomials of weight d: lam -> (monomial vec, power-sum vec)."""
    if d in _CLASSES:
        return _CLASSES[d]
    done = []
    # ascending lexicographic order refines dominance, so every earlier
    # partition is either dominance-lower or incomparable
    for lam in sorted(partitions_of(d)):
        mvec = {lam: ONE}
        pvec = dict(monomial_to_powersum(lam).coeffs)
        for mu, m_mu, p_mu, norm in done:
            c = _hall(pvec, p_mu) / norm
            if c:
                for nu, v in m_mu.items():
                    s = mvec.get(nu, ZERO) - c * v
                    if s:
                        mvec[nu] = s
                    else:
                        mvec.pop(nu, None)
                for nu, v in p_mu.items():
                    s = pvec.get(nu, ZERO) - c * v
                    if s:
                        pvec[nu] = s
                    else:
                        pvec.pop(nu, None)
        done.append((lam, mvec, pvec, _hall(pvec, pvec)))
    _CLASSES[d] = {lam: (m, p) for lam, m, p, _ in done}
    return _CLASSES[d]


def _hall(p1, p2):
    return hall_inner_product(SymFuncVec(POWERSUM, p1), SymFuncVec(POWERSUM, p2))


def jack_in_monomial(lam):
    """P_lam as a monomial-basis vector, monic at m_lam."""
    lam = Partition(lam)
    mvec, _ = _weight_class(lam.weight)[lam]
    return SymFuncVec(MONOMIAL, mvec)


class ChiTable:
    """Power-sum expansion coefficients of one Jack polynomial."""

    __slots__ = ("lam", "entries")

    def __init__(self, lam, entries):
        self.lam = Partition(lam)
        self.entries = {Partition(mu): c for mu, c in entries.items() if c}

    def __eq__(self, other):
        if not isinstance(other, ChiTable):
            return NotImplemented
        return self.lam == other.lam and self.entries == other.entries

    def to_json(self):
        keys = [mu for mu in partitions_of(self.lam.weight) if mu in self.entries]
        return {
            "lambda": self.lam.to_string(),
            "chi": {mu.to_string(): self.entries[mu].to_json() for mu in keys},
        }

    @classmethod
    def from_json(cls, obj):
        from .coeffs import RatK
        lam = Partition.from_string(obj["lambda"])
        entries = {Partition.from_string(s): RatK.from_json(c)
                   for s, c in obj["chi"].items()}
        return cls(lam, entries)

    def __repr__(self):
        return "ChiTable(%s)" % self.lam.to_string()


def chi_table(lam):
    """Expansion P_lam = sum_mu chi[mu] * p_mu, exactly in Q(k)."""
    lam = Partition(lam)
    _, pvec = _weight_class(lam.weight)[lam]
    return ChiTable(lam, pvec)
