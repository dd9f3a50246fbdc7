"""Exact two-block (super) Jack polynomials and the deformed
Calogero-Moser-Sutherland operator for gl(n|m), with a numeric gauge
verification harness and a JSON CLI."""

from .coeffs import K, ONE, PoleError, RatK, ZERO, ratk
from .cmsop import (AlgebraMembershipError, EigenfunctionError, RootSystemData,
                    Weight, apply_m, bilinear_k, extract_eigenvalue, rho_k,
                    rho_norm)
from .gauge import (GaugeReport, Jet2, SingularConfigurationError, apply_sl,
                    conjugation_check, delta_k, first_order_freeness)
from .jack import ChiTable, chi_table, jack_in_monomial
from .oracles import (SuperTableau, classical_eigenvalue, hook_schur_twisted,
                      jack_eigenvector_oracle, super_tableaux)
from .partitions import (Partition, conjugate, dominance_leq, in_hook,
                         partitions_of, z_factor)
from .superjack import (SuperJack, eigenvalue, is_doubly_symmetric,
                        is_quasi_invariant, super_jack, super_power_sum)
from .sympoly import (MONOMIAL, POWERSUM, SparsePoly, SymFuncVec, evaluate,
                      expand_monomial_sym, hall_inner_product,
                      monomial_to_powersum, powersum_to_monomial, realize,
                      to_monomial, to_powersum)

__version__ = "0.1.0"
