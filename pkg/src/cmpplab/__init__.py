"""Exact-arithmetic verification lab for coloured-partition identities.

The package expands coloured-partition generating functions, theta and
Pochhammer products, Hall-Littlewood specialisations and explicit
multisums as truncated formal power series with exact integer
coefficients, and checks the identities and functional equations tying
them together through a declarative catalog (see cmpplab.funceq and the
command-line front-end cmpplab.cli).
"""

from .series import Mismatch, QSeries, poch, qbin
from .partitions import (Partition, conjugate, frequencies, n_stat,
                         partition_stats, partitions_iter)
from .cmpp import FrequencyArray, gen_fun, gordon_series, max_path_sum
from .products import (PochFactor, ProductSpec, ThetaFactor, char_product,
                       expand, quotient_product, theta_q)
from .hall_littlewood import (bailey_beta_check, hl_chain_sum, hl_inf_spec,
                              hl_ls_2r1s, hl_principal_finite,
                              hl_sum_over_bounded, hl_symmetrization,
                              hl_weighted_chain, prop_gow_sum)
from .multisums import (ag_sum, atomic_residual, f_sum, s_series, shun2_sum,
                        shun_sum, wz_sum)
from .macdonald import (HalfWeight, macdonald_sum, pi_product,
                        specialized_character_sum)
from .funceq import EquationSpec, ParamError, catalog, list_checks, residual
from .d2solver import solve_d2_system

__all__ = [
    "EquationSpec", "FrequencyArray", "HalfWeight", "Mismatch", "ParamError",
    "Partition", "PochFactor", "ProductSpec", "QSeries", "ThetaFactor",
    "ag_sum", "atomic_residual", "bailey_beta_check", "catalog",
    "char_product", "conjugate", "expand", "f_sum", "frequencies", "gen_fun",
    "gordon_series", "hl_chain_sum", "hl_inf_spec", "hl_ls_2r1s",
    "hl_principal_finite", "hl_sum_over_bounded", "hl_symmetrization",
    "hl_weighted_chain", "list_checks", "macdonald_sum", "max_path_sum",
    "n_stat", "partition_stats", "partitions_iter", "pi_product", "poch",
    "prop_gow_sum", "qbin", "quotient_product", "residual", "s_series",
    "shun2_sum", "shun_sum", "solve_d2_system", "specialized_character_sum",
    "theta_q", "wz_sum",
]
