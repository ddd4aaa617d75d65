"""Generalized Davenport expansions and their satellite identities.

Submodules: :mod:`~davenport.arith` (sieves, convolution, F_k kernels),
:mod:`~davenport.special` (Bernoulli numbers, zeta values),
:mod:`~davenport.series` (both sides of the expansion),
:mod:`~davenport.continuity` (coefficient-growth probes),
:mod:`~davenport.ramanujan` (Ramanujan sums), :mod:`~davenport.appell`
(Appell polynomials and spectral coefficients), :mod:`~davenport.cli`.
"""

from .arith import (LIOUVILLE, LOG, MOBIUS, ONE, UNIT, VON_MANGOLDT, ArithmeticFunctionId,
                    FactorSieve, FkTable, SequenceTable, build_sieve, compute_Fk,
                    dirichlet_convolve, dirichlet_series_partial, evaluate, power,
                    segal_limit, sigma, tabulate)
from .special import (EULER_GAMMA, bernoulli, harmonic_estimate, pn_constant, zeta_nonpositive,
                      zeta_real)
from .series import (EvalReport, ExpansionParams, FourierCoefficients, classic_davenport,
                     fourier_coefficients, lhs_partial, rhs_partial, verify_identity)

__version__ = "0.1.0"
