"""gammalab: a verification laboratory for gamma-function identities.

The package pairs a self-contained complex gamma/log-gamma implementation
with exact-arithmetic constructions and residual checkers:

* :mod:`gammalab.core` — Lanczos gamma, log-gamma, beta, Pochhammer;
* :mod:`gammalab.quadrature` — tanh-sinh integration, the integral
  definitions of gamma and beta as independent oracles;
* :mod:`gammalab.identities` — residuals and seeded grid verification for
  the recurrence, reflection, duplication, multiplication, sine/cosine
  factorization, and quarter-step relations;
* :mod:`gammalab.schlomilch` — factorial-series identities, their
  two-parameter generalization, and the hypergeometric machinery behind
  them, plus an exact binomial corollary;
* :mod:`gammalab.landau` — small-measure fundamental sets with exact
  rational bookkeeping and replayable derivation traces;
* :mod:`gammalab.stern` — exact rank counting of the linear relations
  among log-gamma values at rationals k/m;
* :mod:`gammalab.closure` — finite affine closures showing the
  measure-zero sharpness of the fundamental-set construction;
* :mod:`gammalab.mellin` — Mellin-transform checks of the master theorem
  for alternating power series;
* :mod:`gammalab.cli` — the ``gammalab`` command-line front end.
"""

from .core import beta, gamma, log_gamma, pochhammer, pole_distance
from .errors import (
    ConvergenceError,
    DepthError,
    DomainError,
    EmptyGridError,
    GammalabError,
    PoleError,
    ResourceError,
    TraceDepthError,
)
from .identities import (
    IdentityReport,
    SampleSpec,
    nonvanishing_scan,
    residual_comb,
    residual_cosine_identity,
    residual_duplication,
    residual_functional,
    residual_multiplication,
    residual_reflection,
    residual_sine_factorization,
    verify_grid,
)
from .intervals import IntervalSet, as_fraction
from .landau import (
    DerivationTrace,
    FundamentalSet,
    TraceNode,
    complex_reduce_trace,
    iteration_count,
    landau_construct,
    landau_lemma_decompose,
    quarter_set_trace,
    trace_evaluate,
    validate_trace,
)
from .quadrature import QuadratureSpec, beta_integral, gamma_integral, tanh_sinh

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "gamma",
    "log_gamma",
    "beta",
    "pochhammer",
    "pole_distance",
    "GammalabError",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "EmptyGridError",
    "ResourceError",
    "TraceDepthError",
    "DepthError",
    "QuadratureSpec",
    "tanh_sinh",
    "gamma_integral",
    "beta_integral",
    "SampleSpec",
    "IdentityReport",
    "verify_grid",
    "nonvanishing_scan",
    "residual_functional",
    "residual_reflection",
    "residual_duplication",
    "residual_multiplication",
    "residual_sine_factorization",
    "residual_comb",
    "residual_cosine_identity",
    "IntervalSet",
    "as_fraction",
    "FundamentalSet",
    "TraceNode",
    "DerivationTrace",
    "iteration_count",
    "landau_lemma_decompose",
    "landau_construct",
    "trace_evaluate",
    "quarter_set_trace",
    "complex_reduce_trace",
    "validate_trace",
]
