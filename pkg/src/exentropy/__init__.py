"""Numerical toolkit for the exponential type-alpha entropy family.

Classical entropies on the probability simplex, their density-operator
versions built on a self-contained complex Jacobi eigensolver, projective
measurements, pure-state ensembles, and a seeded property-based
verification harness for the family's structural laws.
"""

from .channels import (
    Ensemble,
    ProjectorSet,
    ensemble_from_unitary,
    mix_ensemble,
    projective_measure,
    projectors_from_basis,
)
from .classical import (
    Distribution,
    exp_entropy,
    exp_thc_entropy,
    exp_thc_grid,
    exp_thc_max,
    kapur_entropy,
    renyi_entropy,
    sample_simplex,
    shannon_entropy,
    thc_entropy,
)
from .errors import (
    AlphaOutOfRange,
    DimensionMismatch,
    ExentropyError,
    InvalidConfig,
    InvalidDistribution,
    NegativeEigenvalue,
    NoConvergence,
    NotHermitian,
    NotOrthonormal,
    NotPositive,
    NotUnitary,
    ParamsEqual,
    TraceNotOne,
)
from .linalg import (
    Spectrum,
    hermitian_eig,
    sample_density,
    sample_haar_unitary,
    trace_power,
    validate_density,
)
from .quantum import DensityOperator, exp_qthc, exp_qthc_bound, rank, von_neumann
from .verify import (
    DEFAULT_ALPHAS,
    DEFAULT_DIMS,
    DEFAULT_TOLERANCES,
    PropertyRecord,
    SuiteConfig,
    VerificationReport,
    check_all,
    check_classical,
    check_ensemble,
    check_measurement,
    check_quantum,
    replay,
    reports_to_document,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRange",
    "DEFAULT_ALPHAS",
    "DEFAULT_DIMS",
    "DEFAULT_TOLERANCES",
    "DensityOperator",
    "DimensionMismatch",
    "Distribution",
    "Ensemble",
    "ExentropyError",
    "InvalidConfig",
    "InvalidDistribution",
    "NegativeEigenvalue",
    "NoConvergence",
    "NotHermitian",
    "NotOrthonormal",
    "NotPositive",
    "NotUnitary",
    "ParamsEqual",
    "ProjectorSet",
    "PropertyRecord",
    "Spectrum",
    "SuiteConfig",
    "TraceNotOne",
    "VerificationReport",
    "check_all",
    "check_classical",
    "check_ensemble",
    "check_measurement",
    "check_quantum",
    "ensemble_from_unitary",
    "exp_entropy",
    "exp_qthc",
    "exp_qthc_bound",
    "exp_thc_entropy",
    "exp_thc_grid",
    "exp_thc_max",
    "hermitian_eig",
    "kapur_entropy",
    "mix_ensemble",
    "projective_measure",
    "projectors_from_basis",
    "rank",
    "renyi_entropy",
    "replay",
    "reports_to_document",
    "sample_density",
    "sample_haar_unitary",
    "sample_simplex",
    "shannon_entropy",
    "thc_entropy",
    "trace_power",
    "validate_density",
    "von_neumann",
    "__version__",
]
