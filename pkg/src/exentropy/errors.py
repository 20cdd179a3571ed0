"""Exception types shared across the package."""


class ExentropyError(Exception):
    """Base class for every domain error raised by this package."""


class NotHermitian(ExentropyError):
    """Matrix differs from its conjugate transpose beyond tolerance."""


class NoConvergence(ExentropyError):
    """Eigensolver hit its sweep cap before the off-diagonal norm vanished."""


class NegativeEigenvalue(ExentropyError):
    """Spectrum contains an eigenvalue below the positive semidefinite slack."""


class NotPositive(ExentropyError):
    """Matrix has an eigenvalue below the positive semidefinite slack."""


class TraceNotOne(ExentropyError):
    """Matrix trace differs from 1 beyond tolerance."""


class InvalidDistribution(ExentropyError):
    """Probability vector is malformed, negative, or not normalized."""


class AlphaOutOfRange(ExentropyError):
    """Entropy order parameter is outside the domain of the measure."""


class ParamsEqual(ExentropyError):
    """Two order parameters that must differ are equal."""


class NotOrthonormal(ExentropyError):
    """Vector family fails the orthonormality check."""


class NotUnitary(ExentropyError):
    """Matrix fails the unitarity check."""


class DimensionMismatch(ExentropyError):
    """Operands have incompatible dimensions."""


class InvalidConfig(ExentropyError):
    """Verification suite configuration violates an invariant."""
