"""Exception types shared across the library.

Every error carries a machine-readable ``kind`` tag that the CLI copies
into its JSON error reports.
"""


class QkitError(ValueError):
    """Base class for all library errors."""

    kind = "error"


class DimensionMismatchError(QkitError):
    kind = "dimension-mismatch"


class NonHermitianError(QkitError):
    kind = "non-hermitian"


class DensityError(QkitError):
    """Operator fails the positive / unit-trace density conditions."""

    kind = "non-density"


class OrthonormalityError(QkitError):
    kind = "non-orthonormal"


class FrameResidualError(QkitError):
    """Frame does not resolve the identity tightly enough to quantize."""

    kind = "frame-residual"


class DegenerateFormError(QkitError):
    kind = "degenerate-form"


class DomainError(QkitError):
    """Function and measure space do not match, or a point value is missing."""

    kind = "domain-mismatch"


class IntegrationError(QkitError):
    kind = "non-finite-state"


class GradientError(QkitError):
    """Supplied analytic gradient disagrees with finite differences."""

    kind = "bad-gradient"


class ConfigError(QkitError):
    """Invalid CLI configuration; maps to exit code 2."""

    kind = "config"

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
