"""Exception hierarchy shared across the package."""


class PetzqdError(Exception):
    """Base class for all package errors."""


class ShapeError(PetzqdError):
    """Operand dimensions are inconsistent with the requested operation."""


class SizeCapError(PetzqdError):
    """A dense matrix would exceed the configured entry cap."""


class NonHermitianError(PetzqdError):
    """Input is not Hermitian within tolerance."""


class ReferenceRankError(PetzqdError):
    """Petz reference state is rank-deficient."""


class SupportError(PetzqdError):
    """Operator carries weight outside the support it must live on."""


class RecoveryNegativityError(PetzqdError):
    """Recovered operator has a negative eigenvalue too large to clip."""


class ConfigError(PetzqdError):
    """Experiment configuration is malformed or inconsistent."""
