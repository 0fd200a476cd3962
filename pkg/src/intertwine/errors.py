"""Exception types shared across the package."""


class IntertwineError(Exception):
    """Base class for all package-specific errors."""


class IndexOutOfSpectrum(IntertwineError):
    """Requested level does not exist in the model's discrete spectrum."""


class NormalizationFailure(IntertwineError):
    """Quadrature for a normalization constant did not converge."""


class EvaluationAtSingularity(IntertwineError):
    """A potential or coefficient was evaluated at a singular point."""


class UnsupportedModel(IntertwineError):
    """Operation is not defined for the given model."""


class InvalidLevel(IntertwineError):
    """Level index violates an operator's admissibility condition."""


class DivisionByZeroAlpha(IntertwineError):
    """Ladder construction hit a vanishing root factor with a nonzero remainder term."""


class InsufficientDerivativeOrder(IntertwineError):
    """A composition asked for more derivatives than the operand can supply."""


class TargetOutOfSpectrum(IntertwineError):
    """A mapping targets a level beyond the discrete spectrum."""


class DegenerateImage(IntertwineError):
    """An operator annihilated the state it was applied to (image norm ~ 0)."""


class NonConstantEpsilon(IntertwineError):
    """Fitted energy offset varies across test functions (wrong parameter flow)."""


class ChainBreak(IntertwineError):
    """An intermediate step of a ladder chain exceeded its mapping tolerance."""


class TruncationTooTight(IntertwineError):
    """Eigenvector mass leaks into the truncation boundary region."""
