"""Exception hierarchy shared across the library."""


class LfclassError(Exception):
    """Base class for all library-specific errors."""


class PoleError(LfclassError):
    """Evaluation requested too close to a pole."""


class NonConvergence(LfclassError):
    """An adaptive numerical procedure exhausted its refinement budget."""


class IrrationalConductor(LfclassError):
    """The conductor is irrational but an exact value was requested."""


class NegativeRealPart(LfclassError):
    """A shifted gamma-factor parameter acquired a negative real part."""


class NotDegreeTwo(LfclassError):
    pass


class NotConductorOne(LfclassError):
    pass


class ChiNotReal(LfclassError):
    pass


class ParityUndefined(LfclassError):
    """chi < 0 but the root number is not +-1, so no parity can be assigned."""


class FrequencyCollision(LfclassError):
    """Two numerically close but not provably equal frequencies in a sine expansion."""


class PrefactorMismatch(LfclassError):
    """Exponential/power prefactors failed to cancel (degree or conductor off)."""


class IllConditioned(LfclassError):
    """Numeric invariant extraction failed to stabilize."""


class StructuralViolation(LfclassError):
    """A quadratic form contained an index pair outside the allowed range."""


class NormalizationFailure(LfclassError):
    """The pinned normalizing coefficient of a quadratic form vanished."""


class InterpolationMismatch(LfclassError):
    """Polynomial interpolation failed its held-out verification points."""


class FitUnstable(LfclassError):
    """Least-squares design matrix too ill-conditioned to trust."""


class SlowConvergence(LfclassError):
    """Refusing to evaluate where the series would lose precision."""


class DescriptorError(LfclassError):
    """A gamma-factor descriptor file is malformed."""
