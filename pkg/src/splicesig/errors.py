"""Exception types shared across the package."""


class SpliceSigError(Exception):
    """Base class for all library-specific errors."""


class GuardViolated(SpliceSigError):
    """A gluing formula was evaluated at a character excluded by its validity guard.

    The splice formula needs (upsilon', upsilon'') != (1, 1); the single-variable
    splice needs xi^gcd(lambda', lambda'') != 1.  At such characters the additive
    formula genuinely fails (it can be off by a bounded correction), so evaluation
    refuses to return a number.
    """


class BoundaryCharacter(SpliceSigError):
    """A signature was requested at a character outside the evaluator's domain.

    Typically: a coordinate equals 1 and no sublink data for the corresponding
    color deletion was supplied.
    """


class NotHermitian(SpliceSigError):
    """An evaluated matrix failed the exact Hermitian check."""


class NotReal(SpliceSigError):
    """sign_real() was called on a cyclotomic number not fixed by conjugation."""


class NullityUnavailable(SpliceSigError):
    """Nullity was requested from a Seifert family whose generators are not a basis."""


class LevelMismatch(SpliceSigError):
    """Arithmetic combined cyclotomic numbers living at different levels N."""


class InvalidFamily(SpliceSigError):
    """A Seifert family violated a structural invariant badly enough to stop."""


class InvalidParams(SpliceSigError):
    """Cabling or reduction parameters violate their invariants (e.g. gcd(p, q) != 1)."""


class MissingBaseEvaluator(SpliceSigError):
    """A cabling step needed a torus-link base signature that was not supplied.

    There is no closed form for the signature of V u dU(p,q) at arbitrary
    multivariate characters, so the caller must provide one (a SeifertFamily
    fixture, usually) except in the built-in cases: p*q = 0, or d = 1 with the
    axis character equal to 1.
    """


class ExpressionError(SpliceSigError):
    """A splice-expression document could not be parsed or wired together."""
