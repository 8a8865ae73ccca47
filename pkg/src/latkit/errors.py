"""Exception types shared across the workbench."""


class LatkitError(Exception):
    """Base class for all workbench errors."""


class DegenerateForm(LatkitError):
    """A form or matrix required to be nondegenerate has determinant zero."""


class ShapeMismatch(LatkitError):
    """Matrix dimensions are incompatible with the requested operation."""


class ZeroScale(LatkitError):
    """Rescaling a lattice by zero."""


class UnknownName(LatkitError):
    """Unrecognized standard-lattice name."""


class BadParams(LatkitError):
    """Standard-lattice parameters out of range or missing."""


class NotIsotropic(LatkitError):
    """Subgroup is not isotropic for the discriminant form."""


class TooLarge(LatkitError):
    """Finite group exceeds the configured search bound."""


class NotTwoElementary(LatkitError):
    """Finite form whose group is not of exponent two."""


class CoparityOne(LatkitError):
    """Quadratic values are not all integral mod 2Z."""


class OddLattice(LatkitError):
    """Operation requires an even lattice."""


class RankMismatch(LatkitError):
    """Lattices of different ranks where equal ranks are required."""


class DefiniteLattice(LatkitError):
    """Operation requires an indefinite lattice."""


class NotHyperbolic(LatkitError):
    """Operation requires signature (1, n)."""


class NotE8Minus2(LatkitError):
    """Sublattice does not span a copy of E8(-2)."""


class NonIntegralGK(LatkitError):
    """Fixed-locus invariants g, k are not integral for these (r, a)."""


class NoSuitableVector(LatkitError):
    """No primitive vector of the required norm exists."""


class NotPositiveDefinite(LatkitError):
    """Operation requires a positive definite lattice."""


class NotNegativeDefinite(LatkitError):
    """Operation requires a negative definite lattice."""


class NotEvenDefinite(LatkitError):
    """Operation requires an even positive definite form."""


class ComplementNotDefinite(LatkitError):
    """Orthogonal complement is not negative definite."""


class NotPrimitive(LatkitError):
    """Sublattice is not primitive (saturated) in its ambient lattice."""


class NotDefinite(LatkitError):
    """Binary form is not definite (or has the wrong sign)."""


class NotIndefinite(LatkitError):
    """Binary form is not indefinite."""


class SquareDiscriminant(LatkitError):
    """Cycle methods do not apply to square discriminants."""


class DiscriminantMismatch(LatkitError):
    """Forms or lattices with different discriminants."""


class OutOfMethodRange(LatkitError):
    """Requested value outside the validity range of the cycle method."""


class SearchExhausted(LatkitError):
    """Bounded search hit its resource cap before completing."""


class BadParameters(LatkitError):
    """Transform parameters violate their defining relations."""
