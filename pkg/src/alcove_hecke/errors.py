"""Exception types shared across the package."""


class AlcoveHeckeError(Exception):
    """Base class for all package errors."""


class MalformedInput(AlcoveHeckeError):
    """A descriptor, literal, or file could not be parsed or validated."""


class UnknownPreset(MalformedInput):
    """Requested root-datum preset does not exist."""


class CartanNotFiniteType(AlcoveHeckeError):
    """The Cartan matrix of the input data is not of finite type."""


class TorsionQuotient(AlcoveHeckeError):
    """The quotient of the character lattice by the root lattice has torsion."""


class NoVarsigma(AlcoveHeckeError):
    """The pairing-one system for the distinguished coweight has no solution."""


class DimensionMismatch(AlcoveHeckeError):
    """A vector has the wrong number of coordinates."""


class NoLift(AlcoveHeckeError):
    """A functional on the root lattice has no lift to the coweight lattice."""


class NotFinitary(AlcoveHeckeError):
    """A generator subset spans an infinite parabolic subgroup."""


class Unrepresentable(AlcoveHeckeError):
    """A coset unexpectedly has no canonical representative."""


class NotSpherical(AlcoveHeckeError):
    """An element is not a minimal coset representative where one is required."""


class NotRestricted(AlcoveHeckeError):
    """An element is not restricted where a restricted one is required."""


class NotDominant(AlcoveHeckeError):
    """A coweight is not dominant where a dominant one is required."""


class FlavorMismatch(AlcoveHeckeError):
    """Filtration flavors do not match the operation's contract."""


class BoundsTooLarge(AlcoveHeckeError):
    """Requested sweep bounds exceed the guard rails of the suite runner."""
