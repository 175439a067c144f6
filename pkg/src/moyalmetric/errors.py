"""Exception types shared across the package."""


class MoyalError(Exception):
    """Base class for domain errors raised by this package."""


class NonTerminatingStar(MoyalError):
    """Star-product series does not terminate for the given operands."""


class NonTerminatingTwist(MoyalError):
    """The conjugation-twist series does not terminate for the given symbol."""


class NonPolynomialHamiltonian(MoyalError):
    """Deriving the metric operator needs a polynomial Hamiltonian symbol."""


class UnsupportedKinetic(MoyalError):
    """The perturbative solver only handles Hamiltonians p^2 + g*V(x)."""


class NotUnitLeading(MoyalError):
    """Star-logarithm input must equal 1 at order g^0."""


class NonzeroLeading(MoyalError):
    """Star-exponential input must vanish at order g^0."""


class IrrationalDiscriminant(MoyalError):
    """Gaussian-metric discriminant is not a perfect square over Q(i)."""


class ZeroParameter(MoyalError):
    """Quadratic model needs nonzero p^2 and x^2 couplings."""


class BadDimension(MoyalError):
    """Finite Weyl algebra dimension out of range."""


class DimensionMismatch(MoyalError):
    """Binary operation on discrete symbols of different dimensions."""


class ParseError(MoyalError):
    """Expression text is not in the grammar; carries a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class NonQuadraticExponent(ParseError):
    """exp(...) argument is not a quadratic form in p and x."""


class NegativeXPower(ParseError):
    """Powers of x and g must stay non-negative."""


class InvalidDocument(MoyalError):
    """JSON document does not match the expected schema."""
