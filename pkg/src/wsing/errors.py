"""Exception types raised on invalid input."""


class WsingError(ValueError):
    """Base class for rejected inputs."""


class InvalidWeights(WsingError):
    pass


class InvalidTriple(WsingError):
    pass


class InvalidCyclic(WsingError):
    pass


class HomogeneousInput(WsingError):
    """Raised when an operation needs q != 1 but got a homogeneous quotient."""
