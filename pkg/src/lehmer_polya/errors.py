class MagnitudeError(ValueError):
    """Input is outside the range where a computation is proven exact/deterministic."""


class FactorizationError(RuntimeError):
    """A composite cofactor survived every splitting strategy."""

    def __init__(self, n: int, cofactor: int):
        super().__init__(f"could not split cofactor {cofactor} of {n}")
        self.n = n
        self.cofactor = cofactor


class ConsistencyError(RuntimeError):
    """An identity that must hold for every Lehmer quintic failed; indicates a bug."""


class PerfectSquareError(ValueError):
    """The quartic is the square of a polynomial, so the curve has infinitely many points."""
