"""Exceptions raised by solvers and optimality checks are defined here."""

from siglo.exceptions.base import SigloError


class ExistenceHypothesisError(SigloError):
    """Exception to raise when the positive part does not outweigh the negative part."""

    def __init__(self, mass_plus: float, mass_minus: float):
        self.mass_plus = mass_plus
        self.mass_minus = mass_minus
        super().__init__()

    def __str__(self) -> str:
        return (
            "Existence hypothesis violated: total mass of the positive part must exceed the negative part"
            f" (phi+ = {self.mass_plus:.12g}, phi- = {self.mass_minus:.12g}); minimizers may fail to exist"
        )

    def get_exit_code(self) -> int:
        return 3


class EnumerationCapError(SigloError):
    """Exception to raise when exhaustive enumeration would exceed the configured number of subsets."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__()

    def __str__(self) -> str:
        return (
            f"Exhaustive search needs {self.count} subsets which exceeds the cap {self.cap};"
            " use the local_search solver instead"
        )


class DegenerateRadiusError(SigloError):
    """Exception to raise when a negative-part atom lies on the configuration (zero radius ball)."""

    def __init__(self, location: list[float]):
        self.location = location
        super().__init__()

    def __str__(self) -> str:
        return f"Negative-part atom at {self.location} coincides with a configuration point: radius would be 0"


class EmptyEssentialPartError(SigloError):
    """Exception to raise when no configuration point is nearest to any quadrature node."""

    def __str__(self) -> str:
        return "Essential part is empty: the measure has no quadrature nodes"


class ZeroDensityIntegralError(SigloError):
    """Exception to raise when the positive density gives the region no mass."""

    def __str__(self) -> str:
        return "Integral of the positive density over the region is zero: limit density is undefined"


class EmptyCandidateListError(SigloError):
    """Exception to raise when a minimum over candidates is requested for an empty list."""

    def __str__(self) -> str:
        return "At least one candidate is required"


class NoRootError(SigloError):
    """Exception to raise when a ball-mass target is not attained by any radius."""

    def __init__(self, target: float, total: float):
        self.target = target
        self.total = total
        super().__init__()

    def __str__(self) -> str:
        return f"Target mass {self.target:.12g} is not below the total mass {self.total:.12g}: no radius attains it"
