"""Exceptions shared across the planning modules."""


class PlanningError(Exception):
    """Base class for domain errors raised by this package."""


class InfeasibleConfiguration(PlanningError):
    """The requested configuration cannot meet the rate requirement.

    Raised e.g. when the per-link resource share at the requested hop count
    leaves a nonpositive distance budget.
    """


class TargetBeyondReach(InfeasibleConfiguration):
    """No admissible relay count reaches the requested distance.

    Carries the best achievable reach so callers can report how far the
    chain falls short.
    """

    def __init__(self, target_m: float, best_reach_m: float, best_relays: int):
        self.target_m = target_m
        self.best_reach_m = best_reach_m
        self.best_relays = best_relays
        super().__init__(
            f"target distance {target_m:.3f} m exceeds the best achievable reach "
            f"{best_reach_m:.3f} m (at {best_relays} relays)"
        )
