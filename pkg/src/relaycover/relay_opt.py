"""Reach-maximizing relay placement along a base-station-to-destination line.

Given per-link transmit powers and the distance budgets from
:mod:`relaycover.channel`, the chain's maximum reach solves

    maximize   sum_k d_k
    subject to sum_k d_k^alpha / p_k <= budget_fwd
               sum_k d_k^alpha / q_k <= budget_bwd

a convex problem whose stationarity condition gives

    d_k = (p_k q_k / (alpha * lam * q_k + alpha * nu * p_k))^(1/(alpha-1))

with multipliers lam (forward budget) and nu (backward budget).  The solver
enumerates the three complementary-slackness cases (only one multiplier
positive, or both), keeps the feasible candidates and returns the one with
the largest total distance.  The single-multiplier equations are strictly
decreasing in the multiplier, so plain bisection with bracket expansion
finds them; the two-multiplier system is solved by nesting one bisection
inside another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .channel import Budgets, ChainPowers, DevicePowers, QosSpec, RadioEnvironment, Scheme, budgets
from .errors import InfeasibleConfiguration, TargetBeyondReach

# Relative tolerances: single-multiplier bisection, outer bisection of the
# two-multiplier system, and feasibility slack on the budget constraints.
_TOL_SINGLE = 1e-12
_TOL_BOTH = 1e-10
_FEAS_SLACK = 1e-9
_TIE_REL = 1e-9


class KktCase(Enum):
    """Which budget constraints carry a positive multiplier at the optimum."""

    BACKWARD_ONLY = "backward_only"
    FORWARD_ONLY = "forward_only"
    BOTH = "both"


@dataclass(frozen=True)
class Multipliers:
    """Nonnegative multipliers of the forward and backward budget constraints."""

    fwd: float
    bwd: float

    def __post_init__(self):
        if self.fwd < 0 or self.bwd < 0:
            raise ValueError("multipliers must be nonnegative")


@dataclass(frozen=True)
class DistanceTuple:
    """Hop lengths of a chain, in meters."""

    d: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))
        if any(dk <= 0 for dk in self.d):
            raise ValueError("hop lengths must be positive")

    @property
    def total(self) -> float:
        return sum(self.d)

    def __len__(self) -> int:
        return len(self.d)


@dataclass(frozen=True)
class ReachResult:
    """Optimal hop lengths together with the certifying multipliers."""

    distances: DistanceTuple
    multipliers: Multipliers
    active_constraints: frozenset[str]
    kkt_case: KktCase

    @property
    def total(self) -> float:
        return self.distances.total


@dataclass(frozen=True)
class SweepRow:
    """One hop-count entry of a relay-count sweep."""

    relays: int
    links: int
    result: ReachResult


@dataclass(frozen=True)
class RelaySweep:
    """Best relay count plus the full sweep table it was chosen from."""

    best_relays: int
    best_reach_m: float
    table: tuple[SweepRow, ...]


def distances_from_multipliers(
    mult: Multipliers, powers: ChainPowers, alpha: float
) -> list[float]:
    """Hop lengths implied by the stationarity condition for given multipliers."""
    if mult.fwd == 0.0 and mult.bwd == 0.0:
        raise ValueError("at least one multiplier must be positive")
    expo = 1.0 / (alpha - 1.0)
    return [
        (p * q / (alpha * (mult.fwd * q + mult.bwd * p))) ** expo
        for p, q in zip(powers.fwd_watts, powers.bwd_watts)
    ]


def _bisect_decreasing(f: Callable[[float], float], rel_tol: float) -> float:
    """Root of a strictly decreasing f on (0, inf), found by bracket expansion."""
    lo = hi = 1.0
    for _ in range(2100):
        if f(hi) <= 0.0:
            break
        hi *= 2.0
    else:
        raise ArithmeticError("bracket expansion failed (upper)")
    for _ in range(2100):
        if f(lo) >= 0.0:
            break
        lo /= 2.0
    else:
        raise ArithmeticError("bracket expansion failed (lower)")
    while (hi - lo) > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_single_constraint(
    budget: float, powers_one_way: Sequence[float], alpha: float
) -> tuple[float, list[float]]:
    """Multiplier and hop lengths when a single budget constraint binds.

    Solves sum_k powers_k^(1/(alpha-1)) / (alpha*m)^(alpha/(alpha-1)) = budget
    for the multiplier m; the left side strictly decreases in m so bisection
    with automatic bracket expansion converges to the unique root.
    """
    if budget <= 0:
        raise InfeasibleConfiguration(
            f"distance budget {budget:.6g} is not positive; this hop count cannot "
            "support the required rate"
        )
    expo = 1.0 / (alpha - 1.0)
    weights = [p**expo for p in powers_one_way]

    def residual(m: float) -> float:
        return sum(weights) / (alpha * m) ** (alpha * expo) - budget

    m = _bisect_decreasing(residual, _TOL_SINGLE)
    distances = [(p / (alpha * m)) ** expo for p in powers_one_way]
    return m, distances


def solve_both_constraints(
    budget_fwd: float, budget_bwd: float, powers: ChainPowers, alpha: float
) -> tuple[Multipliers, list[float]] | None:
    """Strictly positive multiplier pair making both budgets tight, if one exists.

    For fixed forward multiplier lam the forward-budget equation is strictly
    decreasing in nu, so an inner bisection recovers nu(lam); the backward
    residual along that curve is then bisected in lam.  Returns None when no
    sign change exists inside the open bracket (0, lam_max), i.e. when the
    tight-both case is excluded by complementary slackness.
    """
    if budget_fwd <= 0 or budget_bwd <= 0:
        raise InfeasibleConfiguration("both budgets must be positive")
    expo = 1.0 / (alpha - 1.0)
    p = powers.fwd_watts
    q = powers.bwd_watts

    def usage(lam: float, nu: float, pows: tuple[float, ...]) -> float:
        mult = Multipliers(lam, nu)
        d = distances_from_multipliers(mult, powers, alpha)
        return sum(dk**alpha / pw for dk, pw in zip(d, pows))

    # nu would have to be negative beyond the single-constraint multiplier.
    lam_max, _ = solve_single_constraint(budget_fwd, p, alpha)

    def nu_given_lam(lam: float) -> float:
        return _bisect_decreasing(lambda nu: usage(lam, nu, p) - budget_fwd, _TOL_SINGLE)

    def bwd_residual(lam: float) -> float:
        return usage(lam, nu_given_lam(lam), q) - budget_bwd

    lo = lam_max * 1e-12
    hi = lam_max * (1.0 - 1e-12)
    r_lo = bwd_residual(lo)
    r_hi = bwd_residual(hi)
    plateau = max(abs(r_lo), abs(r_hi)) <= _TOL_BOTH * budget_bwd
    if plateau:
        # Identical-parameter degeneracy: only lam+nu is determined, return
        # the symmetric point of the solution segment.
        lam = 0.5 * lam_max
    elif r_lo * r_hi > 0.0:
        return None
    else:
        increasing = r_hi > r_lo
        while (hi - lo) > _TOL_BOTH * hi:
            mid = 0.5 * (lo + hi)
            if (bwd_residual(mid) > 0.0) == increasing:
                hi = mid
            else:
                lo = mid
        lam = 0.5 * (lo + hi)
    nu = nu_given_lam(lam)
    if lam <= 0.0 or nu <= 0.0:
        return None
    mult = Multipliers(lam, nu)
    return mult, distances_from_multipliers(mult, powers, alpha)


def _infeasible_links_message(
    env: RadioEnvironment, qos: QosSpec, links: int
) -> InfeasibleConfiguration:
    try:
        bound = max_relay_count(env, qos)
        detail = f"the rate budget supports at most {bound} relays ({bound + 1} links)"
    except InfeasibleConfiguration:
        detail = "even a single hop cannot support the required rate"
    return InfeasibleConfiguration(
        f"{links} links ({links - 1} relays) leave no positive distance budget; {detail}"
    )


def solve_optimal_distances(
    env: RadioEnvironment,
    qos: QosSpec,
    powers: ChainPowers,
    links: int,
    scheme: Scheme,
) -> ReachResult:
    """Hop lengths maximizing total reach for a chain with ``links`` hops.

    Evaluates the three multiplier cases, discards candidates violating the
    non-tight budget, and returns the feasible tuple with the largest sum.
    Equal totals (to 1e-9 relative) are broken deterministically in favor of
    the tight-both case, then the forward-only case.
    """
    if links < 1:
        raise ValueError("links must be at least 1")
    if len(powers) != links:
        raise ValueError(f"powers describe {len(powers)} links, expected {links}")
    budg = budgets(env, qos, links, scheme)
    if budg.fwd <= 0 or budg.bwd <= 0:
        raise _infeasible_links_message(env, qos, links)
    alpha = env.pathloss_exponent

    def usage(d: Sequence[float], pows: tuple[float, ...]) -> float:
        return sum(dk**alpha / pw for dk, pw in zip(d, pows))

    candidates: list[ReachResult] = []

    nu, d = solve_single_constraint(budg.bwd, powers.bwd_watts, alpha)
    if usage(d, powers.fwd_watts) <= budg.fwd * (1.0 + _FEAS_SLACK):
        candidates.append(
            ReachResult(
                DistanceTuple(tuple(d)),
                Multipliers(0.0, nu),
                frozenset({"backward"}),
                KktCase.BACKWARD_ONLY,
            )
        )

    lam, d = solve_single_constraint(budg.fwd, powers.fwd_watts, alpha)
    if usage(d, powers.bwd_watts) <= budg.bwd * (1.0 + _FEAS_SLACK):
        candidates.append(
            ReachResult(
                DistanceTuple(tuple(d)),
                Multipliers(lam, 0.0),
                frozenset({"forward"}),
                KktCase.FORWARD_ONLY,
            )
        )

    both = solve_both_constraints(budg.fwd, budg.bwd, powers, alpha)
    if both is not None:
        mult, d = both
        candidates.append(
            ReachResult(
                DistanceTuple(tuple(d)),
                mult,
                frozenset({"forward", "backward"}),
                KktCase.BOTH,
            )
        )

    if not candidates:
        raise ArithmeticError("no multiplier case produced a feasible tuple")
    best_total = max(c.total for c in candidates)
    tied = [c for c in candidates if c.total >= best_total * (1.0 - _TIE_REL)]
    priority = {KktCase.BOTH: 0, KktCase.FORWARD_ONLY: 1, KktCase.BACKWARD_ONLY: 2}
    return min(tied, key=lambda c: priority[c.kkt_case])


def identical_closed_form(
    env: RadioEnvironment, qos: QosSpec, power_w: float, links: int, scheme: Scheme
) -> tuple[float, float]:
    """(per-link distance, total reach) for identical powers and symmetric QoS.

    With every device transmitting ``power_w`` and matching forward/backward
    requirements the optimum splits evenly: d = (budget*p/K)^(1/alpha) per
    link and reach (budget*p)^(1/alpha) * K^((alpha-1)/alpha), the budget
    already carrying the 2K frequency-division factor.
    """
    budg = budgets(env, qos, links, scheme)
    if budg.fwd <= 0:
        raise _infeasible_links_message(env, qos, links)
    alpha = env.pathloss_exponent
    per_link = (budg.fwd * power_w / links) ** (1.0 / alpha)
    return per_link, per_link * links


def prop2_turning_points(
    env: RadioEnvironment, qos: QosSpec, scheme: Scheme
) -> tuple[int, int]:
    """Hop counts bracketing the reach maximum for identical-parameter chains.

    The reach grows while the hop count stays at or below the first value
    and shrinks from the second value on; the two differ by one unless the
    threshold is an exact integer.
    """
    budg = budgets(env, qos, 1, Scheme.TIME_DIVISION)
    alpha = env.pathloss_exponent
    if scheme is Scheme.TIME_DIVISION:
        threshold = budg.headroom_fwd * math.exp(1.0 / (1.0 - alpha))
    else:
        threshold = budg.headroom_fwd * math.exp(-1.0 / alpha)
    return math.floor(threshold), math.ceil(threshold)


def max_relay_count(env: RadioEnvironment, qos: QosSpec) -> int:
    """Largest relay count keeping both distance budgets nonnegative."""
    budg = budgets(env, qos, 1, Scheme.TIME_DIVISION)
    bound = min(
        math.floor(budg.headroom_fwd - 1.0), math.floor(budg.headroom_bwd - 1.0)
    )
    if bound < 0:
        raise InfeasibleConfiguration(
            "the rate requirement exceeds what a single hop can carry at any distance"
        )
    return bound


def best_relay_count(
    env: RadioEnvironment,
    qos: QosSpec,
    device_powers: DevicePowers,
    scheme: Scheme,
) -> RelaySweep:
    """Sweep every admissible relay count and pick the one with maximum reach.

    Ties go to the smaller relay count.  The full table is returned so
    callers can plot reach versus relay count.
    """
    rows: list[SweepRow] = []
    for links in range(1, max_relay_count(env, qos) + 2):
        try:
            result = solve_optimal_distances(
                env, qos, device_powers.chain(links), links, scheme
            )
        except InfeasibleConfiguration:
            continue
        rows.append(SweepRow(relays=links - 1, links=links, result=result))
    if not rows:
        raise InfeasibleConfiguration("no admissible relay count is feasible")
    best = max(rows, key=lambda r: (r.result.total, -r.relays))
    return RelaySweep(best_relays=best.relays, best_reach_m=best.result.total, table=tuple(rows))


def min_relays_for_distance(
    env: RadioEnvironment,
    qos: QosSpec,
    device_powers: DevicePowers,
    scheme: Scheme,
    target_m: float,
) -> int:
    """Smallest relay count whose maximum reach covers ``target_m`` meters.

    Raises :class:`TargetBeyondReach` (carrying the best achievable reach)
    when no admissible relay count suffices.
    """
    if target_m <= 0:
        raise ValueError("target distance must be positive")
    best_reach = 0.0
    best_relays = 0
    for links in range(1, max_relay_count(env, qos) + 2):
        try:
            result = solve_optimal_distances(
                env, qos, device_powers.chain(links), links, scheme
            )
        except InfeasibleConfiguration:
            continue
        if result.total >= target_m * (1.0 - 1e-12):
            return links - 1
        if result.total > best_reach:
            best_reach = result.total
            best_relays = links - 1
    raise TargetBeyondReach(target_m, best_reach, best_relays)
