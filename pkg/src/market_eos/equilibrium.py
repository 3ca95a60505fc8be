"""Market-clearing solvers.

A market is one demand curve, one supply curve and a household count.
The clearing price is found two independent ways: a closed form per
curve-family pairing, and a plain bisection search on excess demand.
The bisection path deliberately shares no derivative or closed-form
code with the curve module, so it can serve as an oracle for the
analytic path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .curves import LinearDemand, LinearSupply, UnitaryDemand, supply_quantity
from .errors import BracketingError, DomainError, InvariantError, UnsolvableMarketError

# Ways to read a unitary demand coefficient when aggregating over
# households: the coefficient belongs to each household (aggregate
# demand is households * k_s / pr) or to the whole market (k_s / pr).
PER_HOUSEHOLD = "per-household"
AGGREGATE = "aggregate"

# Residual acceptance: |Q^d - Q^s| <= RESIDUAL_REL * max(1, Q*).
RESIDUAL_REL = 1e-9

# Default relative tolerance on the bisection price.
PRICE_TOL = 1e-12

_BRACKET_MAX_EXPONENT = 60


@dataclass(frozen=True)
class MarketSpec:
    """One market: a demand curve, a supply curve, N household buyers."""

    demand: LinearDemand | UnitaryDemand
    supply: LinearSupply
    households: int = 1
    interpretation: str = PER_HOUSEHOLD

    def __post_init__(self) -> None:
        if not isinstance(self.demand, (LinearDemand, UnitaryDemand)):
            raise InvariantError(f"demand must be a demand curve, got {type(self.demand).__name__}")
        if not isinstance(self.supply, LinearSupply):
            raise InvariantError(f"supply must be a supply curve, got {type(self.supply).__name__}")
        if not (isinstance(self.households, int) and self.households >= 1):
            raise InvariantError(f"households must be a positive integer, got {self.households!r}")
        if self.interpretation not in (PER_HOUSEHOLD, AGGREGATE):
            raise InvariantError(
                f"interpretation must be {PER_HOUSEHOLD!r} or {AGGREGATE!r}, got {self.interpretation!r}"
            )


@dataclass(frozen=True)
class EquilibriumPoint:
    """Clearing price and quantity, plus the excess-demand residual there."""

    clearing_price: float
    clearing_quantity: float
    residual: float = field(default=0.0)


def aggregate_demand(market: MarketSpec, pr: float) -> float:
    """Market-wide quantity demanded at ``pr``.

    Unitary demand scales with the household count under the
    per-household interpretation; linear demand is already aggregate.
    """
    q = market.demand.quantity(pr)
    if isinstance(market.demand, UnitaryDemand) and market.interpretation == PER_HOUSEHOLD:
        return market.households * float(q)
    return float(q)


def excess_demand(market: MarketSpec, pr: float) -> float:
    """Aggregate demand minus supply at ``pr``; zero at clearing."""
    return aggregate_demand(market, pr) - supply_quantity(market.supply, pr)


def clearing_price_analytic(market: MarketSpec) -> EquilibriumPoint:
    """Closed-form clearing point for the supported curve pairings.

    Linear-linear: Pr* = q_d0 / (k_d - k_s). Unitary demand:
    Pr* = sqrt(N * k_s / k_d) per-household, sqrt(k_s / k_d) aggregate.
    """
    demand, supply = market.demand, market.supply
    if isinstance(demand, LinearDemand):
        pr_star = demand.q_d0 / (supply.k_d - demand.k_s)
    elif market.interpretation == PER_HOUSEHOLD:
        pr_star = math.sqrt(market.households * demand.k_s / supply.k_d)
    else:
        pr_star = math.sqrt(demand.k_s / supply.k_d)
    q_star = supply_quantity(supply, pr_star)
    return EquilibriumPoint(pr_star, q_star, residual=abs(excess_demand(market, pr_star)))


def auto_bracket(market: MarketSpec) -> tuple[float, float]:
    """Sign-changing price bracket by geometric expansion from [1/2, 2].

    Both ends widen by a factor of two per step, up to [2**-60, 2**60].
    Deterministic; raises if no sign change appears within the limits.
    """
    for k in range(1, _BRACKET_MAX_EXPONENT + 1):
        lo, hi = 2.0**-k, 2.0**k
        f_lo, f_hi = excess_demand(market, lo), excess_demand(market, hi)
        if f_lo == 0.0 or f_hi == 0.0 or (f_lo > 0.0) != (f_hi > 0.0):
            return lo, hi
    raise UnsolvableMarketError(
        f"no sign change in excess demand on [2**-{_BRACKET_MAX_EXPONENT}, 2**{_BRACKET_MAX_EXPONENT}]"
    )


def clearing_price_numeric(
    market: MarketSpec,
    bracket: tuple[float, float] | None = None,
    tol: float = PRICE_TOL,
) -> EquilibriumPoint:
    """Clearing point by bisection on excess demand.

    Parameters
    ----------
    market : MarketSpec
        Market to clear.
    bracket : (lo, hi), optional
        Price interval with a sign change in excess demand. Defaults
        to :func:`auto_bracket`.
    tol : float
        Relative tolerance on the clearing price (default 1e-12).

    Returns
    -------
    EquilibriumPoint
        Bisection stops once the bracket is narrower than ``tol``
        relative and the residual is within ``RESIDUAL_REL * max(1, Q*)``,
        or the bracket cannot shrink further in floating point.

    Raises
    ------
    BracketingError
        If excess demand has the same sign at both endpoints.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if bracket is None:
        bracket = auto_bracket(market)
    lo, hi = bracket
    if not (0 <= lo < hi):
        raise DomainError(f"bracket must satisfy 0 <= lo < hi, got [{lo}, {hi}]")

    f_lo = excess_demand(market, lo)
    f_hi = excess_demand(market, hi)
    if f_lo == 0.0:
        lo = hi = lo
    elif f_hi == 0.0:
        lo = hi = hi
    elif (f_lo > 0.0) == (f_hi > 0.0):
        raise BracketingError(
            f"no sign change in excess demand on [{lo}, {hi}]: "
            f"excess_demand({lo}) = {f_lo}, excess_demand({hi}) = {f_hi}"
        )

    while lo < hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = excess_demand(market, mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo <= tol * mid:
            q_mid = supply_quantity(market.supply, mid)
            if abs(f_mid) <= RESIDUAL_REL * max(1.0, q_mid):
                break

    pr_star = 0.5 * (lo + hi) if lo < hi else lo
    q_star = supply_quantity(market.supply, pr_star)
    return EquilibriumPoint(pr_star, q_star, residual=abs(excess_demand(market, pr_star)))
