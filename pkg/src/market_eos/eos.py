"""Market equation of state and the linear-market consistency analysis.

Treating a one-good market the way equilibrium thermodynamics treats a
gas, the state coordinates are supplied quantity Q^s (extensive),
demand per household q^d (intensive, the force-like coordinate) and
price Pr (the temperature-like coordinate). For a unit-elastic demand
market clearing against a linear supply curve, those coordinates are
constrained to a surface

    q^d = K * Q^s / Pr,    K = sqrt(k_s / (k_d * N)),

where K plays the role a gas constant plays for an ideal gas and 1/K
is the factor by which the per-household demand is amplified into
supplied quantity. The same construction fails for a linear demand
curve: deriving the elasticity coefficients from the curve relations
gives a negative square (an imaginary slope) while the slope read
directly off the curve is real and negative, so the two
determinations contradict each other once market clearing ties demand
to supply. Both results are reproduced here, the first as a derivation
with a built-in identity check, the second as an explicit report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import LinearDemand, UnitaryDemand
from .equilibrium import (
    PER_HOUSEHOLD,
    MarketSpec,
    aggregate_demand,
    clearing_price_analytic,
)
from .errors import DomainError, InvariantError

# The derived identity K * N == Pr* is exact algebra; allow only float
# rounding when checking it at construction.
EOS_SELF_CHECK_REL = 1e-12

# Residual this small (relative) counts as lying on the surface.
ON_SURFACE_REL = 1e-12

REAL = "real"
IMAGINARY = "imaginary"


@dataclass(frozen=True)
class UnitaryEoS:
    """Constraint surface q^d = K * Q^s / Pr for one unitary market.

    K is computed, never user-set, and is specific to the source
    market: it depends on the demand coefficient, the supply slope
    (the elasticity-normalized slope eps_s) and the household count.
    """

    K: float
    source_market: MarketSpec

    @property
    def households(self) -> int:
        return self.source_market.households

    @property
    def eps_s(self) -> float:
        """Supply-side elasticity coefficient, identified with the supply slope."""
        return self.source_market.supply.k_d

    def axis_labels(self) -> tuple[str, str, str]:
        return ("Q_s", "q_d", "Pr")

    def y_of(self, x: float, t: float) -> float:
        """Per-household demand on the surface at supply x, price t."""
        self.check_domain(x, t)
        return self.K * x / t

    def residual(self, x: float, y: float, t: float) -> float:
        """Signed distance y - K * x / t; zero means on-surface."""
        return y - self.y_of(x, t)

    def check_domain(self, x: float, t: float) -> None:
        if t <= 0:
            raise DomainError(f"price must be positive, got {t}")

    def to_dict(self) -> dict:
        demand = self.source_market.demand
        return {
            "K": self.K,
            "N": self.households,
            "source": {
                "family": "unitary",
                "k_s": demand.k_s,
                "k_d": self.source_market.supply.k_d,
                "households": self.households,
                "interpretation": self.source_market.interpretation,
            },
        }


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of the two-way elasticity determination for a linear market.

    ``eps_d_squared`` and ``eps_s_squared`` come from the curve
    relations; ``eps_d_direct`` is the slope read directly off the
    demand curve. A negative square is classified ``imaginary`` and
    clashes with the always-real direct slope.
    """

    eps_d_squared: float
    eps_s_squared: float
    eps_d_direct: float
    classification_d: str
    classification_s: str
    consistent: bool
    reason: str

    def to_dict(self) -> dict:
        return {
            "eps_d_squared": self.eps_d_squared,
            "eps_s_squared": self.eps_s_squared,
            "eps_d_direct": self.eps_d_direct,
            "classification_d": self.classification_d,
            "classification_s": self.classification_s,
            "consistent": self.consistent,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class PerHouseholdDemand:
    """Aggregate demand divided over N households, provenance retained."""

    value: float
    households: int
    aggregate: float


@dataclass(frozen=True)
class LinearRelations:
    """Coefficients of the squared linear-market curve relations.

    (Q^d)^2 = eps_d_squared * Pr^2 + demand_cross_coeff * Pr
    (Q^s)^2 = eps_s_squared * Pr^2 + supply_cross_coeff * Pr
    """

    eps_d_squared: float
    eps_s_squared: float
    demand_cross_coeff: float
    supply_cross_coeff: float


def derive_linear_relations(k_s: float, k_d: float, k_pr: float, q_d0: float) -> LinearRelations:
    """Squared elasticity coefficients for a linear-linear market.

    eps_d_squared = k_d * k_s * k_pr and eps_s_squared = k_d * k_s / k_pr,
    where k_pr is the demand-to-supply quantity ratio. The cross
    coefficients carry the intercept q_d0 into the full relations.
    """
    if k_pr == 0:
        raise DomainError("k_pr must be nonzero")
    return LinearRelations(
        eps_d_squared=k_d * k_s * k_pr,
        eps_s_squared=k_d * k_s / k_pr,
        demand_cross_coeff=k_d * k_pr * q_d0,
        supply_cross_coeff=(k_d / k_pr) * q_d0,
    )


def linear_consistency_from_coefficients(
    k_s: float, k_d: float, k_pr: float = 1.0
) -> ConsistencyReport:
    """Consistency verdict from raw coefficients, invariants unchecked.

    Exposed so control cases (e.g. a positive demand slope) can be
    probed without constructing a curve that would reject them.
    """
    if k_pr == 0:
        raise DomainError("k_pr must be nonzero")
    eps_d_squared = k_d * k_s * k_pr
    eps_s_squared = k_d * k_s / k_pr
    classification_d = IMAGINARY if eps_d_squared < 0 else REAL
    classification_s = IMAGINARY if eps_s_squared < 0 else REAL
    consistent = classification_d == REAL
    if consistent:
        reason = (
            f"both determinations of eps_d are real: eps_d_squared = {eps_d_squared} >= 0 "
            f"and the direct demand slope is {k_s}"
        )
    else:
        reason = (
            f"eps_d_squared = k_d*k_s*k_pr = {eps_d_squared} < 0 makes eps_d imaginary, "
            f"while the slope read directly off the demand curve is real ({k_s}); "
            f"market clearing forces k_pr = {k_pr}, so the two determinations contradict"
        )
    return ConsistencyReport(
        eps_d_squared=eps_d_squared,
        eps_s_squared=eps_s_squared,
        eps_d_direct=k_s,
        classification_d=classification_d,
        classification_s=classification_s,
        consistent=consistent,
        reason=reason,
    )


def check_linear_consistency(market: MarketSpec) -> ConsistencyReport:
    """Two-way elasticity determination for a linear-demand market.

    Market clearing equates demand and supply quantities, fixing the
    quantity ratio k_pr at 1; with a negative demand slope the squared
    coefficients come out negative, so the verdict is always
    inconsistent for a curve that satisfies its own invariants.
    """
    if not isinstance(market.demand, LinearDemand):
        raise TypeError(
            "check_linear_consistency requires a linear demand market; "
            "use derive_unitary_eos for unitary demand"
        )
    return linear_consistency_from_coefficients(market.demand.k_s, market.supply.k_d, k_pr=1.0)


def derive_unitary_eos(market: MarketSpec) -> UnitaryEoS:
    """Constraint-surface constant K for a unitary market.

    K = sqrt(k_s / (k_d * N)). Construction self-checks the derived
    identity K * N == clearing price before returning.
    """
    if not isinstance(market.demand, UnitaryDemand):
        raise TypeError(
            "derive_unitary_eos requires a unitary demand market; "
            "use check_linear_consistency for linear demand"
        )
    if market.interpretation != PER_HOUSEHOLD:
        raise DomainError(
            "the constraint surface needs the per-household (intensive) demand reading; "
            f"market uses {market.interpretation!r}"
        )
    k = math.sqrt(market.demand.k_s / (market.supply.k_d * market.households))
    pr_star = clearing_price_analytic(market).clearing_price
    if abs(k * market.households - pr_star) > EOS_SELF_CHECK_REL * pr_star:
        raise InvariantError(
            f"surface constant failed its identity check: K*N = {k * market.households} "
            f"but the clearing price is {pr_star}"
        )
    return UnitaryEoS(K=k, source_market=market)


def eos_residual(eos: UnitaryEoS, q_s: float, q_d_per_household: float, pr: float) -> float:
    """Signed residual q^d - K * Q^s / Pr of a candidate state point."""
    return eos.residual(q_s, q_d_per_household, pr)


class AmplificationFactor(float):
    """1/K, with its paramagnetic analogue attached for reports.

    For a Curie paramagnet the applied field is amplified into
    magnetization by D/mu0; here the per-household demand is amplified
    into supplied quantity by 1/K.
    """

    __slots__ = ("curie_analogue",)

    curie_analogue: str

    def __new__(cls, value: float):
        obj = super().__new__(cls, value)
        obj.curie_analogue = "D/mu0"
        return obj


def amplification_factor(eos: UnitaryEoS) -> AmplificationFactor:
    """Factor 1/K by which q^d induces Q^s."""
    return AmplificationFactor(1.0 / eos.K)


def per_household(q_aggregate: float, n: int) -> PerHouseholdDemand:
    """Intensive demand q_aggregate / n for n household buyers."""
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"household count must be a positive integer, got {n!r}")
    return PerHouseholdDemand(value=q_aggregate / n, households=n, aggregate=q_aggregate)


@dataclass(frozen=True)
class IntermediateProbe:
    """One evaluation of the intermediate relation Q^d ~ c * Q^s / Pr."""

    pr: float
    lhs_aggregate: float
    lhs_per_household: float
    rhs: float


@dataclass(frozen=True)
class IntermediateDiagnostic:
    """Where the intermediate unitary relation actually holds.

    The coefficient c = sqrt(k_s * k_pr / k_d) with k_pr = 1/N equals
    K, so c * Q^s / Pr matches the per-household demand exactly at the
    clearing point and nowhere else; it never matches the aggregate
    demand for N > 1.
    """

    coefficient: float
    k_pr: float
    probes: tuple[IntermediateProbe, ...]
    holds_at_clearing: bool
    holds_identically: bool


def derive_unitary_intermediate(
    market: MarketSpec, prices: tuple[float, ...] | None = None, rel_tol: float = 1e-9
) -> IntermediateDiagnostic:
    """Probe the intermediate relation at sample prices (diagnostic only).

    Not used to derive K; it documents that the relation written with
    the aggregate demand does not hold identically in price.
    """
    if not isinstance(market.demand, UnitaryDemand):
        raise TypeError("the intermediate relation is defined for unitary demand markets")
    k_pr = 1.0 / market.households
    coeff = math.sqrt(market.demand.k_s * k_pr / market.supply.k_d)
    pr_star = clearing_price_analytic(market).clearing_price
    if prices is None:
        prices = (0.5 * pr_star, pr_star, 2.0 * pr_star)

    probes = []
    for pr in prices:
        q_agg = aggregate_demand(market, pr)
        rhs = coeff * market.supply.quantity(pr) / pr
        probes.append(
            IntermediateProbe(
                pr=pr,
                lhs_aggregate=q_agg,
                lhs_per_household=q_agg / market.households,
                rhs=rhs,
            )
        )

    def matches(lhs: float, rhs: float) -> bool:
        return abs(lhs - rhs) <= rel_tol * max(1.0, abs(rhs))

    rhs_at_star = coeff * market.supply.quantity(pr_star) / pr_star
    holds_at_clearing = matches(aggregate_demand(market, pr_star) / market.households, rhs_at_star)
    holds_identically = all(matches(p.lhs_per_household, p.rhs) for p in probes)
    return IntermediateDiagnostic(
        coefficient=coeff,
        k_pr=k_pr,
        probes=tuple(probes),
        holds_at_clearing=holds_at_clearing,
        holds_identically=holds_identically,
    )
