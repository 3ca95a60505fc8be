"""Parametric demand and supply curve families.

Three one-good curve families: linear demand (downward line with a
positive vertical intercept), linear supply (upward line through the
origin), and unit-elastic demand (a hyperbola in price, so quantity
times price is constant). Each family evaluates quantity, slope with
respect to price, and point-price elasticity.

Prices are abstract currency units per good, quantities abstract goods
units. All curve objects are immutable and every operation is a pure
function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantError

# Prices are plain nonnegative floats; operations that divide by price
# require a strictly positive value.
Price = float

# Absolute tolerance for calling |E| == 1 "unitary"; the elasticity
# arithmetic is a handful of float operations, so 1e-12 is generous.
UNITARY_CLASSIFICATION_TOL = 1e-12


class Quantity(float):
    """A quantity of goods that may carry a demand-exhaustion flag.

    Behaves exactly like ``float`` in arithmetic. ``exhausted`` is True
    when a linear demand curve was evaluated past its choke price and
    the raw (negative) value was kept; callers decide whether to clamp.
    """

    __slots__ = ("exhausted", "note")

    exhausted: bool
    note: str | None

    def __new__(cls, value: float, exhausted: bool = False, note: str | None = None):
        obj = super().__new__(cls, value)
        obj.exhausted = exhausted
        obj.note = note
        return obj


class Elasticity(float):
    """A point-price elasticity with its classification attached.

    ``classification`` is one of ``"elastic"`` (|E| > 1), ``"unitary"``
    (|E| = 1 within tolerance) or ``"inelastic"`` (|E| < 1).
    """

    __slots__ = ("classification",)

    classification: str

    def __new__(cls, value: float):
        obj = super().__new__(cls, value)
        obj.classification = classify_elasticity(value)
        return obj


def classify_elasticity(value: float, tol: float = UNITARY_CLASSIFICATION_TOL) -> str:
    if abs(abs(value) - 1.0) <= tol:
        return "unitary"
    return "elastic" if abs(value) > 1.0 else "inelastic"


def _require_nonnegative_price(pr: float) -> None:
    if pr < 0:
        raise DomainError(f"price must be nonnegative, got {pr}")


def _require_positive_price(pr: float) -> None:
    if pr <= 0:
        raise DomainError(f"price must be positive, got {pr}")


@dataclass(frozen=True)
class LinearDemand:
    """Demand linear in price: quantity = k_s * pr + q_d0.

    k_s is the slope in goods per currency unit (strictly negative),
    q_d0 the vertical intercept in goods (strictly positive), so the
    curve starts at q_d0 for a free good and falls with price.
    """

    k_s: float
    q_d0: float

    def __post_init__(self) -> None:
        if not self.k_s < 0:
            raise InvariantError(f"linear demand slope k_s must be negative, got {self.k_s}")
        if not self.q_d0 > 0:
            raise InvariantError(f"demand intercept q_d0 must be positive, got {self.q_d0}")

    @property
    def choke_price(self) -> float:
        """Price at which demanded quantity reaches zero."""
        return self.q_d0 / abs(self.k_s)

    def quantity(self, pr: Price) -> Quantity:
        """Quantity demanded at price ``pr``; flagged, never clamped.

        Past the choke price the raw negative value is returned with
        ``exhausted=True``. Silent clamping would corrupt the sign
        structure the equilibrium root-finder relies on.
        """
        _require_nonnegative_price(pr)
        value = self.k_s * pr + self.q_d0
        if value < 0:
            return Quantity(
                value,
                exhausted=True,
                note=f"demand exhausted above choke price {self.choke_price!r}",
            )
        return Quantity(value)

    def slope(self, pr: Price) -> float:
        """Constant slope k_s; ``pr`` is accepted for interface symmetry."""
        _require_nonnegative_price(pr)
        return self.k_s


@dataclass(frozen=True)
class LinearSupply:
    """Supply linear in price through the origin: quantity = k_d * pr."""

    k_d: float

    def __post_init__(self) -> None:
        if not self.k_d > 0:
            raise InvariantError(f"supply slope k_d must be positive, got {self.k_d}")

    def quantity(self, pr: Price) -> float:
        _require_nonnegative_price(pr)
        return self.k_d * pr

    def slope(self, pr: Price) -> float:
        _require_nonnegative_price(pr)
        return self.k_d


@dataclass(frozen=True)
class UnitaryDemand:
    """Unit-elastic demand: quantity = k_s / pr, so quantity * pr = k_s.

    k_s is in goods times currency units (strictly positive). The curve
    is hyperbolic in price and its point-price elasticity is -1 at
    every price.
    """

    k_s: float

    def __post_init__(self) -> None:
        if not self.k_s > 0:
            raise InvariantError(f"unitary demand coefficient k_s must be positive, got {self.k_s}")

    def quantity(self, pr: Price) -> Quantity:
        _require_positive_price(pr)
        return Quantity(self.k_s / pr)

    def slope(self, pr: Price) -> float:
        """d(quantity)/d(price) = -k_s / pr**2."""
        _require_positive_price(pr)
        return -self.k_s / (pr * pr)


DemandCurve = LinearDemand | UnitaryDemand
Curve = LinearDemand | UnitaryDemand | LinearSupply


def demand_quantity(curve: DemandCurve, pr: Price) -> Quantity:
    """Quantity demanded at ``pr`` for either demand family."""
    if not isinstance(curve, (LinearDemand, UnitaryDemand)):
        raise TypeError(f"expected a demand curve, got {type(curve).__name__}")
    return curve.quantity(pr)


def supply_quantity(curve: LinearSupply, pr: Price) -> float:
    """Quantity supplied at ``pr``."""
    if not isinstance(curve, LinearSupply):
        raise TypeError(f"expected a supply curve, got {type(curve).__name__}")
    return curve.quantity(pr)


def slope(curve: Curve, pr: Price) -> float:
    """Rate of change of quantity with price at ``pr``."""
    if not isinstance(curve, (LinearDemand, UnitaryDemand, LinearSupply)):
        raise TypeError(f"expected a curve, got {type(curve).__name__}")
    return curve.slope(pr)


def point_elasticity(curve: Curve, pr0: Price) -> Elasticity:
    """Point-price elasticity slope(pr0) * pr0 / quantity(pr0).

    Requires pr0 > 0 and a nonzero quantity at pr0; the returned value
    carries an elastic/unitary/inelastic classification.
    """
    _require_positive_price(pr0)
    q0 = float(curve.quantity(pr0))
    if q0 == 0.0:
        raise DomainError(f"elasticity undefined at zero quantity (pr0={pr0})")
    return Elasticity(curve.slope(pr0) * pr0 / q0)
