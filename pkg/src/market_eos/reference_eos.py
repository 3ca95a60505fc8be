"""Classical reference equations of state: ideal gas and Curie paramagnet.

Both expose the same surface-evaluation contract as the market surface
(axis labels, a closed form y(x, t), a signed residual), so samplers
and comparison tooling treat all three interchangeably.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantError

GAS_CONSTANT = 8.314


@dataclass(frozen=True)
class IdealGasEoS:
    """P * V = n * R * T for n moles of ideal gas."""

    n: float = 1.0
    R: float = GAS_CONSTANT

    def __post_init__(self) -> None:
        if not self.n > 0:
            raise InvariantError(f"amount of substance n must be positive, got {self.n}")
        if not self.R > 0:
            raise InvariantError(f"gas constant R must be positive, got {self.R}")

    def axis_labels(self) -> tuple[str, str, str]:
        return ("V", "P", "T")

    def y_of(self, x: float, t: float) -> float:
        """Pressure at volume x and temperature t."""
        self.check_domain(x, t)
        return self.n * self.R * t / x

    def residual(self, x: float, y: float, t: float) -> float:
        return y - self.y_of(x, t)

    def check_domain(self, x: float, t: float) -> None:
        if t <= 0:
            raise DomainError(f"temperature must be positive, got {t}")
        if x <= 0:
            raise DomainError(f"volume must be positive, got {x}")


@dataclass(frozen=True)
class CurieParamagnetEoS:
    """M = (D / mu0) * (B0 / T): Curie-law paramagnet.

    D is the Curie constant of the material; mu0 defaults to 1 for a
    unit-free treatment and can be set to the physical permeability.
    """

    D: float
    mu0: float = 1.0

    def __post_init__(self) -> None:
        if not self.D > 0:
            raise InvariantError(f"Curie constant D must be positive, got {self.D}")
        if not self.mu0 > 0:
            raise InvariantError(f"permeability mu0 must be positive, got {self.mu0}")

    def axis_labels(self) -> tuple[str, str, str]:
        return ("B0", "M", "T")

    def y_of(self, x: float, t: float) -> float:
        """Magnetization at applied field x and temperature t."""
        self.check_domain(x, t)
        return (self.D / self.mu0) * (x / t)

    def residual(self, x: float, y: float, t: float) -> float:
        return y - self.y_of(x, t)

    def check_domain(self, x: float, t: float) -> None:
        if t <= 0:
            raise DomainError(f"temperature must be positive, got {t}")


def ideal_gas_pressure(gas: IdealGasEoS, t: float, v: float) -> float:
    """Pressure n * R * t / v; requires t > 0 and v > 0."""
    return gas.y_of(v, t)


def curie_magnetization(mag: CurieParamagnetEoS, b0: float, t: float) -> float:
    """Magnetization (D / mu0) * (b0 / t); requires t > 0."""
    return mag.y_of(b0, t)


def surface_residual(eos, point: tuple[float, float, float]) -> float:
    """Signed residual of a state point (x, y, t) against any surface.

    Accepts anything with the shared contract (ideal gas, paramagnet,
    or the market surface); zero means the point lies on the surface.
    """
    x, y, t = point
    return eos.residual(x, y, t)
