"""Price equilibrium as an equivalence relation over markets.

Two markets are in price equilibrium when their clearing prices agree.
Floating-point equality within a tolerance is not transitive, so the
relation is built on quantized prices instead: each clearing price is
snapped to a fixed grid (round-half-to-even on price/quantum) and the
resulting integers are compared exactly. Transitivity then holds by
construction, and the quantized price is a rankable market property.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .equilibrium import MarketSpec, clearing_price_analytic
from .errors import InvariantError

DEFAULT_QUANTUM = 1e-9

# Market preconditions assumed, not computable from a MarketSpec.
MODELING_ASSUMPTIONS = ("efficient", "perfectly-competitive", "clearing")


@dataclass(frozen=True)
class MarketRegistry:
    """Named markets compared under one price quantum.

    ``goods`` optionally labels what each market trades; comparisons
    across differently labeled goods are allowed but flagged.
    """

    entries: Mapping[str, MarketSpec]
    quantum: float = DEFAULT_QUANTUM
    goods: Mapping[str, str] = field(default_factory=dict)
    assumptions: tuple[str, ...] = MODELING_ASSUMPTIONS

    def __post_init__(self) -> None:
        if not self.quantum > 0:
            raise InvariantError(f"quantum must be positive, got {self.quantum}")
        object.__setattr__(self, "entries", dict(self.entries))
        object.__setattr__(self, "goods", dict(self.goods))

    def market(self, name: str) -> MarketSpec:
        try:
            return self.entries[name]
        except KeyError:
            raise KeyError(f"unknown market {name!r}") from None


@dataclass(frozen=True)
class EquilibriumVerdict:
    """Pairwise comparison outcome on quantized clearing prices."""

    pair: tuple[str, str]
    in_equilibrium: bool
    prices: tuple[float, float]
    cross_goods: bool = False


@dataclass(frozen=True)
class LawReport:
    """Exhaustive reflexivity/symmetry/transitivity verification."""

    reflexive: bool
    symmetric: bool
    transitive: bool
    counterexample: tuple[str, str, str] | None
    classes: tuple[tuple[float, tuple[str, ...]], ...]

    @property
    def all_pass(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive


def _clearing_price(registry: MarketRegistry, name: str) -> float:
    try:
        return clearing_price_analytic(registry.market(name)).clearing_price
    except KeyError:
        raise
    except Exception as exc:
        raise type(exc)(f"market {name!r}: {exc}") from exc


def quantize(price: float, quantum: float) -> int:
    """Integer tick of ``price`` on the ``quantum`` grid, half-to-even."""
    return round(price / quantum)


def in_price_equilibrium(registry: MarketRegistry, a: str, b: str) -> EquilibriumVerdict:
    """Whether markets ``a`` and ``b`` clear at the same quantized price."""
    tick_a = quantize(_clearing_price(registry, a), registry.quantum)
    tick_b = quantize(_clearing_price(registry, b), registry.quantum)
    goods_a, goods_b = registry.goods.get(a), registry.goods.get(b)
    return EquilibriumVerdict(
        pair=(a, b),
        in_equilibrium=tick_a == tick_b,
        prices=(tick_a * registry.quantum, tick_b * registry.quantum),
        cross_goods=goods_a is not None and goods_b is not None and goods_a != goods_b,
    )


def rank_markets(registry: MarketRegistry) -> list[tuple[str, float]]:
    """Markets ordered by quantized clearing price, names break ties."""
    ticks = {name: quantize(_clearing_price(registry, name), registry.quantum) for name in registry.entries}
    ordered = sorted(registry.entries, key=lambda name: (ticks[name], name))
    return [(name, ticks[name] * registry.quantum) for name in ordered]


def verify_equivalence_laws(registry: MarketRegistry) -> LawReport:
    """Check all n reflexive pairs, n^2 symmetric pairs, n^3 triples.

    The triple check runs as a boolean matrix product, which covers
    every ordered (a, b, c) combination.
    """
    names = list(registry.entries)
    ticks = np.array(
        [quantize(_clearing_price(registry, name), registry.quantum) for name in names],
        dtype=np.int64,
    )
    if len(names) == 0:
        return LawReport(True, True, True, None, ())

    related = np.equal.outer(ticks, ticks)
    reflexive = bool(np.all(np.diag(related)))
    symmetric = bool(np.all(related == related.T))
    reachable = (related.astype(np.uint8) @ related.astype(np.uint8)) > 0
    violations = reachable & ~related
    counterexample = None
    if violations.any():
        i, k = map(int, np.argwhere(violations)[0])
        j = int(np.nonzero(related[i] & related[:, k])[0][0])
        counterexample = (names[i], names[j], names[k])

    by_tick: dict[int, list[str]] = {}
    for name, tick in zip(names, ticks):
        by_tick.setdefault(int(tick), []).append(name)
    classes = tuple(
        (tick * registry.quantum, tuple(sorted(members)))
        for tick, members in sorted(by_tick.items())
    )
    return LawReport(
        reflexive=reflexive,
        symmetric=symmetric,
        transitive=not violations.any(),
        counterexample=counterexample,
        classes=classes,
    )
