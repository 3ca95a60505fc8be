"""Market-clearing equilibria and equation-of-state surfaces for simple markets."""

from .config import ConfigDocument, load_config, load_schema, parse_config
from .curves import (
    Elasticity,
    LinearDemand,
    LinearSupply,
    Quantity,
    UnitaryDemand,
    classify_elasticity,
    demand_quantity,
    point_elasticity,
    slope,
    supply_quantity,
)
from .eos import (
    AmplificationFactor,
    ConsistencyReport,
    UnitaryEoS,
    amplification_factor,
    check_linear_consistency,
    derive_linear_relations,
    derive_unitary_eos,
    derive_unitary_intermediate,
    eos_residual,
    linear_consistency_from_coefficients,
    per_household,
)
from .equilibrium import (
    EquilibriumPoint,
    MarketSpec,
    aggregate_demand,
    auto_bracket,
    clearing_price_analytic,
    clearing_price_numeric,
    excess_demand,
)
from .errors import (
    BracketingError,
    ConfigError,
    DomainError,
    InvariantError,
    UnsolvableMarketError,
)
from .reference_eos import (
    GAS_CONSTANT,
    CurieParamagnetEoS,
    IdealGasEoS,
    curie_magnetization,
    ideal_gas_pressure,
    surface_residual,
)
from .surface import (
    CurveCollapseReport,
    GridSpec,
    IsocurveFamily,
    IsopriceCollapseReport,
    SurfaceGrid,
    export,
    family_collapse,
    isocurves,
    isoprice_collapse_check,
    render_csv,
    render_json,
    sample_surface,
)
from .zeroth_law import (
    EquilibriumVerdict,
    LawReport,
    MarketRegistry,
    in_price_equilibrium,
    quantize,
    rank_markets,
    verify_equivalence_laws,
)

__version__ = "0.1.0"

__all__ = [
    "AmplificationFactor",
    "BracketingError",
    "ConfigDocument",
    "ConfigError",
    "ConsistencyReport",
    "CurieParamagnetEoS",
    "CurveCollapseReport",
    "DomainError",
    "Elasticity",
    "EquilibriumPoint",
    "EquilibriumVerdict",
    "GAS_CONSTANT",
    "GridSpec",
    "IdealGasEoS",
    "InvariantError",
    "IsocurveFamily",
    "IsopriceCollapseReport",
    "LawReport",
    "LinearDemand",
    "LinearSupply",
    "MarketRegistry",
    "MarketSpec",
    "Quantity",
    "SurfaceGrid",
    "UnitaryDemand",
    "UnitaryEoS",
    "UnsolvableMarketError",
    "aggregate_demand",
    "amplification_factor",
    "auto_bracket",
    "check_linear_consistency",
    "classify_elasticity",
    "clearing_price_analytic",
    "clearing_price_numeric",
    "curie_magnetization",
    "demand_quantity",
    "derive_linear_relations",
    "derive_unitary_eos",
    "derive_unitary_intermediate",
    "eos_residual",
    "excess_demand",
    "export",
    "family_collapse",
    "ideal_gas_pressure",
    "in_price_equilibrium",
    "isocurves",
    "isoprice_collapse_check",
    "linear_consistency_from_coefficients",
    "load_config",
    "load_schema",
    "parse_config",
    "per_household",
    "point_elasticity",
    "quantize",
    "rank_markets",
    "render_csv",
    "render_json",
    "sample_surface",
    "slope",
    "supply_quantity",
    "surface_residual",
    "verify_equivalence_laws",
]
