"""Grid sampling, iso-curves, collapse checks, and deterministic exports."""

import json

import jsonschema
import pytest

from market_eos import (
    DomainError,
    GridSpec,
    IdealGasEoS,
    InvariantError,
    LinearSupply,
    MarketSpec,
    UnitaryDemand,
    derive_unitary_eos,
    export,
    family_collapse,
    isocurves,
    isoprice_collapse_check,
    load_schema,
    render_csv,
    render_json,
    sample_surface,
)

UNIT_EOS = derive_unitary_eos(
    MarketSpec(demand=UnitaryDemand(k_s=8.0), supply=LinearSupply(k_d=2.0), households=4)
)  # K = 1
GRID_2X2 = GridSpec(x_min=1.0, x_max=2.0, nx=2, t_min=1.0, t_max=2.0, nt=2)


def test_two_by_two_surface_values():
    grid = sample_surface(UNIT_EOS, GRID_2X2)
    assert grid.points == (
        (1.0, 1.0, 1.0),
        (2.0, 1.0, 2.0),
        (1.0, 2.0, 0.5),
        (2.0, 2.0, 1.0),
    )
    assert (grid.x_label, grid.y_label, grid.t_label) == ("Q_s", "q_d", "Pr")


def test_point_count_matches_grid():
    assert len(sample_surface(UNIT_EOS, GRID_2X2).points) == 4
    grid = GridSpec(x_min=1.0, x_max=2.0, nx=5, t_min=1.0, t_max=2.0, nt=3)
    assert len(sample_surface(UNIT_EOS, grid).points) == 15


def test_ideal_gas_surface_value():
    gas = IdealGasEoS(n=1.0, R=8.314)
    grid = GridSpec(x_min=0.024, x_max=0.048, nx=2, t_min=300.0, t_max=600.0, nt=2)
    sampled = sample_surface(gas, grid)
    x, t, y = sampled.points[0]
    assert (x, t) == (0.024, 300.0)
    assert abs(y - 103925.0) <= 0.5


def test_csv_has_header_plus_point_lines():
    text = render_csv(sample_surface(UNIT_EOS, GRID_2X2))
    lines = text.splitlines()
    assert len(lines) == 5
    assert lines[0] == "x,t,y"


def test_csv_round_trip_bit_exact():
    grid = GridSpec(x_min=0.7, x_max=9.3, nx=7, t_min=0.3, t_max=11.0, nt=5)
    sampled = sample_surface(IdealGasEoS(n=1.37), grid)
    lines = render_csv(sampled).splitlines()[1:]
    parsed = [tuple(float(cell) for cell in line.split(",")) for line in lines]
    assert tuple(parsed) == sampled.points


def test_isotherms_double_with_temperature():
    family = isocurves(IdealGasEoS(), [300.0, 600.0], (0.01, 0.1), 20)
    cold, hot = family.curves
    for (x0, y0), (x1, y1) in zip(cold, hot):
        assert x0 == x1
        assert y1 == pytest.approx(2.0 * y0, rel=1e-15)
    verdict = family_collapse(family)
    assert verdict.n_curves == 2
    assert verdict.collapse is False


def test_unit_price_isocurve_is_identity():
    family = isocurves(UNIT_EOS, [1.0], (1.0, 5.0), 9)
    assert len(family.curves) == 1
    assert all(y == x for x, y in family.curves[0])


def test_isoprice_collapse_canonical_market():
    market = MarketSpec(demand=UnitaryDemand(k_s=8.0), supply=LinearSupply(k_d=2.0), households=4)
    report = isoprice_collapse_check(market, [1.0, 2.0, 4.0, 8.0])
    assert report.collapse is True
    assert report.line_slope == 0.25
    assert report.max_rel_deviation <= 1e-12
    # cleared states: (N*q_d, q_d) at each price
    assert report.points[0] == (32.0, 8.0)


def test_isoprice_slope_is_one_for_single_household():
    market = MarketSpec(demand=UnitaryDemand(k_s=8.0), supply=LinearSupply(k_d=2.0))
    assert isoprice_collapse_check(market, [1.0, 3.0]).line_slope == 1.0


def test_gas_isotherms_do_not_collapse():
    family = isocurves(IdealGasEoS(), [300.0, 600.0], (0.01, 0.1), 10)
    assert family_collapse(family).collapse is False


def test_isoprice_check_rejects_linear_and_empty():
    from market_eos import LinearDemand

    with pytest.raises(TypeError):
        isoprice_collapse_check(
            MarketSpec(demand=LinearDemand(k_s=-2.0, q_d0=10.0), supply=LinearSupply(k_d=3.0)),
            [1.0],
        )
    market = MarketSpec(demand=UnitaryDemand(k_s=8.0), supply=LinearSupply(k_d=2.0))
    with pytest.raises(DomainError):
        isoprice_collapse_check(market, [])
    aggregate = MarketSpec(
        demand=UnitaryDemand(k_s=8.0), supply=LinearSupply(k_d=2.0), interpretation="aggregate"
    )
    with pytest.raises(DomainError):
        isoprice_collapse_check(aggregate, [1.0])


def test_surface_json_validates_against_schema():
    doc = json.loads(render_json(sample_surface(UNIT_EOS, GRID_2X2)))
    jsonschema.validate(doc, load_schema("surface"))


def test_isocurves_json_validates_against_schema():
    doc = json.loads(render_json(isocurves(IdealGasEoS(), [300.0, 600.0], (0.01, 0.1), 4)))
    jsonschema.validate(doc, load_schema("isocurves"))


def test_exports_are_deterministic():
    grid = GridSpec(x_min=1.0, x_max=10.0, nx=13, t_min=1.0, t_max=10.0, nt=11)
    a = render_csv(sample_surface(UNIT_EOS, grid))
    b = render_csv(sample_surface(UNIT_EOS, grid))
    assert a == b
    assert render_json(sample_surface(UNIT_EOS, grid)) == render_json(
        sample_surface(UNIT_EOS, grid)
    )


def test_export_writes_files(tmp_path):
    grid = sample_surface(UNIT_EOS, GRID_2X2)
    csv_path = export(grid, "csv", tmp_path / "surface.csv")
    assert csv_path.read_text(encoding="utf-8") == render_csv(grid)
    json_path = export(grid, "json", tmp_path / "surface.json")
    assert json.loads(json_path.read_text(encoding="utf-8")) == grid.to_dict()
    with pytest.raises(DomainError):
        export(grid, "xml", tmp_path / "surface.xml")


def test_domain_violation_names_offending_point():
    gas = IdealGasEoS()
    grid = GridSpec(x_min=-1.0, x_max=1.0, nx=3, t_min=300.0, t_max=600.0, nt=2)
    with pytest.raises(DomainError, match=r"grid point \(x=-1\.0"):
        sample_surface(gas, grid)


def test_grid_spec_invariants():
    with pytest.raises(InvariantError):
        GridSpec(x_min=2.0, x_max=1.0, nx=2, t_min=1.0, t_max=2.0, nt=2)
    with pytest.raises(InvariantError):
        GridSpec(x_min=1.0, x_max=2.0, nx=1, t_min=1.0, t_max=2.0, nt=2)
    with pytest.raises(InvariantError):
        GridSpec(x_min=1.0, x_max=2.0, nx=2, t_min=1.0, t_max=2.0, nt=2, spacing="log")


def test_isocurve_argument_errors():
    with pytest.raises(DomainError):
        isocurves(UNIT_EOS, [1.0], (1.0, 5.0), 1)
    with pytest.raises(DomainError):
        isocurves(UNIT_EOS, [1.0], (5.0, 1.0), 4)
    with pytest.raises(DomainError):
        isocurves(UNIT_EOS, [], (1.0, 5.0), 4)
