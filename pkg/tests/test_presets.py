"""The shipped presets are fixed points of the calibration operations."""

import pytest

from tegkit import constants
from tegkit.device import calibrate_seebeck, evaluate, generator_thermal_resistance
from tegkit.materials import lookup_material


def test_reference_fill_factor_reproduces_the_divider_anchor(annealed):
    assert generator_thermal_resistance(annealed) == pytest.approx(
        constants.GENERATOR_RESISTANCE_REF, rel=1e-12
    )
    assert evaluate(annealed, 40.0).dt_gen == pytest.approx(21.4, abs=1e-9)


def test_annealed_preset_reproduces_its_measured_density(annealed):
    op = evaluate(annealed, 40.0)
    assert op.power_density == pytest.approx(
        constants.POWER_DENSITY_ANNEALED, rel=1e-12
    )


def test_as_deposited_preset_reproduces_its_measured_density(asdep):
    op = evaluate(asdep, 40.0)
    assert op.power_density == pytest.approx(
        constants.POWER_DENSITY_AS_DEP, rel=1e-12
    )


def test_preset_seebeck_matches_the_calibration_operation(annealed, asdep):
    # constants.py derives the preset coefficients with its own closed form;
    # the device-level operation must agree.
    for design, target, name in (
        (annealed, constants.POWER_DENSITY_ANNEALED, "bi2te3_p_annealed"),
        (asdep, constants.POWER_DENSITY_AS_DEP, "bi2te3_p_asdep"),
    ):
        couple = calibrate_seebeck(design, constants.DT_MEAS_REF, target)
        assert couple == pytest.approx(
            2 * lookup_material(name).seebeck, rel=1e-12
        )


def test_cu_ni_reference_performance(cuni):
    # Metal legs collapse the thermal divider and the Seebeck budget; the
    # result sits below the 60x comparison bound.
    op = evaluate(cuni, 40.0)
    assert op.power_density <= (
        constants.POWER_DENSITY_ANNEALED / constants.CU_NI_POWER_RATIO_MIN
    )
    assert op.dt_gen < 1.0


def test_leg_aspect_ratio_meets_the_mold_capability(annealed):
    width = annealed.leg_area**0.5
    assert annealed.leg_length / width >= 1.5
