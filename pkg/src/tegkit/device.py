"""Coupled thermal-electrical generator model.

Steady state and linear: the device is a thermal voltage divider (generator
resistance against the lumped interface resistance) feeding a Seebeck source
with ohmic internal resistance. No Peltier/Joule back-coupling, so the same
heat flow crosses the hot and cold faces and matched-load power scales with
the square of the applied temperature difference.
"""

from dataclasses import dataclass
from math import sqrt

from .errors import (
    CalibrationError,
    DegenerateDesignError,
    InvariantError,
    ParameterError,
)
from .materials import MaterialProps


@dataclass(frozen=True)
class GeneratorDesign:
    """Full device geometry, materials, and interface parasitics (SI).

    fill_factor is the thermoactive fraction of the device area; with A_V
    the insulating-to-thermoactive area ratio, fill_factor = 1 / (1 + A_V).
    contact_resistivity applies per metal-semiconductor contact (two per
    leg). interface_resistance lumps both mounting faces.
    """

    leg_length: float  # m
    leg_area: float  # m2, one leg cross section
    fill_factor: float
    device_area: float  # m2
    p_material: MaterialProps
    n_material: MaterialProps
    matrix_material: MaterialProps
    contact_resistivity: float  # ohm m2
    interface_resistance: float  # K/W

    def __post_init__(self):
        if not self.leg_length > 0:
            raise InvariantError("leg_length must be > 0")
        if not self.leg_area > 0:
            raise InvariantError("leg_area must be > 0")
        if not self.device_area > 0:
            raise InvariantError("device_area must be > 0")
        if not 0 < self.fill_factor <= 1:
            raise InvariantError("fill_factor must be in (0, 1]")
        if self.contact_resistivity < 0:
            raise InvariantError("contact_resistivity must be >= 0")
        if self.interface_resistance < 0:
            raise InvariantError("interface_resistance must be >= 0")
        if self.matrix_material.carrier != "insulator":
            raise InvariantError("matrix_material must be an insulator")
        # Leg slots are conventionally p (positive Seebeck) and n (negative),
        # but metal legs and deliberate swaps are evaluable; only insulating
        # legs are rejected.
        for slot, mat in (("p_material", self.p_material),
                          ("n_material", self.n_material)):
            if mat.carrier == "insulator":
                raise InvariantError(f"{slot} must be thermoelectrically active")

    @property
    def couples(self) -> float:
        """Thermocouple count N = F * A_dev / (2 * A_leg), continuous."""
        return self.fill_factor * self.device_area / (2 * self.leg_area)


@dataclass(frozen=True)
class OperatingPoint:
    """Derived performance at one measured temperature difference."""

    dt_meas: float  # K, between the external sensors
    dt_gen: float  # K, across the generator
    v_oc: float  # V
    r_internal: float  # ohm
    p_matched: float  # W
    power_density: float  # W/m2
    q_hot: float  # W
    q_cold: float  # W
    eff_factor: float  # W m^-2 K^-2, power_density / dt_meas^2


def generator_thermal_resistance(design: GeneratorDesign) -> float:
    """Thermal resistance of the generator body, K/W.

    Legs and SU-8 matrix conduct in parallel across the full device area:
    R_G = L / (A_dev * (F * lambda_te_avg + (1 - F) * lambda_matrix)).
    """
    lam = (
        design.fill_factor
        * (
            design.p_material.thermal_conductivity
            + design.n_material.thermal_conductivity
        )
        / 2
        + (1 - design.fill_factor) * design.matrix_material.thermal_conductivity
    )
    if not lam > 0:
        raise DegenerateDesignError("no thermal conduction path through device")
    return design.leg_length / (design.device_area * lam)


def thermal_divider(dt_meas: float, r_gen: float, k_if: float) -> float:
    """Temperature difference across the generator, K.

    The measured difference divides between the generator body and the
    interface resistance: dt_gen = dt_meas * r_gen / (r_gen + k_if).
    """
    if dt_meas < 0:
        raise ParameterError("dt_meas must be >= 0")
    if not r_gen > 0:
        raise DegenerateDesignError("r_gen must be > 0")
    if k_if < 0:
        raise ParameterError("k_if must be >= 0")
    # evaluate the ratio first so dt_gen can never exceed dt_meas by a
    # rounding ulp (r / (r + 0) is exactly 1.0)
    return dt_meas * (r_gen / (r_gen + k_if))


def calibrate_r_gen(dt_meas: float, dt_gen: float, k_if: float) -> float:
    """Invert the divider: generator resistance from observed dt_gen, K/W."""
    if not k_if > 0:
        raise ParameterError("k_if must be > 0")
    if not dt_gen > 0:
        raise ParameterError("dt_gen must be > 0")
    if dt_gen >= dt_meas:
        raise CalibrationError(
            f"dt_gen = {dt_gen} K must be smaller than dt_meas = {dt_meas} K"
        )
    return k_if * dt_gen / (dt_meas - dt_gen)


def heat_flow(dt_gen: float, r_gen: float) -> float:
    """Heat flow through the generator, W; equal at hot and cold faces."""
    if not r_gen > 0:
        raise ParameterError("r_gen must be > 0")
    return dt_gen / r_gen


def open_circuit_voltage(design: GeneratorDesign, dt_gen: float) -> float:
    """V_oc = N * (alpha_p - alpha_n) * dt_gen."""
    if dt_gen < 0:
        raise ParameterError("dt_gen must be >= 0")
    n = design.couples
    if n < 1:
        raise DegenerateDesignError(
            f"couple count N = {n:.3g} < 1; not a realizable device"
        )
    return n * (design.p_material.seebeck - design.n_material.seebeck) * dt_gen


def internal_resistance(design: GeneratorDesign) -> float:
    """Series resistance of all couples, ohm.

    Per couple: two legs in series plus four metal-semiconductor contacts;
    interconnect metal resistance is neglected.
    """
    per_couple = (
        (design.p_material.resistivity + design.n_material.resistivity)
        * design.leg_length
        + 4 * design.contact_resistivity
    ) / design.leg_area
    return design.couples * per_couple


def load_power(v_oc: float, r_internal: float, r_load: float) -> float:
    """Power delivered into r_load, W."""
    if not r_internal > 0:
        raise ParameterError("r_internal must be > 0")
    if r_load < 0:
        raise ParameterError("r_load must be >= 0")
    return v_oc**2 * r_load / (r_internal + r_load) ** 2


def matched_load_power(v_oc: float, r_internal: float) -> float:
    """Maximum deliverable power, W: v_oc^2 / (4 r_internal)."""
    if not r_internal > 0:
        raise ParameterError("r_internal must be > 0")
    return v_oc**2 / (4 * r_internal)


def efficiency_factor(power_density: float, dt_meas: float) -> float:
    """Area benchmark power_density / dt_meas^2, W m^-2 K^-2.

    Not the dimensionless thermoelectric figure of merit; this is the
    device-level quantity commonly quoted in uW cm^-2 K^-2.
    """
    if not dt_meas > 0:
        raise ParameterError("dt_meas must be > 0")
    dt_sq = dt_meas * dt_meas
    if dt_sq == 0.0:
        raise ParameterError("dt_meas too small: dt_meas^2 underflows")
    return power_density / dt_sq


def evaluate(design: GeneratorDesign, dt_meas: float) -> OperatingPoint:
    """Full model evaluation at one measured temperature difference."""
    if dt_meas < 0:
        raise ParameterError("dt_meas must be >= 0")
    r_gen = generator_thermal_resistance(design)
    dt_gen = thermal_divider(dt_meas, r_gen, design.interface_resistance)
    v_oc = open_circuit_voltage(design, dt_gen)
    r_i = internal_resistance(design)
    p = matched_load_power(v_oc, r_i)
    q = heat_flow(dt_gen, r_gen)
    density = p / design.device_area
    dt_sq = dt_meas * dt_meas
    eff = density / dt_sq if dt_sq > 0 else 0.0
    return OperatingPoint(
        dt_meas=dt_meas,
        dt_gen=dt_gen,
        v_oc=v_oc,
        r_internal=r_i,
        p_matched=p,
        power_density=density,
        q_hot=q,
        q_cold=q,
        eff_factor=eff,
    )


def calibrate_seebeck(
    design: GeneratorDesign, dt_meas: float, target_density: float
) -> float:
    """Couple coefficient alpha_p - alpha_n that reproduces target_density.

    Closed form: alpha = sqrt(4 R_i A_dev target) / (N dt_gen). The design's
    own Seebeck values are ignored; geometry, resistivities, and interfaces
    are taken as given.
    """
    if not target_density > 0:
        raise ParameterError("target_density must be > 0")
    if not dt_meas > 0:
        raise ParameterError("dt_meas must be > 0")
    n = design.couples
    if n < 1:
        raise CalibrationError(
            f"couple count N = {n:.3g} < 1; geometry cannot be calibrated"
        )
    r_gen = generator_thermal_resistance(design)
    dt_gen = thermal_divider(dt_meas, r_gen, design.interface_resistance)
    r_i = internal_resistance(design)
    return sqrt(4 * r_i * design.device_area * target_density) / (n * dt_gen)
