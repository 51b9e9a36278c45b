"""Pulsed electrochemical deposition of Bi(2+x)Te(3-x) into SU-8 molds.

Galvanostatic pulse trains only. Growth follows Faraday's law at 100%
current efficiency; ion transport inside the high-aspect-ratio mold is pure
1-D diffusion (convection reaches only the mold mouth, which a stirred
reservoir holds at the bulk concentration). Pulses draw a fixed ion flux at
the deposit surface; pauses let the depleted layer relax.

electrons_per_formula converts charge both to deposited formula units
(default 18 e per Bi2Te3) and to ion flux at the surface. When tracking the
depletion of a single species, set it to that ion's electron count (4 for
HTeO2+); the two uses are not simultaneously exact for a compound deposit.
"""

from dataclasses import dataclass
from math import pi

import numpy as np

from . import constants
from .errors import (
    DepletionError,
    ExtrapolationError,
    InvariantError,
    ParameterError,
    StabilityError,
)
from .materials import StoichiometryRatio


@dataclass(frozen=True)
class PulsePlan:
    """Galvanostatic pulse train. j_pulse is the magnitude during pulses."""

    t_pulse: float  # s
    t_pause: float  # s
    j_pulse: float  # A/m2
    total_time: float  # s

    def __post_init__(self):
        if not self.t_pulse > 0:
            raise InvariantError("t_pulse must be > 0")
        if self.t_pause < 0:
            raise InvariantError("t_pause must be >= 0")
        if self.j_pulse < 0:
            raise InvariantError("j_pulse must be >= 0")
        if not self.total_time > 0:
            raise InvariantError("total_time must be > 0")

    @property
    def period(self) -> float:
        return self.t_pulse + self.t_pause

    @property
    def duty(self) -> float:
        return self.t_pulse / self.period


@dataclass(frozen=True)
class BathSpec:
    """Electrolyte composition and transport (acidic nitrate bath)."""

    c_teo2: float = constants.BATH_C_TEO2  # mol/m3, HTeO2+ from dissolved O2Te
    c_bi2o3: float = 40.0  # mol/m3 dissolved Bi2O3
    diffusivity: float = constants.DEFAULT_DIFFUSIVITY  # m2/s
    electrons_per_formula: float = constants.BI2TE3_ELECTRONS_PER_FORMULA
    molar_mass: float = constants.BI2TE3_MOLAR_MASS  # kg/mol
    density: float = constants.BI2TE3_DENSITY  # kg/m3

    def __post_init__(self):
        for field_name in (
            "c_teo2",
            "c_bi2o3",
            "diffusivity",
            "electrons_per_formula",
            "molar_mass",
            "density",
        ):
            if not getattr(self, field_name) > 0:
                raise InvariantError(f"{field_name} must be > 0")


@dataclass(frozen=True)
class DepositState:
    """Result of one deposition simulation."""

    thickness: float  # m, final deposit thickness
    growth_rate: float  # m/s, average over the run
    composition: StoichiometryRatio | None  # None if bath outside the map
    min_surface_conc: float  # mol/m3, minimum seen at the deposit surface
    depth: np.ndarray  # m, grid positions (0 = deposit surface)
    profile: np.ndarray  # mol/m3, final concentration on `depth`
    times: np.ndarray  # s, recorded instants
    thickness_series: np.ndarray  # m, thickness at `times`
    surface_conc_series: np.ndarray  # mol/m3, surface concentration at `times`


def duty_cycle(plan: PulsePlan) -> float:
    """Pulse-on fraction t_pulse / (t_pulse + t_pause)."""
    return plan.duty


def faraday_growth_rate(j_avg: float, bath: BathSpec) -> float:
    """Deposit growth speed, m/s, for an average current density j_avg."""
    if j_avg < 0:
        raise ParameterError("j_avg must be >= 0")
    return j_avg * bath.molar_mass / (
        bath.electrons_per_formula * constants.FARADAY * bath.density
    )


def time_to_thickness(target: float, plan: PulsePlan, bath: BathSpec) -> float:
    """Seconds of pulsed plating needed to reach `target` thickness."""
    if target < 0:
        raise ParameterError("target must be >= 0")
    if target == 0:
        return 0.0
    rate = faraday_growth_rate(plan.j_pulse * plan.duty, bath)
    if not rate > 0:
        raise ParameterError("effective growth rate is zero")
    return target / rate


def sand_time(c_bulk: float, diffusivity: float, n_e: float, j: float) -> float:
    """Depletion time of a constant-current, semi-infinite diffusion layer.

    tau = pi D (n_e F c)^2 / (4 j^2); a pulse shorter than tau keeps the
    surface concentration positive in the analytic model.
    """
    for name, v in (("c_bulk", c_bulk), ("diffusivity", diffusivity),
                    ("n_e", n_e), ("j", j)):
        if not v > 0:
            raise ParameterError(f"{name} must be > 0")
    return pi * diffusivity * (n_e * constants.FARADAY * c_bulk) ** 2 / (4 * j**2)


def stoichiometry_from_bath(c_bi2o3: float) -> StoichiometryRatio:
    """Deposit Te:Bi ratio from the bath's Bi2O3 concentration, mol/m3.

    Piecewise-linear through the measured anchors: 20 -> 2.1 (Te rich),
    40 -> 1.5 (recipe boundary), 60 -> 0.8 (Bi rich). Monotone decreasing.
    """
    if not constants.BATH_C_BI2O3_MIN <= c_bi2o3 <= constants.BATH_C_BI2O3_MAX:
        raise ExtrapolationError(
            f"c_bi2o3 = {c_bi2o3:g} mol/m3 outside the mapped window "
            f"[{constants.BATH_C_BI2O3_MIN:g}, {constants.BATH_C_BI2O3_MAX:g}]"
        )
    ratio = float(
        np.interp(
            c_bi2o3,
            [constants.BATH_C_BI2O3_MIN, 40.0, constants.BATH_C_BI2O3_MAX],
            [constants.STOICH_TE_RICH, constants.STOICH_BALANCED,
             constants.STOICH_BI_RICH],
        )
    )
    return StoichiometryRatio(ratio)


def diffusion_step(
    profile: np.ndarray,
    r: float,
    dx: float,
    dt: float,
    surface_consumption: float,
    mouth_concentration: float | None,
) -> np.ndarray:
    """One explicit FTCS step on a 1-D concentration profile.

    Index 0 is the deposit surface with a ghost-node flux condition drawing
    `surface_consumption` mol/(m2 s). The last node is held at
    `mouth_concentration` (stirred reservoir) or, when None, is a zero-flux
    wall (closed test cell; conserves trapezoid mass exactly).
    """
    new = np.empty_like(profile)
    new[1:-1] = profile[1:-1] + r * (
        profile[2:] - 2 * profile[1:-1] + profile[:-2]
    )
    new[0] = (
        profile[0]
        + 2 * r * (profile[1] - profile[0])
        - 2 * dt * surface_consumption / dx
    )
    if mouth_concentration is None:
        new[-1] = profile[-1] + 2 * r * (profile[-2] - profile[-1])
    else:
        new[-1] = mouth_concentration
    return new


def simulate_diffusion(
    mold_depth: float,
    bath: BathSpec,
    plan: PulsePlan,
    grid: int,
    dt: float,
    record_every: int = 1,
) -> DepositState:
    """Run the pulse train and return the deposit state.

    Explicit scheme; dt must satisfy dt <= 0.5 dx^2 / D or the run is
    rejected. The surface concentration is never clamped: a step that would
    drive it negative aborts with a DepletionError carrying that time.
    """
    if not mold_depth > 0:
        raise ParameterError("mold_depth must be > 0")
    if grid < 16:
        raise ParameterError("grid must be >= 16")
    if not dt > 0:
        raise ParameterError("dt must be > 0")
    if record_every < 1:
        raise ParameterError("record_every must be >= 1")

    dx = mold_depth / (grid - 1)
    dt_limit = 0.5 * dx * dx / bath.diffusivity
    if dt > dt_limit:
        raise StabilityError(
            f"dt = {dt:g} s exceeds the stability bound 0.5 dx^2 / D = "
            f"{dt_limit:g} s (grid {grid}, depth {mold_depth:g} m)"
        )

    r = bath.diffusivity * dt / (dx * dx)
    consumption = plan.j_pulse / (bath.electrons_per_formula * constants.FARADAY)
    n_steps = max(1, int(round(plan.total_time / dt)))

    profile = np.full(grid, bath.c_teo2)
    thickness = 0.0
    min_surface = bath.c_teo2
    times = [0.0]
    thickness_series = [0.0]
    surface_series = [bath.c_teo2]

    for k in range(n_steps):
        t = k * dt
        in_pulse = (t % plan.period) < plan.t_pulse
        j = plan.j_pulse if in_pulse else 0.0
        profile = diffusion_step(
            profile,
            r,
            dx,
            dt,
            consumption if in_pulse else 0.0,
            bath.c_teo2,
        )
        if profile[0] < 0:
            raise DepletionError((k + 1) * dt)
        thickness += faraday_growth_rate(j, bath) * dt
        if profile[0] < min_surface:
            min_surface = float(profile[0])
        if (k + 1) % record_every == 0 or k == n_steps - 1:
            times.append((k + 1) * dt)
            thickness_series.append(thickness)
            surface_series.append(float(profile[0]))

    c = bath.c_bi2o3
    composition = (
        stoichiometry_from_bath(c)
        if constants.BATH_C_BI2O3_MIN <= c <= constants.BATH_C_BI2O3_MAX
        else None
    )
    return DepositState(
        thickness=thickness,
        growth_rate=thickness / (n_steps * dt),
        composition=composition,
        min_surface_conc=min_surface,
        depth=np.linspace(0.0, mold_depth, grid),
        profile=profile,
        times=np.asarray(times),
        thickness_series=np.asarray(thickness_series),
        surface_conc_series=np.asarray(surface_series),
    )
