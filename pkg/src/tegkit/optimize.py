"""Parameter sweeps, leg-length optimization, and design comparison."""

from dataclasses import dataclass, replace
from math import sqrt
from typing import Mapping

import numpy as np

from .device import GeneratorDesign, OperatingPoint, evaluate
from .errors import ComparisonError, ParameterError, SweepError, TegkitError

SWEEPABLE_PARAMETERS = (
    "leg_length",
    "fill_factor",
    "contact_resistivity",
    "interface_resistance",
    "dt_meas",
)

_INV_PHI = (sqrt(5) - 1) / 2  # 1/phi, golden-section shrink factor

#: Coarse pre-scan size used to certify unimodality before golden section.
PRESCAN_POINTS = 64
#: Grid size of the fallback argmax when the pre-scan rejects unimodality.
FALLBACK_GRID = 10_000


@dataclass(frozen=True)
class SweepCurve:
    """One evaluated parameter sweep; points ordered by parameter value."""

    parameter: str
    points: tuple[tuple[float, OperatingPoint], ...]

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.points)


@dataclass(frozen=True)
class OptimizationResult:
    best_value: float
    best_point: OperatingPoint
    iterations: int
    bracket: tuple[float, float]
    grid_fallback: bool = False  # set when the pre-scan saw non-unimodality


@dataclass(frozen=True)
class ComparisonTable:
    """Per-design operating points plus pairwise power-density ratios."""

    dt_meas: float
    rows: tuple[tuple[str, OperatingPoint], ...]

    def point(self, name: str) -> OperatingPoint:
        for row_name, op in self.rows:
            if row_name == name:
                return op
        raise KeyError(name)

    def density_ratio(self, a: str, b: str) -> float:
        return self.point(a).power_density / self.point(b).power_density

    def ratios(self) -> dict[str, float]:
        out = {}
        for a, _ in self.rows:
            for b, _ in self.rows:
                if a != b:
                    out[f"{a}/{b}"] = self.density_ratio(a, b)
        return out


def _evaluate_at(
    design: GeneratorDesign, dt_meas: float, parameter: str, value: float
) -> OperatingPoint:
    if parameter == "dt_meas":
        return evaluate(design, value)
    return evaluate(replace(design, **{parameter: value}), dt_meas)


def sweep(
    design: GeneratorDesign,
    dt_meas: float,
    parameter: str,
    lo: float,
    hi: float,
    n_points: int,
    spacing: str = "linear",
) -> SweepCurve:
    """Evaluate the design at n_points values of one parameter.

    All other parameters, including dt_meas unless it is the swept one, are
    held at the supplied values. Deterministic: identical inputs give
    identical curves.
    """
    if parameter not in SWEEPABLE_PARAMETERS:
        raise ParameterError(
            f"unknown sweep parameter {parameter!r}; "
            f"choose from {', '.join(SWEEPABLE_PARAMETERS)}"
        )
    if not lo < hi:
        raise ParameterError("sweep requires lo < hi")
    if n_points < 2:
        raise ParameterError("n_points must be >= 2")
    if spacing not in ("linear", "log"):
        raise ParameterError(f"spacing must be 'linear' or 'log', got {spacing!r}")
    if spacing == "log" and not lo > 0:
        raise ParameterError("log spacing requires lo > 0")

    if spacing == "log":
        values = np.geomspace(lo, hi, n_points)
    else:
        values = np.linspace(lo, hi, n_points)

    points = []
    for v in values:
        try:
            points.append((float(v), _evaluate_at(design, dt_meas, parameter, v)))
        except TegkitError as exc:
            raise SweepError(parameter, float(v), f"{parameter} = {v:g}: {exc}") from exc
    return SweepCurve(parameter=parameter, points=tuple(points))


def _is_unimodal(powers: np.ndarray) -> bool:
    # Rising phase followed by a falling phase; ties within float noise are
    # treated as flat and allowed in either phase.
    scale = float(np.max(np.abs(powers))) or 1.0
    tol = 1e-12 * scale
    seen_drop = False
    for d in np.diff(powers):
        if d > tol:
            if seen_drop:
                return False
        elif d < -tol:
            seen_drop = True
    return True


def optimize_leg_length(
    design: GeneratorDesign,
    dt_meas: float,
    lo: float,
    hi: float,
    tol: float = 0.1e-6,
) -> OptimizationResult:
    """Maximize matched-load power over leg length in [lo, hi].

    A 64-point log-spaced pre-scan certifies unimodality; golden-section
    search then shrinks the bracket below tol. If the pre-scan sees more
    than one rise-fall transition the result falls back to a dense-grid
    argmax and sets grid_fallback.
    """
    if not 0 < lo < hi:
        raise ParameterError("bracket requires 0 < lo < hi")
    if not tol > 0:
        raise ParameterError("tol must be > 0")

    def power(length: float) -> float:
        return _evaluate_at(design, dt_meas, "leg_length", length).p_matched

    scan_x = np.geomspace(lo, hi, PRESCAN_POINTS)
    scan_p = np.array([power(x) for x in scan_x])

    if not _is_unimodal(scan_p):
        grid = np.linspace(lo, hi, FALLBACK_GRID)
        best = float(grid[int(np.argmax([power(x) for x in grid]))])
        return OptimizationResult(
            best_value=best,
            best_point=_evaluate_at(design, dt_meas, "leg_length", best),
            iterations=FALLBACK_GRID,
            bracket=(lo, hi),
            grid_fallback=True,
        )

    peak = int(np.argmax(scan_p))
    a = float(scan_x[max(peak - 1, 0)])
    b = float(scan_x[min(peak + 1, PRESCAN_POINTS - 1)])

    # Golden-section maximization on [a, b].
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    pc, pd = power(c), power(d)
    iterations = 0
    while b - a > tol:
        if pc > pd:
            b, d, pd = d, c, pc
            c = b - _INV_PHI * (b - a)
            pc = power(c)
        else:
            a, c, pc = c, d, pd
            d = a + _INV_PHI * (b - a)
            pd = power(d)
        iterations += 1
    best = (a + b) / 2
    return OptimizationResult(
        best_value=best,
        best_point=_evaluate_at(design, dt_meas, "leg_length", best),
        iterations=iterations,
        bracket=(lo, hi),
    )


def compare_designs(
    designs: Mapping[str, GeneratorDesign], dt_meas: float
) -> ComparisonTable:
    """Evaluate named designs at a common dt_meas."""
    if len(designs) < 2:
        raise ParameterError("compare_designs requires at least 2 designs")
    rows = []
    for name, design in designs.items():
        try:
            rows.append((name, evaluate(design, dt_meas)))
        except TegkitError as exc:
            raise ComparisonError(name, f"design {name!r}: {exc}") from exc
    return ComparisonTable(dt_meas=dt_meas, rows=tuple(rows))
