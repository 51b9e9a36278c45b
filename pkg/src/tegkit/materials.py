"""Material records, the preset registry, and composition classification."""

from dataclasses import dataclass, replace

from . import constants
from .errors import InvariantError, ParameterError, UnknownMaterialError

CARRIERS = ("p", "n", "metal", "insulator")
NEAR_STOICHIOMETRIC = "near_stoichiometric"

#: Default half-width of the Te:Bi band treated as near-stoichiometric.
STOICH_BAND_DEFAULT = 0.05


@dataclass(frozen=True)
class MaterialProps:
    """Transport properties of one material, SI units.

    seebeck is signed (V/K): positive for p-type conduction, negative for
    n-type. Insulators carry seebeck 0 and participate only thermally.
    """

    name: str
    seebeck: float  # V/K
    resistivity: float  # ohm m
    thermal_conductivity: float  # W/(m K)
    carrier: str  # one of CARRIERS

    def __post_init__(self):
        if self.carrier not in CARRIERS:
            raise InvariantError(
                f"carrier must be one of {CARRIERS}, got {self.carrier!r}"
            )
        if not self.resistivity > 0:
            raise InvariantError(f"{self.name}: resistivity must be > 0")
        if not self.thermal_conductivity > 0:
            raise InvariantError(f"{self.name}: thermal_conductivity must be > 0")
        if self.carrier == "p" and not self.seebeck > 0:
            raise InvariantError(f"{self.name}: p-type requires seebeck > 0")
        if self.carrier == "n" and not self.seebeck < 0:
            raise InvariantError(f"{self.name}: n-type requires seebeck < 0")
        if self.carrier == "insulator" and self.seebeck != 0:
            raise InvariantError(f"{self.name}: insulator requires seebeck = 0")


@dataclass(frozen=True)
class StoichiometryRatio:
    """Te:Bi atomic ratio of a Bi(2+x)Te(3-x) deposit.

    1.5 is stoichiometric Bi2Te3; smaller is Bi rich, larger is Te rich.
    """

    te_to_bi: float

    def __post_init__(self):
        if not self.te_to_bi > 0:
            raise InvariantError("te_to_bi must be > 0")

    @property
    def bi_excess(self) -> float:
        """x of Bi(2+x)Te(3-x); te_to_bi = (3 - x) / (2 + x)."""
        return (3 - 2 * self.te_to_bi) / (1 + self.te_to_bi)


_PRESETS = {
    "bi2te3_p_asdep": MaterialProps(
        "bi2te3_p_asdep",
        +constants.SEEBECK_COUPLE_AS_DEP / 2,
        constants.BI2TE3_RESISTIVITY_AS_DEP,
        constants.BI2TE3_THERMAL_CONDUCTIVITY,
        "p",
    ),
    "bi2te3_n_asdep": MaterialProps(
        "bi2te3_n_asdep",
        -constants.SEEBECK_COUPLE_AS_DEP / 2,
        constants.BI2TE3_RESISTIVITY_AS_DEP,
        constants.BI2TE3_THERMAL_CONDUCTIVITY,
        "n",
    ),
    "bi2te3_p_annealed": MaterialProps(
        "bi2te3_p_annealed",
        +constants.SEEBECK_COUPLE_ANNEALED / 2,
        constants.BI2TE3_RESISTIVITY_ANNEALED,
        constants.BI2TE3_THERMAL_CONDUCTIVITY,
        "p",
    ),
    "bi2te3_n_annealed": MaterialProps(
        "bi2te3_n_annealed",
        -constants.SEEBECK_COUPLE_ANNEALED / 2,
        constants.BI2TE3_RESISTIVITY_ANNEALED,
        constants.BI2TE3_THERMAL_CONDUCTIVITY,
        "n",
    ),
    "copper": MaterialProps(
        "copper",
        constants.COPPER_SEEBECK,
        constants.COPPER_RESISTIVITY,
        constants.COPPER_THERMAL_CONDUCTIVITY,
        "metal",
    ),
    "nickel": MaterialProps(
        "nickel",
        constants.NICKEL_SEEBECK,
        constants.NICKEL_RESISTIVITY,
        constants.NICKEL_THERMAL_CONDUCTIVITY,
        "metal",
    ),
    "su8": MaterialProps(
        "su8",
        0.0,
        constants.SU8_RESISTIVITY,
        constants.SU8_THERMAL_CONDUCTIVITY,
        "insulator",
    ),
    "gold": MaterialProps(
        "gold",
        constants.GOLD_SEEBECK,
        constants.GOLD_RESISTIVITY,
        constants.GOLD_THERMAL_CONDUCTIVITY,
        "metal",
    ),
}


def preset_names() -> tuple[str, ...]:
    return tuple(sorted(_PRESETS))


def lookup_material(name: str) -> MaterialProps:
    """Return the immutable preset record for `name`."""
    try:
        return _PRESETS[name]
    except KeyError:
        raise UnknownMaterialError(
            f"unknown material {name!r}; valid presets: {', '.join(preset_names())}"
        ) from None


def classify_carrier(
    ratio: StoichiometryRatio, band: float = STOICH_BAND_DEFAULT
) -> str:
    """Carrier class implied by composition.

    Te rich (> 1.5 + band) conducts n-type, Bi rich (< 1.5 - band) p-type.
    Anything inside the band is 'near_stoichiometric' and is rejected as a
    thermoleg material.
    """
    if band < 0:
        raise ParameterError("band must be >= 0")
    if ratio.te_to_bi > constants.STOICH_BALANCED + band:
        return "n"
    if ratio.te_to_bi < constants.STOICH_BALANCED - band:
        return "p"
    return NEAR_STOICHIOMETRIC


def apply_annealing(props: MaterialProps, power_gain: float) -> MaterialProps:
    """Anneal a thermoleg material: resistivity drops by `power_gain`.

    Modeled purely as a resistivity reduction with Seebeck unchanged; under
    the matched-load model, annealing both legs of a contact-free device
    scales its power by exactly `power_gain`.
    """
    if not power_gain > 0:
        raise ParameterError("power_gain must be > 0")
    if props.carrier not in ("p", "n"):
        raise ParameterError(
            f"annealing applies to p/n thermolegs, not {props.carrier!r}"
        )
    return replace(props, resistivity=props.resistivity / power_gain)
