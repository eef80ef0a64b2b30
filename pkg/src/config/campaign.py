"""
Campaign configuration document.

A campaign is declared in one JSON file with SI units throughout (Pa, m,
degrees C for deposition temperatures). Validation errors surface as
:class:`utils.errors.ConfigError`.
"""

import json
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from analysis import VariedBeam
from constitutive import HardeningLaw, MaterialModel
from machine_model import ActuatorSpec, BeamSpec, Machine, SpecimenSpec
from reduction import (
    Calibration,
    calibrate_from_free_beams,
    mismatch_from_temperatures,
)
from utils.errors import ConfigError, MicrotensileError


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class MaterialConfig(_Strict):
    """``{"E": 7.0e10, "law": "perfectly-plastic", "sigma_y": 4.0e8}``-style record."""

    E: float = Field(..., gt=0)
    law: HardeningLaw = HardeningLaw.PERFECTLY_PLASTIC
    sigma_y: Optional[float] = None
    K: Optional[float] = None
    n: Optional[float] = None
    label: str = ""

    def to_model(self) -> MaterialModel:
        return MaterialModel(
            youngs_modulus=self.E,
            law=self.law,
            yield_strength=self.sigma_y,
            hardening_coefficient=self.K,
            hardening_exponent=self.n,
            label=self.label,
        )


class FreeBeam(_Strict):
    length: float = Field(..., gt=0)
    dl_free: float


class MismatchConfig(_Strict):
    """Exactly one source for a mismatch term."""

    alpha_dt: Optional[float] = None
    free_beams: Optional[List[FreeBeam]] = None
    cte_mismatch: Optional[float] = None
    deposition_temperature: Optional[float] = None
    room_temperature: float = 20.0

    @model_validator(mode="after")
    def check_single_source(self) -> "MismatchConfig":
        sources = [
            self.alpha_dt is not None,
            self.free_beams is not None,
            self.cte_mismatch is not None or self.deposition_temperature is not None,
        ]
        if sum(sources) != 1:
            raise ValueError(
                "Give exactly one of alpha_dt, free_beams or "
                "(cte_mismatch, deposition_temperature)"
            )
        if sources[2] and (self.cte_mismatch is None or self.deposition_temperature is None):
            raise ValueError("cte_mismatch and deposition_temperature go together")
        return self

    def resolve(self) -> float:
        if self.alpha_dt is not None:
            return self.alpha_dt
        if self.free_beams is not None:
            return calibrate_from_free_beams((b.length, b.dl_free) for b in self.free_beams)
        return mismatch_from_temperatures(
            self.cte_mismatch, self.deposition_temperature, self.room_temperature
        )


class CalibrationConfig(_Strict):
    specimen: MismatchConfig
    actuator: MismatchConfig
    source: str = ""


class BeamConfig(_Strict):
    length: Optional[float] = Field(None, gt=0)
    width: float = Field(..., gt=0)
    thickness: float = Field(..., gt=0)


class ActuatorConfig(BeamConfig):
    E: float = Field(..., gt=0)


class SpecimenConfig(BeamConfig):
    material: str


class MachineConfig(_Strict):
    id: str = Field(..., min_length=1)
    actuator_length: Optional[float] = Field(None, gt=0)
    specimen_length: Optional[float] = Field(None, gt=0)


class DesignConfig(_Strict):
    targets: List[float]
    length_bounds: Tuple[float, float]
    vary: VariedBeam = VariedBeam.ACTUATOR
    rel_tol: Optional[float] = Field(None, gt=0, lt=1)
    id_prefix: str = "m"


class FitConfig(_Strict):
    elastic_modulus: Optional[float] = Field(None, gt=0)
    plastic_threshold: Optional[float] = None
    yield_guess: Optional[float] = Field(None, gt=0)
    offset: float = Field(0.0, ge=0)
    hardening: bool = False


class OutputConfig(_Strict):
    machines: str = "machines.json"
    predicted: str = "predicted_points.csv"
    measurements: str = "measurements.csv"
    points: str = "points.csv"
    fit: str = "fit.json"


class CampaignConfig(_Strict):
    """Top-level campaign document."""

    name: str = "campaign"
    calibration: CalibrationConfig
    materials: Dict[str, MaterialConfig]
    actuator: ActuatorConfig
    specimen: SpecimenConfig
    machines: Optional[List[MachineConfig]] = None
    design: Optional[DesignConfig] = None
    noise_sd: float = Field(0.0, ge=0)
    seed: int = 0
    fit: FitConfig = Field(default_factory=FitConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @model_validator(mode="after")
    def check_references(self) -> "CampaignConfig":
        if self.specimen.material not in self.materials:
            raise ValueError(
                f"Specimen material {self.specimen.material!r} is not declared in materials"
            )
        if (self.machines is None) == (self.design is None):
            raise ValueError("Declare exactly one of 'machines' or 'design'")
        if self.machines is not None:
            ids = [m.id for m in self.machines]
            if len(set(ids)) != len(ids):
                raise ValueError("Machine ids must be unique")
            for m in self.machines:
                if m.actuator_length is None and self.actuator.length is None:
                    raise ValueError(f"Machine {m.id} has no actuator length")
                if m.specimen_length is None and self.specimen.length is None:
                    raise ValueError(f"Machine {m.id} has no specimen length")
        elif self.specimen.length is None and self.design.vary is VariedBeam.ACTUATOR:
            raise ValueError("Design varying the actuator needs a specimen length")
        elif self.actuator.length is None and self.design.vary is VariedBeam.SPECIMEN:
            raise ValueError("Design varying the specimen needs an actuator length")
        return self

    # The builders below turn validated records into domain objects.

    def to_calibration(self) -> Calibration:
        return Calibration(
            alpha_dt_al=self.calibration.specimen.resolve(),
            alpha_dt_ac=self.calibration.actuator.resolve(),
            source=self.calibration.source,
        )

    def specimen_material(self) -> MaterialModel:
        return self.materials[self.specimen.material].to_model()

    def actuator_template(
        self, length: Optional[float] = None, calibration: Optional[Calibration] = None
    ) -> ActuatorSpec:
        # A designed length replaces the 1 m placeholder.
        beam = BeamSpec(
            length or self.actuator.length or 1.0,
            self.actuator.width,
            self.actuator.thickness,
        )
        calibration = calibration or self.to_calibration()
        return ActuatorSpec(beam, self.actuator.E, calibration.alpha_dt_ac)

    def specimen_template(
        self, length: Optional[float] = None, calibration: Optional[Calibration] = None
    ) -> SpecimenSpec:
        beam = BeamSpec(
            length or self.specimen.length or 1.0,
            self.specimen.width,
            self.specimen.thickness,
        )
        calibration = calibration or self.to_calibration()
        return SpecimenSpec(beam, self.specimen_material(), calibration.alpha_dt_al)

    def explicit_machines(self) -> List[Machine]:
        calibration = self.to_calibration()
        return [
            Machine(
                m.id,
                self.actuator_template(m.actuator_length, calibration),
                self.specimen_template(m.specimen_length, calibration),
            )
            for m in self.machines or []
        ]

    def elastic_modulus(self) -> float:
        """Modulus of the elastic line used by fits."""
        return self.fit.elastic_modulus or self.specimen_material().youngs_modulus


def load_campaign_config(source: Union[str, Path, dict]) -> CampaignConfig:
    """Parse and validate a campaign document from a path or a mapping.

    Raises:
        ConfigError: Unreadable file, malformed JSON, schema violation, or a
            record that violates a domain invariant.
    """
    try:
        if isinstance(source, dict):
            raw = source
        else:
            raw = json.loads(Path(source).read_text(encoding="utf-8"))
        config = CampaignConfig.model_validate(raw)
        # Build once so domain invariants are checked up front.
        config.to_calibration()
        config.specimen_material()
        if config.machines is not None:
            config.explicit_machines()
        else:
            config.actuator_template()
            config.specimen_template()
    except OSError as exc:
        raise ConfigError(f"Cannot read config {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"Config {source} is not valid JSON: {exc}") from exc
    except ValidationError as exc:
        raise ConfigError(f"Invalid campaign config:\n{exc}") from exc
    except MicrotensileError as exc:
        raise ConfigError(f"Invalid campaign config: {exc}") from exc
    return config
