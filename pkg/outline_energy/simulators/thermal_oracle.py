# outline_energy/simulators/thermal_oracle.py

"""
Simulador determinístico de carga térmica anual em regime permanente (graus-dia)

Mapeia (OutlineSpec, FeatureVector) na carga térmica anual em kWh/m²·ano:

    H_tr   = U_parede·A_opaca + U_vidro·A_vidro + u_roof·A_piso + h_vent       (W/K)
    G_sol  = Σ_arestas shgc · f_sombra · A_vidro(aresta) · I(azimute)           (kWh/ano)
    Q_aq   = max(0, H_tr·24·hdd/1000 − eta_gain·f_heat_season·G_sol)
    Q_resf = H_tr·24·cdd/1000 + f_cool_season·G_sol + q_internal·A_piso
    carga  = f_massa · (Q_aq + Q_resf) / A_piso

A carga é demanda (sem eficiências de sistema).
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Dict, List, Optional, Sequence, Tuple

from ..config.logger import setup_logger
from ..config.settings import settings
from ..exceptions import ConfigurationError, SimulationError, ValidationError
from ..generators.feature_sampler import FeatureSampler, FeatureVector, GridCell
from ..geometry.outlines import OutlineGeometry, OutlineSpec, ShapeKind
from ..utils import stable_digest

logger = setup_logger(__name__)

_FRACTIONS = ("shgc", "f_heat_season", "f_cool_season", "eta_gain", "alpha_mass")
_NON_NEGATIVE = ("hdd", "cdd", "irr_min", "u_roof", "r_si", "r_se", "h_vent", "q_internal")

@dataclass(frozen=True)
class ClimateConfig:
    """Constantes de clima e de física do simulador (valores calibrados)"""
    hdd: float = 650.0
    cdd: float = 150.0
    irr_max: float = 1100.0
    irr_min: float = 400.0
    shgc: float = 0.4
    f_heat_season: float = 0.3
    f_cool_season: float = 0.35
    eta_gain: float = 0.4
    u_roof: float = 0.3
    r_si: float = 0.13
    r_se: float = 0.04
    h_vent: float = 100.0
    q_internal: float = 175.0
    alpha_mass: float = 0.10
    c_ref: float = 4.2e5
    wall_height: float = 3.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigurationError(f"ClimateConfig.{f.name} deve ser um número finito (recebido {value!r})")
            object.__setattr__(self, f.name, float(value))
        for name in _NON_NEGATIVE:
            if getattr(self, name) < 0.0:
                raise ConfigurationError(f"ClimateConfig.{name} deve ser >= 0")
        for name in _FRACTIONS:
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigurationError(f"ClimateConfig.{name} deve estar em [0, 1]")
        if self.irr_max < self.irr_min:
            raise ConfigurationError("ClimateConfig.irr_max deve ser >= irr_min")
        if self.c_ref <= 0.0 or self.wall_height <= 0.0:
            raise ConfigurationError("ClimateConfig.c_ref e wall_height devem ser positivos")

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, float]]) -> "ClimateConfig":
        """
        Construir a partir de um objeto JSON plano (chaves desconhecidas são rejeitadas)

        Args:
            data: Subconjunto dos campos; os ausentes usam o padrão

        Returns:
            ClimateConfig
        """
        data = data or {}
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(f"ClimateConfig: chaves desconhecidas {unknown}")
        return cls(**data)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def digest(self) -> str:
        return stable_digest(self.to_dict())

@dataclass(frozen=True)
class Sample:
    """Linha do conjunto de dados: forma, características e carga (kWh/m²·ano)"""
    shape: ShapeKind
    features: FeatureVector
    load: float

    def __post_init__(self):
        if not (math.isfinite(self.load) and self.load > 0.0):
            raise ValidationError(f"Carga térmica deve ser positiva e finita (recebido {self.load})")

class ThermalOracle:
    """Simulador de carga térmica anual"""

    def __init__(self, config: Optional[ClimateConfig] = None):
        self.config = config or ClimateConfig()
        self._outlines: Dict[ShapeKind, OutlineSpec] = {}

    def outline(self, shape: ShapeKind) -> OutlineSpec:
        """Contorno canônico (memorizado) de uma forma"""
        shape = ShapeKind(shape)
        if shape not in self._outlines:
            self._outlines[shape] = OutlineGeometry.canonical_outline(shape)
        return self._outlines[shape]

    def wall_u_value(self, thickness: float, conductivity: float) -> float:
        """
        Transmitância da parede, incluindo resistências superficiais

        Args:
            thickness: Espessura (m), > 0
            conductivity: Condutividade (W/m·K), > 0

        Returns:
            U em W/m²·K
        """
        if not (thickness > 0.0 and conductivity > 0.0):
            raise SimulationError(f"Espessura e condutividade devem ser positivas ({thickness}, {conductivity})")
        return 1.0 / (self.config.r_si + thickness / conductivity + self.config.r_se)

    @staticmethod
    def shading_factor(depth: float) -> float:
        """Fração da radiação que passa pelo brise: max(0.2, 1 − 1.2·profundidade)"""
        if depth < 0.0:
            raise SimulationError(f"Profundidade de sombreamento negativa: {depth}")
        return max(0.2, 1.0 - 1.2 * depth)

    def facade_irradiation(self, azimuth: float) -> float:
        """Irradiação anual na fachada (kWh/m²·ano); máxima ao sul (180°), mínima ao norte"""
        c = self.config
        return c.irr_min + (c.irr_max - c.irr_min) * (1.0 + math.cos(math.radians(azimuth - 180.0))) / 2.0

    def mass_factor(self, density: float, shc: float, thickness: float) -> float:
        """Multiplicador de inércia térmica em (1 − alpha_mass, 1]"""
        capacity = density * shc * thickness
        return 1.0 - self.config.alpha_mass * capacity / (capacity + self.config.c_ref)

    def simulate_load(self, outline: OutlineSpec, x: FeatureVector) -> float:
        """
        Carga térmica anual por área de piso

        Args:
            outline: Contorno da planta
            x: Características do edifício

        Returns:
            Carga em kWh/m²·ano
        """
        c = self.config
        if not isinstance(x, FeatureVector):
            raise SimulationError(f"Esperado FeatureVector, recebido {type(x).__name__}")

        facade = OutlineGeometry.facade_breakdown(outline, c.wall_height, x.wwr)
        azimuths = OutlineGeometry.rotate_azimuths(outline, x.orientation)
        u_wall = self.wall_u_value(x.wall_thickness, x.wall_conductivity)

        h_tr = (u_wall * facade.total_opaque + x.glazing_u * facade.total_glazed
                + c.u_roof * outline.floor_area + c.h_vent)
        shade = self.shading_factor(x.shading_depth)
        g_sol = math.fsum(c.shgc * shade * glazed * self.facade_irradiation(azimuth)
                          for glazed, azimuth in zip(facade.glazed, azimuths))

        q_heat = max(0.0, h_tr * 24.0 * c.hdd / 1000.0 - c.eta_gain * c.f_heat_season * g_sol)
        q_cool = h_tr * 24.0 * c.cdd / 1000.0 + c.f_cool_season * g_sol + c.q_internal * outline.floor_area
        load = self.mass_factor(x.wall_density, x.wall_shc, x.wall_thickness) * (q_heat + q_cool) / outline.floor_area

        if not math.isfinite(load):
            raise SimulationError(f"Carga não finita para {outline.kind.value}: {x}")
        return load

    def expected_load(self, outline: OutlineSpec, cell: GridCell, sampler: FeatureSampler) -> float:
        """Carga do vetor nominal (sem ruído) de uma célula da grade"""
        return self.simulate_load(outline, sampler.nominal_features(cell))

    def simulate_batch(self, rows: Sequence[Tuple[ShapeKind, FeatureVector]],
                       threads: Optional[int] = None) -> List[float]:
        """
        Simular uma lista de (forma, características); a ordem de saída é a de entrada

        Args:
            rows: Pares (ShapeKind, FeatureVector)
            threads: Limite de threads (None = configuração do processo)

        Returns:
            Lista de cargas
        """
        for shape in {shape for shape, _ in rows}:
            self.outline(shape)

        workers = threads or settings.max_workers()
        with ThreadPoolExecutor(max_workers=workers) as executor:
            loads = list(executor.map(lambda row: self.simulate_load(self.outline(row[0]), row[1]), rows))

        logger.info(f"✓ Simuladas {len(loads)} cargas térmicas")
        return loads
