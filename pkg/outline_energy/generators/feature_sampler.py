# outline_energy/generators/feature_sampler.py

"""
Grade fatorial completa das características do edifício e perturbação gaussiana

Ordem da grade (odômetro): WWR mais lento, depois sombreamento, U do vidro,
orientação e material (mais rápido). Cada célula usa um fluxo aleatório próprio
derivado de (semente, forma, índice da célula), de modo que o resultado não
depende da ordem de avaliação nem do número de threads.

Transformação gaussiana: numpy Generator.standard_normal (ziggurat) sobre PCG64.
"""

import hashlib
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields, replace
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..config.logger import setup_logger
from ..config.settings import settings
from ..exceptions import ConfigurationError, SamplingError, ValidationError
from ..geometry.outlines import SHAPE_ORDER, ShapeKind, wrap_degrees
from ..utils import stable_digest

logger = setup_logger(__name__)

MAX_REJECTIONS = 100

# Ordem das características (também a ordem das colunas do CSV e das linhas da matriz de cargas)
FEATURE_NAMES: Tuple[str, ...] = (
    "orientation",
    "wwr",
    "shading_depth",
    "glazing_u",
    "wall_thickness",
    "wall_conductivity",
    "wall_density",
    "wall_shc",
)
WALL_FEATURES: Tuple[str, ...] = FEATURE_NAMES[4:]

# Eixos da grade do mais lento para o mais rápido (o material vem por último)
GRID_AXES: Tuple[str, ...] = ("wwr", "shading_depth", "glazing_u", "orientation")
MATERIAL_PROPERTIES: Tuple[str, ...] = ("thickness", "conductivity", "density", "shc")

@dataclass(frozen=True)
class FeaturePrior:
    """Valores nominais da grade e desvio padrão do ruído de uma característica"""
    name: str
    grid_values: Tuple[float, ...]
    sigma: float
    bounds: Optional[Tuple[float, float]] = None
    lower_inclusive: bool = False
    wrap: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "grid_values", tuple(float(v) for v in self.grid_values))
        if not self.grid_values:
            raise ConfigurationError(f"Prior {self.name}: grid_values vazio")
        if any(b <= a for a, b in zip(self.grid_values, self.grid_values[1:])):
            raise ConfigurationError(f"Prior {self.name}: grid_values deve ser estritamente crescente")
        if not (math.isfinite(self.sigma) and self.sigma >= 0.0):
            raise ConfigurationError(f"Prior {self.name}: sigma deve ser >= 0 (recebido {self.sigma})")

    def accepts(self, value: float) -> bool:
        """Verificar se o valor respeita os limites físicos"""
        if not math.isfinite(value):
            return False
        if self.bounds is None:
            return True
        low, high = self.bounds
        above = value >= low if self.lower_inclusive else value > low
        return above and value < high

    def to_dict(self) -> dict:
        return {"grid_values": list(self.grid_values), "sigma": self.sigma}

@dataclass(frozen=True)
class MaterialProperty:
    """Média e desvio padrão de uma propriedade do material"""
    mu: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.mu) and self.mu > 0.0):
            raise ConfigurationError(f"Propriedade de material com média inválida: {self.mu}")
        if not (math.isfinite(self.sigma) and self.sigma >= 0.0):
            raise ConfigurationError(f"Propriedade de material com sigma inválido: {self.sigma}")

@dataclass(frozen=True)
class MaterialPrior:
    """Material da parede externa: espessura (m), condutividade (W/m·K), densidade (kg/m³), SHC (J/kg·K)"""
    name: str
    thickness: MaterialProperty
    conductivity: MaterialProperty
    density: MaterialProperty
    shc: MaterialProperty

    def to_dict(self) -> dict:
        return {prop: {"mu": getattr(self, prop).mu, "sigma": getattr(self, prop).sigma}
                for prop in MATERIAL_PROPERTIES}

@dataclass(frozen=True)
class FeatureVector:
    """As 8 características numéricas de uma amostra"""
    orientation: float
    wwr: float
    shading_depth: float
    glazing_u: float
    wall_thickness: float
    wall_conductivity: float
    wall_density: float
    wall_shc: float

    def __post_init__(self):
        for f in fields(self):
            if not math.isfinite(getattr(self, f.name)):
                raise ValidationError(f"Característica {f.name} não finita")
        if not 0.0 <= self.orientation < 360.0:
            raise ValidationError(f"orientation fora de [0, 360): {self.orientation}")
        if not 0.0 <= self.wwr < 1.0:
            raise ValidationError(f"wwr fora de [0, 1): {self.wwr}")
        if self.shading_depth < 0.0:
            raise ValidationError(f"shading_depth negativo: {self.shading_depth}")
        for name in ("glazing_u",) + WALL_FEATURES:
            if getattr(self, name) <= 0.0:
                raise ValidationError(f"{name} deve ser positivo: {getattr(self, name)}")

    def as_tuple(self) -> Tuple[float, ...]:
        return tuple(getattr(self, name) for name in FEATURE_NAMES)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)

@dataclass(frozen=True)
class GridCell:
    """Célula da grade fatorial: índices nos valores de cada prior mais o material"""
    shape: ShapeKind
    wwr_index: int
    shading_index: int
    glazing_index: int
    orientation_index: int
    material_index: int
    index: int

@dataclass(frozen=True)
class Priors:
    """Conjunto de priors de características da grade e de materiais"""
    features: Tuple[FeaturePrior, ...]
    materials: Tuple[MaterialPrior, ...]
    by_name: Dict[str, FeaturePrior] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "by_name", {prior.name: prior for prior in self.features})
        if tuple(self.by_name) != GRID_AXES:
            raise ConfigurationError(f"Priors devem seguir a ordem {GRID_AXES}")
        if not self.materials:
            raise ConfigurationError("Pelo menos um material é necessário")

    def __iter__(self) -> Iterator:
        return iter((self.features, self.materials))

    @property
    def axis_sizes(self) -> Tuple[int, ...]:
        return tuple(len(prior.grid_values) for prior in self.features) + (len(self.materials),)

    @property
    def cells_per_shape(self) -> int:
        return math.prod(self.axis_sizes)

    def to_dict(self) -> dict:
        return {
            "features": {prior.name: prior.to_dict() for prior in self.features},
            "materials": {material.name: material.to_dict() for material in self.materials},
        }

    def digest(self) -> str:
        return stable_digest(self.to_dict())

    def with_overrides(self, overrides: Optional[dict]) -> "Priors":
        """
        Aplicar substituições vindas do arquivo de configuração

        Args:
            overrides: {"features": {nome: {"grid_values"?, "sigma"?}},
                        "materials": {nome: {propriedade: {"mu"?, "sigma"?}}}}

        Returns:
            Novo Priors
        """
        if not overrides:
            return self

        feature_overrides = overrides.get("features", {})
        unknown = set(feature_overrides) - set(self.by_name)
        if unknown:
            raise ConfigurationError(f"priors.features: características desconhecidas {sorted(unknown)}")
        features = []
        for prior in self.features:
            changes = dict(feature_overrides.get(prior.name, {}))
            if "grid_values" in changes:
                changes["grid_values"] = tuple(changes["grid_values"])
            features.append(replace(prior, **changes))

        material_overrides = overrides.get("materials", {})
        known = {material.name for material in self.materials}
        unknown = set(material_overrides) - known
        if unknown:
            raise ConfigurationError(f"priors.materials: materiais desconhecidos {sorted(unknown)}")
        materials = []
        for material in self.materials:
            props = material_overrides.get(material.name, {})
            changes = {prop: replace(getattr(material, prop), **values) for prop, values in props.items()}
            materials.append(replace(material, **changes))

        return Priors(features=tuple(features), materials=tuple(materials))

def default_priors() -> Priors:
    """
    Priors padrão: valores possíveis e desvios das características e dos materiais

    Returns:
        Priors (desempacotável como (features, materials))
    """
    positive = (0.0, math.inf)
    features = (
        FeaturePrior("wwr", (0.1, 0.2, 0.3, 0.4, 0.5), 0.01, bounds=(0.0, 1.0)),
        FeaturePrior("shading_depth", (0.0, 0.15, 0.30, 0.45), 0.01, bounds=positive, lower_inclusive=True),
        FeaturePrior("glazing_u", (0.7, 2.72, 4.54), 0.01, bounds=positive),
        FeaturePrior("orientation", tuple(float(d) for d in range(0, 360, 30)), 3.0, wrap=360.0),
    )
    materials = (
        MaterialPrior(
            "concrete",
            thickness=MaterialProperty(0.21, 0.021),
            conductivity=MaterialProperty(1.13, 0.1),
            density=MaterialProperty(2000.0, 30.0),
            shc=MaterialProperty(1000.0, 106.0),
        ),
        MaterialPrior(
            "brick",
            thickness=MaterialProperty(0.16, 0.016),
            conductivity=MaterialProperty(0.84, 0.27),
            density=MaterialProperty(1700.0, 297.5),
            shc=MaterialProperty(800.0, 86.0),
        ),
    )
    return Priors(features=features, materials=materials)

def cell_stream(seed: int, token: str, index: int) -> np.random.Generator:
    """
    Fluxo aleatório dedicado a uma célula

    A sub-semente é o hash BLAKE2b de (semente, token, índice), estável entre
    processos e plataformas.
    """
    key = f"{int(seed)}|{token}|{int(index)}".encode("utf-8")
    sub_seed = int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "little")
    return np.random.Generator(np.random.PCG64(sub_seed))

FeatureRow = Tuple[ShapeKind, GridCell, FeatureVector]

class FeatureSampler:
    """Amostrador fatorial com ruído gaussiano"""

    def __init__(self, priors: Optional[Priors] = None):
        self.priors = priors or default_priors()

    def _cell_from_indices(self, shape: ShapeKind, indices: Tuple[int, ...]) -> GridCell:
        index = 0
        for position, size in zip(indices, self.priors.axis_sizes):
            index = index * size + position
        return GridCell(shape, *indices, index=index)

    def enumerate_grid(self, shape: ShapeKind) -> List[GridCell]:
        """
        Enumerar todas as células da grade de uma forma (ordem de odômetro)

        Args:
            shape: Forma da planta

        Returns:
            Lista de GridCell (1440 com os priors padrão)
        """
        shape = ShapeKind(shape)
        ranges = [range(size) for size in self.priors.axis_sizes]
        return [self._cell_from_indices(shape, indices) for indices in itertools.product(*ranges)]

    def nominal_features(self, cell: GridCell) -> FeatureVector:
        """Vetor de características sem ruído (centro da célula)"""
        by_name = self.priors.by_name
        material = self.priors.materials[cell.material_index]
        return FeatureVector(
            orientation=wrap_degrees(by_name["orientation"].grid_values[cell.orientation_index]),
            wwr=by_name["wwr"].grid_values[cell.wwr_index],
            shading_depth=by_name["shading_depth"].grid_values[cell.shading_index],
            glazing_u=by_name["glazing_u"].grid_values[cell.glazing_index],
            wall_thickness=material.thickness.mu,
            wall_conductivity=material.conductivity.mu,
            wall_density=material.density.mu,
            wall_shc=material.shc.mu,
        )

    @staticmethod
    def _draw(name: str, nominal: float, sigma: float, rng: np.random.Generator,
              prior: Optional[FeaturePrior] = None) -> float:
        """Sorteio com reamostragem por rejeição até respeitar os limites"""
        for _ in range(MAX_REJECTIONS):
            value = nominal + sigma * rng.standard_normal()
            if prior is not None and prior.wrap is not None:
                wrapped = value % prior.wrap
                return 0.0 if wrapped >= prior.wrap else wrapped + 0.0
            if prior is not None:
                if prior.accepts(value):
                    return value
            elif math.isfinite(value) and value > 0.0:
                return value
        raise SamplingError(
            f"{name}: {MAX_REJECTIONS} rejeições consecutivas (nominal={nominal}, sigma={sigma}); prior mal configurado"
        )

    def perturb(self, cell: GridCell, rng: np.random.Generator) -> FeatureVector:
        """
        Adicionar ruído gaussiano N(0, σ²) a cada característica nominal da célula

        Ordem dos sorteios: wwr, sombreamento, U do vidro, orientação,
        espessura, condutividade, densidade, SHC.

        Args:
            cell: Célula da grade
            rng: Fluxo aleatório dedicado à célula

        Returns:
            FeatureVector perturbado
        """
        nominal = self.nominal_features(cell)
        by_name = self.priors.by_name
        drawn = {name: self._draw(name, getattr(nominal, name), by_name[name].sigma, rng, by_name[name])
                 for name in GRID_AXES}

        material = self.priors.materials[cell.material_index]
        for prop, feature in zip(MATERIAL_PROPERTIES, WALL_FEATURES):
            spec = getattr(material, prop)
            drawn[feature] = self._draw(f"{material.name}.{prop}", spec.mu, spec.sigma, rng)

        return FeatureVector(**drawn)

    def _random_cell(self, rng: np.random.Generator) -> GridCell:
        shape = SHAPE_ORDER[int(rng.integers(len(SHAPE_ORDER)))]
        indices = tuple(int(rng.integers(size)) for size in self.priors.axis_sizes)
        return self._cell_from_indices(shape, indices)

    def _factorial_rows(self, seed: int, shape: ShapeKind) -> List[FeatureRow]:
        return [(shape, cell, self.perturb(cell, cell_stream(seed, shape.value, cell.index)))
                for cell in self.enumerate_grid(shape)]

    def _random_row(self, seed: int, row: int) -> FeatureRow:
        rng = cell_stream(seed, "random", row)
        cell = self._random_cell(rng)
        return cell.shape, cell, self.perturb(cell, rng)

    def generate_features(self, seed: int, mode: str = "factorial", n: Optional[int] = None,
                          threads: Optional[int] = None) -> List[FeatureRow]:
        """
        Gerar as linhas (forma, célula, características) do conjunto de dados

        Args:
            seed: Semente global
            mode: "factorial" (uma amostra por célula, formas em ordem square, t, u, l)
                  ou "random" (células sorteadas uniformemente)
            n: Número de amostras no modo "random"
            threads: Limite de threads (None = configuração do processo)

        Returns:
            Lista de (ShapeKind, GridCell, FeatureVector)
        """
        workers = threads or settings.max_workers()

        if mode == "factorial":
            with ThreadPoolExecutor(max_workers=workers) as executor:
                per_shape = list(executor.map(lambda shape: self._factorial_rows(seed, shape), SHAPE_ORDER))
            rows = [row for shape_rows in per_shape for row in shape_rows]
        elif mode == "random":
            if n is None or n < 1:
                raise ConfigurationError(f"Modo random requer n >= 1 (recebido {n})")
            with ThreadPoolExecutor(max_workers=workers) as executor:
                rows = list(executor.map(lambda row: self._random_row(seed, row), range(n)))
        else:
            raise ConfigurationError(f"Modo de amostragem desconhecido: {mode}. Suportados: factorial, random")

        logger.info(f"✓ Geradas {len(rows)} amostras de características (modo={mode}, semente={seed})")
        return rows
