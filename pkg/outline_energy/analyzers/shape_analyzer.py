# outline_energy/analyzers/shape_analyzer.py

"""
Estatísticas exploratórias da carga térmica por forma de planta
"""

from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from scipy.stats import gaussian_kde

from ..config.logger import setup_logger
from ..dataset import LOAD_COLUMN, SHAPE_COLUMN, Dataset
from ..exceptions import AnalysisError
from ..generators.feature_sampler import FeatureSampler, Priors, default_priors
from ..geometry.outlines import SHAPE_ORDER, ShapeKind
from ..profiler import measure_time
from ..simulators.thermal_oracle import ClimateConfig, ThermalOracle

logger = setup_logger(__name__)

DENSITY_GRID_POINTS = 200

@dataclass(frozen=True)
class LoadStats:
    """Mínimo, máximo, média e desvio padrão amostral (n−1) da carga de uma forma"""
    shape: ShapeKind
    count: int
    min: float
    max: float
    mean: float
    std: float

    def to_dict(self) -> dict:
        data = asdict(self)
        data["shape"] = self.shape.value
        return data

@dataclass(frozen=True)
class ShapeSummary:
    """Estatísticas por forma, na ordem canônica das formas"""
    stats: Tuple[LoadStats, ...]

    def __getitem__(self, shape: ShapeKind) -> LoadStats:
        shape = ShapeKind(shape)
        for item in self.stats:
            if item.shape == shape:
                return item
        raise KeyError(shape.value)

    def __contains__(self, shape) -> bool:
        return any(item.shape == ShapeKind(shape) for item in self.stats)

    def to_dict(self) -> dict:
        return {item.shape.value: item.to_dict() for item in self.stats}

@dataclass(frozen=True)
class ShapeComparison:
    """Diferenças percentuais da média de T/U/L em relação ao quadrado"""
    min_pct: float
    max_pct: float
    mean_pct: float
    std_pct: float

    def to_dict(self) -> dict:
        return asdict(self)

@dataclass(frozen=True)
class ShapeDistribution:
    """Histograma normalizado (área 1) e curva de densidade de uma forma"""
    shape: ShapeKind
    density: np.ndarray
    kde: np.ndarray
    bandwidth: float

@dataclass(frozen=True)
class LoadDistribution:
    """Distribuições por forma sobre bordas e grade compartilhadas"""
    bin_edges: np.ndarray
    grid: np.ndarray
    shapes: Tuple[ShapeDistribution, ...]

    def __getitem__(self, shape: ShapeKind) -> ShapeDistribution:
        shape = ShapeKind(shape)
        for item in self.shapes:
            if item.shape == shape:
                return item
        raise KeyError(shape.value)

    def histogram_area(self, shape: ShapeKind) -> float:
        return float(np.sum(self[shape].density * np.diff(self.bin_edges)))

    def max_distance(self, a: ShapeKind, b: ShapeKind) -> float:
        """Distância máxima entre as curvas de densidade de duas formas"""
        return float(np.max(np.abs(self[a].kde - self[b].kde)))

    def to_dict(self) -> dict:
        return {
            "bin_edges": self.bin_edges.tolist(),
            "grid": self.grid.tolist(),
            "shapes": {
                item.shape.value: {
                    "density": item.density.tolist(),
                    "kde": item.kde.tolist(),
                    "bandwidth": item.bandwidth,
                }
                for item in self.shapes
            },
        }

@dataclass(frozen=True)
class DeviationStats:
    """Desvio das cargas com ruído em relação à carga esperada das suas células"""
    shape: ShapeKind
    mean_abs: float
    rms: float

    def to_dict(self) -> dict:
        return {"mean_abs": self.mean_abs, "rms": self.rms}

class ShapeAnalyzer:
    """Estatísticas da carga térmica agrupadas por forma"""

    @staticmethod
    def summarize_by_shape(ds: Dataset) -> ShapeSummary:
        """
        Estatísticas de ordem e momentos por forma

        Args:
            ds: Conjunto de dados

        Returns:
            ShapeSummary
        """
        groups = ds.frame.groupby(SHAPE_COLUMN, sort=False)[LOAD_COLUMN]
        table = groups.agg(["count", "min", "max", "mean", "std"])

        stats = []
        for shape in SHAPE_ORDER:
            if shape.value not in table.index:
                continue
            row = table.loc[shape.value]
            if row["count"] < 2:
                raise AnalysisError(f"Forma {shape.value} com {int(row['count'])} linha(s); mínimo 2")
            stats.append(LoadStats(
                shape=shape,
                count=int(row["count"]),
                min=float(row["min"]),
                max=float(row["max"]),
                mean=float(row["mean"]),
                std=float(row["std"]),
            ))

        if not stats:
            raise AnalysisError("Nenhuma forma no conjunto de dados")

        for item in stats:
            logger.info(f"  {item.shape.value:<6} n={item.count} min={item.min:.2f} max={item.max:.2f} "
                        f"média={item.mean:.2f} dp={item.std:.2f}")
        return ShapeSummary(stats=tuple(stats))

    @staticmethod
    def shape_comparison(summary: ShapeSummary) -> ShapeComparison:
        """
        Diferença percentual entre a média de T/U/L e o quadrado

        Cada razão é média(T, U, L) / quadrado − 1, em %.

        Args:
            summary: Estatísticas com as quatro formas

        Returns:
            ShapeComparison
        """
        missing = [shape.value for shape in SHAPE_ORDER if shape not in summary]
        if missing:
            raise AnalysisError(f"Comparação requer as quatro formas; ausentes: {missing}")

        square = summary[ShapeKind.SQUARE]
        others = [summary[shape] for shape in SHAPE_ORDER[1:]]

        def ratio(attr: str) -> float:
            reference = getattr(square, attr)
            average = float(np.mean([getattr(item, attr) for item in others]))
            if reference == 0.0:
                if average == 0.0:
                    return 0.0
                raise AnalysisError(f"Comparação de {attr}: valor do quadrado é zero")
            return (average / reference - 1.0) * 100.0

        comparison = ShapeComparison(
            min_pct=ratio("min"),
            max_pct=ratio("max"),
            mean_pct=ratio("mean"),
            std_pct=ratio("std"),
        )
        logger.info(f"✓ Carga média de T/U/L {comparison.mean_pct:+.2f}% em relação ao quadrado")
        return comparison

    @staticmethod
    @measure_time
    def load_distribution(ds: Dataset, bins: int = 30) -> LoadDistribution:
        """
        Histogramas normalizados e densidades por núcleo gaussiano

        A largura de banda segue a regra de Silverman. Grupos sem variância
        recebem uma curva nula e largura de banda 0.

        Args:
            ds: Conjunto de dados
            bins: Número de classes do histograma (>= 2)

        Returns:
            LoadDistribution
        """
        if bins < 2:
            raise AnalysisError(f"bins deve ser >= 2 (recebido {bins})")

        loads = ds.loads()
        low, high = float(loads.min()), float(loads.max())
        if low == high:
            low, high = low - 0.5, high + 0.5
        edges = np.linspace(low, high, bins + 1)
        grid = np.linspace(low, high, DENSITY_GRID_POINTS)

        distributions = []
        for shape in ds.shapes():
            values = ds.frame.loc[ds.frame[SHAPE_COLUMN] == shape.value, LOAD_COLUMN].to_numpy(dtype=np.float64)
            density, _ = np.histogram(values, bins=edges, density=True)

            if values.size >= 2 and np.ptp(values) > 0.0:
                kde = gaussian_kde(values, bw_method="silverman")
                curve = kde(grid)
                bandwidth = float(np.sqrt(kde.covariance[0, 0]))
            else:
                curve = np.zeros_like(grid)
                bandwidth = 0.0

            distributions.append(ShapeDistribution(shape=shape, density=density, kde=curve, bandwidth=bandwidth))

        return LoadDistribution(bin_edges=edges, grid=grid, shapes=tuple(distributions))

    @staticmethod
    def expected_deviation(ds: Dataset, priors: Optional[Priors] = None,
                           config: Optional[ClimateConfig] = None) -> Dict[ShapeKind, DeviationStats]:
        """
        Desvio médio absoluto e RMS das cargas em relação à carga esperada
        (características sem ruído) da célula de cada linha

        Args:
            ds: Conjunto de dados fatorial
            priors: Priors usados na geração
            config: Configuração do simulador usada na geração

        Returns:
            Dicionário forma → DeviationStats
        """
        priors = priors or default_priors()
        cells = ds.cell_indices(priors.cells_per_shape)
        if cells is None:
            raise AnalysisError("Desvio em relação ao esperado requer um conjunto fatorial completo")

        sampler = FeatureSampler(priors)
        oracle = ThermalOracle(config)
        shapes = ds.frame[SHAPE_COLUMN].to_numpy()
        loads = ds.loads()

        result = {}
        for shape in ds.shapes():
            outline = oracle.outline(shape)
            expected = np.array([oracle.expected_load(outline, cell, sampler) for cell in sampler.enumerate_grid(shape)])
            mask = shapes == shape.value
            deviation = loads[mask] - expected[cells[mask]]
            result[shape] = DeviationStats(
                shape=shape,
                mean_abs=float(np.mean(np.abs(deviation))),
                rms=float(np.sqrt(np.mean(deviation ** 2))),
            )
            logger.debug(f"  {shape.value}: desvio RMS {result[shape].rms:.3f} kWh/m²")
        return result

def summary_frame(summary: ShapeSummary) -> pd.DataFrame:
    """Tabela (formas × estatísticas) para exibição"""
    records: List[dict] = [item.to_dict() for item in summary.stats]
    return pd.DataFrame.from_records(records).set_index("shape")
