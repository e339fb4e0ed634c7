# outline_energy/analyzers/pca.py

"""
Análise de componentes principais das 8 características (sem forma e sem carga)
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from ..config.logger import setup_logger
from ..dataset import Dataset
from ..exceptions import AnalysisError
from ..generators.feature_sampler import FEATURE_NAMES
from ..numerics.linalg import symmetric_eigen
from ..profiler import measure_time

logger = setup_logger(__name__)

MIN_ROWS = 9

@dataclass(frozen=True)
class PcaResult:
    """Médias, desvios, cargas (linhas = características, colunas = PCs) e variância explicada"""
    feature_names: Tuple[str, ...]
    feature_means: np.ndarray
    feature_stds: np.ndarray
    eigenvalues: np.ndarray
    loadings: np.ndarray
    explained_ratio: np.ndarray
    cumulative_ratio: np.ndarray

    def standardize(self, x) -> np.ndarray:
        return (np.asarray(x, dtype=np.float64) - self.feature_means) / self.feature_stds

    def scores(self, x) -> np.ndarray:
        """Projeção das linhas de x nos componentes principais"""
        return self.standardize(x) @ self.loadings

    def to_dict(self) -> dict:
        return {
            "features": list(self.feature_names),
            "feature_means": self.feature_means.tolist(),
            "feature_stds": self.feature_stds.tolist(),
            "eigenvalues": self.eigenvalues.tolist(),
            "loadings": self.loadings.tolist(),
            "explained_ratio": self.explained_ratio.tolist(),
            "cumulative_ratio": self.cumulative_ratio.tolist(),
        }

@dataclass(frozen=True)
class FeatureRelevance:
    """Maior |carga| de cada característica nos PCs retidos"""
    n_components: int
    threshold: float
    max_loading: Dict[str, float]
    negligible: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "n_components": self.n_components,
            "threshold": self.threshold,
            "max_loading": dict(self.max_loading),
            "negligible": list(self.negligible),
        }

class PcaAnalyzer:
    """PCA sobre a matriz de correlação"""

    @staticmethod
    def pca_from_matrix(x, feature_names: Sequence[str]) -> PcaResult:
        """
        PCA de uma matriz n×p padronizada por z-score (desvio amostral)

        Args:
            x: Matriz de características
            feature_names: Nome de cada coluna

        Returns:
            PcaResult
        """
        x = np.asarray(x, dtype=np.float64)
        n, p = x.shape
        if p != len(feature_names):
            raise AnalysisError(f"{p} colunas para {len(feature_names)} nomes")
        if n < MIN_ROWS:
            raise AnalysisError(f"PCA requer pelo menos {MIN_ROWS} linhas (recebido {n})")
        if not np.all(np.isfinite(x)):
            raise AnalysisError("Matriz de características com valores não finitos")

        means = x.mean(axis=0)
        stds = x.std(axis=0, ddof=1)
        for name, std in zip(feature_names, stds):
            if not std > 0.0:
                raise AnalysisError(f"Característica sem variância: {name}")

        z = (x - means) / stds
        correlation = (z.T @ z) / (n - 1)
        eigen = symmetric_eigen(correlation)

        explained = eigen.eigenvalues / p
        return PcaResult(
            feature_names=tuple(feature_names),
            feature_means=means,
            feature_stds=stds,
            eigenvalues=eigen.eigenvalues,
            loadings=eigen.eigenvectors,
            explained_ratio=explained,
            cumulative_ratio=np.cumsum(explained),
        )

    @classmethod
    @measure_time
    def run_pca(cls, ds: Dataset) -> PcaResult:
        """
        PCA das 8 características do conjunto de dados

        Args:
            ds: Conjunto de dados

        Returns:
            PcaResult
        """
        result = cls.pca_from_matrix(ds.feature_matrix(), FEATURE_NAMES)
        logger.info(f"✓ PCA: PC1 explica {result.explained_ratio[0]:.1%}, "
                    f"5 PCs explicam {result.cumulative_ratio[min(4, len(FEATURE_NAMES) - 1)]:.1%}")
        return result

    @staticmethod
    def components_for_variance(pca: PcaResult, threshold: float = 0.9) -> int:
        """Número de PCs iniciais cuja variância acumulada atinge o limiar"""
        if not 0.0 < threshold <= 1.0:
            raise AnalysisError(f"Limiar fora de (0, 1]: {threshold}")
        reached = np.nonzero(pca.cumulative_ratio >= threshold - 1e-12)[0]
        return int(reached[0]) + 1 if reached.size else len(pca.cumulative_ratio)

    @staticmethod
    def feature_relevance(pca: PcaResult, n_components: int, threshold: float = 0.3) -> FeatureRelevance:
        """
        Verificar se alguma característica pode ser desprezada

        Uma característica é desprezível se |carga| < threshold em todos os
        n_components PCs iniciais.

        Args:
            pca: Resultado da PCA
            n_components: PCs considerados
            threshold: Limiar de |carga|

        Returns:
            FeatureRelevance
        """
        total = pca.loadings.shape[1]
        if not 1 <= n_components <= total:
            raise AnalysisError(f"n_components deve estar em [1, {total}] (recebido {n_components})")

        peak = np.max(np.abs(pca.loadings[:, :n_components]), axis=1)
        max_loading = {name: float(value) for name, value in zip(pca.feature_names, peak)}
        negligible = tuple(name for name, value in max_loading.items() if value < threshold)
        return FeatureRelevance(n_components=n_components, threshold=threshold,
                                max_loading=max_loading, negligible=negligible)
