# outline_energy/pipeline.py

import time
from dataclasses import asdict, dataclass
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .analyzers.pca import FeatureRelevance, PcaAnalyzer, PcaResult
from .analyzers.shape_analyzer import (
    DeviationStats,
    LoadDistribution,
    ShapeAnalyzer,
    ShapeComparison,
    ShapeSummary,
)
from .config.logger import setup_logger
from .config.pipeline_config import PipelineConfig
from .config.settings import settings
from .dataset import Dataset, Provenance
from .exceptions import OutlineEnergyException, PipelineStageError
from .extractors.dataset_extractor import DatasetExtractor
from .generators.feature_sampler import FeatureSampler
from .geometry.outlines import SHAPE_ORDER, ShapeKind
from .loaders.artifact_loader import ArtifactLoader
from .models.polynomial_surrogate import CONDITIONS, FitReport, PolynomialSurrogate
from .plotting.figures import density_figure, scatter_figure, scree_figure
from .simulators.thermal_oracle import Sample, ThermalOracle
from .utils import ensure_directory, get_platform_info

logger = setup_logger(__name__)

DATASET_FILE = "dataset.csv"
ANALYSIS_FILE = "analysis.json"
FITS_FILE = "fits.json"
PROVENANCE_FILE = "provenance.json"
FIGURES_DIR = "figures"

@dataclass
class PipelineStats:
    """Estatísticas do pipeline"""
    total_records: int = 0
    stages_completed: int = 0
    models_fitted: int = 0
    figures_written: int = 0
    execution_time: float = 0.0
    start_time: str = ""
    end_time: str = ""
    status: str = "pending"

class OutlinePipeline:
    """Pipeline geração → simulação → análise → ajuste, com encadeamento de etapas"""

    def __init__(self, config: Optional[PipelineConfig] = None):
        """Inicializar pipeline"""
        self.config = config or PipelineConfig()
        self.stats = PipelineStats()
        self.sampler = FeatureSampler(self.config.priors)
        self.oracle = ThermalOracle(self.config.climate)

        self.dataset: Optional[Dataset] = None
        self.summary: Optional[ShapeSummary] = None
        self.comparison: Optional[ShapeComparison] = None
        self.distribution: Optional[LoadDistribution] = None
        self.deviation: Optional[Dict[ShapeKind, DeviationStats]] = None
        self.pca: Optional[PcaResult] = None
        self.components_for_90: int = 0
        self.relevance: Optional[FeatureRelevance] = None
        self.reports: List[FitReport] = []

        logger.info(f"✓ Pipeline inicializado (semente={self.config.seed}, modo={self.config.mode})")

    def _require_dataset(self) -> Dataset:
        if self.dataset is None:
            raise OutlineEnergyException("Nenhum conjunto de dados. Execute generate() ou extract() primeiro.")
        return self.dataset

    def generate(self) -> "OutlinePipeline":
        """
        Amostrar as características e simular a carga de cada linha

        Returns:
            Self para encadeamento
        """
        try:
            rows = self.sampler.generate_features(self.config.seed, self.config.mode, self.config.n)
            loads = self.oracle.simulate_batch([(shape, features) for shape, _, features in rows])
            samples = [Sample(shape, features, load) for (shape, _, features), load in zip(rows, loads)]

            provenance = Provenance(
                seed=self.config.seed,
                priors_digest=self.config.priors.digest(),
                config_digest=self.config.climate.digest(),
                mode=self.config.mode,
            )
            # índice da grade só vale para o modo fatorial
            cells = [cell.index for _, cell, _ in rows] if self.config.mode == "factorial" else None
            self.dataset = Dataset.from_samples(samples, provenance, cells)
            self.stats.total_records = len(self.dataset)
            self.stats.stages_completed += 1
            logger.info(f"✓ Geração concluída: {self.stats.total_records} amostras")
            return self
        except Exception as e:
            logger.error(f"✗ Erro na geração: {str(e)}")
            raise

    def extract(self, file_path: Union[str, Path]) -> "OutlinePipeline":
        """
        Ler um conjunto de dados CSV

        Args:
            file_path: Caminho do arquivo

        Returns:
            Self para encadeamento
        """
        try:
            self.dataset = DatasetExtractor.extract_csv(file_path)
            self.stats.total_records = len(self.dataset)
            self.stats.stages_completed += 1
            return self
        except Exception as e:
            logger.error(f"✗ Erro na extração: {str(e)}")
            raise

    def analyze(self) -> "OutlinePipeline":
        """
        Estatísticas por forma, distribuições, desvio do esperado e PCA

        Returns:
            Self para encadeamento
        """
        ds = self._require_dataset()
        try:
            self.summary = ShapeAnalyzer.summarize_by_shape(ds)
            if len(self.summary.stats) == len(SHAPE_ORDER):
                self.comparison = ShapeAnalyzer.shape_comparison(self.summary)
            self.distribution = ShapeAnalyzer.load_distribution(ds, self.config.bins)
            if ds.provenance.mode == "factorial" and ds.cell_indices(self.config.priors.cells_per_shape) is not None:
                self.deviation = ShapeAnalyzer.expected_deviation(ds, self.config.priors, self.config.climate)

            self.pca = PcaAnalyzer.run_pca(ds)
            self.components_for_90 = PcaAnalyzer.components_for_variance(self.pca, 0.9)
            self.relevance = PcaAnalyzer.feature_relevance(self.pca, self.components_for_90)
            self.stats.stages_completed += 1
            logger.info(f"✓ Análise concluída: {self.components_for_90} PCs explicam 90% da variância")
            return self
        except Exception as e:
            logger.error(f"✗ Erro na análise: {str(e)}")
            raise

    def fit(self) -> "OutlinePipeline":
        """
        Ajustar os modelos substitutos das três condições em cada grau

        Returns:
            Self para encadeamento
        """
        ds = self._require_dataset()
        try:
            self.reports = PolynomialSurrogate.run_experiment(
                ds,
                self.config.effective_split_seed,
                self.config.degrees,
                self.config.train_fraction,
            )
            self.stats.models_fitted = len(self.reports)
            self.stats.stages_completed += 1
            return self
        except Exception as e:
            logger.error(f"✗ Erro no ajuste: {str(e)}")
            raise

    def analysis_report(self) -> Dict[str, Any]:
        """Relatório JSON da análise"""
        if self.summary is None or self.pca is None:
            raise OutlineEnergyException("Análise não executada. Execute analyze() primeiro.")

        pca_block = self.pca.to_dict()
        pca_block["components_for_90"] = self.components_for_90
        pca_block["feature_relevance"] = self.relevance.to_dict()

        report: Dict[str, Any] = {
            "n_rows": len(self._require_dataset()),
            "shape_summary": self.summary.to_dict(),
        }
        if self.comparison is not None:
            report["shape_comparison"] = self.comparison.to_dict()
        if self.deviation is not None:
            report["expected_deviation"] = {shape.value: item.to_dict() for shape, item in self.deviation.items()}
        report["pca"] = pca_block
        return report

    def fit_report(self) -> Dict[str, Any]:
        """Relatório JSON dos ajustes"""
        if not self.reports:
            raise OutlineEnergyException("Nenhum modelo ajustado. Execute fit() primeiro.")

        best = {}
        for condition in CONDITIONS:
            if any(report.condition == condition for report in self.reports):
                chosen = PolynomialSurrogate.best_degree(self.reports, condition)
                best[condition] = {"degree": chosen.degree, "r2_test": chosen.r2_test}

        return {
            "seed": self.config.effective_split_seed,
            "train_fraction": self.config.train_fraction,
            "reports": [report.to_dict(include_pairs=False) for report in self.reports],
            "best_by_condition": best,
        }

    def provenance_report(self, artifacts: List[str]) -> Dict[str, Any]:
        """Proveniência do conjunto de dados e da configuração"""
        ds = self._require_dataset()
        return {
            "seed": self.config.seed,
            "mode": self.config.mode,
            "n_rows": len(ds),
            "priors_digest": self.config.priors.digest(),
            "config_digest": self.config.climate.digest(),
            "pipeline_config_digest": self.config.digest(),
            "version": settings.VERSION,
            "platform": get_platform_info(),
            "artifacts": sorted(artifacts),
        }

    def save_dataset(self, file_path: Union[str, Path]) -> "OutlinePipeline":
        ArtifactLoader.load_csv(self._require_dataset(), file_path)
        return self

    def save_analysis(self, file_path: Union[str, Path],
                      figures_dir: Optional[Union[str, Path]] = None) -> "OutlinePipeline":
        """
        Gravar o relatório da análise e, opcionalmente, as figuras de cotovelo e densidade

        Args:
            file_path: Caminho do JSON
            figures_dir: Diretório das figuras (None = sem figuras)

        Returns:
            Self para encadeamento
        """
        ArtifactLoader.load_json(self.analysis_report(), file_path, schema="analysis_report")
        if figures_dir is not None:
            figures_dir = Path(figures_dir)
            ArtifactLoader.load_svg(scree_figure(self.pca), figures_dir / "pca_scree.svg")
            ArtifactLoader.load_svg(density_figure(self.distribution), figures_dir / "load_density.svg")
            self.stats.figures_written += 2
        return self

    def save_fits(self, file_path: Union[str, Path],
                  figures_dir: Optional[Union[str, Path]] = None) -> "OutlinePipeline":
        """
        Gravar o relatório dos ajustes e, opcionalmente, as dispersões previsto × simulado

        Args:
            file_path: Caminho do JSON
            figures_dir: Diretório das figuras (None = sem figuras)

        Returns:
            Self para encadeamento
        """
        ArtifactLoader.load_json(self.fit_report(), file_path, schema="fit_report")
        if figures_dir is not None:
            figures_dir = Path(figures_dir)
            for condition in CONDITIONS:
                if any(report.condition == condition for report in self.reports):
                    ArtifactLoader.load_svg(scatter_figure(self.reports, condition),
                                            figures_dir / f"scatter_{condition}.svg")
                    self.stats.figures_written += 1
        return self

    def get_stats(self) -> Dict[str, Any]:
        """
        Obter estatísticas do pipeline

        Returns:
            Dicionário com estatísticas
        """
        return asdict(self.stats)

    def run(self, start_time: Optional[str] = None) -> None:
        """Marcar início da execução"""
        if start_time is None:
            start_time = datetime.now().isoformat()
        self.stats.start_time = start_time
        self.stats.status = "running"
        logger.info(f"Pipeline iniciado em: {start_time}")

    def finish(self, execution_time: Optional[float] = None) -> None:
        """Marcar fim da execução"""
        self.stats.end_time = datetime.now().isoformat()
        self.stats.status = "completed"
        if execution_time is not None:
            self.stats.execution_time = execution_time
        logger.info(f"Pipeline concluído em: {self.stats.end_time}")
        logger.info(f"Tempo total: {self.stats.execution_time:.2f}s")

def _figures_dir(config: PipelineConfig, svg: Optional[bool]) -> Optional[Path]:
    enabled = config.svg if svg is None else svg
    return Path(config.output_dir) / FIGURES_DIR if enabled else None

def cmd_generate(config: PipelineConfig, out_path: Optional[Union[str, Path]] = None) -> Path:
    """
    Gerar o conjunto de dados e gravá-lo em CSV

    Args:
        config: Configuração
        out_path: Caminho do CSV (padrão: <output_dir>/dataset.csv)

    Returns:
        Caminho do CSV
    """
    out_path = Path(out_path) if out_path else Path(config.output_dir) / DATASET_FILE
    OutlinePipeline(config).generate().save_dataset(out_path)
    return out_path

def cmd_analyze(config: PipelineConfig, data_path: Union[str, Path],
                out_path: Optional[Union[str, Path]] = None, svg: Optional[bool] = None) -> Path:
    """
    Analisar um CSV e gravar o relatório (e as figuras, se pedidas)

    Args:
        config: Configuração
        data_path: CSV do conjunto de dados
        out_path: Caminho do JSON (padrão: <output_dir>/analysis.json)
        svg: Gravar figuras (None = valor da configuração)

    Returns:
        Caminho do JSON
    """
    out_path = Path(out_path) if out_path else Path(config.output_dir) / ANALYSIS_FILE
    OutlinePipeline(config).extract(data_path).analyze().save_analysis(out_path, _figures_dir(config, svg))
    return out_path

def cmd_fit(config: PipelineConfig, data_path: Union[str, Path],
            out_path: Optional[Union[str, Path]] = None, svg: Optional[bool] = None) -> Path:
    """
    Ajustar os modelos substitutos sobre um CSV e gravar o relatório

    Args:
        config: Configuração (graus, fração de treino e semente da divisão)
        data_path: CSV do conjunto de dados
        out_path: Caminho do JSON (padrão: <output_dir>/fits.json)
        svg: Gravar figuras (None = valor da configuração)

    Returns:
        Caminho do JSON
    """
    out_path = Path(out_path) if out_path else Path(config.output_dir) / FITS_FILE
    OutlinePipeline(config).extract(data_path).fit().save_fits(out_path, _figures_dir(config, svg))
    return out_path

def cmd_run_all(config: PipelineConfig) -> Path:
    """
    Executar geração, análise e ajuste, gravando todos os artefatos

    Escreve dataset.csv, analysis.json, fits.json, figures/*.svg e provenance.json
    em config.output_dir. A primeira etapa que falha interrompe com o nome da etapa.

    Args:
        config: Configuração

    Returns:
        Diretório de saída
    """
    out_dir = ensure_directory(config.output_dir)
    figures_dir = out_dir / FIGURES_DIR
    pipeline = OutlinePipeline(config)
    pipeline.run()
    start = time.perf_counter()

    stages = [
        ("generate", lambda: pipeline.generate().save_dataset(out_dir / DATASET_FILE)),
        ("analyze", lambda: pipeline.analyze().save_analysis(out_dir / ANALYSIS_FILE, figures_dir)),
        ("fit", lambda: pipeline.fit().save_fits(out_dir / FITS_FILE, figures_dir)),
    ]
    for stage, action in stages:
        try:
            action()
        except Exception as e:
            pipeline.stats.status = "failed"
            logger.error(f"✗ Etapa '{stage}' falhou: {str(e)}")
            raise PipelineStageError(stage, e) from e

    artifacts = [DATASET_FILE, ANALYSIS_FILE, FITS_FILE, PROVENANCE_FILE]
    try:
        ArtifactLoader.load_json(pipeline.provenance_report(artifacts), out_dir / PROVENANCE_FILE,
                                 schema="provenance")
    except Exception as e:
        raise PipelineStageError("provenance", e) from e

    pipeline.finish(time.perf_counter() - start)
    return out_dir
