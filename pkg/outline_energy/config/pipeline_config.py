# outline_energy/config/pipeline_config.py

"""
Configuração de um experimento (documento JSON único; flags da CLI sobrepõem chaves)
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from ..exceptions import ConfigurationError
from ..generators.feature_sampler import Priors, default_priors
from ..simulators.thermal_oracle import ClimateConfig
from ..utils import load_json, stable_digest
from ..validators.schema_validator import SchemaValidator
from .logger import setup_logger
from .settings import settings

logger = setup_logger(__name__)

@dataclass(frozen=True)
class PipelineConfig:
    """Parâmetros do pipeline completo"""
    seed: int = 42
    output_dir: Path = field(default_factory=lambda: settings.OUTPUT_DIR)
    climate: ClimateConfig = field(default_factory=ClimateConfig)
    priors: Priors = field(default_factory=default_priors)
    degrees: Tuple[int, ...] = (1, 2, 3, 4)
    train_fraction: float = 0.3
    split_seed: Optional[int] = None
    mode: str = "factorial"
    n: Optional[int] = None
    bins: int = 30
    svg: bool = False

    @property
    def effective_split_seed(self) -> int:
        return self.seed if self.split_seed is None else self.split_seed

    @classmethod
    def from_dict(cls, document: Optional[Dict[str, Any]] = None) -> "PipelineConfig":
        """
        Construir a partir de um documento JSON validado contra pipeline_config.schema.json

        Args:
            document: Documento (chaves ausentes usam o padrão)

        Returns:
            PipelineConfig
        """
        document = dict(document or {})
        SchemaValidator.validate(document, "pipeline_config", error_class=ConfigurationError)

        mode = document.get("mode", "factorial")
        if mode == "random" and "n" not in document:
            raise ConfigurationError("mode: 'random' requer a chave n")

        kwargs: Dict[str, Any] = {
            key: document[key]
            for key in ("seed", "train_fraction", "split_seed", "mode", "n", "bins", "svg")
            if key in document
        }
        if "output_dir" in document:
            kwargs["output_dir"] = Path(document["output_dir"])
        if "degrees" in document:
            kwargs["degrees"] = tuple(sorted(document["degrees"]))
        kwargs["climate"] = ClimateConfig.from_dict(document.get("climate"))
        kwargs["priors"] = default_priors().with_overrides(document.get("priors"))

        return cls(**kwargs)

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None,
             overrides: Optional[Dict[str, Any]] = None) -> "PipelineConfig":
        """
        Ler o arquivo de configuração (opcional) e aplicar as flags da CLI

        Args:
            path: Caminho do JSON de configuração
            overrides: Chaves vindas das flags (valores None são ignorados)

        Returns:
            PipelineConfig
        """
        document = load_json(path) if path is not None else {}
        if not isinstance(document, dict):
            raise ConfigurationError(f"{path}: a configuração deve ser um objeto JSON")
        for key, value in (overrides or {}).items():
            if value is not None:
                document[key] = value
        config = cls.from_dict(document)
        logger.debug(f"Configuração carregada (digest {config.digest()})")
        return config

    def to_dict(self) -> Dict[str, Any]:
        """Parâmetros que determinam os resultados (sem diretório de saída e sem SVG)"""
        return {
            "seed": self.seed,
            "climate": self.climate.to_dict(),
            "priors": self.priors.to_dict(),
            "degrees": list(self.degrees),
            "train_fraction": self.train_fraction,
            "split_seed": self.effective_split_seed,
            "mode": self.mode,
            "n": self.n,
            "bins": self.bins,
        }

    def digest(self) -> str:
        return stable_digest(self.to_dict())
