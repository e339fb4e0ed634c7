# tests/conftest.py

import os

# Sem arquivos de log durante os testes
os.environ.setdefault("LOG_TO_FILE", "False")
os.environ.setdefault("LOG_LEVEL", "WARNING")

import pytest

from outline_energy.config.pipeline_config import PipelineConfig
from outline_energy.pipeline import OutlinePipeline

@pytest.fixture(scope="session")
def default_pipeline(tmp_path_factory):
    """Pipeline com o conjunto fatorial padrão (semente 42) gerado e analisado"""
    config = PipelineConfig(seed=42, output_dir=tmp_path_factory.mktemp("default"))
    return OutlinePipeline(config).generate().analyze()

@pytest.fixture(scope="session")
def default_dataset(default_pipeline):
    """Conjunto fatorial padrão: 5760 amostras, semente 42"""
    return default_pipeline.dataset
