# outline_energy/loaders/artifact_loader.py

from pathlib import Path
from typing import Optional, Union

import matplotlib
import matplotlib.figure

from ..config.logger import setup_logger
from ..dataset import CSV_COLUMNS, SHAPE_COLUMN, Dataset
from ..exceptions import DataIOError
from ..plotting.figures import SVG_RC
from ..utils import ensure_directory, save_json
from ..validators.schema_validator import SchemaValidator

logger = setup_logger(__name__)

class ArtifactLoader:
    """Gravação dos artefatos do pipeline (CSV, JSON e SVG)"""

    @staticmethod
    def load_csv(ds: Dataset, file_path: Union[str, Path]) -> None:
        """
        Gravar o conjunto de dados em CSV

        Floats na menor representação decimal que reproduz o valor (repr),
        UTF-8 e finais de linha LF.

        Args:
            ds: Conjunto de dados
            file_path: Caminho do arquivo de saída
        """
        file_path = Path(file_path)
        ensure_directory(file_path.parent)

        text = ds.frame[list(CSV_COLUMNS)].copy()
        for column in CSV_COLUMNS:
            if column != SHAPE_COLUMN:
                text[column] = [repr(float(value)) for value in text[column]]

        try:
            text.to_csv(file_path, index=False, encoding="utf-8", lineterminator="\n")
        except OSError as e:
            logger.error(f"✗ Erro ao gravar CSV: {e}")
            raise DataIOError(f"Erro ao escrever {file_path}: {e}") from e
        logger.info(f"✓ {len(ds)} linhas gravadas em CSV: {file_path}")

    @staticmethod
    def load_json(document: dict, file_path: Union[str, Path], schema: Optional[str] = None) -> None:
        """
        Gravar um relatório JSON, validando-o antes contra o schema indicado

        Args:
            document: Documento JSON
            file_path: Caminho do arquivo de saída
            schema: Nome do schema (None = sem validação)
        """
        if schema is not None:
            SchemaValidator.validate(document, schema)
        save_json(document, file_path)
        logger.info(f"✓ Relatório gravado em JSON: {file_path}")

    @staticmethod
    def load_svg(figure: matplotlib.figure.Figure, file_path: Union[str, Path]) -> None:
        """
        Gravar uma figura em SVG sem data de criação

        Args:
            figure: Figura do matplotlib
            file_path: Caminho do arquivo de saída
        """
        file_path = Path(file_path)
        ensure_directory(file_path.parent)
        try:
            with matplotlib.rc_context(SVG_RC):
                figure.savefig(file_path, format="svg", metadata={"Date": None})
        except OSError as e:
            logger.error(f"✗ Erro ao gravar SVG: {e}")
            raise DataIOError(f"Erro ao escrever {file_path}: {e}") from e
        logger.info(f"✓ Figura gravada em SVG: {file_path}")
