# outline_energy/extractors/dataset_extractor.py

from pathlib import Path
from typing import List, Optional, Union

import pandas as pd

from ..config.logger import setup_logger
from ..dataset import CSV_COLUMNS, SHAPE_COLUMN, Dataset, Provenance
from ..exceptions import DataIOError, ValidationError
from ..validators.sample_validator import SampleValidator

logger = setup_logger(__name__)

class DatasetExtractor:
    """Leitura do conjunto de dados em CSV"""

    @staticmethod
    def _parse_floats(frame: pd.DataFrame, line_numbers: List[int]) -> pd.DataFrame:
        """Converter as colunas numéricas com float() (arredondamento correto, ida e volta exata)"""
        parsed = {SHAPE_COLUMN: frame[SHAPE_COLUMN].tolist()}
        for column in CSV_COLUMNS[1:]:
            values = []
            for line, text in zip(line_numbers, frame[column].tolist()):
                try:
                    values.append(float(text))
                except ValueError:
                    raise ValidationError(
                        f"Linha {line}: valor não numérico em {column}: {text!r}"
                    ) from None
            parsed[column] = values
        return pd.DataFrame(parsed, columns=list(CSV_COLUMNS))

    @classmethod
    def extract_csv(cls, file_path: Union[str, Path], provenance: Optional[Provenance] = None) -> Dataset:
        """
        Extrair o conjunto de dados de um arquivo CSV

        Args:
            file_path: Caminho do arquivo
            provenance: Proveniência conhecida (opcional)

        Returns:
            Dataset validado
        """
        file_path = Path(file_path)
        logger.info(f"Extraindo conjunto de dados de CSV: {file_path}")

        if not file_path.exists():
            raise DataIOError(f"Arquivo não encontrado: {file_path}")

        try:
            frame = pd.read_csv(file_path, dtype=str, keep_default_na=False, skip_blank_lines=False,
                                encoding="utf-8")
        except pd.errors.ParserError as e:
            logger.error(f"✗ CSV malformado: {e}")
            raise ValidationError(f"CSV malformado em {file_path}: {e}") from e
        except pd.errors.EmptyDataError as e:
            raise ValidationError(f"CSV vazio: {file_path}") from e
        except UnicodeDecodeError as e:
            raise ValidationError(f"{file_path} não está em UTF-8: {e}") from e
        except OSError as e:
            raise DataIOError(f"Erro ao ler {file_path}: {e}") from e

        if tuple(frame.columns) != CSV_COLUMNS:
            raise ValidationError(
                f"Linha 1: cabeçalho inválido {list(frame.columns)}; esperado {list(CSV_COLUMNS)}"
            )
        # linha 1 é o cabeçalho; linhas em branco são ignoradas mas contam na numeração
        blank = (frame.isna() | frame.eq("")).all(axis=1).to_numpy()
        line_numbers = [position + 2 for position in range(len(frame)) if not blank[position]]
        frame = frame[~blank]
        if frame.empty:
            raise ValidationError(f"CSV sem linhas de dados: {file_path}")

        frame = cls._parse_floats(frame, line_numbers)
        SampleValidator.validate_frame(frame, line_numbers)

        logger.info(f"✓ Extraído {len(frame)} registros de {file_path}")
        return Dataset(frame, provenance)
