# outline_energy/validators/sample_validator.py

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..config.logger import setup_logger
from ..dataset import CSV_COLUMNS, LOAD_COLUMN, SHAPE_COLUMN
from ..exceptions import ValidationError
from ..geometry.outlines import ShapeKind

logger = setup_logger(__name__)

@dataclass
class ValidationResult:
    """Resultado de validação"""
    is_valid: bool
    errors: List[str] = field(default_factory=list)

# Regras por coluna: limites e se cada limite é inclusivo
ROW_SCHEMA: Dict[str, dict] = {
    SHAPE_COLUMN: {"in": [kind.value for kind in ShapeKind]},
    "orientation_deg": {"numeric": True, "min": 0.0, "max": 360.0, "max_inclusive": False},
    "wwr": {"numeric": True, "min": 0.0, "max": 1.0, "max_inclusive": False},
    "shading_depth_m": {"numeric": True, "min": 0.0},
    "glazing_u_w_m2k": {"numeric": True, "min": 0.0, "min_inclusive": False},
    "wall_thickness_m": {"numeric": True, "min": 0.0, "min_inclusive": False},
    "wall_conductivity_w_mk": {"numeric": True, "min": 0.0, "min_inclusive": False},
    "wall_density_kg_m3": {"numeric": True, "min": 0.0, "min_inclusive": False},
    "wall_shc_j_kgk": {"numeric": True, "min": 0.0, "min_inclusive": False},
    LOAD_COLUMN: {"numeric": True, "min": 0.0, "min_inclusive": False},
}

class SampleValidator:
    """Validador das linhas (forma, características, carga) do conjunto de dados"""

    @staticmethod
    def validate_numeric(value: Any, min_val: Optional[float] = None, max_val: Optional[float] = None,
                         min_inclusive: bool = True, max_inclusive: bool = True) -> bool:
        """Validar valor numérico finito dentro de um intervalo"""
        try:
            num = float(value)
        except (ValueError, TypeError):
            return False
        if not math.isfinite(num):
            return False
        if min_val is not None and (num < min_val or (not min_inclusive and num == min_val)):
            return False
        if max_val is not None and (num > max_val or (not max_inclusive and num == max_val)):
            return False
        return True

    @staticmethod
    def validate_in_list(value: Any, allowed_values: List[Any]) -> bool:
        """Validar se valor está em lista de valores permitidos"""
        return value in allowed_values

    @classmethod
    def validate_row(cls, row: dict, schema: Optional[Dict[str, dict]] = None) -> ValidationResult:
        """
        Validar uma linha de dados contra um schema

        Args:
            row: Linha de dados (coluna → valor)
            schema: Regras por coluna (padrão: ROW_SCHEMA)

        Returns:
            ValidationResult com resultado da validação
        """
        schema = schema or ROW_SCHEMA
        errors = []

        for column, rules in schema.items():
            if column not in row:
                errors.append(f"Campo obrigatório ausente: {column}")
                continue

            value = row[column]
            if "in" in rules and not cls.validate_in_list(value, rules["in"]):
                errors.append(f"Campo {column}: valor {value!r} fora de {rules['in']}")

            if rules.get("numeric") and not cls.validate_numeric(
                value,
                rules.get("min"),
                rules.get("max"),
                rules.get("min_inclusive", True),
                rules.get("max_inclusive", True),
            ):
                errors.append(f"Campo {column}: valor numérico inválido ({value!r})")

        return ValidationResult(is_valid=not errors, errors=errors)

    @classmethod
    def validate_frame(cls, frame: pd.DataFrame, line_numbers: Optional[Sequence[int]] = None) -> int:
        """
        Validar todas as linhas; a primeira linha inválida interrompe

        Args:
            frame: Linhas com as colunas do CSV
            line_numbers: Linha do arquivo de cada registro (opcional)

        Returns:
            Número de linhas validadas
        """
        for position, row in enumerate(frame[list(CSV_COLUMNS)].to_dict(orient="records"), start=1):
            result = cls.validate_row(row)
            if not result.is_valid:
                where = f"Linha de dados {position}"
                if line_numbers is not None:
                    where += f" (linha {line_numbers[position - 1]} do arquivo)"
                logger.error(f"✗ {where} rejeitada: {'; '.join(result.errors)}")
                raise ValidationError(f"{where}: {'; '.join(result.errors)}")
        logger.info(f"✓ {len(frame)} linhas validadas")
        return len(frame)
