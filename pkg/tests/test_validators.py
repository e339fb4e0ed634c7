# tests/test_validators.py

import dataclasses

import pandas as pd
import pytest

from outline_energy.dataset import CSV_COLUMNS
from outline_energy.exceptions import ConfigurationError, ValidationError
from outline_energy.validators.sample_validator import SampleValidator
from outline_energy.validators.schema_validator import SCHEMA_NAMES, SchemaValidator

VALID_ROW = dict(zip(CSV_COLUMNS, ["t", 90.0, 0.2, 0.15, 2.72, 0.16, 0.84, 1800.0, 800.0, 310.5]))

class TestSampleValidator:
    """Testes para o validador de linhas"""

    def test_validate_numeric_valid(self):
        """Testar validação de número válido"""
        assert SampleValidator.validate_numeric(10) is True
        assert SampleValidator.validate_numeric(10.5) is True
        assert SampleValidator.validate_numeric("20") is True

    def test_validate_numeric_with_range(self):
        """Testar validação de número com range"""
        assert SampleValidator.validate_numeric(50, min_val=0, max_val=100) is True
        assert SampleValidator.validate_numeric(150, min_val=0, max_val=100) is False
        assert SampleValidator.validate_numeric(-10, min_val=0, max_val=100) is False

    def test_validate_numeric_exclusive_bounds(self):
        """Testar limites exclusivos"""
        assert SampleValidator.validate_numeric(0.0, min_val=0.0, min_inclusive=False) is False
        assert SampleValidator.validate_numeric(360.0, max_val=360.0, max_inclusive=False) is False
        assert SampleValidator.validate_numeric(359.9, max_val=360.0, max_inclusive=False) is True

    def test_validate_numeric_invalid(self):
        """Testar validação de número inválido"""
        assert SampleValidator.validate_numeric("abc") is False
        assert SampleValidator.validate_numeric(None) is False
        assert SampleValidator.validate_numeric(float("nan")) is False
        assert SampleValidator.validate_numeric(float("inf")) is False

    def test_validate_in_list(self):
        """Testar validação de lista"""
        assert SampleValidator.validate_in_list("u", ["square", "t", "u", "l"]) is True
        assert SampleValidator.validate_in_list("h", ["square", "t", "u", "l"]) is False

    def test_validate_row_valid(self):
        """Testar linha válida"""
        result = SampleValidator.validate_row(VALID_ROW)
        assert result.is_valid is True
        assert result.errors == []

    @pytest.mark.parametrize("column,value", [
        ("wwr", 1.0),
        ("orientation_deg", 360.0),
        ("shading_depth_m", -0.01),
        ("wall_conductivity_w_mk", 0.0),
        ("thermal_load_kwh_m2", 0.0),
        ("shape", "H"),
    ])
    def test_validate_row_invalid(self, column, value):
        """Testar linha com um campo fora do domínio"""
        result = SampleValidator.validate_row({**VALID_ROW, column: value})
        assert result.is_valid is False
        assert len(result.errors) == 1
        assert column in result.errors[0]

    def test_validate_row_missing_column(self):
        """Testar campo obrigatório ausente"""
        row = {k: v for k, v in VALID_ROW.items() if k != "wwr"}
        result = SampleValidator.validate_row(row)
        assert result.is_valid is False
        assert "wwr" in result.errors[0]

    def test_validation_result_fields(self):
        """Testar que o resultado carrega apenas validade e erros"""
        result = SampleValidator.validate_row(VALID_ROW)
        assert [f.name for f in dataclasses.fields(result)] == ["is_valid", "errors"]
        assert result.is_valid is True and result.errors == []

    def test_validate_frame_with_file_lines(self):
        """Testar mensagem com a linha de dados e a linha do arquivo"""
        frame = pd.DataFrame([VALID_ROW, {**VALID_ROW, "wwr": 1.0}], columns=list(CSV_COLUMNS))
        with pytest.raises(ValidationError, match=r"Linha de dados 2 \(linha 7 do arquivo\)"):
            SampleValidator.validate_frame(frame, [2, 7])
        assert SampleValidator.validate_frame(frame.iloc[:1], [2]) == 1

class TestSchemaValidator:
    """Testes para a validação de documentos JSON"""

    @pytest.mark.parametrize("name", SCHEMA_NAMES)
    def test_schemas_load(self, name):
        """Testar que cada schema é válido e rejeita um documento que não é objeto"""
        assert SchemaValidator.errors([], name)

    def test_config_errors(self):
        """Testar mensagens com o caminho da violação"""
        errors = SchemaValidator.errors({"climate": {"shgc": 2.0}, "degrees": [5]}, "pipeline_config")
        assert len(errors) == 2
        assert errors[0].startswith("climate/shgc")
        assert errors[1].startswith("degrees/0")

    def test_validate_error_class(self):
        """Testar a exceção escolhida pelo chamador"""
        with pytest.raises(ConfigurationError):
            SchemaValidator.validate({"seed": -1}, "pipeline_config", error_class=ConfigurationError)
        with pytest.raises(ValidationError):
            SchemaValidator.validate({"seed": -1}, "pipeline_config")

    def test_unknown_schema(self):
        """Testar schema desconhecido"""
        with pytest.raises(ValidationError):
            SchemaValidator.errors({}, "report")
