# outline_energy/validators/schema_validator.py

"""
Validação de documentos JSON contra os schemas em outline_energy/schemas
"""

from functools import lru_cache
from typing import Any, List, Type

from jsonschema import Draft202012Validator

from ..config.logger import setup_logger
from ..config.settings import settings
from ..exceptions import OutlineEnergyException, ValidationError
from ..utils import load_json

logger = setup_logger(__name__)

SCHEMA_NAMES = ("pipeline_config", "analysis_report", "fit_report", "provenance")

@lru_cache(maxsize=None)
def _validator(name: str) -> Draft202012Validator:
    if name not in SCHEMA_NAMES:
        raise ValidationError(f"Schema desconhecido: {name}. Disponíveis: {', '.join(SCHEMA_NAMES)}")
    schema = load_json(settings.SCHEMAS_DIR / f"{name}.schema.json")
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)

class SchemaValidator:
    """Validador de configuração e relatórios"""

    @staticmethod
    def errors(document: Any, name: str) -> List[str]:
        """
        Listar as violações de um documento

        Args:
            document: Objeto JSON já carregado
            name: Nome do schema (sem sufixo)

        Returns:
            Mensagens "caminho: erro", vazia se o documento é válido
        """
        messages = []
        for error in sorted(_validator(name).iter_errors(document), key=lambda e: [str(p) for p in e.absolute_path]):
            path = "/".join(str(part) for part in error.absolute_path) or "<raiz>"
            messages.append(f"{path}: {error.message}")
        return messages

    @classmethod
    def validate(cls, document: Any, name: str,
                 error_class: Type[OutlineEnergyException] = ValidationError) -> None:
        """
        Validar um documento e falhar na primeira violação

        Args:
            document: Objeto JSON já carregado
            name: Nome do schema
            error_class: Exceção levantada (ConfigurationError para a configuração)
        """
        messages = cls.errors(document, name)
        if messages:
            logger.error(f"✗ Documento inválido para o schema {name}: {messages[0]}")
            raise error_class(f"{name}: {messages[0]}")
