# outline_energy/utils.py

"""
Utilitários do pipeline outline-energy
"""

import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Union

from .exceptions import DataIOError

def ensure_directory(path: Union[str, Path]) -> Path:
    """
    Garantir que um diretório existe
    
    Args:
        path: Caminho do diretório
        
    Returns:
        Path do diretório
    """
    path = Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise DataIOError(f"Não foi possível criar o diretório {path}: {e}") from e
    return path

def canonical_json(data: Any) -> str:
    """JSON compacto com chaves ordenadas (base dos digests)"""
    return json.dumps(data, sort_keys=True, separators=(",", ":"), allow_nan=False)

def stable_digest(data: Any) -> str:
    """
    Digest SHA-256 estável de um objeto serializável em JSON
    
    Args:
        data: Objeto (dict, list, números, strings)
        
    Returns:
        Hexdigest de 16 caracteres
    """
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()[:16]

def save_json(data: dict, file_path: Union[str, Path], pretty: bool = True) -> None:
    """
    Salvar dados em JSON (UTF-8, LF, sem NaN)
    
    Args:
        data: Dados para salvar
        file_path: Caminho do arquivo
        pretty: Se True, formata com indentação
    """
    file_path = Path(file_path)
    ensure_directory(file_path.parent)
    
    try:
        with open(file_path, 'w', encoding='utf-8', newline='\n') as f:
            indent = 2 if pretty else None
            json.dump(data, f, indent=indent, ensure_ascii=False, allow_nan=False)
            f.write("\n")
    except OSError as e:
        raise DataIOError(f"Erro ao escrever {file_path}: {e}") from e

def load_json(file_path: Union[str, Path]) -> dict:
    """
    Carregar dados de JSON
    
    Args:
        file_path: Caminho do arquivo
        
    Returns:
        Dados carregados
    """
    file_path = Path(file_path)
    
    if not file_path.exists():
        raise DataIOError(f"Arquivo não encontrado: {file_path}")
    
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise DataIOError(f"JSON inválido em {file_path} (linha {e.lineno}): {e.msg}") from e
    except OSError as e:
        raise DataIOError(f"Erro ao ler {file_path}: {e}") from e

def get_platform_info() -> dict:
    """
    Obter informações sobre a plataforma
    
    Returns:
        Dicionário com informações da plataforma
    """
    return {
        "system": sys.platform,
        "python_version": sys.version.split()[0],
    }
