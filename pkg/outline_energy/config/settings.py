# outline_energy/config/settings.py

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

__version__ = "1.0.0"

class Settings:
    """Configurações do processo - lidas do ambiente (e de um .env opcional)"""
    
    # Diretórios
    BASE_DIR = Path(__file__).resolve().parent.parent.parent
    PACKAGE_DIR = Path(__file__).resolve().parent.parent
    SCHEMAS_DIR = PACKAGE_DIR / "schemas"
    OUTPUT_DIR = Path(os.getenv("OUTPUT_DIR", str(BASE_DIR / "data" / "output")))
    LOGS_DIR = Path(os.getenv("LOGS_DIR", str(BASE_DIR / "logs")))
    
    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_TO_FILE = os.getenv("LOG_TO_FILE", "True").lower() == "true"
    
    # Paralelismo (0 = automático)
    THREADS = int(os.getenv("OUTLINE_ENERGY_THREADS", "0"))
    
    # Versão gravada em provenance.json
    VERSION = __version__
    
    @classmethod
    def max_workers(cls) -> int:
        """Número efetivo de threads de trabalho"""
        if cls.THREADS > 0:
            return cls.THREADS
        return os.cpu_count() or 1
    
    @classmethod
    def ensure_directories(cls):
        """Garantir que o diretório de logs existe"""
        try:
            cls.LOGS_DIR.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            import warnings
            warnings.warn(f"Aviso: Sem permissão para criar diretório {cls.LOGS_DIR}. {str(e)}")

settings = Settings()
