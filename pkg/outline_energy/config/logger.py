# outline_energy/config/logger.py

import logging
import sys
from .settings import settings

def setup_logger(name: str) -> logging.Logger:
    """
    Configurar logger para um módulo específico
    
    Args:
        name: Nome do módulo
        
    Returns:
        Logger configurado
    """
    logger = logging.getLogger(name)
    
    # Evitar adicionar handlers múltiplas vezes
    if logger.handlers:
        return logger
    
    try:
        logger.setLevel(settings.LOG_LEVEL)
    except ValueError:
        logger.setLevel("INFO")
    logger.propagate = False
    
    formatter = logging.Formatter(settings.LOG_FORMAT)
    
    # Console em stderr: stdout fica livre para a saída do subcomando `shapes`
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)
    
    if not settings.LOG_TO_FILE:
        return logger
    
    settings.ensure_directories()
    try:
        log_file = settings.LOGS_DIR / f"{name.replace('.', '_')}.log"
        if len(str(log_file)) > 260:
            log_file = settings.LOGS_DIR / "outline_energy.log"
        
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    except OSError as e:
        logger.warning(f"Sem arquivo de log ({e}). Continuando apenas com console.")
    
    return logger
