# outline_energy/exceptions.py

"""
Exceções personalizadas do pipeline outline-energy

Cada exceção carrega o código de saída usado pela CLI:
2 = configuração/validação, 3 = E/S, 4 = falha numérica.
"""

class OutlineEnergyException(Exception):
    """Exceção base do pipeline"""
    exit_code = 1

class ConfigurationError(OutlineEnergyException):
    """Erro de configuração (chave desconhecida, valor fora do domínio)"""
    exit_code = 2

class ValidationError(OutlineEnergyException):
    """Erro de validação de linha ou de documento JSON"""
    exit_code = 2

class DataIOError(OutlineEnergyException):
    """Erro de leitura/escrita de arquivo"""
    exit_code = 3

class GeometryError(OutlineEnergyException):
    """Polígono inválido ou parâmetro de fachada fora do domínio"""
    exit_code = 4

class SamplingError(OutlineEnergyException):
    """Falha na amostragem (prior mal configurado)"""
    exit_code = 4

class SimulationError(OutlineEnergyException):
    """Entrada inválida ou valor não finito no simulador"""
    exit_code = 4

class NumericalError(OutlineEnergyException):
    """Falha de álgebra linear (não convergência, entrada não finita)"""
    exit_code = 4

class AnalysisError(OutlineEnergyException):
    """Falha em estatísticas ou PCA"""
    exit_code = 4

class SurrogateError(OutlineEnergyException):
    """Falha no ajuste ou avaliação do modelo substituto"""
    exit_code = 4

class PipelineStageError(OutlineEnergyException):
    """Falha de uma etapa do pipeline completo; preserva o código da causa"""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"Etapa '{stage}' falhou: {cause}")
        self.stage = stage
        self.cause = cause
        self.exit_code = getattr(cause, "exit_code", 1)
