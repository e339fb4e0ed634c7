# outline_energy/models/polynomial_surrogate.py

"""
Modelo substituto de regressão polinomial (graus 1 a 4) sobre as 8 características

As entradas são padronizadas com as estatísticas do treino antes da expansão.
Os monômios seguem a ordem lexicográfica graduada, termo constante primeiro.
O ajuste usa mínimos quadrados de norma mínima, o que cobre o caso de grau 4
com menos linhas de treino (432) que monômios (495).
"""

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config.logger import setup_logger
from ..config.settings import settings
from ..dataset import Dataset
from ..exceptions import SurrogateError
from ..geometry.outlines import ShapeKind
from ..numerics.linalg import least_squares_min_norm
from ..profiler import Timer

logger = setup_logger(__name__)

DEGREES: Tuple[int, ...] = (1, 2, 3, 4)
N_FEATURES = 8
DEFAULT_TRAIN_FRACTION = 0.3
DEGENERATE_TOLERANCE = 1e-9

# Grupos de modelos: todas as linhas ignorando a forma, e o modelo por forma
CONDITIONS: Dict[str, Tuple[ShapeKind, ...]] = {
    "pooled": (ShapeKind.SQUARE, ShapeKind.T, ShapeKind.U, ShapeKind.L),
    "square": (ShapeKind.SQUARE,),
    "tul": (ShapeKind.T, ShapeKind.U, ShapeKind.L),
}

def monomial_exponents(degree: int, n_features: int = N_FEATURES) -> Tuple[Tuple[int, ...], ...]:
    """
    Expoentes de todos os monômios de grau total <= degree

    Args:
        degree: Grau máximo (1..4)
        n_features: Número de variáveis

    Returns:
        Tupla de tuplas de expoentes em ordem lexicográfica graduada
    """
    if degree not in DEGREES:
        raise SurrogateError(f"Grau fora de 1..4: {degree}")

    exponents = []
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n_features), total):
            powers = [0] * n_features
            for index in combo:
                powers[index] += 1
            exponents.append(tuple(powers))
    return tuple(exponents)

def poly_expand(z, degree: int) -> np.ndarray:
    """
    Avaliar todos os monômios de grau <= degree

    Args:
        z: Vetor (p,) ou matriz (n, p) de características padronizadas
        degree: Grau máximo (1..4)

    Returns:
        Vetor (m,) ou matriz (n, m), m = C(p + degree, degree)
    """
    z = np.asarray(z, dtype=np.float64)
    single = z.ndim == 1
    z = np.atleast_2d(z)
    n, p = z.shape
    if degree not in DEGREES:
        raise SurrogateError(f"Grau fora de 1..4: {degree}")

    columns = []
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(p), total):
            columns.append(np.prod(z[:, list(combo)], axis=1) if combo else np.ones(n))
    design = np.column_stack(columns)
    return design[0] if single else design

def standardization(x) -> Tuple[np.ndarray, np.ndarray]:
    """
    Médias e desvios (populacionais) das colunas de x

    Colunas sem variância recebem desvio 1.

    Args:
        x: Matriz (n, p)

    Returns:
        (médias, desvios)
    """
    x = np.asarray(x, dtype=np.float64)
    means = x.mean(axis=0)
    stds = x.std(axis=0)
    stds = np.where(stds > 0.0, stds, 1.0)
    return means, stds

@dataclass(frozen=True)
class SplitSpec:
    """Fração de treino e semente do embaralhamento"""
    train_fraction: float = DEFAULT_TRAIN_FRACTION
    seed: int = 42

    def __post_init__(self):
        if not 0.0 < self.train_fraction < 1.0:
            raise SurrogateError(f"train_fraction fora de (0, 1): {self.train_fraction}")

@dataclass(frozen=True)
class PolyModel:
    """Modelo polinomial ajustado"""
    degree: int
    feature_means: np.ndarray
    feature_stds: np.ndarray
    exponents: Tuple[Tuple[int, ...], ...]
    coefficients: np.ndarray
    training_time_ms: float = 0.0

    @property
    def n_monomials(self) -> int:
        return len(self.exponents)

    def design(self, x) -> np.ndarray:
        z = (np.asarray(x, dtype=np.float64) - self.feature_means) / self.feature_stds
        return poly_expand(z, self.degree)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "feature_means": self.feature_means.tolist(),
            "feature_stds": self.feature_stds.tolist(),
            "exponents": [list(e) for e in self.exponents],
            "coefficients": self.coefficients.tolist(),
        }

@dataclass(frozen=True)
class FitReport:
    """Resultado de um ajuste: R² de treino e teste, tempo e pares previsto × simulado do teste"""
    condition: str
    degree: int
    n_monomials: int
    r2_train: float
    r2_test: float
    training_time_ms: float
    n_train: int
    n_test: int
    predicted: np.ndarray = field(repr=False)
    simulated: np.ndarray = field(repr=False)

    @property
    def overfit_gap(self) -> float:
        return self.r2_train - self.r2_test

    def to_dict(self, include_pairs: bool = True) -> dict:
        data = {
            "condition": self.condition,
            "degree": self.degree,
            "n_monomials": self.n_monomials,
            "r2_train": self.r2_train,
            "r2_test": self.r2_test,
            "overfit_gap": self.overfit_gap,
            "training_time_ms": self.training_time_ms,
            "n_train": self.n_train,
            "n_test": self.n_test,
        }
        if include_pairs:
            data["pairs"] = {"predicted": self.predicted.tolist(), "simulated": self.simulated.tolist()}
        return data

class PolynomialSurrogate:
    """Ajuste, avaliação e experimento completo do modelo substituto"""

    @staticmethod
    def split(ds: Dataset, spec: SplitSpec) -> Tuple[Dataset, Dataset]:
        """
        Separar treino e teste por embaralhamento com semente

        As primeiras floor(fração·n) linhas da permutação formam o treino.

        Args:
            ds: Conjunto de dados
            spec: Fração e semente

        Returns:
            (treino, teste)
        """
        n = len(ds)
        n_train = math.floor(spec.train_fraction * n)
        if n_train < 1 or n_train >= n:
            raise SurrogateError(f"Divisão degenerada: {n_train} de {n} linhas para treino")

        order = np.random.Generator(np.random.PCG64(spec.seed)).permutation(n)
        return ds.take(order[:n_train]), ds.take(order[n_train:])

    @staticmethod
    def fit_arrays(x, y, degree: int) -> PolyModel:
        """
        Ajustar um polinômio de grau degree a (x, y)

        Args:
            x: Matriz (n, p) de características brutas
            y: Vetor alvo (n,)
            degree: Grau (1..4)

        Returns:
            PolyModel com o tempo de treino (expansão + solução) em ms
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64).reshape(-1)
        if x.ndim != 2 or x.shape[0] < 1:
            raise SurrogateError("Ajuste requer pelo menos uma linha de treino")
        if x.shape[0] != y.shape[0]:
            raise SurrogateError(f"x tem {x.shape[0]} linhas, y tem {y.shape[0]}")

        means, stds = standardization(x)
        with Timer(f"ajuste grau {degree}", verbose=False) as timer:
            design = poly_expand((x - means) / stds, degree)
            coefficients = least_squares_min_norm(design, y)

        return PolyModel(
            degree=degree,
            feature_means=means,
            feature_stds=stds,
            exponents=monomial_exponents(degree, x.shape[1]),
            coefficients=coefficients,
            training_time_ms=timer.elapsed_ms,
        )

    @classmethod
    def fit(cls, train: Dataset, degree: int) -> PolyModel:
        return cls.fit_arrays(train.feature_matrix(), train.loads(), degree)

    @staticmethod
    def predict(model: PolyModel, x) -> np.ndarray:
        """Prever a carga para linhas de características brutas"""
        return model.design(x) @ model.coefficients

    @staticmethod
    def r2_score(y_true, y_pred) -> float:
        """
        Coeficiente de determinação 1 − SS_res/SS_tot

        Com alvo constante (SS_tot nulo) retorna 1 se o resíduo também é nulo
        e falha caso contrário.
        """
        y_true = np.asarray(y_true, dtype=np.float64)
        y_pred = np.asarray(y_pred, dtype=np.float64)
        if y_true.size == 0:
            raise SurrogateError("R² de um conjunto vazio")
        if y_true.shape != y_pred.shape:
            raise SurrogateError(f"Formas incompatíveis: {y_true.shape} e {y_pred.shape}")

        ss_res = float(np.sum((y_true - y_pred) ** 2))
        ss_tot = float(np.sum((y_true - y_true.mean()) ** 2))
        floor = y_true.size * (DEGENERATE_TOLERANCE * max(1.0, float(np.max(np.abs(y_true))))) ** 2
        if ss_tot <= floor:
            if ss_res <= floor:
                return 1.0
            raise SurrogateError(f"R² indefinido: alvo constante com resíduo {ss_res:.3e}")
        return 1.0 - ss_res / ss_tot

    @classmethod
    def r_squared(cls, model: PolyModel, data: Dataset) -> float:
        return cls.r2_score(data.loads(), cls.predict(model, data.feature_matrix()))

    @classmethod
    def evaluate(cls, ds: Dataset, condition: str, degree: int, spec: SplitSpec) -> FitReport:
        """
        Ajustar e avaliar um grupo de modelos em um grau

        Args:
            ds: Conjunto de dados completo
            condition: "pooled" | "square" | "tul"
            degree: Grau (1..4)
            spec: Divisão treino/teste

        Returns:
            FitReport
        """
        if condition not in CONDITIONS:
            raise SurrogateError(f"Condição desconhecida: {condition}. Suportadas: {list(CONDITIONS)}")

        subset = ds.subset(CONDITIONS[condition])
        train, test = cls.split(subset, spec)
        model = cls.fit(train, degree)
        predicted = cls.predict(model, test.feature_matrix())
        simulated = test.loads()

        report = FitReport(
            condition=condition,
            degree=degree,
            n_monomials=model.n_monomials,
            r2_train=cls.r_squared(model, train),
            r2_test=cls.r2_score(simulated, predicted),
            training_time_ms=model.training_time_ms,
            n_train=len(train),
            n_test=len(test),
            predicted=predicted,
            simulated=simulated,
        )
        logger.info(f"  {condition:<6} grau {degree}: R² teste={report.r2_test:.4f} "
                    f"treino={report.r2_train:.4f} ({report.training_time_ms:.1f} ms)")
        return report

    @classmethod
    def run_experiment(cls, ds: Dataset, seed: int, degrees: Sequence[int] = DEGREES,
                       train_fraction: float = DEFAULT_TRAIN_FRACTION,
                       threads: Optional[int] = None) -> List[FitReport]:
        """
        Ajustar os três grupos de modelos (pooled, square, tul) em cada grau

        Cada grupo usa a sua própria divisão 30/70 com a mesma semente.

        Args:
            ds: Conjunto de dados com as quatro formas
            seed: Semente da divisão
            degrees: Graus a ajustar
            train_fraction: Fração de treino
            threads: Limite de threads (None = configuração do processo)

        Returns:
            Lista de FitReport ordenada por condição e grau
        """
        missing = [shape.value for shape in CONDITIONS["pooled"] if shape not in ds.shapes()]
        if missing:
            raise SurrogateError(f"Experimento requer as quatro formas; ausentes: {missing}")

        spec = SplitSpec(train_fraction=train_fraction, seed=seed)
        tasks = [(condition, degree) for condition in CONDITIONS for degree in degrees]

        workers = threads or settings.max_workers()
        with ThreadPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(lambda task: cls.evaluate(ds, task[0], task[1], spec), tasks))

        logger.info(f"✓ {len(reports)} modelos ajustados")
        return reports

    @staticmethod
    def best_degree(reports: Sequence[FitReport], condition: str) -> FitReport:
        """Relatório de maior R² de teste de uma condição (empate → menor grau)"""
        candidates = [report for report in reports if report.condition == condition]
        if not candidates:
            raise SurrogateError(f"Nenhum relatório para a condição {condition}")
        return min(candidates, key=lambda report: (-report.r2_test, report.degree))
