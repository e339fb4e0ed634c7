# outline_energy/numerics/linalg.py

"""
Álgebra linear densa compartilhada por PCA e regressão

- symmetric_eigen: Jacobi cíclico para matrizes simétricas
- least_squares_min_norm: mínimos quadrados de norma mínima via SVD truncada
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..config.logger import setup_logger
from ..exceptions import NumericalError

logger = setup_logger(__name__)

MAX_SWEEPS = 100
OFF_DIAGONAL_TOLERANCE = 1e-12
SYMMETRY_TOLERANCE = 1e-12
SINGULAR_VALUE_CUTOFF = 1e-10

@dataclass(frozen=True)
class EigenResult:
    """Autovalores em ordem decrescente; a coluna i de eigenvectors pareia com eigenvalues[i]"""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

def as_matrix(a, name: str = "matriz") -> np.ndarray:
    """Converter para ndarray 2-D float64 finito"""
    matrix = np.array(a, dtype=np.float64, copy=True)
    if matrix.ndim != 2:
        raise NumericalError(f"{name} deve ser 2-D (recebido ndim={matrix.ndim})")
    if not np.all(np.isfinite(matrix)):
        raise NumericalError(f"{name} contém valores não finitos")
    return matrix

def _jacobi_rotation(a_pp: float, a_qq: float, a_pq: float) -> Tuple[float, float]:
    """Cosseno e seno da rotação que anula a_pq"""
    tau = (a_qq - a_pp) / (2.0 * a_pq)
    if tau >= 0.0:
        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    return c, t * c

def symmetric_eigen(a) -> EigenResult:
    """
    Autodecomposição de uma matriz simétrica por rotações de Jacobi cíclicas

    Para quando max|fora da diagonal| <= 1e-12·max|A|. Cada autovetor tem sua
    entrada de maior módulo positiva.

    Args:
        a: Matriz quadrada simétrica

    Returns:
        EigenResult
    """
    a = as_matrix(a)
    n, m = a.shape
    if n != m:
        raise NumericalError(f"Matriz não quadrada: {n}x{m}")

    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if np.max(np.abs(a - a.T), initial=0.0) > SYMMETRY_TOLERANCE * max(scale, 1e-300):
        raise NumericalError("Matriz não simétrica")
    a = 0.5 * (a + a.T)

    v = np.eye(n)
    tolerance = OFF_DIAGONAL_TOLERANCE * scale
    upper = np.triu_indices(n, k=1)

    for sweep in range(MAX_SWEEPS + 1):
        off = float(np.max(np.abs(a[upper]), initial=0.0))
        if off <= tolerance:
            break
        if sweep == MAX_SWEEPS:
            raise NumericalError(f"Jacobi não convergiu em {MAX_SWEEPS} varreduras (off={off:.3e})")
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                c, s = _jacobi_rotation(a[p, p], a[q, q], a[p, q])

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q

                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    v = v[:, order]

    # convenção de sinal: maior entrada em módulo positiva
    for j in range(n):
        if v[np.argmax(np.abs(v[:, j])), j] < 0.0:
            v[:, j] = -v[:, j]

    return EigenResult(eigenvalues=eigenvalues, eigenvectors=v)

def least_squares_min_norm(x, y) -> np.ndarray:
    """
    Solução de mínimos quadrados de menor norma ℓ₂

    Valores singulares abaixo de 1e-10·σ_max são tratados como zero, o que cobre
    sistemas subdeterminados (mais colunas que linhas) e colunas duplicadas.

    Args:
        x: Matriz n×p
        y: Vetor com n valores

    Returns:
        Coeficientes (p,)
    """
    x = as_matrix(x, "X")
    y = np.array(y, dtype=np.float64).reshape(-1)
    n, p = x.shape
    if n < 1 or p < 1:
        raise NumericalError(f"Sistema vazio: {n}x{p}")
    if y.shape[0] != n:
        raise NumericalError(f"Dimensões incompatíveis: X tem {n} linhas, y tem {y.shape[0]}")
    if not np.all(np.isfinite(y)):
        raise NumericalError("y contém valores não finitos")

    try:
        u, s, vt = np.linalg.svd(x, full_matrices=False)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"SVD não convergiu: {e}") from e

    cutoff = SINGULAR_VALUE_CUTOFF * (s[0] if s.size else 0.0)
    keep = s > cutoff
    inverse = np.zeros_like(s)
    inverse[keep] = 1.0 / s[keep]
    beta = vt.T @ (inverse * (u.T @ y))

    logger.debug(f"Mínimos quadrados {n}x{p}: posto efetivo {int(keep.sum())}")
    return beta
