# outline_energy/plotting/figures.py

"""
Figuras estáticas dos resultados (gráfico de cotovelo da PCA, densidade das
cargas por forma e dispersão previsto × simulado)

As figuras são criadas com matplotlib.figure.Figure, sem o estado global do
pyplot, e podem ser construídas em qualquer thread.
"""

from typing import Dict, Sequence

import numpy as np
from matplotlib.figure import Figure

from ..analyzers.pca import PcaResult
from ..analyzers.shape_analyzer import LoadDistribution
from ..exceptions import AnalysisError
from ..models.polynomial_surrogate import FitReport

# Parâmetros aplicados na gravação para SVG reprodutível
SVG_RC = {
    "svg.hashsalt": "outline-energy",
    "svg.fonttype": "none",
}

SHAPE_COLORS: Dict[str, str] = {
    "square": "#1f77b4",
    "t": "#d62728",
    "u": "#2ca02c",
    "l": "#ff7f0e",
}

CONDITION_TITLES: Dict[str, str] = {
    "pooled": "Todas as formas (forma ignorada)",
    "square": "Quadrado",
    "tul": "Formas T, U e L",
}

def scree_figure(pca: PcaResult) -> Figure:
    """
    Variância explicada por componente (barras) e acumulada (linha)

    Args:
        pca: Resultado da PCA

    Returns:
        Figure com um eixo e uma barra por componente
    """
    figure = Figure(figsize=(7, 4))
    ax = figure.add_subplot()
    positions = np.arange(1, len(pca.explained_ratio) + 1)

    ax.bar(positions, pca.explained_ratio, color="#4c72b0", label="Variância explicada")
    ax.plot(positions, pca.cumulative_ratio, color="black", marker="o", label="Acumulada")
    ax.axhline(0.9, color="gray", linestyle="--", linewidth=0.8)

    ax.set_xticks(positions)
    ax.set_xticklabels([f"PC{i}" for i in positions])
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("Fração da variância")
    ax.set_title("Componentes principais das características")
    ax.legend(loc="center right")
    figure.tight_layout()
    return figure

def density_figure(distribution: LoadDistribution) -> Figure:
    """
    Histograma normalizado e curva de densidade da carga por forma

    Args:
        distribution: Distribuições por forma

    Returns:
        Figure com um eixo
    """
    figure = Figure(figsize=(7, 4))
    ax = figure.add_subplot()

    for item in distribution.shapes:
        color = SHAPE_COLORS[item.shape.value]
        ax.stairs(item.density, distribution.bin_edges, color=color, alpha=0.35, fill=True)
        ax.plot(distribution.grid, item.kde, color=color, label=item.shape.value.upper())

    ax.set_xlabel("Carga térmica (kWh/m²·ano)")
    ax.set_ylabel("Densidade")
    ax.set_title("Distribuição da carga térmica por forma")
    ax.legend()
    figure.tight_layout()
    return figure

def scatter_figure(reports: Sequence[FitReport], condition: str) -> Figure:
    """
    Previsto × simulado no conjunto de teste, um painel por grau, com a reta identidade

    Args:
        reports: Relatórios de ajuste (apenas os da condição são usados)
        condition: "pooled" | "square" | "tul"

    Returns:
        Figure com um eixo por grau
    """
    selected = sorted((r for r in reports if r.condition == condition), key=lambda r: r.degree)
    if not selected:
        raise AnalysisError(f"Nenhum relatório para a condição {condition}")

    figure = Figure(figsize=(3.2 * len(selected), 3.4))
    axes = figure.subplots(1, len(selected), squeeze=False)[0]

    for ax, report in zip(axes, selected):
        ax.scatter(report.simulated, report.predicted, s=4, alpha=0.5, color="#4c72b0")
        low = float(min(report.simulated.min(), report.predicted.min()))
        high = float(max(report.simulated.max(), report.predicted.max()))
        ax.plot([low, high], [low, high], color="black", linewidth=0.8)
        ax.set_title(f"Grau {report.degree}: R² = {report.r2_test:.3f}")
        ax.set_xlabel("Simulado (kWh/m²)")

    axes[0].set_ylabel("Previsto (kWh/m²)")
    figure.suptitle(CONDITION_TITLES.get(condition, condition))
    figure.tight_layout()
    return figure
