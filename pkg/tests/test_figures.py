# tests/test_figures.py

import xml.etree.ElementTree as ET

import numpy as np
import pytest

from outline_energy.analyzers.pca import PcaAnalyzer
from outline_energy.analyzers.shape_analyzer import ShapeAnalyzer
from outline_energy.exceptions import AnalysisError
from outline_energy.loaders.artifact_loader import ArtifactLoader
from outline_energy.models.polynomial_surrogate import FitReport
from outline_energy.plotting.figures import density_figure, scatter_figure, scree_figure

def make_report(degree, n_test=25, condition="square"):
    simulated = np.linspace(200.0, 320.0, n_test)
    return FitReport(
        condition=condition, degree=degree, n_monomials=9, r2_train=0.95, r2_test=0.9,
        training_time_ms=1.0, n_train=10, n_test=n_test,
        predicted=simulated + 1.0, simulated=simulated,
    )

class TestFigures:
    """Testes para as figuras"""

    def test_scree_bars(self, default_dataset):
        """Testar uma barra por componente"""
        figure = scree_figure(PcaAnalyzer.run_pca(default_dataset))
        ax = figure.axes[0]
        assert len(ax.patches) == 8
        assert len(ax.get_xticklabels()) == 8

    def test_density_lines(self, default_dataset):
        """Testar uma curva de densidade por forma"""
        figure = density_figure(ShapeAnalyzer.load_distribution(default_dataset))
        assert len(figure.axes[0].lines) == 4

    def test_scatter_panels(self):
        """Testar um painel por grau e um ponto por linha de teste"""
        reports = [make_report(2), make_report(1), make_report(1, condition="tul")]
        figure = scatter_figure(reports, "square")
        assert len(figure.axes) == 2
        assert figure.axes[0].get_title().startswith("Grau 1")
        assert len(figure.axes[0].collections[0].get_offsets()) == 25

    def test_scatter_unknown_condition(self):
        """Testar condição sem relatórios"""
        with pytest.raises(AnalysisError):
            scatter_figure([make_report(1)], "pooled")

    def test_svg_is_reproducible(self, tmp_path):
        """Testar SVG bem formado, sem data e idêntico em duas gravações"""
        ArtifactLoader.load_svg(scatter_figure([make_report(1)], "square"), tmp_path / "a.svg")
        ArtifactLoader.load_svg(scatter_figure([make_report(1)], "square"), tmp_path / "b.svg")

        raw = (tmp_path / "a.svg").read_bytes()
        assert ET.fromstring(raw).tag.endswith("svg")
        assert b"<dc:date>" not in raw
        assert raw == (tmp_path / "b.svg").read_bytes()
