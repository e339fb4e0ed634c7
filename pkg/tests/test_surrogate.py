# tests/test_surrogate.py

import math

import numpy as np
import pandas as pd
import pytest

from outline_energy.dataset import CSV_COLUMNS, Dataset
from outline_energy.exceptions import SurrogateError
from outline_energy.models.polynomial_surrogate import (
    CONDITIONS,
    PolynomialSurrogate,
    SplitSpec,
    monomial_exponents,
    poly_expand,
    standardization,
)

def random_dataset(n, seed=0):
    """Conjunto com características aleatórias em faixas plausíveis e carga linear"""
    rng = np.random.Generator(np.random.PCG64(seed))
    x = np.column_stack([
        rng.uniform(0.0, 359.0, n), rng.uniform(0.1, 0.5, n), rng.uniform(0.0, 0.45, n),
        rng.uniform(0.7, 4.6, n), rng.uniform(0.1, 0.3, n), rng.uniform(0.5, 1.5, n),
        rng.uniform(1500.0, 2500.0, n), rng.uniform(800.0, 1200.0, n),
    ])
    y = 200.0 + 50.0 * x[:, 1] + 10.0 * x[:, 3]
    frame = pd.DataFrame(x, columns=list(CSV_COLUMNS[1:-1]))
    frame.insert(0, CSV_COLUMNS[0], "square")
    frame[CSV_COLUMNS[-1]] = y
    return Dataset(frame)

@pytest.fixture(scope="module")
def experiment(default_dataset):
    return PolynomialSurrogate.run_experiment(default_dataset, seed=42, degrees=(1, 2, 3))

class TestMonomials:
    """Testes para a base de monômios"""

    @pytest.mark.parametrize("degree,count", [(1, 9), (2, 45), (3, 165), (4, 495)])
    def test_counts(self, degree, count):
        """Testar C(8 + d, d) monômios"""
        assert len(monomial_exponents(degree)) == count == math.comb(8 + degree, degree)
        assert poly_expand(np.zeros(8), degree).shape == (count,)

    def test_graded_lex_order(self):
        """Testar constante, lineares e depois os quadráticos"""
        exponents = monomial_exponents(2, 3)
        assert exponents[0] == (0, 0, 0)
        assert exponents[1:4] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert exponents[4:] == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))

    def test_zero_vector(self):
        """Testar vetor nulo: apenas o termo constante"""
        row = poly_expand(np.zeros(8), 3)
        assert row[0] == 1.0
        assert not row[1:].any()

    def test_expansion_matches_exponents(self):
        """Testar cada coluna contra o produto das potências"""
        z = np.array([0.5, -1.0, 2.0])
        row = poly_expand(z, 3)
        expected = [np.prod(z ** np.array(e)) for e in monomial_exponents(3, 3)]
        assert row == pytest.approx(expected)

    @pytest.mark.parametrize("degree", [0, 5])
    def test_invalid_degree(self, degree):
        """Testar grau fora de 1..4"""
        with pytest.raises(SurrogateError):
            poly_expand(np.zeros(8), degree)

class TestSplit:
    """Testes para a divisão treino/teste"""

    def test_sizes(self):
        """Testar floor(0.3·n) linhas de treino"""
        train, test = PolynomialSurrogate.split(random_dataset(10), SplitSpec(0.3, 1))
        assert (len(train), len(test)) == (3, 7)
        train, test = PolynomialSurrogate.split(random_dataset(1440), SplitSpec(0.3, 1))
        assert (len(train), len(test)) == (432, 1008)

    def test_deterministic_and_disjoint(self):
        """Testar partição determinística e sem sobreposição"""
        ds = random_dataset(50)
        first = PolynomialSurrogate.split(ds, SplitSpec(0.3, 7))
        second = PolynomialSurrogate.split(ds, SplitSpec(0.3, 7))
        assert first[0].frame.equals(second[0].frame)
        rows = pd.concat([first[0].frame, first[1].frame])
        assert len(rows.drop_duplicates()) == 50

    def test_degenerate(self):
        """Testar divisão sem linhas de treino"""
        with pytest.raises(SurrogateError):
            PolynomialSurrogate.split(random_dataset(3), SplitSpec(0.3, 1))

    def test_invalid_fraction(self):
        """Testar fração fora de (0, 1)"""
        with pytest.raises(SurrogateError):
            SplitSpec(1.0, 1)

class TestFit:
    """Testes para ajuste e avaliação"""

    def test_recovers_quadratic(self):
        """Testar recuperação de coeficientes conhecidos de grau 2"""
        rng = np.random.Generator(np.random.PCG64(11))
        x = rng.standard_normal((200, 8)) * 2.0 + 5.0
        means, stds = standardization(x)
        exponents = monomial_exponents(2)
        beta = rng.uniform(-1.0, 1.0, len(exponents))
        y = poly_expand((x - means) / stds, 2) @ beta

        model = PolynomialSurrogate.fit_arrays(x, y, 2)
        assert np.max(np.abs(model.coefficients - beta)) <= 1e-8
        assert PolynomialSurrogate.r2_score(y, PolynomialSurrogate.predict(model, x)) == pytest.approx(1.0)
        assert model.training_time_ms > 0.0

    def test_exact_linear_target(self):
        """Testar R² = 1 para alvo linear nas características"""
        ds = random_dataset(100)
        model = PolynomialSurrogate.fit(ds, 1)
        assert PolynomialSurrogate.r_squared(model, ds) == pytest.approx(1.0, abs=1e-10)

    def test_constant_target(self):
        """Testar alvo constante: previsão constante e R² = 1"""
        ds = random_dataset(40)
        ds.frame[CSV_COLUMNS[-1]] = 250.0
        model = PolynomialSurrogate.fit(ds, 2)
        predicted = PolynomialSurrogate.predict(model, ds.feature_matrix())
        assert predicted == pytest.approx(np.full(40, 250.0), abs=1e-8)
        assert PolynomialSurrogate.r_squared(model, ds) == 1.0

    def test_underdetermined_interpolates(self):
        """Testar 30 linhas com 45 monômios: resíduo de treino nulo"""
        rng = np.random.Generator(np.random.PCG64(4))
        x = rng.standard_normal((30, 8))
        y = rng.standard_normal(30)
        model = PolynomialSurrogate.fit_arrays(x, y, 2)
        assert np.max(np.abs(PolynomialSurrogate.predict(model, x) - y)) <= 1e-8

    def test_train_r2_grows_with_degree(self):
        """Testar R² de treino não decrescente com o grau"""
        rng = np.random.Generator(np.random.PCG64(8))
        x = rng.standard_normal((300, 8))
        y = np.sin(x[:, 0]) + x[:, 1] * x[:, 2] + 0.1 * rng.standard_normal(300)
        scores = []
        for degree in (1, 2, 3):
            model = PolynomialSurrogate.fit_arrays(x, y, degree)
            scores.append(PolynomialSurrogate.r2_score(y, PolynomialSurrogate.predict(model, x)))
        assert scores[0] <= scores[1] + 1e-12 <= scores[2] + 2e-12

    def test_shift_invariance(self):
        """Testar previsões invariantes a translação das características"""
        rng = np.random.Generator(np.random.PCG64(12))
        x = rng.standard_normal((120, 8))
        y = x[:, 0] ** 2 + x[:, 3]
        base = PolynomialSurrogate.predict(PolynomialSurrogate.fit_arrays(x, y, 2), x)
        shifted = x + 1000.0
        moved = PolynomialSurrogate.predict(PolynomialSurrogate.fit_arrays(shifted, y, 2), shifted)
        assert moved == pytest.approx(base, abs=1e-6)

    def test_r2_undefined(self):
        """Testar alvo constante com resíduo não nulo"""
        with pytest.raises(SurrogateError):
            PolynomialSurrogate.r2_score([5.0, 5.0, 5.0], [4.0, 5.0, 6.0])

    def test_unknown_condition(self, default_dataset):
        """Testar condição desconhecida"""
        with pytest.raises(SurrogateError):
            PolynomialSurrogate.evaluate(default_dataset, "h-shape", 1, SplitSpec())

class TestExperiment:
    """Testes para o experimento completo no conjunto padrão"""

    def test_report_order(self, experiment):
        """Testar relatórios ordenados por condição e grau"""
        assert [(r.condition, r.degree) for r in experiment] == [
            (condition, degree) for condition in CONDITIONS for degree in (1, 2, 3)
        ]

    def test_split_sizes(self, experiment):
        """Testar divisão 30/70 de cada condição"""
        sizes = {r.condition: (r.n_train, r.n_test) for r in experiment}
        assert sizes == {"pooled": (1728, 4032), "square": (432, 1008), "tul": (1296, 3024)}
        for report in experiment:
            assert len(report.predicted) == len(report.simulated) == report.n_test

    def test_square_quadratic_accuracy(self, experiment):
        """Testar R² de teste do quadrado em grau 2 e a perda do modelo conjunto"""
        by_key = {(r.condition, r.degree): r for r in experiment}
        square = by_key[("square", 2)].r2_test
        assert square >= 0.90
        assert by_key[("pooled", 2)].r2_test <= square - 0.05

    def test_report_dict(self, experiment):
        """Testar serialização sem os pares"""
        data = experiment[0].to_dict(include_pairs=False)
        assert "pairs" not in data
        assert data["overfit_gap"] == pytest.approx(data["r2_train"] - data["r2_test"])
        assert data["n_monomials"] == 9

    def test_best_degree(self, experiment):
        """Testar escolha do maior R² de teste"""
        best = PolynomialSurrogate.best_degree(experiment, "square")
        assert best.r2_test == max(r.r2_test for r in experiment if r.condition == "square")
        with pytest.raises(SurrogateError):
            PolynomialSurrogate.best_degree(experiment, "h-shape")

    def test_degree_four_underdetermined(self, default_dataset):
        """Testar grau 4 do quadrado: 432 linhas para 495 monômios"""
        report = PolynomialSurrogate.evaluate(default_dataset, "square", 4, SplitSpec(0.3, 42))
        assert report.n_monomials == 495
        assert report.n_train == 432
        assert report.r2_train >= report.r2_test
        assert np.all(np.isfinite(report.predicted))

    def test_requires_all_shapes(self, default_dataset):
        """Testar experimento sem todas as formas"""
        with pytest.raises(SurrogateError):
            PolynomialSurrogate.run_experiment(default_dataset.subset(CONDITIONS["tul"]), seed=1)

    def test_thread_count_irrelevant(self, default_dataset):
        """Testar relatórios idênticos com 1 e 4 threads"""
        one = PolynomialSurrogate.run_experiment(default_dataset, seed=3, degrees=(1,), threads=1)
        four = PolynomialSurrogate.run_experiment(default_dataset, seed=3, degrees=(1,), threads=4)
        assert [r.r2_test for r in one] == [r.r2_test for r in four]

