# tests/test_oracle.py

from dataclasses import replace

import pytest

from outline_energy.exceptions import ConfigurationError, SimulationError, ValidationError
from outline_energy.generators.feature_sampler import FeatureSampler, FeatureVector
from outline_energy.geometry.outlines import SHAPE_ORDER, OutlineGeometry, ShapeKind
from outline_energy.simulators.thermal_oracle import ClimateConfig, Sample, ThermalOracle

CONCRETE_CELL = FeatureVector(
    orientation=0.0, wwr=0.1, shading_depth=0.0, glazing_u=0.7,
    wall_thickness=0.21, wall_conductivity=1.13, wall_density=2000.0, wall_shc=1000.0,
)

@pytest.fixture
def oracle():
    return ThermalOracle()

class TestClimateConfig:
    """Testes para a configuração do simulador"""

    def test_defaults(self):
        """Testar valores calibrados"""
        config = ClimateConfig()
        assert (config.hdd, config.cdd, config.h_vent, config.q_internal) == (650.0, 150.0, 100.0, 175.0)
        assert config.wall_height == 3.0

    def test_from_dict_unknown_key(self):
        """Testar chave desconhecida"""
        with pytest.raises(ConfigurationError):
            ClimateConfig.from_dict({"hdd": 100.0, "latitude": 40.0})

    @pytest.mark.parametrize("overrides", [{"shgc": 1.5}, {"hdd": -1.0}, {"irr_min": 2000.0},
                                           {"cdd": float("nan")}, {"c_ref": 0.0}])
    def test_invalid_values(self, overrides):
        """Testar valores fora do domínio"""
        with pytest.raises(ConfigurationError):
            ClimateConfig.from_dict(overrides)

    def test_digest_stable(self):
        """Testar digest estável e sensível a mudanças"""
        assert ClimateConfig().digest() == ClimateConfig.from_dict({}).digest()
        assert ClimateConfig().digest() != ClimateConfig(hdd=700.0).digest()

class TestComponents:
    """Testes para as fórmulas de cada termo"""

    def test_wall_u_value(self, oracle):
        """Testar U da parede de concreto e de tijolo"""
        assert oracle.wall_u_value(0.21, 1.13) == pytest.approx(2.8102, abs=1e-4)
        assert oracle.wall_u_value(0.16, 0.84) == pytest.approx(2.7741, abs=1e-4)
        assert oracle.wall_u_value(1e-12, 1.0) == pytest.approx(1.0 / 0.17, abs=1e-4)

    def test_wall_u_value_invalid(self, oracle):
        """Testar espessura não positiva"""
        with pytest.raises(SimulationError):
            oracle.wall_u_value(0.0, 1.0)

    @pytest.mark.parametrize("depth,expected", [(0.0, 1.0), (0.45, 0.46), (10.0, 0.2)])
    def test_shading_factor(self, depth, expected):
        """Testar fator de sombreamento"""
        assert ThermalOracle.shading_factor(depth) == pytest.approx(expected)

    def test_facade_irradiation(self, oracle):
        """Testar irradiação ao sul, ao norte e a leste"""
        assert oracle.facade_irradiation(180.0) == pytest.approx(1100.0)
        assert oracle.facade_irradiation(0.0) == pytest.approx(400.0)
        assert oracle.facade_irradiation(90.0) == pytest.approx(750.0)

    def test_mass_factor(self, oracle):
        """Testar multiplicador de inércia"""
        assert oracle.mass_factor(0.0, 1000.0, 0.2) == 1.0
        assert oracle.mass_factor(1.0, 4.2e5, 1.0) == pytest.approx(0.95)
        assert oracle.mass_factor(2000.0, 1000.0, 0.21) == pytest.approx(0.95)

class TestSimulateLoad:
    """Testes para a carga térmica anual"""

    def test_regression_pin(self, oracle):
        """Testar valor fixado: quadrado, célula sem ruído com concreto"""
        load = oracle.simulate_load(oracle.outline(ShapeKind.SQUARE), CONCRETE_CELL)
        assert load == pytest.approx(254.719762089033, rel=1e-10)

    def test_deterministic(self, oracle):
        """Testar saídas idênticas para entradas idênticas"""
        outline = oracle.outline(ShapeKind.U)
        assert oracle.simulate_load(outline, CONCRETE_CELL) == oracle.simulate_load(outline, CONCRETE_CELL)

    def test_no_driving_forces(self):
        """Testar carga nula sem graus-dia, ganhos internos e fração de resfriamento"""
        oracle = ThermalOracle(ClimateConfig(hdd=0.0, cdd=0.0, q_internal=0.0, f_cool_season=0.0))
        load = oracle.simulate_load(oracle.outline(ShapeKind.T), CONCRETE_CELL)
        assert load == 0.0
        with pytest.raises(ValidationError):
            Sample(ShapeKind.T, CONCRETE_CELL, load)

    @pytest.mark.parametrize("shape", [ShapeKind.T, ShapeKind.U, ShapeKind.L])
    def test_square_is_lowest(self, oracle, shape):
        """Testar que o quadrado tem a menor carga para o mesmo vetor"""
        for x in (CONCRETE_CELL, replace(CONCRETE_CELL, wwr=0.5, glazing_u=4.54, orientation=137.0)):
            square = oracle.simulate_load(oracle.outline(ShapeKind.SQUARE), x)
            assert square < oracle.simulate_load(oracle.outline(shape), x)

    def test_monotonicity(self, oracle):
        """Testar sentido da influência de cada característica"""
        outline = oracle.outline(ShapeKind.L)
        base = replace(CONCRETE_CELL, glazing_u=4.54, wwr=0.3, shading_depth=0.15)
        load = oracle.simulate_load(outline, base)

        assert oracle.simulate_load(outline, replace(base, wall_conductivity=1.5)) > load
        assert oracle.simulate_load(outline, replace(base, glazing_u=4.6)) > load
        assert oracle.simulate_load(outline, replace(base, wwr=0.4)) > load
        assert oracle.simulate_load(outline, replace(base, wall_thickness=0.3)) < load
        assert oracle.simulate_load(outline, replace(base, shading_depth=0.3)) <= load

    @pytest.mark.parametrize("shape", SHAPE_ORDER)
    def test_orientation_periodicity(self, oracle, shape):
        """Testar periodicidade de 360° da orientação"""
        outline = oracle.outline(shape)
        assert (OutlineGeometry.rotate_azimuths(outline, 37.25)
                == OutlineGeometry.rotate_azimuths(outline, 37.25 + 360.0))
        assert (OutlineGeometry.rotate_azimuths(outline, 0.0)
                == OutlineGeometry.rotate_azimuths(outline, 360.0))
        a = oracle.simulate_load(outline, replace(CONCRETE_CELL, orientation=37.25))
        b = oracle.simulate_load(outline, replace(CONCRETE_CELL, orientation=37.25))
        assert a == b

    def test_square_quarter_turn(self, oracle):
        """Testar simetria do quadrado em rotações de 90°"""
        outline = oracle.outline(ShapeKind.SQUARE)
        x = replace(CONCRETE_CELL, orientation=12.5, wwr=0.4)
        for extra in (90.0, 180.0, 270.0):
            rotated = replace(x, orientation=12.5 + extra)
            assert oracle.simulate_load(outline, rotated) == pytest.approx(oracle.simulate_load(outline, x), abs=1e-9)

    def test_hdd_scaling(self):
        """Testar que dobrar hdd dobra a carga sem sol, cdd e ganhos internos"""
        def load_for(hdd):
            config = ClimateConfig(hdd=hdd, cdd=0.0, q_internal=0.0, shgc=0.0)
            oracle = ThermalOracle(config)
            return oracle.simulate_load(oracle.outline(ShapeKind.U), CONCRETE_CELL)

        assert load_for(1300.0) == pytest.approx(2.0 * load_for(650.0), rel=1e-12)

    def test_rejects_non_vector(self, oracle):
        """Testar entrada que não é FeatureVector"""
        with pytest.raises(SimulationError):
            oracle.simulate_load(oracle.outline(ShapeKind.SQUARE), (0.0, 0.1))

class TestBatchAndExpected:
    """Testes para simulação em lote e carga esperada"""

    def test_expected_load_is_nominal(self, oracle):
        """Testar carga esperada = carga do vetor nominal"""
        sampler = FeatureSampler()
        cell = sampler.enumerate_grid(ShapeKind.SQUARE)[0]
        outline = oracle.outline(ShapeKind.SQUARE)
        assert oracle.expected_load(outline, cell, sampler) == oracle.simulate_load(outline, CONCRETE_CELL)

    def test_batch_preserves_order(self, oracle):
        """Testar ordem da saída e independência do número de threads"""
        rows = [(shape, replace(CONCRETE_CELL, wwr=0.1 + 0.05 * i)) for i, shape in enumerate(SHAPE_ORDER * 2)]
        serial = [oracle.simulate_load(oracle.outline(shape), x) for shape, x in rows]
        assert oracle.simulate_batch(rows, threads=1) == serial
        assert oracle.simulate_batch(rows, threads=4) == serial

    def test_default_dataset_magnitudes(self, default_dataset):
        """Testar que todas as cargas ficam em [150, 450] kWh/m²"""
        loads = default_dataset.loads()
        assert loads.min() >= 150.0
        assert loads.max() <= 450.0
