# outline_energy/dataset.py

"""
Conjunto de dados (forma, características, carga) sobre um DataFrame do pandas
"""

from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, List, Optional, Sequence

import numpy as np
import pandas as pd

from .exceptions import ValidationError
from .generators.feature_sampler import FEATURE_NAMES, FeatureVector
from .geometry.outlines import SHAPE_ORDER, ShapeKind
from .simulators.thermal_oracle import Sample

# Colunas do CSV, na ordem do arquivo
SHAPE_COLUMN = "shape"
LOAD_COLUMN = "thermal_load_kwh_m2"
FEATURE_COLUMNS = (
    "orientation_deg",
    "wwr",
    "shading_depth_m",
    "glazing_u_w_m2k",
    "wall_thickness_m",
    "wall_conductivity_w_mk",
    "wall_density_kg_m3",
    "wall_shc_j_kgk",
)
CSV_COLUMNS = (SHAPE_COLUMN,) + FEATURE_COLUMNS + (LOAD_COLUMN,)
COLUMN_TO_FEATURE = dict(zip(FEATURE_COLUMNS, FEATURE_NAMES))

# Coluna apenas em memória: índice da célula da grade de cada linha
CELL_COLUMN = "cell_index"

@dataclass(frozen=True)
class Provenance:
    """Origem do conjunto de dados"""
    seed: Optional[int] = None
    priors_digest: str = ""
    config_digest: str = ""
    mode: str = "factorial"

    def to_dict(self) -> dict:
        return asdict(self)

class Dataset:
    """Linhas de amostras com proveniência"""

    def __init__(self, frame: pd.DataFrame, provenance: Optional[Provenance] = None):
        missing = [column for column in CSV_COLUMNS if column not in frame.columns]
        if missing:
            raise ValidationError(f"Colunas ausentes no conjunto de dados: {missing}")
        if len(frame) == 0:
            raise ValidationError("Conjunto de dados vazio")
        self.frame = frame.reset_index(drop=True)
        self.provenance = provenance or Provenance()

    @classmethod
    def from_samples(cls, samples: Iterable[Sample], provenance: Optional[Provenance] = None,
                     cell_indices: Optional[Sequence[int]] = None) -> "Dataset":
        """
        Construir a partir de objetos Sample

        Args:
            samples: Amostras na ordem desejada
            provenance: Proveniência
            cell_indices: Índice da célula da grade de cada amostra (opcional)

        Returns:
            Dataset
        """
        records = [
            (sample.shape.value, *sample.features.as_tuple(), sample.load)
            for sample in samples
        ]
        frame = pd.DataFrame.from_records(records, columns=list(CSV_COLUMNS))
        if cell_indices is not None:
            frame[CELL_COLUMN] = np.asarray(cell_indices, dtype=np.int64)
        return cls(frame, provenance)

    def __len__(self) -> int:
        return len(self.frame)

    def __iter__(self) -> Iterator[Sample]:
        return self.samples()

    def samples(self) -> Iterator[Sample]:
        """Iterar as linhas como Sample"""
        for row in self.frame.itertuples(index=False):
            values = row._asdict()
            features = FeatureVector(**{COLUMN_TO_FEATURE[c]: float(values[c]) for c in FEATURE_COLUMNS})
            yield Sample(ShapeKind.from_token(values[SHAPE_COLUMN]), features, float(values[LOAD_COLUMN]))

    def feature_matrix(self) -> np.ndarray:
        """Matriz n×8 das características (ordem de FEATURE_NAMES)"""
        return self.frame[list(FEATURE_COLUMNS)].to_numpy(dtype=np.float64)

    def loads(self) -> np.ndarray:
        return self.frame[LOAD_COLUMN].to_numpy(dtype=np.float64)

    def shapes(self) -> List[ShapeKind]:
        """Formas presentes, na ordem canônica"""
        present = set(self.frame[SHAPE_COLUMN])
        return [shape for shape in SHAPE_ORDER if shape.value in present]

    def subset(self, shapes: Sequence[ShapeKind]) -> "Dataset":
        """Linhas das formas indicadas (ordem original preservada)"""
        tokens = {ShapeKind(shape).value for shape in shapes}
        mask = self.frame[SHAPE_COLUMN].isin(tokens)
        return Dataset(self.frame[mask].copy(), self.provenance)

    def take(self, positions: Sequence[int]) -> "Dataset":
        """Linhas nas posições indicadas, na ordem dada"""
        return Dataset(self.frame.iloc[list(positions)].copy(), self.provenance)

    def counts_by_shape(self) -> dict:
        counts = self.frame[SHAPE_COLUMN].value_counts()
        return {shape.value: int(counts.get(shape.value, 0)) for shape in SHAPE_ORDER}

    def cell_indices(self, cells_per_shape: int) -> Optional[np.ndarray]:
        """
        Índice da célula da grade de cada linha

        Usa a coluna em memória quando existe; caso contrário deduz pela ordem das
        linhas de um conjunto fatorial (blocos contíguos de cells_per_shape linhas
        por forma, na ordem de SHAPE_ORDER). Retorna None se o conjunto não é fatorial.
        """
        if CELL_COLUMN in self.frame.columns:
            return self.frame[CELL_COLUMN].to_numpy(dtype=np.int64)

        tokens = self.frame[SHAPE_COLUMN].tolist()
        shapes = self.shapes()
        expected = [shape.value for shape in shapes for _ in range(cells_per_shape)]
        if tokens != expected:
            return None
        return np.tile(np.arange(cells_per_shape, dtype=np.int64), len(shapes))
