# outline_energy/geometry/outlines.py

"""
Contornos de planta canônicos (quadrado, T, U, L) com 100 m² de área

Convenções:
- vértices em metros, sentido anti-horário, arestas paralelas aos eixos
- azimute da normal externa em graus, 0° = norte, positivo no sentido horário
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Sequence, Tuple

import numpy as np

from ..config.logger import setup_logger
from ..exceptions import GeometryError

logger = setup_logger(__name__)

Point = Tuple[float, float]

MIN_EDGE_LENGTH = 3.6
FLOOR_AREA = 100.0
AREA_TOLERANCE = 1e-9

class ShapeKind(str, Enum):
    """Contorno de planta; o valor é o token usado em CSV e na CLI"""
    SQUARE = "square"
    T = "t"
    U = "u"
    L = "l"

    @classmethod
    def from_token(cls, token: str) -> "ShapeKind":
        """Converter token ("square" | "t" | "u" | "l") em ShapeKind"""
        try:
            return cls(str(token).strip().lower())
        except ValueError:
            allowed = ", ".join(kind.value for kind in cls)
            raise GeometryError(f"Forma desconhecida: {token!r}. Suportadas: {allowed}") from None

# Ordem das formas em todas as saídas
SHAPE_ORDER: Tuple[ShapeKind, ...] = (ShapeKind.SQUARE, ShapeKind.T, ShapeKind.U, ShapeKind.L)

CANONICAL_VERTICES: Dict[ShapeKind, Tuple[Point, ...]] = {
    ShapeKind.SQUARE: ((0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)),
    # pernas 14×4 e 4×11
    ShapeKind.L: ((0.0, 0.0), (14.0, 0.0), (14.0, 4.0), (4.0, 4.0), (4.0, 15.0), (0.0, 15.0)),
    # barra (0,11)–(14,15), haste (5,0)–(9,11)
    ShapeKind.T: ((5.0, 0.0), (9.0, 0.0), (9.0, 11.0), (14.0, 11.0), (14.0, 15.0),
                  (0.0, 15.0), (0.0, 11.0), (5.0, 11.0)),
    # base 12×4, braços 4×6.5
    ShapeKind.U: ((0.0, 0.0), (12.0, 0.0), (12.0, 10.5), (8.0, 10.5), (8.0, 4.0),
                  (4.0, 4.0), (4.0, 10.5), (0.0, 10.5)),
}

def wrap_degrees(value: float) -> float:
    """Ângulo reduzido a [0, 360)"""
    wrapped = value % 360.0
    if wrapped >= 360.0:
        wrapped = 0.0
    return wrapped + 0.0

@dataclass(frozen=True)
class Edge:
    """Aresta da planta: comprimento (m) e azimute da normal externa (graus)"""
    length: float
    azimuth: float

@dataclass(frozen=True)
class OutlineSpec:
    """Polígono retilíneo da planta com grandezas derivadas"""
    kind: ShapeKind
    vertices: Tuple[Point, ...]
    floor_area: float
    perimeter: float
    edges: Tuple[Edge, ...]

    @property
    def min_edge(self) -> float:
        return min(edge.length for edge in self.edges)

    @property
    def azimuths(self) -> Tuple[float, ...]:
        return tuple(edge.azimuth for edge in self.edges)

    def to_dict(self) -> dict:
        return {
            "shape": self.kind.value,
            "vertices": [list(v) for v in self.vertices],
            "floor_area_m2": self.floor_area,
            "perimeter_m": self.perimeter,
            "edges": [{"length_m": e.length, "azimuth_deg": e.azimuth} for e in self.edges],
        }

@dataclass(frozen=True)
class FacadeBreakdown:
    """Áreas envidraçadas e opacas por aresta para uma altura de parede e WWR"""
    wall_height: float
    glazed: Tuple[float, ...]
    opaque: Tuple[float, ...]
    total_opaque: float
    total_glazed: float

def _segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Interseção (inclusive toque e sobreposição colinear) de dois segmentos"""
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def on_segment(a, b, c):
        return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)

    if ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 \
            and ((d3 > 0) != (d4 > 0)) and d3 != 0 and d4 != 0:
        return True
    if d1 == 0 and on_segment(q1, q2, p1):
        return True
    if d2 == 0 and on_segment(q1, q2, p2):
        return True
    if d3 == 0 and on_segment(p1, p2, q1):
        return True
    if d4 == 0 and on_segment(p1, p2, q2):
        return True
    return False

def _normalize_ring(vertices: Sequence[Point]) -> Tuple[Point, ...]:
    """Remover o vértice de fechamento repetido, se houver"""
    ring = tuple((float(x), float(y)) for x, y in vertices)
    if len(ring) > 1 and ring[0] == ring[-1]:
        ring = ring[:-1]
    return ring

class OutlineGeometry:
    """Operações geométricas sobre os contornos de planta"""

    @staticmethod
    def polygon_area(vertices: Sequence[Point]) -> float:
        """
        Área de um polígono simples pela fórmula do cadarço (shoelace)

        Args:
            vertices: Vértices em sentido anti-horário (o fechamento é opcional)

        Returns:
            Área positiva em m²
        """
        ring = _normalize_ring(vertices)
        if len(set(ring)) < 3:
            raise GeometryError(f"Polígono degenerado: {len(set(ring))} vértices distintos (mínimo 3)")

        n = len(ring)
        for i in range(n):
            a1, a2 = ring[i], ring[(i + 1) % n]
            for j in range(i + 1, n):
                # arestas adjacentes compartilham um vértice
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                b1, b2 = ring[j], ring[(j + 1) % n]
                if _segments_intersect(a1, a2, b1, b2):
                    raise GeometryError(f"Polígono com auto-interseção entre as arestas {i} e {j}")

        xy = np.asarray(ring, dtype=float)
        x, y = xy[:, 0], xy[:, 1]
        signed = 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

        if signed <= 0.0:
            raise GeometryError("Polígono em sentido horário ou de área nula; use sentido anti-horário")
        return signed

    @staticmethod
    def build_outline(kind: ShapeKind, vertices: Sequence[Point]) -> OutlineSpec:
        """
        Construir um OutlineSpec validando todas as invariantes

        Args:
            kind: Forma da planta
            vertices: Vértices anti-horários com arestas paralelas aos eixos

        Returns:
            OutlineSpec com perímetro, área e arestas
        """
        ring = _normalize_ring(vertices)
        area = OutlineGeometry.polygon_area(ring)

        edges = []
        n = len(ring)
        for i in range(n):
            (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
            dx, dy = x2 - x1, y2 - y1
            if dx != 0.0 and dy != 0.0:
                raise GeometryError(f"Aresta {i} não é paralela a um eixo: {ring[i]} -> {ring[(i + 1) % n]}")
            length = abs(dx) + abs(dy)
            if length < MIN_EDGE_LENGTH:
                raise GeometryError(f"Aresta {i} com {length} m (< {MIN_EDGE_LENGTH} m)")
            # normal externa de um anel anti-horário: (dy, -dx)
            azimuth = wrap_degrees(math.degrees(math.atan2(dy, -dx)))
            edges.append(Edge(length=length, azimuth=azimuth))

        perimeter = math.fsum(edge.length for edge in edges)
        return OutlineSpec(kind=kind, vertices=ring, floor_area=area, perimeter=perimeter, edges=tuple(edges))

    @classmethod
    def canonical_outline(cls, kind: ShapeKind) -> OutlineSpec:
        """
        Contorno canônico da forma (100 m², arestas ≥ 3.6 m)

        Args:
            kind: Forma da planta

        Returns:
            OutlineSpec canônico
        """
        kind = ShapeKind(kind)
        outline = cls.build_outline(kind, CANONICAL_VERTICES[kind])
        if abs(outline.floor_area - FLOOR_AREA) > AREA_TOLERANCE:
            raise GeometryError(f"Área de {kind.value} = {outline.floor_area} m² (esperado {FLOOR_AREA})")
        return outline

    @staticmethod
    def facade_breakdown(outline: OutlineSpec, wall_height: float, wwr: float) -> FacadeBreakdown:
        """
        Distribuir áreas envidraçadas e opacas por aresta

        Args:
            outline: Contorno da planta
            wall_height: Altura da parede (m), > 0
            wwr: Razão janela/parede em [0, 1)

        Returns:
            FacadeBreakdown
        """
        if not (math.isfinite(wwr) and 0.0 <= wwr < 1.0):
            raise GeometryError(f"WWR fora de [0, 1): {wwr}")
        if not (math.isfinite(wall_height) and wall_height > 0.0):
            raise GeometryError(f"Altura de parede deve ser positiva: {wall_height}")

        gross = [edge.length * wall_height for edge in outline.edges]
        glazed = tuple(wwr * area for area in gross)
        opaque = tuple(area - g for area, g in zip(gross, glazed))

        return FacadeBreakdown(
            wall_height=wall_height,
            glazed=glazed,
            opaque=opaque,
            total_opaque=math.fsum(opaque),
            total_glazed=math.fsum(glazed),
        )

    @staticmethod
    def rotate_azimuths(outline: OutlineSpec, orientation: float) -> Tuple[float, ...]:
        """
        Azimutes das arestas girados pela orientação do edifício

        Args:
            outline: Contorno da planta
            orientation: Rotação em graus (qualquer valor finito)

        Returns:
            Tupla de azimutes em [0, 360)
        """
        if not math.isfinite(orientation):
            raise GeometryError(f"Orientação não finita: {orientation}")
        return tuple(wrap_degrees(edge.azimuth + orientation) for edge in outline.edges)
