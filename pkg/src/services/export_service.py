"""
Serialização dos artefatos: JSON (apresentações, quocientes, complexos, famílias,
relatórios, certificados), DOT do 1-esqueleto e CSV de tabelas.
"""
import csv
import dataclasses
import json
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, TextIO

import networkx as nx

from src.models.complex import OneCell, PermutationQuotient, TwoCell, TwoComplex
from src.models.coxeter import INFINITY, CoxeterPresentation
from src.models.curvature import CurvatureReport
from src.models.morse import Certificate, SearchResult
from src.models.partition import FamilyResult, Partition, PartitionFamily, ProductQuotient
from src.models.wall import PathologyReport, WallSet

logger = logging.getLogger(__name__)

# Cores por id de parede no DOT (cíclicas).
WALL_COLORS = (
    "red", "blue", "darkgreen", "orange", "purple", "brown",
    "magenta", "cyan4", "gold3", "gray40",
)


def _plain(value: Any) -> Any:
    """Converte dataclasses, Fractions e chaves não textuais em tipos JSON."""
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: _plain(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


class ExportService:
    """
    Conversão entre modelos de domínio e os formatos de arquivo.
    """

    def plain(self, payload: Any) -> Any:
        return _plain(payload)

    def dumps(self, payload: Any) -> str:
        return json.dumps(_plain(payload), sort_keys=True, indent=2, ensure_ascii=False)

    def load_json(self, path: str) -> Any:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)

    def presentation_to_dict(self, p: CoxeterPresentation) -> Dict[str, Any]:
        exponents = []
        for i in p.generators:
            for j in range(i + 1, p.rank + 1):
                m = p.exponent(i, j)
                exponents.append({"i": i, "j": j, "m": m if m is not None else INFINITY})
        return {"rank": p.rank, "exponents": exponents}

    def presentation_from_dict(self, data: Dict[str, Any]) -> CoxeterPresentation:
        """
        Lê {"rank": r, "exponents": [{"i", "j", "m"}]}; m = "inf" ou par omitido significa ∞.
        """
        try:
            rank = data["rank"]
            exponents = {}
            for item in data.get("exponents", []):
                if item["m"] == INFINITY:
                    continue
                exponents[(item["i"], item["j"])] = item["m"]
        except (KeyError, TypeError) as e:
            raise ValueError(f"Apresentação malformada: {e}") from e
        if not isinstance(rank, int):
            raise ValueError(f"Posto deve ser inteiro: {rank!r}")
        return CoxeterPresentation(rank=rank, exponents=exponents)

    def quotient_to_dict(self, q: PermutationQuotient) -> Dict[str, Any]:
        return {"degree": q.degree, "generators": q.images_one_based()}

    def quotient_from_dict(self, data: Dict[str, Any]) -> PermutationQuotient:
        try:
            return PermutationQuotient.from_images(data["degree"], data["generators"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Quociente malformado: {e}") from e

    def complex_to_dict(self, k: TwoComplex) -> Dict[str, Any]:
        return {
            "zero_cells": k.zero_cells,
            "one_cells": [
                {"id": e.id, "tail": e.tail, "head": e.head, "label": e.label} for e in k.one_cells
            ],
            "two_cells": [
                {"id": c.id, "boundary": [list(step) for step in c.boundary],
                 "tag": list(c.tag) if c.tag else None}
                for c in k.two_cells
            ],
        }

    def complex_from_dict(self, data: Dict[str, Any]) -> TwoComplex:
        try:
            return TwoComplex(
                zero_cells=data["zero_cells"],
                one_cells=tuple(
                    OneCell(id=e["id"], tail=e["tail"], head=e["head"], label=e.get("label"))
                    for e in data["one_cells"]
                ),
                two_cells=tuple(
                    TwoCell(
                        id=c["id"],
                        boundary=tuple((step[0], step[1]) for step in c["boundary"]),
                        tag=tuple(c["tag"]) if c.get("tag") else None,
                    )
                    for c in data.get("two_cells", [])
                ),
            )
        except (KeyError, TypeError, IndexError) as e:
            raise ValueError(f"Complexo malformado: {e}") from e

    def family_to_dict(self, f: PartitionFamily) -> Dict[str, Any]:
        return {"r": f.r, "partitions": [list(p.values) for p in f.partitions]}

    def family_from_dict(self, data: Dict[str, Any]) -> PartitionFamily:
        try:
            return PartitionFamily(data["r"], tuple(Partition(tuple(values)) for values in data["partitions"]))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Família malformada: {e}") from e

    def family_result_to_dict(self, result: FamilyResult) -> Dict[str, Any]:
        return {
            "found": result.found,
            "attempts": result.attempts,
            "best_unseparated": result.best_unseparated,
            "family": self.family_to_dict(result.family) if result.family else None,
            "best_family": self.family_to_dict(result.best_family) if result.best_family else None,
        }

    def product_to_dict(self, product: ProductQuotient) -> Dict[str, Any]:
        return {
            "quotient": self.quotient_to_dict(product.quotient),
            "family": self.family_to_dict(product.family),
            "group_order": str(product.group_order),
            "torsion_free": product.torsion_free,
            "coordinates": product.coordinates,
            "bound": {
                "q_size": product.bound.q_size,
                "k": product.bound.k,
                "q_power": str(product.bound.q_power),
                "polynomial_log": product.bound.polynomial_log,
                "within_q_power": product.bound.within_q_power,
                "within_polynomial": product.bound.within_polynomial,
            },
        }

    def walls_to_dict(self, ws: WallSet) -> List[Dict[str, Any]]:
        return [
            {
                "id": wall.id,
                "dual_one_cells": list(wall.dual_one_cells),
                "arcs": [[arc.two_cell, arc.position_a, arc.position_b] for arc in wall.arcs],
            }
            for wall in ws.walls
        ]

    def report_to_dict(self, report: PathologyReport) -> Dict[str, Any]:
        """Relatório de patologias: veredictos por parede em ordem de id."""
        per_wall = []
        for item in sorted(report.per_wall, key=lambda entry: entry.wall_id):
            per_wall.append({
                "wall": item.wall_id,
                "good": item.good,
                "embedded": item.embedding.embedded,
                "embedding_witness": list(item.embedding.witness) if item.embedding.witness else None,
                "two_sided": item.sidedness.two_sided,
                "contradiction": [[a.two_cell, a.position_a, a.position_b] for a in item.sidedness.contradiction],
                "osculations": [
                    {"x": o.x, "link_vertices": [list(v) for v in o.link_vertices],
                     "link_edges": [list(e) for e in o.link_edges]}
                    for o in item.osculations
                ],
            })
        return {
            "wall_count": len(report.walls),
            "good_walls": report.good_walls,
            "failing_walls": report.failing_walls(),
            "walls": self.walls_to_dict(report.walls),
            "per_wall": per_wall,
        }

    def search_to_dict(self, search: SearchResult) -> Dict[str, Any]:
        return {
            "found": search.found,
            "refused": search.refused,
            "reason": search.reason,
            "orientation": search.orientation.signs if search.orientation else None,
            "best_orientation": search.best_orientation.signs if search.best_orientation else None,
            "best_failing_vertices": search.best_failing_vertices,
            "statistics": search.statistics,
        }

    def certificate_to_dict(self, certificate: Certificate) -> Dict[str, Any]:
        return _plain(certificate)

    def curvature_to_dict(self, report: CurvatureReport) -> Dict[str, Any]:
        data = _plain(report)
        data["section_curvatures"] = [{"x": x, "kappa": str(value)} for x, value in report.section_curvatures]
        return data

    def to_dot(self, k: TwoComplex, ws: Optional[WallSet] = None) -> str:
        """
        1-esqueleto em DOT, ordenado por id; com paredes, cada aresta recebe a cor da sua parede.
        """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(k.zero_cells))
        for edge in sorted(k.one_cells, key=lambda e: e.id):
            attrs = {"label": f"e{edge.id}/a{edge.label}" if edge.label is not None else f"e{edge.id}"}
            if ws is not None:
                wall = ws.wall_of(edge.id)
                attrs["color"] = WALL_COLORS[wall % len(WALL_COLORS)]
                attrs["wall"] = str(wall)
            graph.add_edge(edge.tail, edge.head, key=edge.id, **attrs)
        return nx.nx_pydot.to_pydot(graph).to_string()

    def write_csv(self, rows: Iterable[Dict[str, Any]], stream: TextIO) -> None:
        rows = list(rows)
        if not rows:
            return
        writer = csv.DictWriter(stream, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
