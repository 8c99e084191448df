import io
import json

import pytest

from src.models.coxeter import CoxeterPresentation
from src.models.partition import Partition, PartitionFamily
from src.services.quotient_catalog import QuotientCatalog


def test_presentation_json_keeps_infinite_pairs(export_svc):
    p = CoxeterPresentation(rank=3, exponents={(1, 2): 3, (2, 3): 5})
    data = json.loads(export_svc.dumps(export_svc.presentation_to_dict(p)))
    assert {"i": 1, "j": 3, "m": "inf"} in data["exponents"]
    assert export_svc.presentation_from_dict(data) == p


def test_malformed_inputs_raise_value_error(export_svc):
    with pytest.raises(ValueError):
        export_svc.presentation_from_dict({"exponents": []})
    with pytest.raises(ValueError):
        export_svc.presentation_from_dict({"rank": "3"})
    with pytest.raises(ValueError):
        export_svc.quotient_from_dict({"degree": 3, "generators": [[1, 1, 2]]})
    with pytest.raises(ValueError):
        export_svc.complex_from_dict({"zero_cells": 1})


def test_quotient_json_is_one_based(export_svc, complex_svc):
    data = export_svc.quotient_to_dict(complex_svc.star_quotient(2))
    assert data == {"degree": 3, "generators": [[2, 1, 3], [3, 2, 1]]}
    assert export_svc.quotient_from_dict(data).images_one_based() == data["generators"]


def test_complex_json_parses_back(export_svc, osculating_hexagons):
    text = export_svc.dumps(export_svc.complex_to_dict(osculating_hexagons))
    assert export_svc.complex_from_dict(json.loads(text)) == osculating_hexagons


def test_family_json_parses_back(export_svc):
    family = PartitionFamily(5, (Partition((1, 2, 3, 4, 1)), Partition((4, 3, 2, 1, 2))))
    assert export_svc.family_from_dict(json.loads(export_svc.dumps(export_svc.family_to_dict(family)))) == family


def test_dumps_converts_fractions_and_int_keys(export_svc, coxeter_svc):
    text = export_svc.dumps({"chi": coxeter_svc.euler_characteristic(coxeter_svc.uniform(5, 3)), "by_x": {0: True}})
    assert json.loads(text) == {"chi": "1/6", "by_x": {"0": True}}


def test_pathology_report_json(export_svc, wall_svc, efef_square):
    data = json.loads(export_svc.dumps(export_svc.report_to_dict(wall_svc.pathology_report(efef_square))))
    assert data["good_walls"] is False
    first = data["per_wall"][0]
    assert first["embedding_witness"] == ["one_cell", 0]
    assert first["two_sided"] is False


def test_dot_colours_edges_by_wall(export_svc, wall_svc, hexagon):
    ws = wall_svc.extract_walls(hexagon)
    dot = export_svc.to_dot(hexagon, ws)
    assert "digraph" in dot
    for color in ("red", "blue", "darkgreen"):
        assert color in dot
    assert "orange" not in dot


def test_dot_without_walls_has_no_colours(export_svc, hexagon):
    dot = export_svc.to_dot(hexagon)
    assert "color" not in dot
    assert "e5" in dot


def test_write_csv(export_svc):
    stream = io.StringIO()
    export_svc.write_csv([{"r": 2, "m": 3}, {"r": 3, "m": 3}], stream)
    assert stream.getvalue() == "r,m\n2,3\n3,3\n"

    empty = io.StringIO()
    export_svc.write_csv([], empty)
    assert empty.getvalue() == ""


def test_catalog_loads_builtin_quotients(export_svc, complex_svc):
    catalog = QuotientCatalog(export_svc)
    assert catalog.names() == ["dihedral6", "star3", "star4", "star5"]
    for r in (3, 4, 5):
        p, q = catalog.get(f"star{r}")
        assert p.uniform_exponent() == 3
        assert q.images_one_based() == complex_svc.star_quotient(r).images_one_based()
        assert complex_svc.check_torsion_free_kernel(p, q).torsion_free


def test_catalog_unknown_name_and_missing_file(export_svc, tmp_path):
    catalog = QuotientCatalog(export_svc)
    with pytest.raises(ValueError):
        catalog.get("octaedro")
    empty = QuotientCatalog(export_svc, config_path=str(tmp_path / "nada.json"))
    assert empty.names() == []
