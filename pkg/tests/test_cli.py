import asyncio
import io
import json
from decimal import Decimal
from math import comb

import pytest

from src.cli.app import archive_result, build_config, build_parser, main
from src.cli.config.settings import Settings


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("MONGODB_URI", "COXETER_SIZE_CAP", "COXETER_TRIALS", "COXETER_MAX_ATTEMPTS"):
        monkeypatch.delenv(name, raising=False)


def run(*argv):
    stdout = io.StringIO()
    code = main(list(argv), stdout=stdout)
    return code, stdout.getvalue()


def test_chi_prints_exact_fraction():
    assert run("chi", "--uniform", "5", "3") == (0, "1/6\n")
    assert run("chi", "--catalog", "star4") == (0, "0\n")


def test_dimension_reports_finite_triple():
    code, out = run("dimension", "--uniform", "3", "2")
    assert code == 0
    data = json.loads(out)
    assert data["dimension_at_most_2"] is False
    assert data["witness"] == [1, 2, 3]


def test_certify_dihedral_cover_is_partial():
    code, out = run("certify", "--catalog", "dihedral6", "--seed", "1", "--max-attempts", "30")
    assert code == 1
    assert json.loads(out)["status"] == "partial"


def test_random_subcommands_require_seed():
    assert run("orient", "--catalog", "dihedral6")[0] == 2
    assert run("probe", "--r", "3", "--m", "3")[0] == 2


def test_conflicting_presentation_sources():
    assert run("chi", "--uniform", "3", "3", "--catalog", "star3")[0] == 2


def test_missing_file_is_an_input_error(tmp_path):
    assert run("chi", "--presentation", str(tmp_path / "ausente.json"))[0] == 2


def test_malformed_json_is_an_input_error(tmp_path):
    path = tmp_path / "quebrado.json"
    path.write_text("{ não é json", encoding="utf-8")
    assert run("chi", "--presentation", str(path))[0] == 2


def test_unknown_subcommand_exits_through_argparse():
    with pytest.raises(SystemExit) as info:
        run("transmogrify")
    assert info.value.code == 2


def test_bad_quotient_is_a_hypothesis_failure(tmp_path):
    path = tmp_path / "trivial.json"
    path.write_text(json.dumps({"degree": 1, "generators": [[1], [1], [1]]}), encoding="utf-8")
    assert run("compress", "--uniform", "3", "3", "--quotient", str(path))[0] == 1


def test_probe_is_deterministic():
    argv = ("probe", "--r", "2", "3", "--m", "3", "--seed", "4", "--trials", "300")
    first = run(*argv)
    assert first == run(*argv)
    lines = first[1].splitlines()
    assert lines[0].startswith("r,m,trials")
    assert len(lines) == 3


def test_ramsey_prints_integer():
    assert run("ramsey", "3", "3") == (0, "6\n")
    assert run("ramsey", "3", "3", "3") == (0, "17\n")


def test_threshold_json():
    code, out = run("threshold", "--m", "3", "--qsize", "2")
    data = json.loads(out)
    assert code == 0
    assert 1500 <= data["threshold_rank"] <= 2000
    assert data["margin_at_rank"][0] != "-"


def test_threshold_up_to_reports_ramsey_bound():
    code, out = run("threshold", "--up-to", "4", "--qsize", "2")
    data = json.loads(out)
    assert code == 0
    r3, r4 = data["ranks"]["3"], data["ranks"]["4"]
    assert Decimal(data["bound"]) == comb(r3 + r4 - 2, r3 - 1)


def test_walls_writes_dot_and_output(tmp_path, export_svc, hexagon):
    complex_path = tmp_path / "hexagono.json"
    complex_path.write_text(export_svc.dumps(export_svc.complex_to_dict(hexagon)), encoding="utf-8")
    output = tmp_path / "paredes.json"
    dot = tmp_path / "paredes.dot"
    code, out = run("walls", "--complex", str(complex_path), "--output", str(output), "--dot", str(dot))
    assert code == 0
    assert out == ""
    assert json.loads(output.read_text(encoding="utf-8"))["good_walls"] is True
    assert "digraph" in dot.read_text(encoding="utf-8")


def test_partitions_random_and_verify(tmp_path):
    code, out = run("partitions", "--r", "5", "--k", "17", "--seed", "2024", "--max-attempts", "50")
    assert code == 0
    data = json.loads(out)
    assert data["found"] is True
    path = tmp_path / "familia.json"
    path.write_text(json.dumps(data["family"]), encoding="utf-8")
    code, out = run("partitions", "--verify", str(path))
    assert code == 0
    assert json.loads(out)["unseparated"] == []


def test_partitions_greedy_product():
    code, out = run("partitions", "--r", "5", "--method", "greedy", "--product", "--star")
    assert code == 0
    data = json.loads(out)
    assert data["product"]["torsion_free"] is True
    assert data["product"]["bound"]["q_size"] == 120


def test_archive_without_uri_is_skipped():
    code, out = run("chi", "--uniform", "4", "3", "--archive")
    assert code == 0
    assert out == "0\n"


def test_bad_environment_value(monkeypatch):
    monkeypatch.setenv("COXETER_SIZE_CAP", "muito")
    assert run("chi", "--uniform", "3", "3")[0] == 2


def test_build_config_separates_subcommand_options():
    parser = build_parser(Settings())
    config = build_config(parser.parse_args(["threshold", "--m", "4", "--qsize", "120", "--seed", "9"]))
    assert config.seed == 9
    assert config.options == {"m": 4, "up_to": None, "qsize": 120}


class FakeArchive:
    def __init__(self):
        self.saved = []
        self.closed = False

    async def connect(self, uri, db_name):
        self.uri = uri
        self.db_name = db_name

    async def save_report(self, command, payload, seed=None):
        self.saved.append((command, payload, seed))
        return "abc123"

    async def close(self):
        self.closed = True


def test_archive_result_saves_and_closes():
    settings = Settings(mongodb_uri="mongodb://localhost:27017")
    config = build_config(build_parser(settings).parse_args(["ramsey", "3", "3", "--seed", "5"]))
    archive = FakeArchive()
    inserted = asyncio.run(archive_result(settings, config, {"bound": 6}, archive))
    assert inserted == "abc123"
    assert archive.saved == [("ramsey", {"bound": 6}, 5)]
    assert archive.db_name == "coxeter_runs"
    assert archive.closed


def test_cover_and_compress_counts():
    code, out = run("cover", "--catalog", "star3")
    assert code == 0
    assert json.loads(out)["cell_counts"] == [24, 72, 144]
    code, out = run("compress", "--uniform", "3", "3", "--star")
    data = json.loads(out)
    assert data["cell_counts"] == [24, 36, 12]
    assert data["chi_matches"] is True


def test_curvature_with_brute_force():
    code, out = run("curvature", "--catalog", "star4", "--brute-force", "0")
    data = json.loads(out)
    assert code == 0
    assert data["brute_force"]["max_curvature"] == "0"
    assert data["sectional"]["nonpositive"] is True
    assert set(data["vertex_curvatures"].values()) == {"0"}
