import json

import pytest

from ebitforge import fixtures
from ebitforge.cli import main
from ebitforge.codefile import SCHEMA, EacwsCode, load_code, save_code
from ebitforge.graphs import ring_graph, write_graph


@pytest.fixture
def ring5_file(tmp_path):
    path = tmp_path / "ring5.graph"
    write_graph(ring_graph(5), path)
    return str(path)


class TestCodeFile:
    @pytest.mark.parametrize("name", ["ring5", "ring7"])
    def test_roundtrip(self, tmp_path, name):
        code = fixtures.fixture(name)
        save_code(code, tmp_path / "c.json")
        assert load_code(tmp_path / "c.json") == code

    def test_schema_checked(self):
        data = fixtures.fixture("ring5").to_json()
        data["schema"] = "other/9"
        with pytest.raises(ValueError, match="schema"):
            EacwsCode.from_json(data)

    def test_k_mismatch(self):
        data = fixtures.fixture("ring5").to_json()
        data["codewords"] = data["codewords"][:-1]
        with pytest.raises(ValueError):
            EacwsCode.from_json(data)

    def test_bob_support_rejected(self):
        data = fixtures.fixture("ring5").to_json()
        data["word_ops_encoded"][1] = "IIIZZ|X"
        with pytest.raises(ValueError, match="Bob"):
            EacwsCode.from_json(data)

    def test_schema_tag(self):
        assert fixtures.fixture("ring7").to_json()["schema"] == SCHEMA


class TestCli:
    def test_gens_table(self, ring5_file, capsys):
        assert main(["gens", "--graph", ring5_file, "--ebits", "1"]) == 0
        out = capsys.readouterr().out
        for row in fixtures.RING5["generators"]:
            assert row in out

    def test_gens_json_ring3(self, capsys):
        assert main(["gens", "--ring", "3", "--ebits", "2", "--format", "json"]) == 0
        assert len(json.loads(capsys.readouterr().out)["generators"]) == 5

    def test_gens_no_ebits(self, capsys):
        assert main(["gens", "--ring", "5", "--format", "json"]) == 0
        gens = json.loads(capsys.readouterr().out)["generators"]
        assert gens[0] == "XZIIZ|"

    def test_induce_counts(self, capsys):
        assert main(["induce", "--ring", "5", "--ebits", "1", "--weight", "1"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 15
        assert main(["induce", "--ring", "7", "--ebits", "4", "--weight", "2", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["count"] == 210

    def test_usage_errors(self, ring5_file, capsys):
        assert main(["induce", "--ring", "5", "--weight", "0"]) == 2
        assert main(["gens"]) == 2
        assert main(["gens", "--ring", "5", "--graph", ring5_file]) == 2
        assert main(["gens", "--ring", "5", "--ebits", "9"]) == 2
        assert main(["gens", "--graph", "/nonexistent/g"]) == 2
        assert main(["frobnicate"]) == 2
        assert main(["verify", "/nonexistent.json"]) == 2

    def test_search_writes_verified_code(self, tmp_path, capsys):
        out = tmp_path / "code.json"
        assert main(["search", "--ring", "5", "--ebits", "1", "--weight", "1",
                     "--target-k", "16", "--out", str(out)]) == 0
        code = load_code(out)
        assert code.params.K >= 16 and code.params.d == 2
        assert main(["verify", str(out)]) == 0

    def test_search_json(self, capsys):
        assert main(["search", "--ring", "5", "--ebits", "1", "--weight", "1", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["verified"] and data["clique_size"] == 16 and data["optimality"] == "exact"

    def test_search_span(self, capsys):
        span = ["00011|0", "00101|1", "01001|1", "10001|0"]
        args = ["search", "--ring", "5", "--ebits", "1", "--weight", "1", "--format", "json"]
        for v in span:
            args += ["--span", v]
        assert main(args) == 0
        assert json.loads(capsys.readouterr().out)["clique_size"] == 16
        assert main(["search", "--ring", "5", "--ebits", "1", "--weight", "1", "--span", "0001|0"]) == 2

    def test_verify_fixtures(self, tmp_path, capsys):
        p5, p7 = tmp_path / "r5.json", tmp_path / "r7.json"
        save_code(fixtures.fixture("ring5"), p5)
        save_code(fixtures.fixture("ring7"), p7)
        assert main(["verify", str(p5), "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["distance"] == 2
        # the published 7-qubit table does not reach its claimed distance
        assert main(["verify", str(p7), "--format", "json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["distance"] == 3 and data["witness"] == "ZXZIIII|IIII"

    def test_verify_corrupted(self, tmp_path, capsys):
        data = fixtures.fixture("ring5").to_json()
        data["codewords"][1] = "10011|0"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        assert main(["verify", str(path)]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out and "witness" in out

    def test_out_file(self, tmp_path):
        path = tmp_path / "gens.txt"
        assert main(["gens", "--ring", "5", "--ebits", "1", "--out", str(path)]) == 0
        assert "IIIIZ|X" in path.read_text()


@pytest.mark.parametrize("name", ["ring5", "ring7"])
def test_shipped_files_match_fixtures(name):
    from importlib.resources import files

    from ebitforge.graphs import read_graph

    data = files("ebitforge") / "data"
    assert load_code(data / f"{name}.json") == fixtures.fixture(name)
    assert read_graph(data / f"{name}.graph") == ring_graph(int(name[-1]))
