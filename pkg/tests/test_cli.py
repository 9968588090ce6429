import json

import pytest

from toricheck.cli import main
from toricheck.graphio import dumps_graph, parse_graph
from toricheck.oracle import GeneratorConfig, random_labelled_graph

GOLDEN = """\
{
  "num_params": 2,
  "vertices": [{"id": "v", "genus": 0}],
  "edges": [{"id": "e", "ends": ["v", "v"], "label": [1, 1]}]
}
"""

TREE = """\
{
  "num_params": 1,
  "vertices": [{"id": "a"}, {"id": "b"}],
  "edges": [{"id": "e", "ends": ["a", "b"], "label": [1]}]
}
"""

THICK_LOOP = """\
{
  "num_params": 2,
  "vertices": [{"id": "v"}],
  "edges": [{"id": "e", "ends": ["v", "v"], "label": [2, 0]}]
}
"""


@pytest.fixture
def golden_file(tmp_path):
    p = tmp_path / "golden.json"
    p.write_text(GOLDEN)
    return str(p)


@pytest.fixture
def tree_file(tmp_path):
    p = tmp_path / "tree.json"
    p.write_text(TREE)
    return str(p)


class TestCheck:
    def test_golden_all(self, golden_file, capsys):
        code = main(["check", golden_file, "--criterion", "all",
                     "--format", "json"])
        assert code == 1
        out = json.loads(capsys.readouterr().out)
        assert {k: v["holds"] for k, v in out.items()} == {
            "toric_additive": False, "aligned": True,
            "disciplined": False, "regular": False}

    def test_tree_ta_holds(self, tree_file):
        assert main(["check", tree_file, "--criterion", "ta"]) == 0

    def test_malformed_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{nope")
        assert main(["check", str(p)]) == 2

    def test_invalid_graph(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"num_params": 1, "vertices": [{"id": "a"}, '
                     '{"id": "b"}], "edges": []}')
        assert main(["check", str(p)]) == 2

    def test_text_output(self, golden_file, capsys):
        main(["check", golden_file])
        out = capsys.readouterr().out
        assert "aligned: holds" in out
        assert "toric_additive: fails" in out


class TestContract:
    def test_golden(self, golden_file, capsys):
        assert main(["contract", golden_file, "--params", "1"]) == 0
        g = parse_graph(capsys.readouterr().out)
        assert g.num_params == 1
        assert g.edges[0].label == (1,)

    def test_out_of_range(self, golden_file):
        assert main(["contract", golden_file, "--params", "5"]) == 2

    def test_full_set_idempotent(self, golden_file, capsys):
        assert main(["contract", golden_file, "--params", "1,2"]) == 0
        once = capsys.readouterr().out
        p = golden_file + ".c"
        with open(p, "w") as fh:
            fh.write(once)
        assert main(["contract", p, "--params", "1,2"]) == 0
        assert capsys.readouterr().out == once


class TestPurity:
    def test_golden(self, golden_file, capsys):
        assert main(["purity", golden_file, "--format", "json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["matrix"] == [[1], [1]]
        assert out["injective"] is True
        assert out["cokernel_torsion"] == []
        assert out["cokernel_free_rank"] == 1

    def test_tree_isomorphism(self, tree_file, capsys):
        assert main(["purity", tree_file, "--format", "json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["matrix"] == []
        assert out["is_isomorphism"] is True

    def test_snf_flag(self, golden_file, capsys):
        assert main(["purity", golden_file, "--snf", "--format", "json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["snf_diagonal"] == [1]


class TestResolve:
    def test_golden_fails(self, golden_file, capsys):
        assert main(["resolve", golden_file]) == 1
        assert "'e'" in capsys.readouterr().err

    def test_thick_loop(self, tmp_path, capsys):
        p = tmp_path / "loop.json"
        p.write_text(THICK_LOOP)
        assert main(["resolve", str(p)]) == 0
        out = json.loads(capsys.readouterr().out)
        labels = [e["label"] for e in out["graph"]["edges"]]
        assert labels == [[1, 0], [1, 0]]

    def test_regular_unchanged(self, tree_file, capsys):
        assert main(["resolve", tree_file]) == 0
        out = json.loads(capsys.readouterr().out)
        assert parse_graph(json.dumps(out["graph"])) == parse_graph(TREE)


class TestPhi:
    def test_four_cycle(self, tmp_path, capsys):
        obj = {
            "num_params": 1,
            "vertices": [{"id": f"v{k}"} for k in range(4)],
            "edges": [{"id": f"e{k}", "ends": [f"v{k}", f"v{(k + 1) % 4}"],
                       "label": [1]} for k in range(4)],
        }
        p = tmp_path / "c4.json"
        p.write_text(json.dumps(obj))
        assert main(["phi", str(p), "--param", "1", "--format", "json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["invariant_factors"] == [4]
        assert out["order"] == 4

    def test_tree_trivial(self, tree_file, capsys):
        assert main(["phi", tree_file, "--param", "1"]) == 0
        assert "trivial" in capsys.readouterr().out

    def test_golden_param2(self, golden_file, capsys):
        assert main(["phi", golden_file, "--param", "2",
                     "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["order"] == 1


class TestRandom:
    def test_deterministic(self, capsys):
        argv = ["random", "--vertices", "5", "--edges", "8", "--params", "2",
                "--seed", "11"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
        g = parse_graph(first)
        assert len(g.vertices) == 5 and len(g.edges) == 8

    def test_regular_class(self, capsys):
        assert main(["random", "--vertices", "4", "--edges", "6", "--params",
                     "2", "--seed", "3", "--class", "regular"]) == 0
        g = parse_graph(capsys.readouterr().out)
        assert all(sum(e.label) == 1 for e in g.edges)

    def test_bad_config(self, capsys):
        assert main(["random", "--vertices", "5", "--edges", "1", "--params",
                     "2", "--seed", "3"]) == 2


class TestOracle:
    def test_aligned(self, golden_file, capsys):
        assert main(["oracle", golden_file, "--op", "aligned"]) == 0
        assert json.loads(capsys.readouterr().out)["holds"] is True

    def test_cycles(self, golden_file, capsys):
        assert main(["oracle", golden_file, "--op", "cycles"]) == 0
        assert json.loads(capsys.readouterr().out)["cycles"] == [["e"]]

    def test_phi_order(self, golden_file, capsys):
        assert main(["oracle", golden_file, "--op", "phi-order",
                     "--param", "1"]) == 0
        assert json.loads(capsys.readouterr().out)["order"] == 1


def test_stdin_input(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(GOLDEN))
    assert main(["check", "-", "--criterion", "aligned"]) == 0


def test_round_trip_generated(tmp_path, capsys):
    for seed in (1, 2, 3):
        g = random_labelled_graph(GeneratorConfig(5, 8, 2, 3, seed))
        p = tmp_path / f"g{seed}.json"
        p.write_text(dumps_graph(g))
        assert main(["contract", str(p), "--params", "1,2"]) == 0
        assert parse_graph(capsys.readouterr().out) == g
