"""Every shipped fixture document reproduces its worked value via the CLI."""

import json
from pathlib import Path

import pytest

from divgraph.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out.strip()


class TestTriangleDoubledPair:
    def test_source_ranks(self, capsys):
        path = FIXTURES / "triangle_doubled.json"
        for name, expected in (("drop", "0"), ("rise", "-1"), ("mixed", "0")):
            code, out = run(capsys, "rank", path, "--divisor", name)
            assert (code, out) == (0, expected)

    def test_contracted_ranks(self, capsys):
        path = FIXTURES / "triangle_doubled_contracted.json"
        for name, expected in (("drop", "-1"), ("rise", "0"), ("mixed", "1")):
            code, out = run(capsys, "rank", path, "--divisor", name)
            assert (code, out) == (0, expected)

    def test_contraction_reproduces_shipped_target(self, capsys):
        code = main(["contract", str(FIXTURES / "triangle_doubled.json"),
                     "--edges", "3", "--format", "json"])
        assert code == 0
        produced = json.loads(capsys.readouterr().out)["result"]
        shipped = json.loads(
            (FIXTURES / "triangle_doubled_contracted.json").read_text())
        assert produced["vertices"] == shipped["vertices"]
        assert produced["edges"] == shipped["edges"]

    def test_pushforward_values(self, capsys):
        path = FIXTURES / "triangle_doubled.json"
        for name, expected in (("drop", "[-2, 2]"), ("mixed", "[1, 1]")):
            code, out = run(capsys, "pushforward", path,
                            "--edges", 3, "--divisor", name)
            assert (code, out) == (0, expected)


class TestBinaryFamily:
    @pytest.mark.parametrize("g", range(2, 7))
    def test_unit_rank_one(self, capsys, g):
        code, out = run(capsys, "rank", FIXTURES / f"binary_g{g}.json",
                        "--divisor", "unit")
        assert (code, out) == (0, "1")

    @pytest.mark.parametrize("g", range(2, 7))
    def test_genus(self, capsys, g):
        code, out = run(capsys, "genus", FIXTURES / f"binary_g{g}.json")
        assert (code, out) == (0, str(g))

    def test_pic_binary2(self, capsys):
        code, out = run(capsys, "pic", FIXTURES / "binary_g2.json")
        assert (code, out) == (0, "invariant factors [3], order 3")

    def test_binary2_table_row(self, capsys):
        path = FIXTURES / "binary_g2.json"
        for spec, expected in ((("(0,0)"), "0"), (("(2,-1)"), "-1"),
                               (("(0,2)"), "0"), (("(2,0)"), "0")):
            code, out = run(capsys, "rank", path, "--divisor", spec)
            assert (code, out) == (0, expected)


class TestTwoWeightOne:
    def test_class_ranks(self, capsys):
        path = FIXTURES / "two_weight_one.json"
        for name, expected in (("a", "0"), ("b", "1")):
            code, out = run(capsys, "rank", path, "--divisor", name)
            assert (code, out) == (0, expected)

    def test_genus(self, capsys):
        code, out = run(capsys, "genus", FIXTURES / "two_weight_one.json")
        assert (code, out) == (0, "2")


class TestCycles:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_pic_order(self, capsys, n):
        code, out = run(capsys, "pic", FIXTURES / f"cycle{n}.json")
        assert (code, out) == (0, f"invariant factors [{n}], order {n}")

    @pytest.mark.parametrize("n", range(3, 7))
    def test_class_count(self, capsys, n):
        code = main(["classes", str(FIXTURES / f"cycle{n}.json"),
                     "--degree", "1", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["details"]["count"] == n

    def test_canonical_is_zero(self, capsys):
        code, out = run(capsys, "canonical", FIXTURES / "cycle4.json")
        assert (code, out) == (0, "[0, 0, 0, 0]")


class TestSingleVertex:
    def test_rank_values(self, capsys):
        path = FIXTURES / "single_vertex_g2.json"
        for spec, expected in ((("(2)"), "1"), (("(3)"), "1"), (("(-1)"), "-1"),
                               (("(5)"), "3")):
            code, out = run(capsys, "rank", path, "--divisor", spec)
            assert (code, out) == (0, expected)

    def test_canonical(self, capsys):
        code, out = run(capsys, "canonical", FIXTURES / "single_vertex_g2.json")
        assert (code, out) == (0, "[2]")


class TestWeightLoopMix:
    def test_point_rank(self, capsys):
        code, out = run(capsys, "rank", FIXTURES / "weight_loop_mix.json",
                        "--divisor", "point")
        assert (code, out) == (0, "0")

    def test_graph_picard_is_trivial(self, capsys):
        code, out = run(capsys, "pic", FIXTURES / "weight_loop_mix.json")
        assert (code, out) == (0, "invariant factors [], order 1")

    def test_model_picard_is_two_by_two(self, capsys, tmp_path):
        code = main(["bullet", str(FIXTURES / "weight_loop_mix.json"),
                     "--format", "json"])
        doc = json.loads(capsys.readouterr().out)["result"]
        assert code == 0
        model_path = tmp_path / "model.json"
        model_path.write_text(json.dumps(doc), encoding="utf-8")
        code, out = run(capsys, "pic", model_path)
        assert (code, out) == (0, "invariant factors [2, 2], order 4")

    def test_rr_check(self, capsys):
        code, _ = run(capsys, "rr-check", FIXTURES / "weight_loop_mix.json",
                      "--divisor", "point")
        assert code == 0
