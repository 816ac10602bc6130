"""Command-line interface tests: exit codes, output formats, file handling."""

import json

import pytest

from ssctrl import render_pattern
from ssctrl.cli import main

from util import CIRCUIT_A, CIRCUIT_B, NETWORK_A, NETWORK_B


@pytest.fixture
def circuit_files(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text(render_pattern(CIRCUIT_A))
    b.write_text(render_pattern(CIRCUIT_B))
    return str(a), str(b)


@pytest.fixture
def network_files(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text(render_pattern(NETWORK_A))
    b.write_text(render_pattern(NETWORK_B))
    return str(a), str(b)


class TestCheck:
    def test_controllable_exit_zero(self, circuit_files, capsys):
        assert main(["check", *circuit_files]) == 0
        out = capsys.readouterr().out
        assert "verdict: controllable" in out
        assert "node 5 colors 2" in out

    def test_uncontrollable_exit_one(self, network_files, capsys):
        assert main(["check", *network_files]) == 1
        out = capsys.readouterr().out
        assert "not controllable" in out
        assert "Hautus failure" in out

    def test_combined_file(self, tmp_path):
        combined = tmp_path / "sys.txt"
        rows_a = render_pattern(CIRCUIT_A).splitlines()
        rows_b = render_pattern(CIRCUIT_B).splitlines()
        combined.write_text(
            "\n".join(f"{ra} | {rb}" for ra, rb in zip(rows_a, rows_b))
        )
        assert main(["check", str(combined)]) == 0

    def test_json_format(self, circuit_files, capsys):
        assert main(["check", *circuit_files, "--format", "json", "--full"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] is True
        assert payload["trace1"] == [[5, 2], [2, 3], [3, 1]]
        assert payload["trace2"] == [[5, 2], [2, 3], [3, 1]]
        assert payload["witness"] is None

    def test_json_witness(self, network_files, capsys):
        assert main(["check", *network_files, "--format", "json"]) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] is False
        w = payload["witness"]
        assert w is not None
        assert len(w["x"]) == 3

    def test_json_deterministic(self, network_files, capsys):
        main(["check", *network_files, "--format", "json"])
        first = capsys.readouterr().out
        main(["check", *network_files, "--format", "json"])
        assert capsys.readouterr().out == first

    def test_missing_file_exit_two(self, tmp_path, capsys):
        assert main(["check", str(tmp_path / "nope.txt")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_token_exit_two(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("* x\n0 *")
        assert main(["check", str(bad), str(bad)]) == 2
        assert "error:" in capsys.readouterr().err


class TestColorable:
    def test_colorable(self, circuit_files, capsys):
        a, b = circuit_files
        combined = a  # single square pattern also works
        assert main(["colorable", combined]) == 0
        assert "colorable" in capsys.readouterr().out

    def test_not_colorable(self, tmp_path, capsys):
        p = tmp_path / "m.txt"
        p.write_text("? ?\n? ?")
        assert main(["colorable", str(p)]) == 1
        assert "not colorable" in capsys.readouterr().out

    def test_dot_output(self, tmp_path, capsys):
        p = tmp_path / "m.txt"
        p.write_text("* 0\n* *")
        dot = tmp_path / "g.dot"
        assert main(["colorable", str(p), "--dot", str(dot)]) == 0
        text = dot.read_text()
        assert text.startswith("digraph")
        assert "style=dashed" not in text

    def test_dot_format_stdout(self, tmp_path, capsys):
        p = tmp_path / "m.txt"
        p.write_text("* ?\n0 *")
        main(["colorable", str(p), "--format", "dot"])
        out = capsys.readouterr().out
        assert "digraph" in out
        assert "style=dashed" in out


class TestOracle:
    def test_agreement_exit_zero(self, circuit_files, capsys):
        assert main(["oracle", *circuit_files, "--trials", "20"]) == 0
        out = capsys.readouterr().out
        assert "monte_carlo" in out
        assert "exhaustive" in out

    def test_negative_verdict_still_agrees(self, network_files):
        assert main(["oracle", *network_files, "--trials", "20"]) == 0

    def test_custom_values(self, circuit_files):
        assert main(["oracle", *circuit_files, "--values", "1,-1", "--trials", "10"]) == 0

    def test_json(self, circuit_files, capsys):
        assert main(["oracle", *circuit_files, "--trials", "10", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert all(entry["agrees"] for entry in payload)


class TestNet:
    def test_example_network(self, capsys):
        assert main(["net", "data/network.net"]) == 1
        out = capsys.readouterr().out
        assert "loopy zero forcing" in out
        assert "match" in out

    def test_json(self, capsys):
        main(["net", "data/network.net", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["match"] is True
        assert payload["special_verdict"] is False

    def test_controllable_network(self, tmp_path):
        p = tmp_path / "n.net"
        p.write_text("leaders: 1\nloops: forbidden\n1 2\n2 1\n")
        assert main(["net", str(p)]) == 0

    def test_missing_argument_exit_two(self, capsys):
        assert main(["net"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_sweep_small(self, capsys):
        assert main(["net", "--sweep", "2"]) == 0
        assert "zero mismatches" in capsys.readouterr().out


class TestWeak:
    def test_weak_network_true(self, network_files, capsys):
        assert main(["weak", *network_files]) == 0
        assert "weakly controllable" in capsys.readouterr().out

    def test_weak_false(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("0 0\n0 0")
        b.write_text("*\n0")
        assert main(["weak", str(a), str(b)]) == 1
        assert "not weakly controllable" in capsys.readouterr().out
