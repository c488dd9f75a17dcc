"""Command-line interface: subcommands, JSON output and exit codes."""

import json

import pytest

from fatchroma.cli import EXIT_INPUT, EXIT_OK, EXIT_REJECT, EXIT_TIMEOUT, main
from fatchroma.generators import crown, pendant_triangles
from fatchroma.graphs import emit_dimacs, emit_graph6
from fatchroma.models import FatWitness, SolveReport, SpectrumReport


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("FATCHROMA_THREADS", "1")
    for name in ("FATCHROMA_TIMEOUT", "FATCHROMA_DETERMINISTIC", "FATCHROMA_SPECTRUM_CAP", "FATCHROMA_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    return tmp_path


@pytest.fixture
def crown_file(tmp_path):
    path = tmp_path / "crown5.g6"
    path.write_text(emit_graph6(crown(5)) + "\n")
    return path


class TestGenerate:
    def test_graph6_to_stdout(self, capsys):
        assert main(["generate", "--family", "crown", "--params", "n=5"]) == EXIT_OK
        assert capsys.readouterr().out == emit_graph6(crown(5)) + "\n"

    def test_dimacs_to_file(self, tmp_path):
        out = tmp_path / "pt.col"
        code = main(["generate", "--family", "pendant-triangles", "--params", "n=5", "--format", "dimacs", "--out", str(out)])
        assert code == EXIT_OK
        assert out.read_text() == emit_dimacs(pendant_triangles(5))

    def test_json(self, capsys):
        main(["generate", "--family", "cliques_mixed", "--params", "L1=2,L2=3", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert (payload["n"], payload["m"]) == (5, 4)
        assert payload["instance"] == {"family": "cliques_mixed", "params": {"l1": 2, "l2": 3}}

    def test_bad_params_exit_three(self, capsys):
        assert main(["generate", "--family", "cliques_mixed", "--params", "l1=1,l2=3"]) == EXIT_INPUT
        assert "L1 > 1" in capsys.readouterr().err


class TestVerify:
    def test_crown_pairs_accepted(self, crown_file, tmp_path, capsys):
        coloring = tmp_path / "pairs.txt"
        coloring.write_text("".join(f"{i} c{i}\n{5 + i} c{i}\n" for i in range(5)))
        code = main(["verify", "--graph", str(crown_file), "--coloring", str(coloring), "--json"])
        assert code == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        witness = FatWitness.model_validate(payload["witness"])
        assert (witness.alpha, witness.beta) == (1 / 4, 0)
        assert payload["witness"]["alpha"] == "1/4"
        assert payload["witness"]["beta"] == "0/1"

    def test_triangle_split_rejected(self, tmp_path, capsys):
        graph = tmp_path / "k3.g6"
        graph.write_text("Bw\n")
        coloring = tmp_path / "split.txt"
        coloring.write_text("0 a\n1 a\n2 b\n")
        assert main(["verify", "--graph", str(graph), "--coloring", str(coloring)]) == EXIT_REJECT
        assert capsys.readouterr().out.startswith("REJECT vertex 2")

    def test_one_color_accepted(self, crown_file, tmp_path, capsys):
        coloring = tmp_path / "one.txt"
        coloring.write_text("".join(f"{v} x\n" for v in range(10)))
        assert main(["verify", "--graph", str(crown_file), "--coloring", str(coloring)]) == EXIT_OK
        assert "k=1 alpha=0/1 beta=1/1" in capsys.readouterr().out

    def test_given_parameters(self, tmp_path, capsys):
        graph = tmp_path / "k3.g6"
        graph.write_text("Bw\n")
        coloring = tmp_path / "single.txt"
        coloring.write_text("0 a\n1 b\n2 c\n")
        args = ["verify", "--graph", str(graph), "--coloring", str(coloring)]
        assert main([*args, "--alpha", "1/2", "--beta", "0"]) == EXIT_OK
        assert main([*args, "--alpha", "1/3", "--beta", "1/3"]) == EXIT_REJECT

    def test_alpha_without_beta(self, crown_file, tmp_path):
        coloring = tmp_path / "one.txt"
        coloring.write_text("".join(f"{v} x\n" for v in range(10)))
        assert main(["verify", "--graph", str(crown_file), "--coloring", str(coloring), "--alpha", "0"]) == EXIT_INPUT

    def test_malformed_graph_exit_three(self, tmp_path, capsys):
        graph = tmp_path / "bad.g6"
        graph.write_text("B!\n")
        coloring = tmp_path / "c.txt"
        coloring.write_text("0 a\n")
        assert main(["verify", "--graph", str(graph), "--coloring", str(coloring)]) == EXIT_INPUT
        assert "byte 1" in capsys.readouterr().err


class TestSolve:
    def test_chifat_json(self, crown_file, capsys):
        assert main(["solve", "--what", "chifat", "--in", str(crown_file), "--json"]) == EXIT_OK
        report = SolveReport.model_validate(json.loads(capsys.readouterr().out))
        assert report.value == 5
        assert report.witness.k == 5

    def test_chi_text(self, crown_file, capsys):
        assert main(["solve", "--what", "chi", "--in", str(crown_file)]) == EXIT_OK
        assert capsys.readouterr().out.startswith("chi 2 ")

    def test_bounds(self, tmp_path, capsys):
        path = tmp_path / "pt.g6"
        path.write_text(emit_graph6(pendant_triangles(5)) + "\n")
        assert main(["solve", "--what", "bounds", "--in", str(path), "--json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert (payload["lower"], payload["upper"]) == (1, 3)

    def test_json_lines_for_many_graphs(self, tmp_path, capsys):
        path = tmp_path / "many.g6"
        path.write_text("@\nBw\nBg\n")
        assert main(["solve", "--in", str(path), "--json"]) == EXIT_OK
        values = [json.loads(line)["value"] for line in capsys.readouterr().out.splitlines()]
        assert values == [1, 3, 2]

    def test_witness_out(self, crown_file, tmp_path):
        out = tmp_path / "witness.txt"
        assert main(["solve", "--in", str(crown_file), "--witness-out", str(out)]) == EXIT_OK
        assert out.read_text().splitlines()[:2] == ["0 0", "1 1"]

    def test_spectrum_subcommand(self, crown_file, capsys):
        assert main(["spectrum", "--in", str(crown_file), "--json"]) == EXIT_OK
        report = SpectrumReport.model_validate(json.loads(capsys.readouterr().out))
        assert report.chi_fat == 5

    def test_spectrum_cap_from_env(self, crown_file, monkeypatch):
        monkeypatch.setenv("FATCHROMA_SPECTRUM_CAP", "4")
        assert main(["spectrum", "--in", str(crown_file)]) == EXIT_INPUT

    def test_timeout_exit_two(self, tmp_path, monkeypatch, capsys):
        from fatchroma.solver import Budget

        monkeypatch.setattr("fatchroma.solver.fat.Budget", lambda timeout: Budget(-1.0, check_every=1))
        path = tmp_path / "pt.g6"
        path.write_text(emit_graph6(pendant_triangles(5)) + "\n")
        assert main(["solve", "--in", str(path), "--timeout", "5", "--json"]) == EXIT_TIMEOUT
        report = SolveReport.model_validate(json.loads(capsys.readouterr().out))
        assert report.status == "timeout"
        assert report.bounds.upper == 3

    def test_spectrum_timeout_keeps_its_label(self, crown_file, monkeypatch, capsys):
        from fatchroma.solver import Budget

        monkeypatch.setattr("fatchroma.solver.fat.Budget", lambda timeout: Budget(-1.0, check_every=1))
        assert main(["solve", "--what", "spectrum", "--in", str(crown_file), "--timeout", "5", "--json"]) == EXIT_TIMEOUT
        report = SolveReport.model_validate(json.loads(capsys.readouterr().out))
        assert (report.what, report.status) == ("spectrum", "timeout")
        assert report.bounds.upper == 5

    def test_missing_file_exit_three(self, tmp_path):
        assert main(["solve", "--in", str(tmp_path / "absent.g6")]) == EXIT_INPUT

    def test_bad_env_exit_three(self, crown_file, monkeypatch):
        monkeypatch.setenv("FATCHROMA_THREADS", "many")
        assert main(["solve", "--in", str(crown_file)]) == EXIT_INPUT


class TestReproduce:
    def test_single_theorem(self, capsys):
        assert main(["reproduce", "--theorem", "general", "--general-n", "3", "4"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "4/4 cases passed" in out

    def test_json(self, capsys):
        assert main(["reproduce", "--theorem", "disconnected1", "--max-l2", "3", "--json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["passed"]
        assert [row["status"] for row in payload["results"]] == ["PASS"] * 3
        assert payload["results"][0]["gap"] == 1

    def test_hypothesis_violation_exit_three(self, capsys):
        assert main(["reproduce", "--theorem", "connected", "--connected-n", "6"]) == EXIT_INPUT
        assert "odd n >= 5" in capsys.readouterr().err

    def test_all_flag(self, capsys):
        assert main(["reproduce", "--all"]) == EXIT_OK
        assert "19/19 cases passed" in capsys.readouterr().out
