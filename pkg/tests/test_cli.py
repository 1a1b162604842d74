"""Command-line surface: exit codes, output formats, determinism."""

from __future__ import annotations

import json

import pytest

from swk.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_index_edgelist_file(tmp_path, capsys):
    p3 = tmp_path / "p3.el"
    p3.write_text("0 1\n1 2\n")
    code, out, _ = run_cli(capsys, "index", "--input", str(p3), "-k", "3")
    assert code == 0
    assert "steiner_wiener_k3 = 2" in out
    assert "wiener = 4" in out


def test_index_fibonacci_family(capsys):
    code, out, _ = run_cli(capsys, "index", "--family", "fibonacci", "-n", "5", "-k", "3")
    assert code == 0
    assert "steiner_wiener_k3 = 968" in out


def test_index_lucas_family(capsys):
    code, out, _ = run_cli(capsys, "index", "--family", "lucas", "-n", "4", "-k", "3")
    assert code == 0
    assert "steiner_wiener_k3 = 100" in out


def test_index_graph6_file(tmp_path, capsys):
    g6 = tmp_path / "c5.g6"
    g6.write_text("Dhc\n")
    code, out, _ = run_cli(capsys, "index", "--input", str(g6), "-k", "2")
    assert code == 0
    assert "wiener = 15" in out


def test_index_json_uses_strings_for_integers(capsys):
    code, out, _ = run_cli(
        capsys, "index", "--family", "fibonacci", "-n", "8", "-k", "3", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    by_name = {r["name"]: r for r in payload["results"]}
    value = by_name["steiner_wiener_k3"]["exact"]
    assert isinstance(value, str) and value == "131652"
    assert payload["graph"]["n"] == "55"


def test_report_json_preserves_huge_integers():
    from fractions import Fraction

    from swk.report import Report

    huge = 10**40 + 7
    report = Report()
    report.add_result("huge", huge)
    report.add_result("ratio", Fraction(huge, 3))
    payload = json.loads(report.to_json())
    assert payload["results"][0]["exact"] == str(huge)
    assert payload["results"][1]["exact"] == f"{huge}/3"
    assert int(payload["results"][0]["exact"]) == huge


def test_structure_c5(capsys, tmp_path):
    f = tmp_path / "c5.el"
    f.write_text("0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, _ = run_cli(capsys, "structure", "--input", str(f))
    assert code == 0
    assert "modular = False" in out
    assert "nonmodular_triples = 5" in out


def test_structure_paw_block_formula(capsys, tmp_path):
    f = tmp_path / "paw.el"
    f.write_text("0 1\n0 2\n1 2\n0 3\n")
    code, out, _ = run_cli(capsys, "structure", "--input", str(f))
    assert code == 0
    assert "block_graph = True" in out
    assert "sw3_block_formula = 9" in out


def test_structure_hypercube(capsys):
    code, out, _ = run_cli(capsys, "structure", "--family", "hypercube", "-n", "3")
    assert code == 0
    assert "modular = True" in out
    assert "median = True" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.el"
    bad.write_text("0 0\n")
    code, _, err = run_cli(capsys, "index", "--input", str(bad))
    assert code == 2
    assert "parse error" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run_cli(capsys, "index", "--input", "/nonexistent/file.el")
    assert code == 2


def test_disconnected_exit_code(tmp_path, capsys):
    f = tmp_path / "split.el"
    f.write_text("0 1\n2 3\n")
    code, _, err = run_cli(capsys, "index", "--input", str(f))
    assert code == 3
    assert "connected" in err


def test_out_of_range_k_exit_code(capsys):
    code, _, _ = run_cli(capsys, "index", "--family", "path", "-n", "4", "-k", "20")
    assert code == 3


def test_input_and_family_mutually_exclusive(capsys):
    code, _, err = run_cli(capsys, "index")
    assert code == 2


def test_verify_fibonacci_suite(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "fibonacci", "--max-n", "6", "--wiener-max-n", "8"
    )
    assert code == 0
    assert "closed-form-matches-reference-sequence" in out


@pytest.mark.parametrize(
    "suite,flags",
    [
        ("trees", ["--count", "25"]),
        ("lucas", ["--max-n", "5", "--wiener-max-n", "7"]),
        ("block-graphs", ["--count", "25"]),
        ("products", ["--max-size", "50"]),
        ("bounds", ["--count", "10"]),
        ("modular-bound", ["--count", "200"]),
        ("steiner-oracle", ["--count", "15"]),
    ],
)
def test_verify_suites_smoke(capsys, suite, flags):
    code, out, _ = run_cli(capsys, "verify", suite, "--seed", "11", *flags)
    assert code == 0
    assert "FAIL" not in out


def test_verify_corpus_input(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("Dhc\nC~\n")
    code, out, _ = run_cli(capsys, "verify", "modular-bound", "--corpus", str(corpus))
    assert code == 0
    assert "equality-iff-modular" in out


def test_verify_failure_exits_1_and_names_instance(capsys, monkeypatch):
    # the shipped suites verify true statements, so force a failing report
    # through the same plumbing to pin down the exit path
    import swk.cli as cli_mod
    from swk.graphs import cycle_graph
    from swk.report import Report
    from swk.verify import Check

    def fake_suite(name, **params):
        report = Report()
        check = Check("always-fails")
        check.record(False, cycle_graph(5), detail="forced")
        check.add_to(report)
        return report

    monkeypatch.setattr(cli_mod, "run_suite", fake_suite)
    code, out, err = run_cli(capsys, "verify", "trees", "--json")
    assert code == 1
    payload = json.loads(out)
    row = payload["checks"][0]
    assert row["holds"] is False
    assert row["first_failure"]["graph6"] == "Dhc"
    assert "always-fails" in err


def test_verify_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "no-such-suite"])


def test_verify_json_deterministic_given_seed(capsys):
    args = ["verify", "trees", "--count", "20", "--seed", "3", "--json"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    a.pop("timing_ms"), b.pop("timing_ms")
    assert a == b


def test_verify_json_independent_of_thread_count(capsys):
    outputs = []
    for threads in ("1", "8"):
        args = ["verify", "block-graphs", "--count", "10", "--seed", "5",
                "--threads", threads, "--json"]
        code, out, _ = run_cli(capsys, *args)
        assert code == 0
        payload = json.loads(out)
        payload.pop("timing_ms")
        outputs.append(payload)
    assert outputs[0] == outputs[1]


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n2 3\n"))
    code, out, _ = run_cli(capsys, "index", "--input", "-", "-k", "2")
    assert code == 0
    assert "wiener = 10" in out


def test_threads_flag_accepted(capsys):
    code, out, _ = run_cli(
        capsys, "index", "--family", "path", "-n", "4", "--threads", "4"
    )
    assert code == 0
