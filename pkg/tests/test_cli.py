"""Command-line interface: outputs, formats, exit codes, determinism."""

import json

import pytest

from avoidpairs.cli import EXIT_ASSERTION, EXIT_GUARD, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line]


def test_pell_count_three(capsys):
    code, out, _ = run_cli(capsys, "pell", "--count", "3")
    assert code == EXIT_OK
    records = json_lines(out)
    assert [rec["m"] for rec in records] == [40, 221, 1276]
    assert all(rec["checks"]["passed"] for rec in records)


def test_pell_raw_stream(capsys):
    code, out, _ = run_cli(capsys, "pell", "--count", "4", "--raw")
    assert code == EXIT_OK
    assert [rec["m"] for rec in json_lines(out)] == [4, 9, 40, 221]


def test_criterion_eval_json_and_csv(capsys):
    code, out, _ = run_cli(capsys, "criterion", "eval", "--m", "40", "--q", "0")
    assert code == EXIT_OK
    rec = json_lines(out)[0]
    assert (rec["L"], rec["R"], rec["verdict"]) == (29, 28, "L>R")
    assert rec["frac_y"]["approx"] == 0.5

    code, out, _ = run_cli(capsys, "criterion", "eval", "--m", "40", "--q", "0", "--csv")
    lines = out.splitlines()
    assert lines[0] == "m,q,Dy,Dz,L,R,verdict"
    assert lines[1] == "40,0,2809,3121,29,28,L>R"


def test_criterion_cert(capsys):
    code, out, _ = run_cli(capsys, "criterion", "cert", "--m", "40", "--f", "390")
    assert code == EXIT_OK and json_lines(out)[0]["certified"] is True
    code, out, _ = run_cli(capsys, "criterion", "cert", "--m", "5", "--f", "7")
    rec = json_lines(out)[0]
    assert code == EXIT_OK and rec["certified"] is False and rec["direction"] == "complement"


def test_scan_t4_assert_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "criterion", "scan-t4", "--from", "740", "--to", "800", "--assert")
    assert code == EXIT_OK
    assert all(rec["which"] != "none" for rec in json_lines(out))

    code, _, err = run_cli(capsys, "criterion", "scan-t4", "--from", "13", "--to", "13", "--assert")
    assert code == EXIT_ASSERTION
    assert "assertion" in err


def test_scan_t2(capsys):
    code, out, _ = run_cli(
        capsys, "criterion", "scan-t2", "--alpha", "0", "--beta", "0",
        "--from", "39", "--to", "42",
    )
    assert code == EXIT_OK
    by_m = {rec["m"]: rec for rec in json_lines(out)}
    assert by_m[40]["status"] == "hit"
    assert by_m[42]["status"] == "skipped-nonintegral-f"


def test_scan_interval_and_mod23(capsys):
    code, out, _ = run_cli(capsys, "criterion", "scan-interval", "--m", "40")
    rec = json_lines(out)[0]
    assert code == EXIT_OK and (rec["f_lo"], rec["f_hi"]) == (384, 396)

    code, out, _ = run_cli(capsys, "criterion", "scan-mod23", "--from", "42", "--to", "42")
    rec = json_lines(out)[0]
    assert code == EXIT_OK and rec["center_avoidable"] is True


def test_witness_build_verify_roundtrip(capsys, tmp_path):
    g6_path = tmp_path / "w.g6"
    code, out, _ = run_cli(
        capsys, "witness", "build", "--n", "20", "--e", "12", "--p", "6",
        "--pair", "5,5", "--graph6", str(g6_path),
    )
    assert code == EXIT_OK
    rec = json_lines(out)[0]
    assert rec["verify"]["passed"] is True
    clique = ",".join(str(v) for v in rec["clique_vertices"])

    code, out, _ = run_cli(
        capsys, "witness", "verify", "--graph6", str(g6_path),
        "--pair", "5,5", "--clique-vertices", clique, "--p", "6",
    )
    assert code == EXIT_OK and json_lines(out)[0]["passed"] is True


def test_witness_infeasible_exit_code(capsys):
    # e = binom2(5)/2 keeps the direct orientation, whose greedy run starves
    code, out, _ = run_cli(capsys, "witness", "build", "--n", "5", "--e", "5", "--p", "5")
    assert code == EXIT_INFEASIBLE
    assert json_lines(out)[0]["infeasible"] is True


def test_oracle_commands(capsys):
    code, out, _ = run_cli(capsys, "oracle", "arrows", "--n", "3", "--e", "3", "--m", "2", "--f", "0")
    rec = json_lines(out)[0]
    assert code == EXIT_OK and rec["arrows"] is False and rec["counterexample"] == "Bw"

    code, out, _ = run_cli(capsys, "oracle", "sn", "--n", "5", "--m", "2", "--f", "1")
    rec = json_lines(out)[0]
    assert code == EXIT_OK and rec["S"] == list(range(1, 11))

    code, _, err = run_cli(capsys, "oracle", "sn", "--n", "12", "--m", "4", "--f", "3")
    assert code == EXIT_GUARD and "guard" in err

    code, out, _ = run_cli(capsys, "oracle", "xcheck-cf", "--max-m", "8")
    rec = json_lines(out)[0]
    assert code == EXIT_OK and rec["mismatches"] == []


def test_bipartite_realize_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "bipartite", "realize", "--m", "3", "--f", "4")
    assert code == EXIT_OK and "case 3" in out and "PASS" in out

    code, out, _ = run_cli(capsys, "bipartite", "realize", "--m", "3", "--f", "4", "--json")
    rec = json_lines(out)[0]
    assert rec["biclique"] == [2, 2] and rec["verified"] is True

    code, out, _ = run_cli(
        capsys, "bipartite", "realize", "--m", "3", "--f", "7", "--json", "--complement"
    )
    rec = json_lines(out)[0]
    assert code == EXIT_OK and rec["complemented"] is True

    code, _, err = run_cli(capsys, "bipartite", "realize", "--m", "3", "--f", "7")
    assert code == EXIT_USAGE and "domain" in err


def test_diag_equidist(capsys):
    code, out, _ = run_cli(capsys, "diag", "equidist", "--q", "0", "--n", "200", "--bins", "10")
    rec = json_lines(out)[0]
    assert code == EXIT_OK and sum(rec["histogram"]) == 200

    code, out, _ = run_cli(
        capsys, "diag", "equidist", "--q", "0", "--n", "10", "--bins", "10", "--on-m"
    )
    rec = json_lines(out)[0]
    assert rec["histogram"][5] == 10


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["criterion", "eval", "--m", "40"])  # missing --q
    assert exc.value.code == EXIT_USAGE

    code, _, err = run_cli(capsys, "criterion", "eval", "--m", "4", "--q", "0")
    assert code == EXIT_USAGE and "domain" in err

    code, _, err = run_cli(capsys, "witness", "build", "--n", "5", "--e", "99", "--p", "5")
    assert code == EXIT_USAGE


def test_fracbits_validation(capsys):
    code, _, err = run_cli(capsys, "--fracbits", "8", "criterion", "eval", "--m", "40", "--q", "0")
    assert code == EXIT_USAGE and "fracbits" in err


def test_json_round_trip_is_byte_identical(capsys):
    invocations = [
        ("pell", "--count", "3"),
        ("criterion", "eval", "--m", "40", "--q", "0"),
        ("criterion", "cert", "--m", "40", "--f", "390"),
        ("criterion", "scan-t4", "--from", "36", "--to", "60"),
        ("criterion", "scan-interval", "--m", "8"),
        ("criterion", "scan-mod23", "--from", "6", "--to", "10"),
        ("oracle", "arrows", "--n", "4", "--e", "3", "--m", "3", "--f", "1"),
        ("oracle", "sn", "--n", "5", "--m", "2", "--f", "0"),
        ("bipartite", "realize", "--m", "4", "--f", "5", "--json"),
        ("diag", "equidist", "--q", "0", "--n", "100", "--bins", "10"),
    ]
    for argv in invocations:
        code, out, _ = run_cli(capsys, *argv)
        assert code == EXIT_OK, argv
        for line in out.splitlines():
            assert json.dumps(json.loads(line), sort_keys=True, separators=(",", ":")) == line


def test_repeated_runs_are_identical(capsys):
    _, out1, _ = run_cli(capsys, "criterion", "scan-t4", "--from", "740", "--to", "1200")
    _, out2, _ = run_cli(capsys, "criterion", "scan-t4", "--from", "740", "--to", "1200")
    assert out1 == out2


def test_env_thread_override(capsys, monkeypatch):
    monkeypatch.setenv("AVOID_THREADS", "3")
    _, out_env, _ = run_cli(capsys, "criterion", "scan-t4", "--from", "740", "--to", "1500")
    monkeypatch.delenv("AVOID_THREADS")
    _, out_serial, _ = run_cli(capsys, "criterion", "scan-t4", "--from", "740", "--to", "1500")
    assert out_env == out_serial
