import json

import pytest

from normvar.cli import main

GOLDEN_EVENTS_GAUSSIAN_X10 = """n,p,k,dk,lam
2,2,1,1,0.69314718056
4,2,2,1,0.69314718056
5,5,1,2,1.60943791243
8,2,3,1,0.69314718056
9,3,2,1,2.19722457734
"""

GOLDEN_GQ_GAUSSIAN_ROW12 = """q,phi,phi_K,aq_conductor,members
12,4,2,4,1-5
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dump_events_golden(capsys):
    code, out, _ = run(capsys, "dump-events", "--field", "quad:-1", "--x", "10")
    assert code == 0
    assert out == GOLDEN_EVENTS_GAUSSIAN_X10


def test_dump_events_to_file(tmp_path, capsys):
    target = tmp_path / "events.csv"
    code, out, _ = run(
        capsys, "dump-events", "--field", "quad:-1", "--x", "10", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert target.read_text() == GOLDEN_EVENTS_GAUSSIAN_X10


def test_gq_single_modulus(capsys):
    code, out, _ = run(capsys, "gq", "--field", "quad:-1", "--q", "12")
    assert code == 0
    assert out == GOLDEN_GQ_GAUSSIAN_ROW12


def test_gq_table(capsys):
    code, out, _ = run(capsys, "gq", "--field", "cyclo:5", "--Q", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "q,phi,phi_K,aq_conductor,members"
    assert len(lines) == 11
    assert lines[1] == "1,1,1,1,0"
    assert lines[10] == "10,4,1,5,1"


def test_gq_requires_q_or_bound(capsys):
    code, _, err = run(capsys, "gq", "--field", "Q")
    assert code == 2
    assert "error" in err


def test_variance_json_schema(capsys):
    code, out, err = run(capsys, "variance", "--field", "quad:-1", "--x", "1000", "--Q", "30")
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == [
        "format_version",
        "config",
        "field",
        "x",
        "Q",
        "M",
        "V",
        "ratio_bdh",
        "ratio_grh",
        "outside_mass",
        "range_condition_satisfied",
        "per_q",
        "dyadic",
        "checks",
    ]
    assert payload["format_version"] == 1
    assert payload["field"]["variant"] == "quadratic"
    assert len(payload["per_q"]) == 30
    assert set(payload["checks"]) == {
        "orthogonality_max_gap",
        "large_sieve_holds",
        "lemma2_max_gap",
    }
    assert payload["checks"]["large_sieve_holds"] is True
    assert payload["checks"]["orthogonality_max_gap"] <= 1e-9
    assert payload["checks"]["lemma2_max_gap"] <= 1e-9
    assert payload["outside_mass"] == 0
    assert "PASS" in err


def test_variance_csv_format(capsys):
    code, out, _ = run(
        capsys, "variance", "--field", "Q", "--x", "500", "--Q", "20", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "q,phi_K,contribution"
    assert len(lines) == 21
    assert lines[1].startswith("1,1,")


def test_variance_reruns_and_threads_are_byte_identical(tmp_path, capsys):
    paths = [tmp_path / name for name in ("a.json", "b.json", "c.json")]
    for path, threads in zip(paths, ("1", "1", "4")):
        code, _, _ = run(
            capsys,
            "variance",
            "--field",
            "cyclo:5",
            "--x",
            "2000",
            "--Q",
            "40",
            "--threads",
            threads,
            "--out",
            str(path),
        )
        assert code == 0
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1] == blobs[2]


def test_variance_rejects_bad_window(capsys):
    code, _, err = run(capsys, "variance", "--field", "Q", "--x", "30", "--Q", "50")
    assert code == 2
    assert "Q must satisfy" in err


def test_malformed_field_is_usage_error(capsys):
    code, _, err = run(capsys, "variance", "--field", "quad:4", "--x", "100", "--Q", "10")
    assert code == 2
    assert "squarefree" in err
    code, _, err = run(capsys, "gq", "--field", "gaussian", "--Q", "5")
    assert code == 2
    assert "gaussian" in err


def test_checks_all_pass(capsys):
    code, out, err = run(
        capsys, "checks", "--field", "quad:5", "--x", "1000", "--Q", "40", "--B", "5000"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    names = [c["name"] for c in payload["checks"]]
    assert names == [
        "gq-oracle",
        "class-index",
        "orthogonality",
        "outside-mass",
        "large-sieve",
        "char-exchange",
    ]
    assert err.count("PASS") == len(names)


def test_checks_reports_starved_closure(capsys):
    code, out, _ = run(capsys, "checks", "--field", "quad:-1", "--x", "100", "--Q", "8", "--B", "2")
    assert code == 1
    payload = json.loads(out)
    oracle = payload["checks"][0]
    assert oracle["name"] == "gq-oracle"
    assert oracle["passed"] is False
    assert "closure incomplete, raise B" in oracle["detail"]
    assert payload["all_passed"] is False


def test_checks_csv_format(capsys):
    code, out, _ = run(
        capsys,
        "checks",
        "--field",
        "Q",
        "--x",
        "500",
        "--Q",
        "20",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,passed,detail"
    assert len(lines) == 7


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
