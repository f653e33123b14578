"""Command-line interface: argument handling, document schemas, exit codes."""

import json

import pytest

from finring import parse_table_ring, read_ring_file
from finring.cli import EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, EXIT_VERIFY_FAIL, main


@pytest.fixture
def cli(capsys):
    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run


def run_json(cli, *argv):
    code, out, err = cli(*argv, "--json")
    return code, json.loads(out), err


# ---------------------------------------------------------------------------
# report


def test_report_json_document(cli):
    code, doc, _ = run_json(cli, "report", "--ring", "Z(6)")
    assert code == EXIT_OK
    assert doc["ring"] == "Z(6)"
    assert doc["order"] == 6
    assert doc["characteristic"] == 6
    assert doc["commutative"] is True
    assert doc["boolean"] is False
    assert doc["unit_count"] == 2
    assert doc["unit_sum"] == "0" and doc["unit_sum_index"] == 0
    assert doc["units_trivial"] is False
    assert doc["is_division_ring"] is False
    assert doc["radical"] == ["0"]
    assert doc["semisimple"] is True
    assert set(doc["timings"]) == {"construct", "units", "radical"}


def test_report_division_ring_flags(cli):
    code, doc, _ = run_json(cli, "report", "--ring", "GF(8)")
    assert code == EXIT_OK
    assert doc["unit_count"] == 7
    assert doc["is_division_ring"] is True
    assert doc["semisimple"] is True


def test_report_radical_members_pretty(cli):
    code, doc, _ = run_json(cli, "report", "--ring", "Z(4)")
    assert code == EXIT_OK
    assert doc["radical"] == ["0", "2"]
    assert doc["semisimple"] is False


def test_report_skip_radical_omits_keys(cli):
    code, doc, _ = run_json(cli, "report", "--ring", "Z(6)", "--skip-radical")
    assert code == EXIT_OK
    assert "radical" not in doc and "semisimple" not in doc
    assert "unit_count" in doc


def test_report_text_mode_is_aligned(cli):
    code, out, _ = cli("report", "--ring", "B(2)")
    assert code == EXIT_OK
    lines = dict(line.split(None, 1) for line in out.splitlines())
    assert lines["order"] == "4"
    assert lines["boolean"] == "true"
    assert lines["unit_count"] == "1"


def test_report_parse_error_is_usage(cli):
    code, out, err = cli("report", "--ring", "Z(0)")
    assert code == EXIT_USAGE
    assert out == "" and "column 3" in err


def test_report_construction_error_is_usage(cli):
    code, _, err = cli("report", "--ring", "GF(6)")
    assert code == EXIT_USAGE
    assert "prime power" in err


# ---------------------------------------------------------------------------
# unit-sum and gl-order


def test_unit_sum_json(cli):
    code, doc, _ = run_json(cli, "unit-sum", "--ring", "M(2,GF(2))")
    assert code == EXIT_OK
    assert doc["order"] == 16
    assert doc["unit_count"] == 6
    assert doc["unit_sum"] == "[[0,0],[0,0]]" and doc["unit_sum_index"] == 0
    assert "total" in doc["timings"]


def test_unit_sum_streams_large_matrix_ring(cli):
    # order 10^4 exceeds the dense-table cap, so the census streams
    code, doc, _ = run_json(cli, "unit-sum", "--ring", "M(2,Z(10))")
    assert code == EXIT_OK
    assert doc["order"] == 10 ** 4
    assert doc["unit_count"] == 2880
    assert doc["unit_sum_index"] == 0


def test_gl_order_text_prints_bare_integer(cli):
    code, out, _ = cli("gl-order", "3", "2")
    assert code == EXIT_OK
    assert out == "168\n"


def test_gl_order_json(cli):
    code, doc, _ = run_json(cli, "gl-order", "2", "4")
    assert code == EXIT_OK
    assert doc == {"n": 2, "q": 4, "gl_order": 180}


def test_gl_order_rejects_non_prime_power(cli):
    code, _, err = cli("gl-order", "2", "6")
    assert code == EXIT_USAGE
    assert "prime power" in err


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_json_inline_rings(cli):
    code, doc, _ = run_json(cli, "enumerate", "4")
    assert code == EXIT_OK
    assert doc["order"] == 4 and doc["up_to_iso"] is False
    assert doc["count"] == 14 and doc["complete"] is True
    assert doc["resume_token"] is None and doc["out"] is None
    assert len(doc["rings"]) == 14
    for text in doc["rings"]:
        assert parse_table_ring(text).order == 4


def test_enumerate_iso_to_file(cli, tmp_path):
    path = tmp_path / "rings.txt"
    code, doc, _ = run_json(cli, "enumerate", "8", "--up-to-iso", "--jobs", "2",
                            "--out", str(path))
    assert code == EXIT_OK
    assert doc["count"] == 11 and doc["out"] == str(path)
    assert "rings" not in doc
    with open(path, encoding="utf-8") as fh:
        assert len(read_ring_file(fh)) == 11


def test_enumerate_text_stream_parses_back(cli):
    code, out, _ = cli("enumerate", "3")
    assert code == EXIT_OK
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 2
    for b in blocks:
        assert parse_table_ring(b).order == 3


def test_enumerate_above_mandatory_range_needs_budget(cli):
    code, out, err = cli("enumerate", "12")
    assert code == EXIT_RESOURCE
    assert "budget" in err


def test_enumerate_with_budget_completes(cli):
    code, doc, _ = run_json(cli, "enumerate", "12", "--up-to-iso",
                            "--budget", "1000000")
    assert code == EXIT_OK
    assert doc["count"] == 4 and doc["complete"] is True


def test_enumerate_budget_exhaustion_and_resume(cli):
    code, doc, err = run_json(cli, "enumerate", "4", "--budget", "40")
    assert code == EXIT_RESOURCE
    assert doc["complete"] is False
    token = doc["resume_token"]
    assert token and token.startswith("v1:4:f:")
    seen = list(doc["rings"])
    while token is not None:
        code, doc, _ = run_json(cli, "enumerate", "4", "--budget", "40",
                                "--resume", token)
        seen.extend(doc["rings"])
        token = doc["resume_token"]
    assert code == EXIT_OK and len(seen) == 14


def test_enumerate_text_budget_stderr_hint(cli):
    code, out, err = cli("enumerate", "4", "--budget", "40")
    assert code == EXIT_RESOURCE
    assert "resume with --resume" in err


def test_enumerate_bad_resume_token(cli):
    code, _, err = cli("enumerate", "4", "--resume", "nonsense")
    assert code == EXIT_USAGE


def test_enumerate_order_out_of_scope(cli):
    code, _, err = cli("enumerate", "17")
    assert code == EXIT_USAGE
    assert "16" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_single_check_text(cli):
    code, out, _ = cli("verify", "--theorem", "T5", "--max-order", "2")
    assert code == EXIT_OK
    assert out.startswith("T5 PASS")
    assert "GL(2,3) = 48" in out


def test_verify_alias_main(cli):
    code, out, _ = cli("verify", "--theorem", "main", "--max-order", "4")
    assert code == EXIT_OK
    assert out.startswith("T7 PASS")


def test_verify_all_json(cli):
    code, docs, _ = run_json(cli, "verify", "--all", "--max-order", "4")
    assert code == EXIT_OK
    assert [d["check_id"] for d in docs] == [f"T{i}" for i in range(1, 10)]
    assert all(d["passed"] and d["complete"] for d in docs)
    assert all(d["counterexample"] is None for d in docs)


def test_verify_unknown_check(cli):
    code, _, err = cli("verify", "--theorem", "T42")
    assert code == EXIT_USAGE
    assert "unknown check" in err


def test_verify_incomplete_is_resource_exit(cli):
    code, docs, _ = run_json(cli, "verify", "--theorem", "T7",
                             "--max-order", "9", "--budget", "50")
    assert code == EXIT_RESOURCE
    assert docs[0]["complete"] is False


def test_verify_empty_population_notes(cli):
    code, out, _ = cli("verify", "--theorem", "T7", "--max-order", "1")
    assert code == EXIT_OK
    assert "population empty" in out


# ---------------------------------------------------------------------------
# top-level argument handling


def test_no_arguments_is_usage(cli):
    assert cli()[0] == EXIT_USAGE


def test_unknown_subcommand_is_usage(cli):
    assert cli("frobnicate")[0] == EXIT_USAGE


def test_help_exits_cleanly(cli):
    code, out, _ = cli("--help")
    assert code == EXIT_OK
    assert "report" in out and "enumerate" in out


def test_verify_requires_exactly_one_selector(cli):
    assert cli("verify")[0] == EXIT_USAGE
    assert cli("verify", "--theorem", "T1", "--all")[0] == EXIT_USAGE


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_VERIFY_FAIL, EXIT_USAGE, EXIT_RESOURCE) == (0, 1, 2, 3)
