"""Command-line behaviour: formats, directions, and exit codes."""

import json
import xml.etree.ElementTree as ET

import pytest

from wedgematch.cli import main

EXAMPLE_IMAGE_TEXT = "(1,4),(2,14),(3,12),(5,8),(6,9),(7,11),(10,13)"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- convert -----------------------------------------------------------------


def test_convert_to_matching(capsys):
    code, out, _ = run_cli(capsys, "convert", "--to-matching", "ES")
    assert code == 0
    assert out.strip() == "(1,2)"


def test_convert_via_psi_heights(capsys):
    code, out, _ = run_cli(
        capsys, "convert", "--via", "psi", "--to-matching", "heights", "0,1"
    )
    assert code == 0
    assert out.strip() == "(1,4),(2,3)"


def test_convert_to_path_published_image(capsys):
    code, out, _ = run_cli(capsys, "convert", "--to-path", EXAMPLE_IMAGE_TEXT)
    assert code == 0
    steps = out.strip()
    assert steps.count("E") == 7
    assert steps.count("N") == 8


def test_convert_round_trip_through_text(capsys):
    code, out, _ = run_cli(capsys, "convert", "--to-matching", "ENESSS")
    assert code == 0
    code, back, _ = run_cli(capsys, "convert", "--to-path", out.strip())
    assert code == 0
    assert back.strip() == "ENESSS"


@pytest.mark.parametrize("n", range(1, 6))
def test_convert_identity_on_canonical_text(capsys, n):
    from wedgematch.enumeration import all_paths

    for p in all_paths(n):
        steps = p.to_steps()
        code, out, _ = run_cli(capsys, "convert", "--to-matching", steps)
        assert code == 0
        code, back, _ = run_cli(capsys, "convert", "--to-path", out.strip())
        assert code == 0
        assert back.strip() == steps


def test_convert_via_phi_matching_to_matching(capsys):
    code, out, _ = run_cli(
        capsys, "convert", "--via", "phi", "--to-matching", "(1,6),(2,5),(3,4)"
    )
    assert code == 0
    assert out.strip() == "(1,6),(2,3),(4,5)"
    code, back, _ = run_cli(capsys, "convert", "--via", "phi", "--to-path", out.strip())
    assert code == 0
    assert back.strip() == "(1,6),(2,5),(3,4)"


def test_convert_json_output(capsys):
    code, out, _ = run_cli(capsys, "convert", "--to-matching", "--json", "ES")
    assert code == 0
    assert json.loads(out) == [[1, 2]]
    code, out, _ = run_cli(capsys, "convert", "--to-path", "--json", "(1,2)")
    assert code == 0
    assert json.loads(out) == [0]


def test_convert_parse_failure_exits_2(capsys):
    code, _, err = run_cli(capsys, "convert", "--to-matching", "E@S")
    assert code == 2
    assert "error" in err


def test_convert_invalid_object_exits_3(capsys):
    code, _, err = run_cli(capsys, "convert", "--to-matching", "EN")
    assert code == 3
    code, _, err = run_cli(capsys, "convert", "--to-matching", "(1,3),(2,3)")
    assert code == 3


def test_convert_wrong_object_kind_exits_3(capsys):
    code, _, _ = run_cli(capsys, "convert", "--to-matching", "--via", "psi", "(1,2)")
    assert code == 3
    code, _, _ = run_cli(capsys, "convert", "--to-path", "ES")
    assert code == 3


# -- stats --------------------------------------------------------------------


def test_stats_matching(capsys):
    code, out, _ = run_cli(capsys, "stats", "(1,3),(2,7),(4,6),(5,8),(9,10)")
    assert code == 0
    assert "crossings 3" in out
    assert "nestings 1" in out
    assert "alignments 6" in out
    assert "st_total 1" in out


def test_stats_path(capsys):
    code, out, _ = run_cli(capsys, "stats", "ES")
    assert code == 0
    assert "north 0" in out
    assert "south 1" in out
    assert "east 1" in out
    assert "dyck true" in out


def test_stats_nested_triple(capsys):
    code, out, _ = run_cli(capsys, "stats", "(1,6),(2,5),(3,4)")
    assert code == 0
    assert "nestings 3" in out
    assert "st_total 2" in out


def test_stats_json(capsys):
    code, out, _ = run_cli(capsys, "stats", "--json", "ENESSS")
    assert code == 0
    data = json.loads(out)
    assert data["north"] == 1
    assert data["dyck"] is False
    assert data["component_sizes"] == [2]


# -- enumerate ------------------------------------------------------------------


def test_enumerate_text(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "2", "nestings")
    assert code == 0
    assert out.strip() == "0:2 1:1"


def test_enumerate_crossings(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "3", "crossings")
    assert code == 0
    assert out.strip() == "0:5 1:6 2:3 3:1"


def test_enumerate_north_trivial(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "1", "north_steps")
    assert code == 0
    assert out.strip() == "0:1"


def test_enumerate_csv_and_json(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--csv", "2", "nestings")
    assert code == 0
    assert out == "k,count\n0,2\n1,1\n"
    code, out, _ = run_cli(capsys, "enumerate", "--json", "2", "nestings")
    assert json.loads(out)["counts"] == {"0": 2, "1": 1}


def test_enumerate_over_cap_exits_4(capsys):
    code, _, err = run_cli(capsys, "enumerate", "9", "nestings")
    assert code == 4
    assert "cap" in err


def test_enumerate_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("WEDGEMATCH_MAX_N", "2")
    code, _, _ = run_cli(capsys, "enumerate", "3", "nestings")
    assert code == 4
    # explicit flag overrides the environment
    code, _, _ = run_cli(capsys, "enumerate", "--max-n", "3", "3", "nestings")
    assert code == 0


# -- verify -----------------------------------------------------------------------


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "3")
    assert code == 0
    assert "verification n=3" in out
    assert "tested       15" in out
    assert out.count("result: PASS") == 3


def test_verify_claims_filter(capsys):
    code, out, _ = run_cli(capsys, "verify", "2", "--claims", "theorem1")
    assert code == 0
    assert "theorem1" in out
    assert "theorem2" not in out


def test_verify_unknown_claim_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "2", "--claims", "theorem9")
    assert code == 2
    assert "unknown claim" in err


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--json", "2")
    assert code == 0
    reports = json.loads(out)
    assert [r["n"] for r in reports] == [1, 2]
    assert all(r["passed"] for r in reports)


def test_verify_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "0"])
    assert exc.value.code == 2


def test_verify_over_cap_exits_4(capsys):
    code, _, _ = run_cli(capsys, "verify", "8")
    assert code == 4


def test_verify_workers_flag(capsys):
    code, out, _ = run_cli(capsys, "verify", "3", "--workers", "2", "--claims", "theorem1")
    assert code == 0
    assert "result: PASS" in out


def test_verify_counterexample_exits_1(capsys, monkeypatch):
    from wedgematch.enumeration import ClaimResult, VerificationReport

    broken = VerificationReport(
        n=1,
        claims=(
            ClaimResult(
                label="theorem1", tested=1, failed=1, counterexamples=("P=ES: bad",)
            ),
        ),
        elapsed=0.0,
    )
    monkeypatch.setattr("wedgematch.cli.verify_all", lambda *a, **kw: broken)
    code, out, _ = run_cli(capsys, "verify", "1")
    assert code == 1
    assert "result: FAIL" in out
    assert "counterexample: P=ES: bad" in out


# -- render ----------------------------------------------------------------------


def test_render_ascii_matching(capsys):
    code, out, _ = run_cli(capsys, "render", "(1,4),(2,3)")
    assert code == 0
    assert out == "+-----+\n| +-+ |\n1 2 3 4\n"


def test_render_ascii_path_from_heights(capsys):
    code, out, _ = run_cli(capsys, "render", "heights", "0")
    assert code == 0
    assert out == "+-+\n  |\n  +\n"


def test_render_svg_stdout(capsys):
    code, out, _ = run_cli(capsys, "render", "--format", "svg", "ESES")
    assert code == 0
    ET.fromstring(out)
    assert out.count('class="step"') == 4


def test_render_to_file(capsys, tmp_path):
    target = tmp_path / "diagram.svg"
    code, out, _ = run_cli(
        capsys, "render", "--format", "svg", "-o", str(target), "(1,2)"
    )
    assert code == 0
    assert out == ""
    ET.fromstring(target.read_text())


def test_render_unwritable_output(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "render", "-o", str(tmp_path / "no" / "dir" / "x.txt"), "(1,2)"
    )
    assert code == 1
    assert "cannot write" in err
