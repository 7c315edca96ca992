import json
import subprocess
import sys

import pytest

from slackkit.cli import EXIT_BUDGET, EXIT_FALSE, EXIT_INPUT, EXIT_OK, main


def run(*args, capsys):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(*args, capsys):
    code, out, _ = run(*args, "--format", "json", capsys=capsys)
    return code, json.loads(out)


@pytest.mark.parametrize(
    "args,code",
    [
        (["check", "morally-2-level", "square"], EXIT_OK),
        (["check", "morally-2-level", "cyclic5-2"], EXIT_FALSE),
        (["check", "graphic", "square"], EXIT_OK),
        (["check", "graphic", "example-8vertex-5polytope"], EXIT_FALSE),
        (["check", "toric", "example-8vertex-5polytope"], EXIT_OK),
        (["check", "pure-difference", "cyclic5-2"], EXIT_FALSE),
        (["check", "binomial", "bisimplex3"], EXIT_OK),
        (["slack", "ideal", "cube3", "--budget", "0.5"], EXIT_BUDGET),
        (["catalog", "show", "nosuch"], EXIT_INPUT),
    ],
)
def test_exit_codes(args, code, capsys):
    assert run(*args, capsys=capsys)[0] == code


@pytest.mark.parametrize("args", [["check", "graphic"], ["check", "unknown-property", "square"], ["slack", "ideal", "square", "--budget", "-1"]])
def test_usage_errors_exit_3(args, capsys):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == EXIT_INPUT


def test_square_ideal_json(capsys):
    code, data = run_json("slack", "ideal", "square", capsys=capsys)
    assert code == 0
    assert data["ideal"]["generators"] == ["x2*x3*x6*x7 - x1*x4*x5*x8"]


def test_toric_methods_agree(capsys):
    _, a = run_json("toric", "ideal", "prism-triangle", "--method", "cycles", capsys=capsys)
    _, b = run_json("toric", "ideal", "prism-triangle", "--method", "kernel", capsys=capsys)
    assert a["ideal"]["vars"] == b["ideal"]["vars"]


def test_catalog_list_and_show(capsys):
    code, out, _ = run("catalog", "list", capsys=capsys)
    assert code == 0 and "perles" in out
    code, data = run_json("catalog", "show", "cube3", capsys=capsys)
    assert data["pattern"]["rows"] == 8 and data["pattern"]["cols"] == 6


def test_output_is_deterministic(capsys):
    first = run("certify", "projective-uniqueness", "example-7vertex-4polytope", "--format", "json", capsys=capsys)[1]
    second = run("certify", "projective-uniqueness", "example-7vertex-4polytope", "--format", "json", capsys=capsys)[1]
    assert first == second and "seconds" not in first


def test_timings_flag_adds_seconds(capsys):
    out = run("check", "graphic", "square", "--timings", "--format", "json", capsys=capsys)[1]
    assert "seconds" in out


def test_certificate_round_trip(tmp_path, capsys):
    code, out, _ = run("certify", "projective-uniqueness", "square", "--format", "json", capsys=capsys)
    path = tmp_path / "cert.json"
    path.write_text(out)
    assert run("verify-certificate", str(path), capsys=capsys)[0] == EXIT_OK
    data = json.loads(out)
    data["is_graphic"] = False
    path.write_text(json.dumps(data))
    assert run("verify-certificate", str(path), capsys=capsys)[0] == EXIT_FALSE


def test_star_text_input(tmp_path, capsys):
    f = tmp_path / "square.txt"
    f.write_text("d 2\n0 0 * *\n0 * 0 *\n* 0 * 0\n* * 0 0\n")
    code, data = run_json("slack", "ideal", str(f), capsys=capsys)
    assert code == 0 and len(data["ideal"]["generators"]) == 1


def test_vrep_json_input(tmp_path, capsys):
    f = tmp_path / "tri.json"
    f.write_text(json.dumps({"type": "vrep", "vertices": [[0, 0], [1, 0], [0, 1]]}))
    code, data = run_json("slack", "ideal", str(f), capsys=capsys)
    assert code == 0 and data["ideal"]["generators"] == []


def test_gale_file_input(tmp_path, capsys):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"type": "gale", "vectors": [[1], [1], [-1], [-1]]}))
    code, data = run_json("gale", "facets", str(f), capsys=capsys)
    assert code == 0 and data["pattern"]["cols"] == 4


@pytest.mark.parametrize(
    "content,needle",
    [
        ("d 2\n* *\n0\n", ":3:"),
        ("* 0\n0 *\n", "d <dimension>"),
        ("d 2\n* q\n", ":2:"),
        ("{not json", "invalid JSON"),
        ('{"type": "vrep", "vertices": [[0, 0], [1, 0], [2, 0]]}', "affine"),
    ],
)
def test_malformed_inputs_report_location(tmp_path, capsys, content, needle):
    f = tmp_path / "in.txt"
    f.write_text(content)
    code, _, err = run("check", "graphic", str(f), capsys=capsys)
    assert code == EXIT_INPUT
    assert needle in err


def test_missing_file(capsys):
    assert run("verify-certificate", "/nonexistent/cert.json", capsys=capsys)[0] == EXIT_INPUT


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "slackkit.cli", "check", "graphic", "square"], capture_output=True, text=True)
    assert proc.returncode == 0
