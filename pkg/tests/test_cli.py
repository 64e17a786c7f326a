"""Subcommand matrix: exit codes, document round-trips, error paths."""

import json

from conftest import algebra_path
from skewpbw.cli import EXIT_INPUT, EXIT_OK, EXIT_UNKNOWN, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys):
    code, out, err = run(["--format", "json"] + argv, capsys)
    doc = json.loads(out) if out.strip() else {}
    return code, doc, err


WITTEN = algebra_path("witten.alg")
QPLANE = algebra_path("qplane_m1.alg")
WEYLZ = algebra_path("weyl_z.alg")
COMM = algebra_path("commutative_xy.alg")


def test_divide_witten(capsys):
    code, doc, _ = run_json(
        [
            "divide",
            "--algebra", WITTEN,
            "--f", "x^2*y + x*z + y*z",
            "--divisors", "x-1, y+2, z+3",
        ],
        capsys,
    )
    assert code == EXIT_OK
    assert doc["result"]["identity_verified"] is True
    assert len(doc["result"]["quotients"]) == 3


def test_gb_improper_unit(capsys):
    code, doc, _ = run_json(
        ["gb", "--algebra", QPLANE, "--gens", "x-1, y-1"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["status"] == "unit"


def test_root_weyl_point(capsys):
    code, doc, _ = run_json(
        ["root", "--algebra", WEYLZ, "--f", "1", "--point", "1,0,0"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["root"] == "yes"


def test_member_no_is_exit_zero(capsys):
    code, doc, _ = run_json(
        ["member", "--algebra", COMM, "--f", "1", "--gens", "x, y"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["member"] == "no"


def test_unknown_exit_code(capsys):
    code, doc, _ = run_json(
        [
            "gb",
            "--algebra", WEYLZ,
            "--gens", "x^3*y + z, y^2*z - x",
            "--budget-degree", "2",
        ],
        capsys,
    )
    assert code == EXIT_UNKNOWN
    assert doc["status"] == "unknown"


def test_parse_error_exit_code(capsys):
    code, out, err = run(
        ["normalize", "--algebra", WITTEN, "--f", "x*w"], capsys
    )
    assert code == EXIT_INPUT
    assert "error:" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(
        ["normalize", "--algebra", "no-such-file.alg", "--f", "x"], capsys
    )
    assert code == EXIT_INPUT


def test_center_subcommand(capsys):
    code, doc, _ = run_json(["center", "--algebra", QPLANE], capsys)
    assert code == EXIT_OK
    assert doc["result"]["generators"] == ["x^2", "y^2"]


def test_center_unsupported_exits_1(capsys):
    code, _, err = run(["center", "--algebra", WITTEN], capsys)
    assert code == EXIT_INPUT


def test_saturate_and_vanish(capsys):
    code, doc, _ = run_json(
        ["saturate", "--algebra", QPLANE, "--gens", "x-1, y"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["status"] == "proper"

    code, doc, _ = run_json(
        [
            "vanish",
            "--algebra", QPLANE,
            "--polys", "x",
            "--domain", "grid:0..1",
        ],
        capsys,
    )
    assert code == EXIT_OK
    table = dict(tuple(row) for row in doc["result"]["table"])
    assert table["(1, 1)"] == "degenerate"
    assert table["(1, 0)"] == "non-root"


def test_points_ideal_and_witness(capsys):
    code, doc, _ = run_json(
        [
            "points-ideal",
            "--algebra", COMM,
            "--points", "0,0",
            "--trunc-degree", "1",
        ],
        capsys,
    )
    assert code == EXIT_OK
    assert sorted(doc["result"]["basis"]) == ["x", "y"]

    code, doc, _ = run_json(
        ["witness", "--algebra", COMM, "--points", "0,0; 1,1"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["witness"]


def test_sandwich_subcommand(capsys):
    code, doc, _ = run_json(
        [
            "sandwich",
            "--algebra", QPLANE,
            "--gens", "x^4",
            "--domain", "grid:-2..2",
            "--trunc-degree", "4",
            "--max-power", "4",
        ],
        capsys,
    )
    assert code == EXIT_OK
    assert doc["result"]["inclusion_radical"] == "confirmed"
    assert doc["result"]["inclusion_points"] == "confirmed"


def test_normal_subcommand(capsys):
    code, doc, _ = run_json(
        ["normal", "--algebra", QPLANE, "--f", "x+y"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["status"] == "not_normal"
    assert "counter_witness" in doc["result"]


def test_consistency_subcommand(capsys):
    code, doc, _ = run_json(
        ["consistency", "--algebra", WITTEN, "--degree-bound", "3"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["consistent"] is True
    assert doc["result"]["quasi_commutative"] is False


def test_mul_and_block_order(capsys):
    code, doc, _ = run_json(
        ["mul", "--algebra", WITTEN, "--f", "z", "--g", "x"], capsys
    )
    assert code == EXIT_OK
    assert doc["result"]["product"] == "x*z - x"

    code, doc, _ = run_json(
        [
            "gb",
            "--algebra", WITTEN,
            "--order", "block:x",
            "--gens", "x + z^2, y",
        ],
        capsys,
    )
    assert code == EXIT_OK


def test_deterministic_output(capsys):
    args = ["gb", "--algebra", QPLANE, "--gens", "x^2 - y, x*y + x"]
    code1, doc1, _ = run_json(args, capsys)
    code2, doc2, _ = run_json(args, capsys)
    assert code1 == code2 == EXIT_OK
    assert doc1 == doc2


def test_text_format(capsys):
    code, out, _ = run(
        ["normalize", "--algebra", QPLANE, "--f", "y*x"], capsys
    )
    assert code == EXIT_OK
    assert "normal_form: -x*y" in out
