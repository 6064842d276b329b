import json

import pytest

from momentpoly import main
from momentpoly.asymptotics import mu_location
from momentpoly.exact import leading_coefficient


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coeffs(capsys, cache_dir):
    code, out, err = run(capsys, "coeffs", "--k", "2", "--cache-dir", cache_dir)
    assert code == 0
    assert out == "r,b_r,c_r\n0,1,1/12\n1,8,2/3\n2,23,23/12\n3,28,7/3\n4,12,1\n"
    assert err.startswith("MomentPoly ")


def test_coeffs_json_and_range(capsys, cache_dir):
    code, out, _ = run(
        capsys, "coeffs", "--k", "7", "--r", "1..2", "--format", "json", "--cache-dir", cache_dir
    )
    assert code == 0
    rows = json.loads(out)
    assert [row["r"] for row in rows] == [1, 2]
    assert [row["b_r"] for row in rows] == ["343", "57428"]
    assert rows[0]["c_r"] == str(leading_coefficient(7) * 343)


def test_coeffs_sci(capsys, cache_dir):
    _, out, _ = run(capsys, "coeffs", "--k", "7", "--r", "3", "--sci", "--cache-dir", cache_dir)
    assert out.splitlines()[1].startswith("3,6.25495e+06,")


@pytest.mark.parametrize(
    "argv",
    [
        ["coeffs", "--k", "0"],
        ["coeffs", "--k", "2", "--r", "0..5"],
        ["coeffs", "--k", "2", "--r", "3..1"],
        ["table1", "--k", "1"],
        ["table2", "--range", "2..121"],
        ["figure1", "--stride", "0"],
        ["figure1", "--J", "9"],
        ["figure1", "--M", "4"],
        ["maxcoeff", "--k", "7", "--rho", "0"],
        ["series", "q", "13"],
        ["series", "u", "3"],
        ["series", "x", "3"],
        ["saddle"],
        ["unknown"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 1


def test_unusable_cache_is_a_failure(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")

    code, _, err = run(capsys, "coeffs", "--k", "2", "--cache-dir", str(blocker))
    assert code == 2
    assert "ERROR:" in err


def test_cache_from_environment(capsys, tmp_path, monkeypatch, fresh_tables):
    monkeypatch.setenv("MOMENTPOLY_CACHE", str(tmp_path))
    code, _, _ = run(capsys, "coeffs", "--k", "3")
    assert code == 0
    assert tmp_path.joinpath("bk_3.tbl").is_file()


def test_output_file(capsys, cache_dir, tmp_path):
    path = tmp_path / "out.csv"
    code, out, err = run(capsys, "coeffs", "--k", "2", "--cache-dir", cache_dir, "-o", str(path))
    assert code == 0
    assert out == ""
    assert "Wrote 5 rows" in err
    assert path.read_text(encoding="utf-8").startswith("r,b_r,c_r\n0,1,1/12\n")


def test_table1(capsys, cache_dir):
    code, out, _ = run(capsys, "table1", "--k", "7", "--r", "25", "--cache-dir", cache_dir)
    assert code == 0
    header, row = out.splitlines()
    assert header == "r,b_r,binomial_low,precise,saddle,uniform,binomial_high"
    cells = row.split(",")
    assert cells[:2] == ["25", "2.74917e+34"]
    assert cells[4] == "0.995371"
    expected = [0.324337, 0.9589778584, 0.995371, 1.00217, 0.0871266]
    assert [float(cell) for cell in cells[2:]] == pytest.approx(expected, rel=1e-5)


def test_table2(capsys, cache_dir):
    code, out, _ = run(capsys, "table2", "--range", "6..7", "--cache-dir", cache_dir)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,argmax,centre,difference,in_interval"
    assert lines[2].startswith("7,42,41.712279,")
    assert lines[2].endswith(",pass")


def test_figure1(capsys, cache_dir):
    code, out, _ = run(
        capsys,
        "figure1", "--k", "7", "--stride", "16", "--estimators", "saddle,corrected",
        "--cache-dir", cache_dir,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,log_c_r,saddle,corrected"
    assert [line.split(",")[0] for line in lines[1:]] == ["16", "32", "48"]


def test_maxcoeff(capsys, cache_dir):
    code, out, _ = run(capsys, "maxcoeff", "--k", "7", "--format", "json", "--cache-dir", cache_dir)
    assert code == 0
    (row,) = json.loads(out)
    assert row["argmax"] == 42
    assert row["mu"] == str(mu_location(7)[0])
    assert row["unimodal"] is True


def test_saddle(capsys):
    code, out, _ = run(capsys, "saddle", "--k", "5", "--r", "1..3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,u,U,f_at_u,u_pilot,U_pilot,delta_sign,gamma3_imag"
    assert len(lines) == 4


@pytest.mark.parametrize(
    "argv, text",
    [
        (["series", "q", "2"], "13/72*r^3-41/144*r^2+5/48*r"),
        (["series", "g", "1"], "-7/12*r^2+7/12*r"),
        (["series", "b", "1"], "k^3"),
        (["series", "lambda", "1", "--k", "5"], "1"),
        (["series", "lambda", "2", "--k", "5"], "29/25"),
    ],
)
def test_series(capsys, argv, text):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == text + "\n"


def test_series_in_x(capsys):
    code, out, _ = run(capsys, "series", "u", "2", "--k", "5")
    assert code == 0
    assert out == "84/625*x^2-29/25*x+1\n"


def test_log_file(capsys, cache_dir, tmp_path):
    log_file = tmp_path / "run.log"
    code, _, _ = run(capsys, "coeffs", "--k", "2", "--cache-dir", cache_dir, "--log-file", str(log_file))
    assert code == 0

    records = [json.loads(line) for line in log_file.read_text(encoding="utf-8").splitlines()]
    assert records[0]["message"] == "Info"
    assert records[0]["levelname"] == "INFO"
    assert "version" in records[0]
