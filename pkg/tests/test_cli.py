import json
import math

import numpy as np
import pytest

from blockrmt.cli import EXIT_OK, EXIT_TOLERANCE, EXIT_USAGE, main, parse_grid
from blockrmt.freeconv import support_endpoints
from blockrmt.limits import FREECONV_FAMILY
from blockrmt.measures import read_csv, semicircle_density

from conftest import CONFIGS, SEED


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _write_config(path, raw):
    path.write_text(json.dumps(raw, indent=2))
    return str(path)


def test_parse_grid_rows():
    assert parse_grid("0:1:0.25").tolist() == [0.0, 0.25, 0.5, 0.75]
    assert parse_grid("-1:4:0.01").size == 500
    assert parse_grid("0:1:0.3").size == 3


def test_resolved_config_on_stderr(capsys):
    code, _, err = _run(capsys, "support", "--t", "1")
    assert code == EXIT_OK
    assert err.startswith("resolved config: ") and '"t": 1.0' in err


def test_unknown_flag_is_an_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["support", "--t", "1", "--verbose"])
    assert info.value.code == 2


def test_sample_counts_and_determinism(tmp_path, capsys):
    args = ["sample", "--n", "2", "--k", "1", "--a", "gue", "--b", "gue", "--w", "zero", "--trials", "1",
            "--seed", "7"]
    assert _run(capsys, *args, "--out", str(tmp_path / "one"))[0] == EXIT_OK
    header, cols = read_csv(tmp_path / "one" / "eigenvalues.csv")
    assert header == ["index", "eigenvalue"] and cols[1].size == 2
    args = ["sample", "--n", "5", "--k", "4", "--trials", "3", "--seed", str(SEED)]
    _run(capsys, *args, "--out", str(tmp_path / "a"))
    _run(capsys, *args, "--out", str(tmp_path / "b"), "--workers", "3")
    for name in ("eigenvalues.csv", "histogram.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    assert read_csv(tmp_path / "a" / "eigenvalues.csv")[1][1].size == 60


@pytest.mark.slow
def test_sample_desk_scale_count(tmp_path, capsys):
    code, out, _ = _run(capsys, "sample", "--n", "40", "--k", "40", "--trials", "20", "--seed", str(SEED),
                        "--out", str(tmp_path))
    assert code == EXIT_OK and "wrote 32000 eigenvalues" in out


def test_predict_freeconv_mass(tmp_path, capsys):
    out = tmp_path / "f.csv"
    # the grid covers the support [s1(1), s2(1)] = [-1.48, 4.48]
    assert _run(capsys, "predict", "--model", "freeconv-f", "--t", "1", "--grid", "-2:5:0.01", "--out", str(out))[0] == 0
    header, (x, dens) = read_csv(out)
    assert header == ["x", "density"]
    assert 0.99 <= np.trapezoid(dens, x) <= 1.01
    side = json.loads(out.with_suffix(".json").read_text())
    assert side["support"][0] == pytest.approx(list(support_endpoints(1.0)))
    assert side["mass"] == pytest.approx(1, abs=1e-6)


def test_predict_truncated_grid_mass(tmp_path, capsys):
    # -1:4 cuts off both tails of the support, so the grid mass is the law's mass on [-1, 3.99]
    out = tmp_path / "f.csv"
    _run(capsys, "predict", "--model", "freeconv-f", "--t", "1", "--grid", "-1:4:0.01", "--out", str(out))
    x, dens = read_csv(out)[1]
    law = FREECONV_FAMILY.law(1.0)
    assert np.trapezoid(dens, x) == pytest.approx(law.cdf(x[-1]) - law.cdf(x[0]), abs=1e-4)


def test_predict_gaussian_coupling_support(tmp_path, capsys):
    out = tmp_path / "g.csv"
    _run(capsys, "predict", "--model", "wigner-gaussian", "--grid", "-5:5:0.01", "--out", str(out))
    x, dens = read_csv(out)[1]
    assert np.all(dens[np.abs(x) > 2 * math.sqrt(5)] == 0)
    assert np.all(dens[np.abs(x) < 4.4] > 0)


def test_predict_t_zero_is_semicircle(tmp_path, capsys):
    out = tmp_path / "s.csv"
    _run(capsys, "predict", "--model", "freeconv-f", "--t", "0", "--grid", "-3:3:0.05", "--out", str(out))
    x, dens = read_csv(out)[1]
    np.testing.assert_array_equal(dens, semicircle_density(x))


def test_predict_usage_errors(tmp_path, capsys):
    out = str(tmp_path / "x.csv")
    assert _run(capsys, "predict", "--model", "freeconv-f", "--grid", "0:1:0.1", "--out", out)[0] == EXIT_USAGE
    assert _run(capsys, "predict", "--model", "ss-law", "--alphas", "1", "--betas", "1,2", "--grid", "0:1:0.1",
                "--out", out)[0] == EXIT_USAGE
    assert _run(capsys, "predict", "--model", "semicircle", "--grid", "1:0:0.1", "--out", out)[0] == EXIT_USAGE


def test_predict_negative_list_values(tmp_path, capsys):
    out = tmp_path / "ss.csv"
    code, stdout, _ = _run(capsys, "predict", "--model", "ss-law", "--alphas", "-3,3", "--betas", "1,1",
                           "--grid", "-6:6:0.01", "--out", str(out))
    assert code == EXIT_OK
    x, dens = read_csv(out)[1]
    assert np.trapezoid(dens, x) == pytest.approx(1, abs=1e-3)


def test_compare_passing_config(tmp_path, capsys):
    raw = dict(CONFIGS["ss-law"], tolerances={"ks_max": 0.05})
    code, out, _ = _run(capsys, "compare", _write_config(tmp_path / "c.json", raw), "--out", str(tmp_path / "o"))
    assert code == EXIT_OK and "ks: pass" in out
    report = json.loads((tmp_path / "o" / "report.json").read_text())
    assert report["passed"] and report["schema_version"] == 1


@pytest.mark.slow
def test_compare_desk_config(tmp_path, capsys):
    raw = dict(CONFIGS["wigner-gaussian"], tolerances={"ks_max": 0.05, "moment_rel": {"2": 0.05, "4": 0.08}})
    code, _, _ = _run(capsys, "compare", _write_config(tmp_path / "c.json", raw), "--out", str(tmp_path / "o"))
    assert code == EXIT_OK


def test_compare_wrong_theory(tmp_path, capsys):
    raw = dict(n=400, k=1, a="gue", b="gue", w="zero", trials=1, seed=SEED, theory="marchenko-pastur",
               tolerances={"ks_max": 0.05})
    code, out, _ = _run(capsys, "compare", _write_config(tmp_path / "c.json", raw), "--out", str(tmp_path / "o"))
    assert code == EXIT_TOLERANCE and "ks: FAIL" in out
    assert json.loads((tmp_path / "o" / "report.json").read_text())["ks"] > 0.2


def test_compare_missing_config(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    code, _, err = _run(capsys, "compare", str(missing))
    assert code == EXIT_USAGE and str(missing) in err


def test_compare_bad_config(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 4,\n "k": }')
    code, _, err = _run(capsys, "compare", str(path))
    assert code == EXIT_USAGE and "line 2" in err
    code, _, err = _run(capsys, "compare", _write_config(path, dict(CONFIGS["ss-law"], trials=0)))
    assert code == EXIT_USAGE and "trials" in err


def test_compare_rerun_is_byte_identical(tmp_path, capsys):
    cfg = _write_config(tmp_path / "c.json", CONFIGS["finite-k"] | {"n": 50})
    _run(capsys, "compare", cfg, "--out", str(tmp_path / "a"))
    _run(capsys, "compare", cfg, "--out", str(tmp_path / "b"), "--workers", "2")
    for name in ("report.json", "eigenvalues.csv", "histogram.csv", "theory_density.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_moments_model_and_csv(tmp_path, capsys):
    code, out, _ = _run(capsys, "moments", "--model", "semicircle", "--max-order", "4")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert code == EXIT_OK and [float(v) for _, v in rows] == pytest.approx([0, 1, 0, 2], abs=1e-9)
    _run(capsys, "sample", "--n", "3", "--k", "2", "--seed", "1", "--out", str(tmp_path))
    code, out, _ = _run(capsys, "moments", "--eigenvalues", str(tmp_path / "eigenvalues.csv"), "--max-order", "2")
    assert code == EXIT_OK and out.splitlines()[0] == "order,moment"
    assert _run(capsys, "moments")[0] == EXIT_USAGE


def _endpoints(out):
    vals = dict(line.split(" = ") for line in out.splitlines() if " = " in line)
    return float(vals["s1"]), float(vals["s2"])


def test_support_command(capsys):
    code, out, _ = _run(capsys, "support", "--t", "1")
    assert code == EXIT_OK
    residuals = [float(v) for v in out.splitlines()[2].split(":")[1].split()]
    assert max(abs(r) for r in residuals) <= 1e-8
    s1, s2 = _endpoints(out)
    m1, m2 = _endpoints(_run(capsys, "support", "--t", "-1")[1])
    assert (m1, m2) == (-s2, -s1)
    n1, n2 = _endpoints(_run(capsys, "support", "--t", "0.01")[1])
    assert abs(n1 + 2) < 0.05 and abs(n2 - 2) < 0.05
    code, _, err = _run(capsys, "support", "--t", "0")
    assert code == EXIT_USAGE and "[-2, 2]" in err
