"""Command-line contract: exit codes, CSV/JSON shapes, round trips."""

import io
import json
import math

import pytest

from curvelab import cli


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_classify_spacelike():
    code, text = run(["classify", "--curve", "hyperbolic_geodesic",
                      "--at", "0"])
    assert code == 0
    assert "spacelike" in text


def test_classify_out_of_domain_exits_2(capsys):
    code, _ = run(["classify", "--curve", "hyperbolic_geodesic",
                   "--at", "99"])
    assert code == 2
    assert "OutOfDomain" in capsys.readouterr().err


def test_classify_pole_exits_2(capsys):
    # a paper_example domain straddling the sine pole is rejected by name
    code, _ = run(["classify", "--curve", "paper_example",
                   "--domain", "3.0", "3.3", "--at", "3.1"])
    assert code == 2
    assert "PoleEncountered" in capsys.readouterr().err


def test_unknown_curve_exits_64():
    code, _ = run(["classify", "--curve", "nope", "--at", "0"])
    assert code == 64


def test_missing_subcommand_exits_64():
    code, _ = run([])
    assert code == 64


def test_frenet_csv_shape(tmp_path):
    path = tmp_path / "helix.csv"
    code, _ = run(["frenet", "--curve", "lorentz_helix", "--samples", "20",
                   "-o", str(path)])
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == cli.FRENET_HEADER
    assert lines[-1] == "# degenerate_samples=0"
    rows = [line.split(",") for line in lines[1:-1]]
    assert len(rows) == 20
    assert all(len(r) == 26 for r in rows)
    kappa1 = [float(r[21]) for r in rows]
    assert max(kappa1) - min(kappa1) < 1e-8


def test_frenet_csv_round_trips_exact_floats(tmp_path):
    path = tmp_path / "helix.csv"
    run(["frenet", "--curve", "lorentz_helix", "--samples", "5",
         "-o", str(path)])
    for line in path.read_text().splitlines()[1:-1]:
        for tok in line.split(","):
            v = float(tok)
            if tok not in ("-1", "1"):          # the eps column
                assert repr(v) == tok


def test_frenet_degenerate_curve(tmp_path):
    path = tmp_path / "flat.csv"
    code, _ = run(["frenet", "--curve", "paper_example", "--samples", "12",
                   "-o", str(path)])
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines == [cli.FRENET_HEADER, "# degenerate_samples=12"]


def test_frenet_one_sample_exits_64():
    code, _ = run(["frenet", "--curve", "lorentz_helix", "--samples", "1"])
    assert code == 64


def test_rectify_check_helix_fails(tmp_path):
    path = tmp_path / "rep.json"
    code, _ = run(["rectify-check", "--curve", "lorentz_helix",
                   "--samples", "40", "-o", str(path)])
    assert code == 1
    rep = json.loads(path.read_text())
    assert rep["verdict"] is False
    assert rep["thm31"]["rms_residual"] > 1e-2
    assert set(rep) == {"curve", "samples", "thm31", "thm33",
                        "constant_vector_drift", "verdict", "tolerances",
                        "warnings"}


def test_rectify_check_constructed_via_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "id": "hyperbolic_clelia",
        "construct": {"a": 1.0, "t0": 0.3, "domain": [0.35, 1.2]},
    }))
    path = tmp_path / "rep.json"
    code, _ = run(["rectify-check", "--config", str(cfg), "--samples", "50",
                   "-o", str(path)])
    assert code == 0
    rep = json.loads(path.read_text())
    assert rep["verdict"] is True
    assert rep["warnings"]


def test_rectify_check_malformed_config_exits_64(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text("{not json")
    code, _ = run(["rectify-check", "--config", str(cfg)])
    assert code == 64


def test_construct_reproduces_example_coordinates(tmp_path):
    # phase -pi/2 puts the radius-law maximum at arclength pi/2, where the
    # constructed point coincides with the sphere point itself
    path = tmp_path / "cons.csv"
    code, text = run(["construct", "--curve", "hyperbolic_geodesic",
                      "--a", "1", "--t0", repr(-math.pi / 2),
                      "--construct-domain", "0.1", "1.9",
                      "--samples", "11", "-o", str(path)])
    assert code == 0
    assert "registered: " in text
    lines = path.read_text().splitlines()
    assert lines[0] == cli.POSITION_HEADER
    rows = {float(r.split(",")[0]): [float(v) for v in r.split(",")[1:]]
            for r in lines[1:]}
    u = math.pi / 2
    nearest = min(rows, key=lambda s: abs(s - u))
    # the grid does not hit pi/2 exactly; evaluate the registered id directly
    reg_id = text.split("registered: ")[1].strip()
    from curvelab import curves
    p = curves.eval_curve(curves.make_spec(reg_id), u).position()
    assert math.isclose(p.components[0], math.cosh(u), rel_tol=1e-12)
    assert abs(p.components[1]) < 1e-12
    assert math.isclose(p.components[2], math.sinh(u), rel_tol=1e-12)
    assert abs(rows[nearest][0] - math.cosh(nearest)) < 0.05


def test_construct_zero_scale_exits_64():
    code, _ = run(["construct", "--curve", "hyperbolic_geodesic", "--a", "0"])
    assert code == 64


def test_construct_non_sphere_input_exits_2(capsys):
    code, _ = run(["construct", "--curve", "lorentz_helix", "--a", "1"])
    assert code == 2
    assert "NotOnHyperbolicSphere" in capsys.readouterr().err


def test_synthesize_negative_ds_exits_64():
    code, _ = run(["synthesize", "--ds", "-0.1"])
    assert code == 64


def test_synthesize_and_check_round_trip(tmp_path):
    path = tmp_path / "syn.csv"
    code, text = run(["synthesize", "--profile", "cosh_over_s",
                      "--samples", "21", "-o", str(path)])
    assert code == 0
    assert "max_gram_drift=" in text
    lines = path.read_text().splitlines()
    assert lines[0] == cli.SYNTH_HEADER

    rep_path = tmp_path / "rep.json"
    code, _ = run(["rectify-check", "--from-synthesis", str(path),
                   "--c", "0", "--samples", "21", "-o", str(rep_path)])
    assert code == 0
    assert json.loads(rep_path.read_text())["verdict"] is True


def test_synthesize_drift_ratio(tmp_path):
    def drift(ds):
        _, text = run(["synthesize", "--profile", "constant",
                       "--domain", "0", "2", "--ds", ds, "--drift-tol", "1",
                       "--samples", "3", "-o", str(tmp_path / "d.csv")])
        return float(text.split("max_gram_drift=")[1].split()[0])

    assert drift("0.2") / drift("0.1") > 10.0


def test_synthesize_drift_abort_writes_partial(tmp_path):
    path = tmp_path / "partial.csv"
    code, text = run(["synthesize", "--profile", "constant",
                      "--domain", "0", "2", "--ds", "0.2",
                      "--drift-tol", "1e-9",
                      "--samples", "5", "-o", str(path)])
    assert code == 1
    assert "error" in text
    lines = path.read_text().splitlines()
    assert lines[0] == cli.SYNTH_HEADER
    assert len(lines) > 1


def test_verify_unknown_suite_exits_64():
    code, _ = run(["verify", "bogus"])
    assert code == 64


def test_verify_lorentz_suite_passes():
    code, text = run(["verify", "lorentz"])
    assert code == 0
    assert "criterion 1" in text and "criterion 8" in text
    assert "FAIL" not in text
