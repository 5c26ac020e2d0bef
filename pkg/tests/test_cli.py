"""Command line behavior: schemas, exit codes, and the report pipeline."""

import json

import numpy as np
import pytest

from groupspectra.cli import main
from groupspectra.fourier import BandlimitedFunction, dense_sup_norm
from groupspectra.operators import bessel_potential, convolve_spectral, make_symbol, pseudo_diff
from groupspectra.spectra import Weight, barron_norm, sobolev_norm, sp_norm
from groupspectra.groups import CyclicGroup, DihedralGroup, TorusGroup
from groupspectra.values import ValueSpace

from test_fourier import random_blf


def write_json(path, obj):
    path.write_text(json.dumps(obj) + "\n")
    return str(path)


def sample_function(group=None, space=None, band=0, seed=5):
    group = group if group is not None else DihedralGroup(4)
    space = space if space is not None else ValueSpace(2, "operator", algebra=True)
    rng = np.random.default_rng(seed)
    return random_blf(group, space, band, rng)


class TestTransformSynth:
    def test_round_trip_through_files(self, tmp_path):
        blf = sample_function()
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        grid = tmp_path / "grid.json"
        back = tmp_path / "back.json"
        assert main(["synth", "--in", fn, "--out", str(grid)]) == 0
        assert main(["transform", "--in", str(grid), "--out", str(back)]) == 0
        recovered = BandlimitedFunction.from_json(json.loads(back.read_text()))
        assert blf.max_abs_diff(recovered) < 1e-12

    def test_grid_schema(self, tmp_path):
        blf = sample_function(TorusGroup(), ValueSpace(1, "l2"), band=1)
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        out = tmp_path / "grid.json"
        assert main(["synth", "--in", fn, "--out", str(out)]) == 0
        grid = json.loads(out.read_text())
        assert sorted(grid) == ["band", "group", "nodes", "samples", "space"]
        assert grid["band"] == 1
        assert len(grid["nodes"]) == len(grid["samples"]) == 5

    def test_synth_band_widens_grid(self, tmp_path):
        blf = sample_function(TorusGroup(), ValueSpace(1, "l2"), band=1)
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        out = tmp_path / "grid.json"
        assert main(["synth", "--in", fn, "--band", "2", "--out", str(out)]) == 0
        assert len(json.loads(out.read_text())["samples"]) == 9

    def test_transform_stdout(self, tmp_path, capsys):
        blf = sample_function(CyclicGroup(4), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        grid = tmp_path / "grid.json"
        main(["synth", "--in", fn, "--out", str(grid)])
        capsys.readouterr()
        assert main(["transform", "--in", str(grid)]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert {"group", "space", "modes"} <= set(obj)

    def test_transform_needs_band(self, tmp_path, capsys):
        grid = write_json(
            tmp_path / "grid.json",
            {
                "group": {"kind": "cyclic", "N": 2},
                "space": {"dim": 1, "norm": "l2"},
                "samples": [[[1.0, 0.0]], [[0.0, 0.0]]],
            },
        )
        assert main(["transform", "--in", grid]) == 2
        assert "band" in capsys.readouterr().err

    def test_transform_sample_count_mismatch(self, tmp_path, capsys):
        grid = write_json(
            tmp_path / "grid.json",
            {
                "group": {"kind": "cyclic", "N": 3},
                "space": {"dim": 1, "norm": "l2"},
                "band": 0,
                "samples": [[[1.0, 0.0]]],
            },
        )
        assert main(["transform", "--in", grid]) == 2
        assert "3 nodes" in capsys.readouterr().err

    def test_transform_band_above_grid_band_is_a_precision_error(self, tmp_path):
        blf = sample_function(TorusGroup(), ValueSpace(1, "l2"), band=1)
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        grid = tmp_path / "grid.json"
        main(["synth", "--in", fn, "--out", str(grid)])
        assert main(["transform", "--in", str(grid), "--band", "4"]) == 3


class TestNorm:
    def test_barron_schema_and_value(self, tmp_path, capsys):
        blf = sample_function(TorusGroup(), ValueSpace(3, "l1"), band=2)
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        assert main(["norm", "--in", fn, "--kind", "barron", "--s", "1.0"]) == 0
        out = json.loads(capsys.readouterr().out)
        expected = barron_norm(blf, Weight("abs_n"), 1.0)
        assert out["norm"] == "barron"
        assert out["s"] == 1.0
        assert out["value"] == expected.value
        assert out["per_irrep"] == {str(lab): v for lab, v in expected.per_irrep.items()}

    def test_weight_bundled_order_is_the_default(self, tmp_path, capsys):
        blf = sample_function(CyclicGroup(6), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        weight = json.dumps({"builtin": "abs_n", "s": 1.5})
        assert main(["norm", "--in", fn, "--kind", "sobolev", "--weight", weight]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["s"] == 1.5
        assert out["value"] == pytest.approx(sobolev_norm(blf, Weight("abs_n"), 1.5).value)

    def test_constant_weight_shorthand(self, tmp_path, capsys):
        blf = sample_function(CyclicGroup(4), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        assert main(["norm", "--in", fn, "--weight", "constant:2", "--s", "1"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["value"] == pytest.approx(barron_norm(blf, Weight("constant", value=2.0), 1.0).value)

    def test_sp_and_linf_kinds(self, tmp_path, capsys):
        blf = sample_function(DihedralGroup(3), ValueSpace(2, "operator", algebra=True))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        assert main(["norm", "--in", fn, "--kind", "sp", "--p", "2"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out == {"norm": "sp", "p": 2.0, "value": sp_norm(blf, 2.0)}
        assert main(["norm", "--in", fn, "--kind", "sp", "--p", "inf"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out == {"norm": "sp", "p": "inf", "value": sp_norm(blf, float("inf"))}
        assert main(["norm", "--in", fn, "--kind", "linf"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out == {"norm": "linf", "value": dense_sup_norm(blf)}


class TestOperators:
    def test_bessel_matches_library(self, tmp_path):
        blf = sample_function(TorusGroup(), ValueSpace(1, "l2"), band=2)
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        out = tmp_path / "out.json"
        assert main(["op", "bessel", "--in", fn, "--s", "1.5", "--out", str(out)]) == 0
        expected = bessel_potential(blf, Weight("abs_n"), 1.5)
        assert json.loads(out.read_text()) == expected.to_json()

    def test_bessel_needs_s(self, tmp_path, capsys):
        blf = sample_function(CyclicGroup(4), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        assert main(["op", "bessel", "--in", fn]) == 2
        assert "--s" in capsys.readouterr().err

    def test_pseudodiff_inline_symbol(self, tmp_path):
        blf = sample_function(CyclicGroup(4), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        table = {"table": {str(lab): [float(lab), 1.0] for lab in range(4)}}
        out = tmp_path / "out.json"
        rc = main(["op", "pseudodiff", "--in", fn, "--symbol", json.dumps(table), "--out", str(out)])
        assert rc == 0
        expected = pseudo_diff(blf, make_symbol(table))
        assert json.loads(out.read_text()) == expected.to_json()

    def test_pseudodiff_needs_symbol(self, tmp_path):
        blf = sample_function(CyclicGroup(4), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        assert main(["op", "pseudodiff", "--in", fn]) == 2

    def test_convolve_matches_library(self, tmp_path):
        space = ValueSpace(2, "operator", algebra=True)
        rng = np.random.default_rng(11)
        f = random_blf(DihedralGroup(4), space, 0, rng)
        g = random_blf(DihedralGroup(4), space, 0, rng)
        ff = write_json(tmp_path / "f.json", f.to_json())
        gg = write_json(tmp_path / "g.json", g.to_json())
        out = tmp_path / "out.json"
        assert main(["op", "convolve", "--in", ff, "--with", gg, "--out", str(out)]) == 0
        assert json.loads(out.read_text()) == convolve_spectral(f, g).to_json()

    def test_convolve_requires_algebra(self, tmp_path, capsys):
        blf = sample_function(CyclicGroup(4), ValueSpace(3, "l1"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        assert main(["op", "convolve", "--in", fn, "--with", fn]) == 2
        assert "algebra" in capsys.readouterr().err


class TestInputHandling:
    def test_missing_file(self, capsys):
        assert main(["norm", "--in", "/nonexistent/fn.json"]) == 2
        assert "cannot read" in capsys.readouterr().err

    def test_malformed_json_reports_position(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{\n  "group": }\n')
        assert main(["norm", "--in", str(bad)]) == 2
        assert f"{bad}:2:" in capsys.readouterr().err

    def test_flags_fill_in_missing_group_and_space(self, tmp_path, capsys):
        fn = write_json(
            tmp_path / "fn.json",
            {"modes": [{"sigma": 1, "i": 1, "j": 1, "value": [[1.0, 0.0]]}]},
        )
        rc = main(["norm", "--in", fn, "--group", "cyclic:6", "--space", "l2:1", "--s", "1"])
        assert rc == 0
        out = json.loads(capsys.readouterr().out)
        assert out["value"] == pytest.approx(np.sqrt(2.0))

    def test_conflicting_group_flag(self, tmp_path, capsys):
        blf = sample_function(CyclicGroup(6), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", blf.to_json())
        assert main(["norm", "--in", fn, "--group", "cyclic:5"]) == 2
        assert "disagrees" in capsys.readouterr().err

    def test_shorthand_parse_errors(self, tmp_path):
        blf = sample_function(CyclicGroup(4), ValueSpace(1, "l2"))
        fn = write_json(tmp_path / "fn.json", json.loads(json.dumps(blf.to_json())) | {"group": None})
        fn2 = write_json(tmp_path / "fn2.json", {"modes": []})
        assert main(["norm", "--in", fn2, "--group", "klein", "--space", "l2:1"]) == 2
        assert main(["norm", "--in", fn2, "--group", "cyclic:x", "--space", "l2:1"]) == 2
        assert main(["norm", "--in", fn2, "--group", "cyclic:4", "--space", "l2"]) == 2
        assert main(["norm", "--in", fn2, "--group", "cyclic:4", "--space", "l2:1:ring"]) == 2

    def test_function_json_band_key_is_a_floor(self, tmp_path, capsys):
        obj = {
            "group": {"kind": "torus"},
            "space": {"dim": 1, "norm": "l2"},
            "band": 2,
            "modes": [{"sigma": 1, "i": 1, "j": 1, "value": [[1.0, 0.0]]}],
        }
        fn = write_json(tmp_path / "fn.json", obj)
        out = tmp_path / "grid.json"
        assert main(["synth", "--in", fn, "--out", str(out)]) == 0
        assert len(json.loads(out.read_text())["samples"]) == 9


def tiny_suite_config(tmp_path, **overrides):
    config = {
        "groups": [{"kind": "cyclic", "N": 4}],
        "bands": [0],
        "spaces": [{"dim": 1, "norm": "l2", "algebra": True}],
        "orders": [0.0, 1.0],
        "functions_per_case": 2,
        "seed": 9,
    }
    config.update(overrides)
    return write_json(tmp_path / "suite.json", config)


class TestSuite:
    def test_writes_report_bundle(self, tmp_path, capsys):
        config = tiny_suite_config(tmp_path)
        outdir = tmp_path / "report"
        assert main(["suite", "--in", config, "--out", str(outdir)]) == 0
        captured = capsys.readouterr().out
        assert captured.startswith("suite: total=")
        assert "ok=true" in captured
        report = json.loads((outdir / "report.json").read_text())
        assert report["summary"]["ok"] is True
        assert report["environment"]["config"]["seed"] == 9
        csv_lines = (outdir / "report.csv").read_text().splitlines()
        assert csv_lines[0] == "name,variant,lhs,rhs,constant,slack,pass,params"
        assert len(csv_lines) == report["summary"]["total"] + 1
        for fig in ("slack", "passrate", "sobolev"):
            path = outdir / f"report_{fig}.png"
            assert path.is_file() and path.stat().st_size > 0

    def test_no_figures(self, tmp_path, capsys):
        config = tiny_suite_config(tmp_path)
        outdir = tmp_path / "report"
        assert main(["suite", "--in", config, "--out", str(outdir), "--no-figures"]) == 0
        assert sorted(p.name for p in outdir.iterdir()) == ["report.csv", "report.json"]

    def test_deterministic_across_runs(self, tmp_path, capsys):
        config = tiny_suite_config(tmp_path)
        a, b = tmp_path / "a", tmp_path / "b"
        assert main(["suite", "--in", config, "--out", str(a), "--no-figures"]) == 0
        assert main(["suite", "--in", config, "--out", str(b), "--no-figures"]) == 0
        assert (a / "report.json").read_bytes() == (b / "report.json").read_bytes()
        assert (a / "report.csv").read_bytes() == (b / "report.csv").read_bytes()

    def test_seed_flag_overrides_config(self, tmp_path, capsys):
        config = tiny_suite_config(tmp_path)
        a, b = tmp_path / "a", tmp_path / "b"
        assert main(["suite", "--in", config, "--out", str(a), "--no-figures"]) == 0
        assert main(["suite", "--in", config, "--out", str(b), "--seed", "10", "--no-figures"]) == 0
        assert (a / "report.json").read_bytes() != (b / "report.json").read_bytes()

    def test_profile_flag_wins_over_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("GROUPSPECTRA_PROFILE", "loose")
        config = tiny_suite_config(tmp_path)
        outdir = tmp_path / "report"
        rc = main(["suite", "--in", config, "--out", str(outdir), "--profile", "strict", "--no-figures"])
        assert rc == 0
        report = json.loads((outdir / "report.json").read_text())
        assert report["environment"]["profile"] == "strict"

    def test_env_profile_applies_to_default_config(self, monkeypatch, capsys):
        monkeypatch.setenv("GROUPSPECTRA_PROFILE", "bogus")
        assert main(["suite"]) == 2
        assert "profile" in capsys.readouterr().err

    def test_config_validation_failure(self, tmp_path, capsys):
        config = tiny_suite_config(tmp_path, bands=[0, 1])
        assert main(["suite", "--in", config]) == 2
        assert "pair up" in capsys.readouterr().err
