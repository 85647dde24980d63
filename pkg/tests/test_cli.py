import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ritzrelu.cli import main, parse_args
from ritzrelu.output import emit_csv, read_csv


def test_provocation_defaults():
    c = parse_args(["provocation"]).resolved()
    assert (c.width, c.grid_points, c.epochs, c.lr, c.frequency, c.engine) == (50, 250, 5000, 1e-3, 3, "ad")


def test_fd_vs_ad_defaults():
    c = parse_args(["fd-vs-ad"]).resolved()
    assert c.lr == 5e-3 and c.fd_step == 1e-3


def test_hf_frequency():
    assert parse_args(["provocation-hf"]).resolved().frequency == 4


def test_global_flags_parsed():
    c = parse_args(["regress", "--seed", "4", "--width", "8", "--activation", "tanh", "--lr", "2e-3",
                    "--out-dir", "x"]).resolved()
    assert (c.seed, c.width, c.activation, c.lr, c.out_dir) == (4, 8, "tanh", 2e-3, "x")


def test_landscape_flags():
    c = parse_args(["landscape", "--pairs", "1,2;2,3", "--resolution", "11"]).resolved()
    assert c.pairs == ((1, 2), (2, 3)) and c.resolution == 11


@pytest.mark.parametrize("argv,flag", [
    (["provocation", "--grid-points", "1"], "--grid-points"),
    (["provocation", "--lr", "-1"], "--lr"),
    (["provocation", "--engine", "reverse"], "--engine"),
    (["landscape", "--pairs", "1"], "--pairs"),
])
def test_bad_values_name_the_flag(argv, flag, capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args(argv)
    assert exc.value.code == 2
    assert flag in capsys.readouterr().err


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit):
        parse_args(["provocation", "--bogus", "1"])


def test_exact_engine_with_smooth_activation_warns():
    with pytest.warns(UserWarning, match="identical"):
        parse_args(["regress", "--engine", "exact", "--activation", "tanh"]).resolved()


def test_emit_csv_schema(tmp_path):
    n = emit_csv(tmp_path / "t.csv", ["epoch", "energy", "l2_error", "linf_error"], [(1, 0.5, 0.1, 0.2)])
    text = (tmp_path / "t.csv").read_text()
    assert n == 1 and text.startswith("epoch,energy,l2_error,linf_error\n1,0.5,") and text.endswith("\n")
    with pytest.raises(ValueError):
        emit_csv(tmp_path / "bad.csv", ["a", "b"], [(1, 2, 3)])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(allow_nan=False, allow_infinity=False, width=64), min_size=1, max_size=20))
def test_csv_round_trip_is_bit_exact(tmp_path_factory, values):
    path = tmp_path_factory.mktemp("rt") / "v.csv"
    emit_csv(path, ["i", "v"], enumerate(values))
    _, data = read_csv(path)
    back = data[:, 1]
    for a, b in zip(values, back):
        assert a == b and math.copysign(1, a) == math.copysign(1, b)


def test_cli_run_writes_manifest(tmp_path, capsys):
    out = tmp_path / "run"
    assert main(["regress", "--width", "4", "--epochs", "20", "--out-dir", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    listed = {f["path"] for f in manifest["files"]}
    on_disk = {p.name for p in out.iterdir()} - {"manifest.json"}
    assert listed == on_disk
    for f in manifest["files"]:
        lines = (out / f["path"]).read_text().count("\n")
        if f["path"].endswith(".csv"):
            assert lines - 1 == f["rows"]
    assert manifest["seed"] == 0
    assert json.loads(capsys.readouterr().out)["final_mse"] > 0


def test_cli_check_gradients_table(tmp_path, capsys):
    code = main(["check-gradients", "--width", "10", "--draws", "2", "--out-dir", str(tmp_path)])
    out = capsys.readouterr().out
    assert "engines_agree" in out and "mse_grad_matches_fd" in out
    assert code in (0, 1)


def test_repeated_runs_byte_identical(tmp_path):
    for d in ("a", "b"):
        main(["init-at-solution", "--width", "6", "--epochs", "30", "--out-dir", str(tmp_path / d)])
    names = sorted(p.name for p in (tmp_path / "a").glob("*.csv"))
    assert names
    for name in names:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    _, data = read_csv(tmp_path / "a" / "field_ad.csv")
    assert data.shape == (250, 3) and np.all(np.isfinite(data))
