import json
import subprocess
import sys

import pytest

from higherver import cli
from higherver.charring import BasisDecomp, LaurentPoly, tilting_char
from higherver.errors import FusionConsistency
from higherver.sl2tilt import TiltingSum
from higherver.versl2 import FusionTable, VerClass, VerCtx, fusion


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def payload(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)["payload"]


def test_sl2_factors(capsys):
    p = payload(capsys, "sl2", "factors", "6", "--p", "3", "--basis", "simple")
    assert p["terms"] == {"6": 1, "4": 2, "0": 1}
    decomp = BasisDecomp.from_json({"basis": p["basis"], "p": 3, "terms": p["terms"]})
    assert decomp.character() == tilting_char(6, 3)


def test_sl2_tensor(capsys):
    p = payload(capsys, "sl2", "tensor", "1", "1", "--p", "2")
    assert p["terms"] == {"2": 1}
    assert TiltingSum.from_json({"p": 2, "terms": p["terms"]}).character() == tilting_char(1, 2) ** 2


def test_sl2_ideal(capsys):
    p = payload(capsys, "sl2", "ideal", "8", "--p", "3", "--n", "2")
    assert p["in_I_n"] is True and p["cyclotomic_vanishes"] is True
    p = payload(capsys, "sl2", "ideal", "7", "--p", "3", "--n", "2")
    assert p["in_I_n"] is False and p["cyclotomic_vanishes"] is False


def test_sl2_tilt_char_round_trip(capsys):
    p = payload(capsys, "sl2", "tilt-char", "17", "--p", "3")
    assert LaurentPoly.from_json(p["character"]) == tilting_char(17, 3)


def test_sl2_hom(capsys):
    assert payload(capsys, "sl2", "hom", "4", "4", "--p", "3")["hom_dim"] == 2


def test_ver_cartan(capsys):
    p = payload(capsys, "ver", "cartan", "--p", "3", "--n", "2")
    assert p["matrix"][4] == [1, 0, 0, 0, 2, 0]
    assert p["symmetric"] is True


def test_ver_simples(capsys):
    p = payload(capsys, "ver", "simples", "--p", "2", "--n", "2")
    assert [(r["i"], r["dim"]) for r in p] == [(0, "1"), (1, "2")]


def test_ver_fusion_round_trip(capsys, tmp_path):
    out = tmp_path / "fusion.json"
    code, _ = run(capsys, "ver", "fusion", "--p", "2", "--n", "2", "--out", str(out))
    assert code == 0
    table = FusionTable.from_json(json.loads(out.read_text())["payload"])
    assert table == fusion(VerCtx(2, 2))
    assert table.N[1][1] == (2, 0)


def test_ver_fusion_tsv(capsys):
    code, out = run(capsys, "ver", "fusion", "--p", "2", "--n", "2", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[-1] == "1\t1\t2\t0"


def test_ver_image(capsys, tmp_path):
    f = tmp_path / "t6.json"
    f.write_text(json.dumps(tilting_char(6, 3).to_json()))
    p = payload(capsys, "ver", "image", "--char", str(f), "--p", "3", "--n", "2")
    assert VerClass.from_json(p).support() == {4: 2, 0: 1}
    f.write_text(json.dumps(tilting_char(8, 3).to_json()))
    code, out = run(capsys, "ver", "image", "--char", str(f), "--p", "3", "--n", "2")
    assert code == 2 and json.loads(out)["error"]["type"] == "NotInAn"


def test_ver_embed_check(capsys):
    assert payload(capsys, "ver", "embed-check", "--p", "3", "--n", "1")["result"] == "pass"


def test_group_region(capsys):
    assert payload(capsys, "group", "region", "--type", "A2", "--weight", "2,2", "--p", "5", "--n", "2")["label"] == "I1\\J2"
    assert payload(capsys, "group", "region", "--type", "A2", "--weight", "0,0", "--p", "5", "--n", "1")["label"] == "A"
    batch = payload(capsys, "group", "region", "--type", "A2", "--weight", "4,4", "--weight", "14,9", "--p", "5", "--n", "2")
    assert [r["label"] for r in batch] == ["J2\\I2", "I2"]
    assert batch[0]["chain"] == {"1": "I1", "2": "J2\\I2"}


def test_group_steinberg(capsys):
    p = payload(capsys, "group", "steinberg", "--type", "A2", "--p", "5", "--n", "1", "--ideal-check")
    assert p["in_I_1"] is True and p["in_I_2"] is False
    assert p["dimension"] == "125"


def test_group_restrict(capsys):
    p = payload(capsys, "group", "restrict", "--type", "A2", "--weight", "1,0")
    assert LaurentPoly.from_json(p["character"]).coeffs == {2: 1, 0: 1, -2: 1}


def test_warnings_in_envelope(capsys):
    code, out = run(capsys, "group", "steinberg", "--type", "G2", "--p", "7", "--n", "1")
    assert code == 0
    assert json.loads(out)["warnings"]


def test_region_plot(capsys, tmp_path):
    svg = tmp_path / "fig.svg"
    p = payload(capsys, "group", "region-plot", "--type", "A2", "--p", "5", "--max", "31", "--out", str(svg))
    assert p["counts"] == {"A": 6, "I1\\J2": 234, "I2": 634, "J2\\I2": 150}
    text = svg.read_text()
    assert text.startswith("<svg") and text.count("<circle") == 1024 + 4


@pytest.mark.parametrize(
    "argv",
    [
        ["sl2", "tensor", "1", "1", "--p", "4"],
        ["sl2", "factors", "x", "--p", "3"],
        ["ver", "cartan", "--p", "3", "--n", "0"],
        ["group", "region", "--type", "Q7", "--weight", "1", "--p", "5"],
        ["group", "region", "--type", "A2", "--weight", "-1,0", "--p", "5"],
        ["group", "region", "--type", "A2", "--weight", "1,0", "--p", "2"],
    ],
)
def test_validation_exit_code(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2
    assert "error" in json.loads(out)


def test_consistency_exit_code(capsys, monkeypatch):
    def broken(ctx):
        raise FusionConsistency("synthetic failure")

    monkeypatch.setattr(cli, "fusion", broken)
    code, out = run(capsys, "ver", "fusion", "--p", "3", "--n", "2")
    assert code == 3
    assert json.loads(out)["error"]["type"] == "FusionConsistency"


def test_internal_exit_code(capsys, monkeypatch):
    def broken(ctx):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "cartan_matrix", broken)
    code, _ = run(capsys, "ver", "cartan", "--p", "3", "--n", "2")
    assert code == 4


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "higherver", "ver", "fusion", "--p", "3", "--n", "2"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
