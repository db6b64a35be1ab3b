import json

import pytest

from tropgreen.cli import EXIT_INPUT, EXIT_USAGE, main
from tropgreen.core import NEG_INF as N
from tropgreen.core import Flavor
from tropgreen.fileio import write_matrix
from tropgreen.fixtures import FIXTURES
from tropgreen.linalg import TropMatrix


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, m in FIXTURES.items():
        out[name] = str(tmp_path / f"{name}.json")
        write_matrix(m, out[name])
    out["A63T"] = str(tmp_path / "A63T.json")
    write_matrix(FIXTURES["A63"].T, out["A63T"])
    out["zero"] = str(tmp_path / "zero.json")
    write_matrix(TropMatrix.of([[N, N], [N, N]], Flavor.T), out["zero"])
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_greens_leqj_holds(files, capsys):
    code, out = run(capsys, "greens", "leqJ", files["A61"], files["B61"])
    assert code == 0
    assert "Holds" in out and "witness" in out


def test_greens_relh_self(files, capsys):
    assert run(capsys, "greens", "relH", files["A61"], files["A61"])[0] == 0


def test_greens_reld_fails_with_obstruction(files, capsys):
    code, out = run(capsys, "greens", "relD", files["A61"], files["B61"], "--json")
    assert code == 1
    data = json.loads(out)
    assert data["obstruction"]["kind"] == "generator-dimension"


def test_greens_relj_hint_and_witness_file(files, capsys, tmp_path):
    wfile = tmp_path / "w.json"
    code, _ = run(capsys, "greens", "relJ", files["A62"], files["B62"],
                  "--hint", files["MU62"], "--witness", str(wfile))
    assert code == 0
    assert set(json.loads(wfile.read_text())["matrices"]) == {"P_AB", "Q_AB", "P_BA", "Q_BA"}


def test_greens_unknown_exit_code(files, capsys):
    code, _ = run(capsys, "greens", "relD", files["A63"], files["A63T"], "--budget", "0")
    assert code == 2


def test_greens_diagnostics(files, capsys):
    code, out = run(capsys, "greens", "relD", files["A63"], files["A63T"], "--diagnostics",
                    "--metric-mode", "full", "--json")
    assert code == 0
    full = json.loads(out)["isometry_diagnostics"]["modes"]["full"]
    assert full["multiset_A"] == full["multiset_B"] == [3, 5, 5]


def test_json_mirrors_text(files, capsys):
    _, text = run(capsys, "greens", "relD", files["A61"], files["B61"])
    _, js = run(capsys, "greens", "relD", files["A61"], files["B61"], "--json")
    data = json.loads(js)
    assert data["outcome"] in text and data["obstruction"]["kind"] in text


def test_rank_commands(files, capsys):
    code, out = run(capsys, "rank", files["G27"], "--json")
    assert code == 0 and json.loads(out)["gm_col"] == 2
    _, out = run(capsys, "rank", files["G27"], "--flavor-override", "TBar", "--json")
    assert json.loads(out)["gm_col"] == 1
    _, out = run(capsys, "rank", files["zero"], "--json")
    data = json.loads(out)
    assert all(data[k] == 0 for k in ("row_rank", "col_rank", "gm_row", "gm_col",
                                      "tropical", "determinantal"))


def test_rank_override_must_contain_entries(files, capsys):
    assert main(["rank", files["A62"], "--flavor-override", "FT"]) == EXIT_USAGE


@pytest.mark.parametrize("name", ["6.1", "6.2", "6.3", "7.gm", "all"])
def test_examples(name, capsys):
    code, out = run(capsys, "examples", name)
    assert code == 0
    assert "FAIL" not in out


def test_example_6_3_shows_both_modes(capsys):
    _, out = run(capsys, "examples", "6.3")
    assert "{1, 4, 5}" in out and "{2, 3, 5}" in out and "{3, 5, 5}" in out
    assert "metric modes disagree" in out


def test_export_figure(files, capsys, tmp_path):
    svg, csv_ = tmp_path / "b.svg", tmp_path / "b.csv"
    assert main(["export-figure", files["B61"], "--space", "cols", "--out", str(svg),
                 "--samples", "5"]) == 0
    assert main(["export-figure", files["B61"], "--out", str(csv_)]) == 0
    assert svg.read_text().startswith("<svg")
    lines = csv_.read_text().splitlines()
    assert lines[1:] == ["vertex,0,0,0", "vertex,1,1,-2", "vertex,2,3,-3"]
    assert main(["export-figure", files["A62"], "--out", str(csv_),
                 "--chart-coord", "1"]) == EXIT_USAGE
    assert main(["export-figure", files["B61"], "--out", str(tmp_path / "x.png")]) == EXIT_USAGE


@pytest.mark.parametrize("suite", ["duality", "rank-product", "finitize"])
def test_fuzz(suite, capsys):
    code, out = run(capsys, "fuzz", suite, "10", "42")
    assert code == 0 and "pass" in out
    assert run(capsys, "fuzz", suite, "10", "42")[1] == out


def test_fixtures_command(capsys):
    code, out = run(capsys, "fixtures", "A61")
    assert code == 0 and json.loads(out)["semiring"] == "FT"


def test_error_exit_codes(files, capsys, tmp_path):
    with pytest.raises(SystemExit) as e:
        main(["greens", "relX", files["A61"], files["B61"]])
    assert e.value.code == EXIT_USAGE
    assert main(["greens", "relL", str(tmp_path / "none.json"), files["A61"]]) == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text('{"semiring": "FT", "rows": [["1", "oops"]]}')
    assert main(["rank", str(bad)]) == EXIT_INPUT
    assert main(["greens", "relL", files["A61"], files["G27"]]) == EXIT_USAGE
