import json

import pytest

from digraphgf import catalog
from digraphgf.cli import main
from digraphgf.reference import scc_totals_rational
from digraphgf.series import Series
from digraphgf.tableio import format_family_file, parse_family_file, rows_from_csv, rows_from_json


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_table_dag_numeric(capsys):
    code, out, _ = run(["table", "--family", "dag", "--max-n", "5", "--mode", "numeric", "--w", "1"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,count"
    assert lines[-1] == "5,29281"


def test_table_scc_poly(capsys):
    code, out, _ = run(["table", "--family", "scc", "--max-n", "3", "--mode", "poly"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "n,m,count"
    assert "3,4,9" in out.splitlines()


def test_table_max_n_zero(capsys):
    code, out, _ = run(["table", "--family", "dag", "--max-n", "0"], capsys)
    assert out.splitlines() == ["n,count", "0,1"]


def test_bad_arguments(capsys):
    assert run(["table", "--family", "nope"], capsys)[0] == 2
    assert run(["table", "--family", "dag", "--max-n", "-1"], capsys)[0] == 2
    assert run(["table", "--family", "restricted_scc"], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2


@pytest.mark.parametrize("family", ["dag_sources", "scc", "source_like"])
def test_csv_json_same_rows(family, capsys, tmp_path):
    base = ["table", "--family", family, "--max-n", "4", "--mode", "poly"]
    assert main(base + ["--format", "csv", "--out", str(tmp_path / "t.csv")]) == 0
    assert main(base + ["--format", "json", "--out", str(tmp_path / "t.json")]) == 0
    csv_rows = rows_from_csv((tmp_path / "t.csv").read_text())
    doc = json.loads((tmp_path / "t.json").read_text())
    assert doc["family"] == family and doc["mode"] == "poly" and doc["order"] == 4
    assert all(isinstance(r["count"], str) for r in doc["rows"])
    assert sorted(csv_rows) == sorted(rows_from_json((tmp_path / "t.json").read_text()))


def test_output_deterministic(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.json"
        main(["table", "--family", "source_like", "--max-n", "5", "--mode", "poly",
              "--format", "json", "--out", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_custom_family(tmp_path, capsys):
    fam = tmp_path / "a.txt"
    fam.write_text("# one-vertex SCC only\n1: 1\n")
    code, out, _ = run(["table", "--family", "restricted_scc", "--max-n", "5",
                        "--custom-family", str(fam)], capsys)
    assert code == 0
    assert out.splitlines()[-1] == "5,29281"

    # all SCCs, written out edge by edge
    fam.write_text(format_family_file(catalog.scc_egf(4)))
    code, out, _ = run(["table", "--family", "restricted_scc", "--max-n", "4", "--mode", "poly",
                        "--custom-family", str(fam)], capsys)
    rows = rows_from_csv(out)
    assert sum(r[3] for r in rows if r[0] == 4) == 2 ** 12


def test_custom_family_file_errors(tmp_path, capsys):
    fam = tmp_path / "bad.txt"
    fam.write_text("1: 1\n2: 0 x\n")
    code, _, err = run(["table", "--family", "restricted_scc", "--custom-family", str(fam)], capsys)
    assert code == 3
    assert "line 2" in err
    fam.write_text("0: 1\n")
    assert run(["table", "--family", "restricted_scc", "--custom-family", str(fam)], capsys)[0] == 3
    missing = tmp_path / "missing.txt"
    assert run(["table", "--family", "marked_subfamily", "--custom-family", str(missing)], capsys)[0] == 3


def test_family_file_roundtrip():
    scc = catalog.scc_egf(5)
    again = parse_family_file(format_family_file(scc), 5)
    assert again == scc


def test_selftest_passes(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_selftest_detects_mutation(monkeypatch, capsys):
    original = catalog.dag_ggf

    def off_by_one(N, mode=catalog.POLYNOMIAL):
        s = original(N, mode)
        coeffs = list(s.coeffs)
        coeffs[2] = coeffs[2] + 1
        return Series._raw(s.kind, coeffs, s.mode)

    monkeypatch.setattr(catalog, "dag_ggf", off_by_one)
    code, out, _ = run(["selftest"], capsys)
    assert code == 1
    first_fail = next(line for line in out.splitlines() if line.startswith("FAIL"))
    assert "family=dag " in first_fail and "n=2" in first_fail


def test_selftest_cap(capsys):
    assert run(["selftest", "--max-n", "6"], capsys)[0] == 2


def test_bench(capsys):
    code, out, err = run(["bench", "--max-n", "100", "--mode", "numeric", "--w", "1"], capsys)
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 100
    scc = scc_totals_rational(20)
    for line in rows[:20]:
        n, s, _ = map(int, line.split(","))
        assert s == scc[n]
    assert "scc:" in err
    assert run(["bench", "--max-n", "1"], capsys)[0] == 0
    assert run(["bench", "--max-n", "40", "--mode", "poly"], capsys)[0] == 2
