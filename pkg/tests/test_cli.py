import csv
import io
import os
import subprocess
import sys

import pytest

from changeorder import cli
from changeorder.groebner import read_gb_file, write_gb_file

from golden import GENERATORS, drl_gb, lex_gb


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def system_file(gens, names=("x1", "x2", "y"), p=29):
    return "field: %d\nvars: %s\n%s\n" % (p, ",".join(names), "\n".join(g + ";" for g in gens))


def run(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr()


def test_solve_with_printed_drl_basis(tmp_path, capsys):
    inp = write(tmp_path, "sys.txt", system_file(GENERATORS))
    gbf = write(tmp_path, "gb.txt", write_gb_file(drl_gb(), ["x1", "x2", "y"]))
    for method in ("hnf", "fglm", "buchberger"):
        out = str(tmp_path / ("out_%s.txt" % method))
        code, _ = run(["solve", "--input", inp, "--gb-drl", gbf, "--method", method, "--output", out], capsys)
        assert code == 0
        gb, _ = read_gb_file(open(out).read())
        assert gb == lex_gb()
    texts = {open(tmp_path / ("out_%s.txt" % m)).read() for m in ("hnf", "fglm", "buchberger")}
    assert len(texts) == 1
    text = texts.pop()
    assert "h = " in text and "x1 = " in text and "x2 = " in text


def test_solve_point_ideal(tmp_path, capsys):
    inp = write(tmp_path, "sys.txt", system_file(["x1", "y"], ("x1", "y")))
    code, out = run(["solve", "--input", inp, "--method", "hnf"], capsys)
    assert code == 0
    assert out.out.splitlines()[3:5] == ["y;", "x1;"]


def test_solve_random_system_methods_agree(tmp_path, capsys):
    sysf = str(tmp_path / "r.txt")
    assert cli.main(["random", "--n", "3", "--d", "2", "--seed", "4", "--output", sysf]) == 0
    outs = []
    for method in ("hnf", "fglm", "buchberger"):
        out = str(tmp_path / method)
        assert cli.main(["solve", "--input", sysf, "--method", method, "--output", out]) == 0
        outs.append(open(out, "rb").read())
    assert outs[0] == outs[1] == outs[2]


def test_solve_structural_fallback(tmp_path, capsys):
    # leading terms x1^2, y^2 are not stable
    inp = write(tmp_path, "sys.txt", system_file(["x1^2 + 3*x1 + y + 1", "y^2 + 5*x1 + 2"], ("x1", "y")))
    outs = []
    for method in ("hnf", "fglm", "buchberger"):
        code, out = run(["solve", "--input", inp, "--method", method], capsys)
        assert code == (0 if method == "buchberger" else 2)
        outs.append(out.out)
    assert outs[0] == outs[1] == outs[2]


def test_solve_errors(tmp_path, capsys, caplog):
    inp = write(tmp_path, "sys.txt", system_file(["x1*y"], ("x1", "y")))
    code, _ = run(["solve", "--input", inp, "--method", "hnf"], capsys)
    assert code == 1 and "pure power" in caplog.text
    bad = write(tmp_path, "bad.txt", "field: 29\nvars: x1,y\nx1 + z;\n")
    assert run(["solve", "--input", bad], capsys)[0] == 1
    assert run(["solve", "--input", str(tmp_path / "missing")], capsys)[0] == 1


def test_random_is_deterministic(capsys):
    code, a = run(["random", "--n", "2", "--d", "2", "--seed", "9"], capsys)
    _, b = run(["random", "--n", "2", "--d", "2", "--seed", "9"], capsys)
    _, c = run(["random", "--n", "2", "--d", "2", "--seed", "10"], capsys)
    assert code == 0 and a.out == b.out != c.out
    assert a.out.startswith("field: 536870923\nvars: x1,y\n")
    assert len(a.out.splitlines()) == 4


@pytest.mark.parametrize("n,d,dim", [(2, 3, 9), (3, 2, 8)])
def test_random_system_dimension(n, d, dim, tmp_path, capsys):
    sysf = str(tmp_path / "r.txt")
    cli.main(["random", "--n", str(n), "--d", str(d), "--seed", "1", "--output", sysf])
    out = str(tmp_path / "o.txt")
    cli.main(["solve", "--input", sysf, "--method", "hnf", "--output", out])
    from changeorder.groebner import parse_poly_file, buchberger, staircase
    from changeorder.mvpoly import DRL
    gens = parse_poly_file(open(sysf).read())[3]
    prof = staircase(buchberger(gens, DRL))
    assert prof.dimension == dim
    assert prof.t == sum(1 for m in prof.basis_monomials if m[-1] == 0)
    assert read_gb_file(open(out).read())[0].polys[0].lm(read_gb_file(open(out).read())[0].order) == \
        (0,) * (n - 1) + (dim,)


def test_check_reports(tmp_path, capsys):
    gbf = write(tmp_path, "gb.txt", write_gb_file(drl_gb(), ["x1", "x2", "y"]))
    code, out = run(["check", "--gb", gbf], capsys)
    assert code == 0
    lines = out.out.splitlines()
    for expected in ("zero_dimensional: true", "D: 8", "t: 3", "e: 4,2,2", "stable: true"):
        assert expected in lines
    unstable = write(tmp_path, "u.txt", "field: 29\nvars: x1,y\norder: drl\nx1^2;\ny^2;\n")
    _, out = run(["check", "--gb", unstable], capsys)
    assert "stable: false" in out.out and "witness: y^2, x1" in out.out
    lexf = write(tmp_path, "l.txt", write_gb_file(lex_gb(), ["x1", "x2", "y"]))
    _, out = run(["check", "--gb", lexf], capsys)
    assert "shape: true" in out.out
    posdim = write(tmp_path, "p.txt", "field: 29\nvars: x1,y\norder: drl\nx1*y;\n")
    _, out = run(["check", "--gb", posdim], capsys)
    assert "zero_dimensional: false" in out.out
    assert run(["check", "--gb", write(tmp_path, "m.txt", "nonsense")], capsys)[0] == 1


def test_bench(tmp_path, capsys):
    code, out = run(["bench", "--grid", ""], capsys)
    assert code == 0 and out.out.strip() == ",".join(cli.BENCH_COLUMNS)
    code, out = run(["bench", "--grid", "2:4", "--oracle"], capsys)
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert code == 0 and len(rows) == 1
    assert rows[0]["D"] == "16" and rows[0]["agreement"] == "True"
    assert all(rows[0][k] for k in ("buchberger_drl", "build_P", "hnf", "read_off", "sparse_fglm"))
    csvf = str(tmp_path / "b.csv")
    code, _ = run(["bench", "--grid", "2:8", "--output", csvf], capsys)
    row = list(csv.DictReader(open(csvf)))[0]
    assert code == 0 and row["D"] == "64" and int(row["t"]) > 0
    with pytest.raises(ValueError):
        cli.parse_grid("2-4")


def test_console_entry_point(tmp_path):
    env = dict(os.environ, CHANGEORDER_LOG="INFO")
    sysf = write(tmp_path, "s.txt", system_file(["x1 - 2", "y^2 - 3"], ("x1", "y")))
    res = subprocess.run([sys.executable, "-m", "changeorder.cli", "solve", "--input", sysf],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 0
    assert "x1 + 27;" in res.stdout
    assert "INFO" in res.stderr
