"""Tests for the problem-file format, the fixture catalog and the CLI."""

from fractions import Fraction as F

import pytest

from valknaf import cli
from valknaf.fixtures import FIXTURES, fixture
from valknaf.problemfile import (ProblemFile, ProblemFileError, parse_problem,
                                 serialize)
from valknaf.raminv import knaf_decide

SPLIT5 = """\
version = 1
mode = split

[base]
field = Q
p = 5

[polynomial]
coeffs = [1, 0, 1]
"""

GROUP = """\
version = 1
mode = group

[gamma_nu]
rank = 2
gen = (1, 0)
gen = (0, 1)

[gamma_omega]
rank = 2
gen = (1/2, 0)
gen = (0, 1)
"""

BINO = """\
version = 1
mode = binomial

[base]
field = GF(5)
weight_x = (1, 0)
weight_y = (0, 1)

[extension]
n = 2
a = 1
b = 0
c = 1
"""


# -- parsing -------------------------------------------------------------------

def test_parse_split_example():
    pf = parse_problem(SPLIT5)
    assert pf.version == 1 and pf.mode == "split"
    assert pf.get("base", "field") == "Q"
    assert pf.get("base", "p") == 5
    assert pf.get("polynomial", "coeffs") == (1, 0, 1)


def test_parse_group_example():
    pf = parse_problem(GROUP.encode())  # bytes input
    assert pf.mode == "group"
    assert pf.get_all("gamma_omega", "gen") == [(F(1, 2), 0), (0, 1)]
    assert pf.get("gamma_nu", "rank") == 2


def test_round_trip_identity():
    for text in (SPLIT5, GROUP, BINO):
        pf = parse_problem(text)
        assert parse_problem(serialize(pf)) == pf
        assert serialize(parse_problem(serialize(pf))) == serialize(pf)


def test_round_trip_all_fixture_problems():
    for fx in FIXTURES:
        again = parse_problem(serialize(fx.problem))
        assert again == fx.problem, fx.name


@pytest.mark.parametrize("text,line,fragment", [
    (SPLIT5.replace("p = 5", "p = 1//2"), 6, "malformed"),
    (SPLIT5.replace("version = 1", "version = 2"), 1, "version"),
    (SPLIT5.replace("p = 5", "p = 5\nq = 7"), 7, "unknown key"),
    (SPLIT5.replace("p = 5", "p = 5\np = 7"), 7, "duplicate key"),
    (SPLIT5 + "\n[base]\nfield = Q\n", 11, "duplicate section"),
    (SPLIT5.replace("[base]", "[car]"), 4, "not allowed"),
    (GROUP.replace("gen = (1, 0)\n", "", 1).replace("gen = (0, 1)\n", "", 1),
     4, "missing key"),
    (SPLIT5.replace("coeffs = [1, 0, 1]", "coeffs = [1, 0, 1"), 9,
     "unterminated"),
    (GROUP.replace("gen = (1, 0)", "gen = ()"), 6, "empty vector"),
    (SPLIT5.replace("p = 5", "p = 1/0"), 6, "zero denominator"),
    (SPLIT5.replace("p = 5", "p = 1/2"), 6, "integer"),
    (SPLIT5.replace("field = Q", "just words here"), 5, "key = value"),
])
def test_rejections_carry_line_numbers(text, line, fragment):
    with pytest.raises(ProblemFileError) as err:
        parse_problem(text)
    assert f"line {line}" in str(err.value)
    assert fragment in str(err.value)


def test_missing_sections_and_header_keys():
    with pytest.raises(ProblemFileError, match="missing `version"):
        parse_problem("mode = group\n")
    with pytest.raises(ProblemFileError, match="missing `mode"):
        parse_problem("version = 1\n")
    with pytest.raises(ProblemFileError, match="unknown mode"):
        parse_problem("version = 1\nmode = shuffle\n")
    with pytest.raises(ProblemFileError, match="requires a section"):
        parse_problem("version = 1\nmode = split\n[base]\nfield = Q\np = 5\n")
    with pytest.raises(ProblemFileError, match="UTF-8"):
        parse_problem(b"version = 1\xff\n")


# -- fixtures ------------------------------------------------------------------

def test_fixture_catalog_rows_match_expected():
    for fx in FIXTURES:
        rows = tuple((k.e, k.f, k.eps, k.d, k.eft)
                     for k in map(knaf_decide, fx.invariants()))
        assert rows == fx.expected, fx.name


def test_fixture_lookup():
    assert fixture("i-at-3").expected == ((1, 2, 1, 1, True),)
    with pytest.raises(KeyError, match="unknown fixture"):
        fixture("no-such-fixture")


def test_expected_named_values():
    table = {
        "sqrt2-at-2": ((2, 1, 2, 1, True),),
        "monomial-sqrt-x": ((2, 1, 1, 1, False),),
        "monomial-sqrt-y": ((2, 1, 2, 1, True),),
        "monomial-sqrt-xy": ((2, 1, 1, 1, False),),
        "frobenius-defect-p": ((1, 1, 1, 2, False),),
        "frobenius-abhyankar": ((2, 1, 2, 1, True),),
    }
    for name, rows in table.items():
        assert fixture(name).expected == rows


# -- cli -----------------------------------------------------------------------

def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_cli_split_table_and_exit(tmp_path, capsys):
    path = write(tmp_path, "s.prob", SPLIT5)
    assert cli.main(["split", "--file", path]) == 0
    out = capsys.readouterr().out
    assert "EFT" in out and out.count("true") >= 4
    assert "factor 1" in out and "factor 2" in out


def test_cli_porcelain_schema_stable(tmp_path, capsys):
    path = write(tmp_path, "s.prob", SPLIT5)
    runs = []
    for _ in range(2):
        assert cli.main(["split", "--file", path, "--porcelain"]) == 0
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]
    first = runs[0].splitlines()[0].split("\t")
    assert [kv.split("=")[0] for kv in first] == [
        "label", "e", "f", "eps", "d", "defectless", "initial", "eft",
        "certificate"]


def test_cli_group_mode(tmp_path, capsys):
    path = write(tmp_path, "g.prob", GROUP)
    assert cli.main(["group", "--file", path, "--porcelain"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == ("label=gamma_omega over gamma_nu\te=2\teps=1\t"
                   "initial=false")


def test_cli_binomial(tmp_path, capsys):
    path = write(tmp_path, "b.prob", BINO)
    assert cli.main(["binomial", "--file", path, "--porcelain"]) == 0
    out = capsys.readouterr().out
    assert "e=2" in out and "eps=1" in out and "eft=false" in out


def test_cli_decide_fixture_matches_catalog(capsys):
    for fx in FIXTURES:
        assert cli.main(["decide", fx.name, "--porcelain"]) == 0
        decide_out = capsys.readouterr().out
        assert cli.main(["fixtures", fx.name, "--porcelain"]) == 0
        fixtures_out = capsys.readouterr().out
        assert decide_out == fixtures_out
        for (e, f, eps, d, eft), line in zip(fx.expected,
                                             decide_out.splitlines()):
            assert f"e={e}" in line and f"f={f}" in line
            assert f"eps={eps}" in line and f"d={d}" in line
            assert f"eft={'true' if eft else 'false'}" in line


def test_cli_fixtures_listing(capsys):
    assert cli.main(["fixtures"]) == 0
    out = capsys.readouterr().out
    for fx in FIXTURES:
        assert fx.name in out
        assert fx.description.splitlines()[0][:30] in out


def test_cli_function_field_split(tmp_path, capsys):
    text = """\
version = 1
mode = split

[base]
field = Q(t)
pi = [0, 1]

[polynomial]
coeffs = [(0, -1), 0, 1]
"""
    path = write(tmp_path, "qt.prob", text)
    assert cli.main(["split", "--file", path, "--porcelain"]) == 0
    out = capsys.readouterr().out
    assert "e=2" in out and "eft=true" in out


def test_cli_gf4_vector_constant(tmp_path, capsys):
    # z^3 = g over GF(4)(x, y): g is not a cube, so f = 3 and e = 1
    text = """\
version = 1
mode = binomial

[base]
field = GF(4)
weight_x = (1, 0)
weight_y = (0, 1)

[extension]
n = 3
a = 0
b = 0
c = (0, 1)
"""
    path = write(tmp_path, "gf4.prob", text)
    assert cli.main(["binomial", "--file", path, "--porcelain"]) == 0
    out = capsys.readouterr().out
    assert "e=1" in out and "f=3" in out and "eft=true" in out


def test_cli_exit_codes(tmp_path, capsys):
    syntax = write(tmp_path, "syn.prob", SPLIT5.replace("p = 5", "p = 1//2"))
    wild = write(tmp_path, "wild.prob", BINO.replace("n = 2", "n = 5"))
    nonsq = write(tmp_path, "nsq.prob",
                  SPLIT5.replace("coeffs = [1, 0, 1]",
                                 "coeffs = [4, -4, 1]"))  # (x - 2)^2
    deep = write(tmp_path, "deep.prob",
                 SPLIT5.replace("p = 5", "p = 2").replace(
                     "coeffs = [1, 0, 1]", "coeffs = [4, 0, 8, 0, 1]"))
    baddec = write(tmp_path, "bad.prob", """\
version = 1
mode = decide

[gamma_nu]
rank = 1
gen = (1)

[gamma_omega]
rank = 1
gen = (1/2)

[extension]
residue_degree = 1
local_degree = 3
residue_char = 0
""")
    cases = [
        (["split", "--file", syntax], 1, "line 6"),
        (["split", "--file", str(tmp_path / "absent.prob")], 1, "absent"),
        (["group", "--file", write(tmp_path, "m.prob", SPLIT5)], 1, "mode"),
        (["decide", "no-such"], 1, "unknown fixture"),
        (["decide"], 1, "fixture name or --file"),
        (["split", "--file", syntax, "--depth", "0"], 1, "depth"),
        (["nonsense"], 1, "invalid choice"),
        (["binomial", "--file", wild], 2, "wild"),
        (["split", "--file", nonsq], 2, "squarefree"),
        (["decide", "--file", baddec], 2, "does not divide"),
        (["split", "--file", deep, "--depth", "1"], 3, "not isolated"),
    ]
    for argv, code, fragment in cases:
        assert cli.main(argv) == code, argv
        err = capsys.readouterr().err
        assert fragment in err, (argv, err)


def test_cli_run_api():
    rows = cli.run(parse_problem(SPLIT5))
    assert len(rows) == 2
    assert all(r.eft and r.e == 1 and r.f == 1 for r in rows)
    grows = cli.run(parse_problem(GROUP))
    assert grows[0].e == 2 and grows[0].eps == 1 and grows[0].f is None


def test_shipped_demo_problems_parse_and_run():
    from pathlib import Path
    probs = sorted((Path(__file__).parent.parent / "demos" / "problems")
                   .glob("*.prob"))
    assert len(probs) >= 8
    for path in probs:
        pf = parse_problem(path.read_bytes())
        assert parse_problem(serialize(pf)) == pf, path.name
        rows = cli.run(pf)
        assert rows, path.name


def test_cli_stdin(tmp_path, capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin",
                        type("S", (), {"buffer": io.BytesIO(SPLIT5.encode())})())
    assert cli.main(["split", "--file", "-", "--porcelain"]) == 0
    assert capsys.readouterr().out.count("\n") == 2
