import json
import random

import pytest
from hypothesis import given, strategies as st

from treecut import io as tio
from treecut.cli import main
from treecut.graph import CapacitatedGraph
from treecut.io import ParseError
from treecut.reductions import list_to_precoloring, mcc_to_boolean_csp, mcc_to_list_coloring, random_mcc

from helpers import capacitated_with_decomposition, graph_with_decomposition


@given(graph_with_decomposition(max_n=9))
def test_graph_and_decomposition_roundtrip(pair):
    g, dec = pair
    assert tio.parse_graph(tio.format_graph(g)) == g
    assert tio.parse_decomposition(tio.format_decomposition(dec)) == dec


@given(capacitated_with_decomposition(max_n=8))
def test_capacities_roundtrip(pair):
    cg, _ = pair
    assert tio.parse_capacities(tio.format_capacities(cg), cg.n) == cg.capacity


@given(st.integers(2, 3), st.integers(1, 3), st.randoms(use_true_random=False))
def test_reduction_instances_roundtrip(k, n, rng):
    m = random_mcc(k, n, 0.5, rng)
    assert tio.parse_mcc(tio.format_mcc(m)) == m
    lc, dec = mcc_to_list_coloring(m)
    assert tio.parse_list_coloring(tio.format_list_coloring(lc)) == lc
    pc, _ = list_to_precoloring(lc, dec)
    assert tio.parse_precoloring(tio.format_precoloring(pc)) == pc
    csp, _ = mcc_to_boolean_csp(m)
    assert tio.parse_csp(tio.format_csp(csp)) == csp


@pytest.mark.parametrize(
    "text, line",
    [
        ("p graph 2 1\ne 0 2\n", 2),
        ("c hi\np graph 2 1\ne 0 x\n", 3),
        ("p graph 3 1\ne 0 1\ne 1 0\n", 3),
        ("e 0 1\n", 1),
        ("p graph 3 2\ne 0 1\n", 1),
    ],
)
def test_graph_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        tio.parse_graph(text)
    assert err.value.lineno == line
    assert f"line {line}" in str(err.value)


def test_decomposition_parse_errors():
    with pytest.raises(ParseError) as err:
        tio.parse_decomposition("t 2 0\nn 1 0\nn 1 0\n")
    assert err.value.lineno == 3
    with pytest.raises(ParseError):
        tio.parse_decomposition("t 2 0\nb 0 1\n")


def test_capacity_parse_errors():
    with pytest.raises(ParseError) as err:
        tio.parse_capacities("v 0 1\nv 0 2\n", 2)
    assert err.value.lineno == 2
    with pytest.raises(ParseError):
        tio.parse_capacities("v 0 -1\n", 1)


# --- command line ---------------------------------------------------------


@pytest.fixture
def files(tmp_path, example7):
    g, dec = example7
    (tmp_path / "f.gr").write_text(tio.format_graph(g))
    (tmp_path / "f.tcd").write_text(tio.format_decomposition(dec))
    (tmp_path / "k13.gr").write_text("p graph 4 3\ne 0 1\ne 0 2\ne 0 3\n")
    (tmp_path / "k13.tcd").write_text("t 4 0\nn 1 0\nn 2 0\nn 3 0\nb 0 0\nb 1 1\nb 2 2\nb 3 3\n")
    (tmp_path / "k13.cap").write_text("v 0 3\nv 1 0\nv 2 0\nv 3 0\n")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_validate_example7(files, capsys):
    code, out, _ = run(capsys, "validate", files / "f.gr", files / "f.tcd")
    assert code == 0
    assert "valid: True" in out and "width: 3" in out


def test_cli_validate_rejects_bad_decomposition(files, capsys):
    (files / "bad.tcd").write_text("t 1 0\nb 0 0 1 2\n")
    code, out, _ = run(capsys, "validate", files / "f.gr", files / "bad.tcd")
    assert code == 1 and "valid: False" in out


def test_cli_solve_budget(files, capsys):
    base = ["solve", "cvc", files / "k13.gr", files / "k13.tcd", "--caps", files / "k13.cap"]
    code, out, _ = run(capsys, *base, "--budget", "1", "--check-oracle")
    assert code == 0 and "answer: yes" in out and "oracle: 1" in out
    code, out, _ = run(capsys, *base, "--budget", "0")
    assert code == 1 and "answer: no" in out


def test_cli_solve_json(files, capsys):
    code, out, _ = run(capsys, "solve", "imb", files / "f.gr", files / "f.tcd", "--json", "--threads", "4")
    assert code == 0
    rep = json.loads(out)
    assert rep["result"]["optimum"] == 6 and rep["instance"]["width"] == 3


def test_cli_metrics_and_nicify(files, capsys):
    code, out, _ = run(capsys, "metrics", files / "f.gr", files / "f.tcd")
    assert code == 0 and "[1:tor=3,adh=3]" in out
    code, _, _ = run(capsys, "nicify", files / "f.gr", files / "f.tcd", "-o", files / "n.tcd")
    assert code == 0
    code, out, _ = run(capsys, "validate", files / "f.gr", files / "n.tcd")
    assert "nice: True" in out


def test_cli_export(files, capsys):
    code, _, _ = run(capsys, "export-treedec", files / "f.gr", files / "f.tcd", "-o", files / "t.td")
    assert code == 0
    assert (files / "t.td").read_text().startswith("s td ")


def test_cli_oracle_and_gen(files, capsys):
    code, out, _ = run(capsys, "oracle", "tcw", files / "f.gr")
    assert code == 0 and "optimum: 2" in out
    code, _, _ = run(capsys, "gen", "star-of-stars", "3", "-o", files / "s3.gr")
    assert code == 0
    assert tio.parse_graph((files / "s3.gr").read_text()).n == 13
    code, out, _ = run(
        capsys, "gen", "mcc-csp", "--k", "2", "--n", "2", "-o", files / "c.csp",
        "--decomposition", files / "c.tcd",
    )
    assert code == 0 and "width: 3" in out
    tio.parse_csp((files / "c.csp").read_text())


def test_cli_input_errors(files, capsys):
    (files / "bad.gr").write_text("p graph 2 1\ne 0 5\n")
    code, _, err = run(capsys, "oracle", "imb", files / "bad.gr")
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "solve", "cvc", files / "k13.gr", files / "k13.tcd")
    assert code == 2 and "--caps" in err
    code, _, err = run(capsys, "validate", files / "missing.gr", files / "k13.tcd")
    assert code == 2
