import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import cramer_lgv as cl

DATA = Path(os.environ.get("CRAMER_LGV_TEST_DATA_DIR", Path(__file__).resolve().parents[1] / "data"))

A = [[1, 2], [3, 4]]
B = [5, 6]


def gadget_graph(a, x):
    n = len(a)
    rows = [f"A{i + 1}" for i in range(n)]
    cols = [f"B{j + 1}" for j in range(n)]
    edges = [{"from": rows[i], "to": cols[j], "weight": a[i][j]} for i in range(n) for j in range(n)]
    edges += [{"from": cols[j], "to": "X", "weight": x[j]} for j in range(n)]
    return {"vertices": rows + cols + ["X"], "edges": edges}, rows, cols


def test_determinants_and_solvers():
    assert cl.det_leibniz(A) == -2
    assert cl.det_bareiss([[Fraction(1, 2), 0], [0, "2/3"]]) == Fraction(1, 3)
    assert cl.solve_cramer(A, B) == [-4, Fraction(9, 2)]
    assert cl.solve_gauss(A, B) == cl.solve_cramer(A, B)
    assert cl.replace_column(A, 0, B) == [[5, 2], [6, 4]]


def test_errors():
    with pytest.raises(cl.Error, match=r"det\(A\) = 0"):
        cl.solve_cramer([[1, 2], [2, 4]], [1, 1])
    with pytest.raises(TypeError):
        cl.det_bareiss([[1.5]])
    with pytest.raises(TypeError):
        cl.det_bareiss([[True]])
    with pytest.raises(ValueError):
        cl.replace_column(A, 2, B)


def test_lgv_on_gadget():
    x = cl.solve_cramer(A, B)
    graph, rows, cols = gadget_graph(A, x)
    assert cl.path_matrix(graph, rows, cols) == A
    report = cl.verify_lgv(graph, rows, ["X", "B2"])
    assert report["verdict"] == "pass"
    assert Fraction(report["det_path_matrix"]) == cl.det_bareiss(cl.replace_column(A, 0, B))
    assert report["total_systems"] == 4 and report["vd_systems"] == 2


def test_certificate_round_trip():
    cert = cl.certify(A, B, 1)
    assert cert["index"] == 1
    assert cert["det_Ai"] == "8"
    assert cl.check_certificate(cert) == []
    cert["det_Ai"] = "7"
    assert cl.check_certificate(cert)


def test_cli_in_process():
    code, out, err = cl.run_cli(["solve", str(DATA / "system_3x3.json")])
    assert code == 0
    assert json.loads(out)["x"] == ["1", "1", "1"]
    code, _, err = cl.run_cli(["solve", str(DATA / "system_singular.json")])
    assert code == 3 and "det(A) = 0" in err
