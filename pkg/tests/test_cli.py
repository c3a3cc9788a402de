"""CLI golden outputs, exit codes, and thin-adapter equality with the
library."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

from sl2prod import (SL2Label, make_field, sl2_pair_product_law, sort_labels)
from sl2prod.cli import main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_classify_golden():
    code, out, _ = run_cli(["classify", "--field", "7", "[[0,6],[1,3]]"])
    assert code == 0
    assert json.loads(out) == {"label": "NSS[3]"}


def test_classify_psl():
    code, out, _ = run_cli(["classify", "--field", "7", "--group", "psl2",
                            "[[0,6],[1,3]]"])
    assert code == 0
    assert json.loads(out) == {"label": "PNSS[3]"}


def test_product_golden():
    code, out, _ = run_cli(["product", "--field", "7", "--group", "sl2",
                            "U[1]", "U[3]"])
    assert code == 0
    data = json.loads(out)
    assert data["classes"] == ["I", "U[1]", "U[3]", "SS[6]", "NSS[3]", "NSS[4]"]
    assert data["rule"] == "distinct_unipotent_classes"


def test_product_matches_library():
    code, out, _ = run_cli(["product", "--field", "5", "--group", "sl2",
                            "U[1]", "U[1]"])
    data = json.loads(out)
    F = make_field(5)
    law = sl2_pair_product_law(F, SL2Label("U", 1), SL2Label("U", 1))
    assert data["classes"] == [str(L) for L in sort_labels(law.classes)]
    assert data["rule"] == law.rule


def test_byte_stable_output():
    args = ["product", "--field", "13", "--group", "psl2", "PU[1]", "PNSS[0]"]
    assert run_cli(args) == run_cli(args)


def test_classes_listing():
    code, out, _ = run_cli(["classes", "--field", "5"])
    data = json.loads(out)
    assert code == 0
    assert [c["label"] for c in data["classes"]] == \
        ["I", "-I", "U[1]", "U[2]", "NU[1]", "NU[2]", "SS[0]", "NSS[1]", "NSS[4]"]
    assert data["classes"][2]["representative"] == [[1, 1], [0, 1]]


def test_triple_command():
    code, out, _ = run_cli(["triple", "--field", "7", "U[1]", "U[1]", "U[3]"])
    data = json.loads(out)
    assert code == 0
    assert "-I" not in data["classes"] and len(data["classes"]) == 10


def test_witness_command():
    code, out, _ = run_cli(["witness", "--field", "7", "[[1,3],[0,1]]",
                            "U[1]", "U[1]"])
    data = json.loads(out)
    assert code == 0 and data["found"] and data["check"] == "ok"
    F = make_field(7)
    x, y = data["x"], data["y"]
    prod = (x[0][0] * y[0][0] + x[0][1] * y[1][0]) % 7
    assert prod == 1
    code, out, _ = run_cli(["witness", "--field", "7", "[[1,0],[0,1]]",
                            "U[1]", "U[1]"])
    assert code == 0 and json.loads(out) == {"found": False}


def test_macbeath_command():
    code, out, _ = run_cli(["macbeath", "--field", "5", "0", "0", "1"])
    data = json.loads(out)
    assert code == 0 and data["check"] == "ok"
    assert data["A"] == [[0, 4], [1, 0]]


def test_commutator_command():
    code, out, _ = run_cli(["commutator", "--field", "5", "[[1,1],[0,1]]"])
    data = json.loads(out)
    assert code == 0 and data["expressible"] and data["check"] == "ok"
    code, out, _ = run_cli(["commutator", "--field", "5", "[[2,0],[0,3]]"])
    assert code == 0 and json.loads(out) == {"expressible": False}


def test_verify_single_field():
    code, out, _ = run_cli(["verify", "--field", "5", "--group", "psl2"])
    data = json.loads(out)
    assert code == 0 and data["ok"]
    rep = data["reports"][0]
    assert rep["pairs"]["failures"] == [] and rep["triples"]["failures"] == []
    assert rep["covering"] == {"cn": 3, "ecn": 4}


def test_covering_command():
    code, out, _ = run_cli(["covering", "--field", "7", "--group", "psl2"])
    assert code == 0
    assert json.loads(out)["psl2"] == {"cn": 3, "ecn": 4}


def test_text_format():
    code, out, _ = run_cli(["product", "--field", "7", "--format", "text",
                            "U[1]", "U[3]"])
    assert code == 0
    assert out.splitlines()[0] == "I U[1] U[3] SS[6] NSS[3] NSS[4]"


def test_usage_error_exit_2():
    code, _, _ = run_cli(["nonsense"])
    assert code == 2
    code, _, _ = run_cli(["product", "--field", "7", "U[1]"])  # arity
    assert code == 2


def test_domain_error_exit_3():
    for argv in [["classify", "--field", "4", "[[1,0],[0,1]]"],
                 ["classify", "--field", "3", "[[1,0],[0,1]]"],
                 ["classify", "--field", "7", "[[1,0],[0,2]]"],
                 ["classify", "--field", "7", "[[1,0],[0"],
                 ["product", "--field", "7", "U[2]", "U[1]"],
                 ["product", "--field", "7", "SS[0]", "U[1]"],
                 ["classify", "[[1,0],[0,1]]"]]:
        code, _, err = run_cli(argv)
        assert code == 3, argv
        assert err.startswith("error:")


def test_verify_jobs_flag_output_stable():
    a = run_cli(["verify", "--field", "5"])
    b = run_cli(["verify", "--field", "5", "--jobs", "2"])
    assert a == b


def test_verify_failure_exit_1(monkeypatch):
    import sl2prod.cli as cli
    monkeypatch.setattr(cli, "_verify_task", lambda spec: {
        "q": 5, "group": "sl2", "ok": False,
        "pairs": {"checked": 1, "failures": [{"where": ["U[1]", "U[1]"]}]},
        "triples": {"checked": 0, "failures": [], "containment_failures": []},
        "covering": None})
    code, out, _ = run_cli(["verify", "--field", "5", "--group", "sl2"])
    assert code == 1
    assert json.loads(out)["ok"] is False
