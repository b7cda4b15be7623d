import json

import pytest

from klinear import automaton as aut
from klinear.cli import main
from klinear.determinize import determinize, linearize, minimize
from klinear.serialize import automaton_from_json, automaton_to_json, dfa_from_json, load_automaton
from klinear.words import convolve_eval
from oracles import words_upto


@pytest.fixture
def files(tmp_path, a1, sq_x, sq_y):
    paths = {}
    for name, a in {"a1": a1, "sq_x": sq_x, "sq_y": sq_y, "zero": aut.scale(a1, 0)}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(automaton_to_json(a)))
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(files, capsys):
    assert run(capsys, "eval", "-a", files["a1"], "-w", "xyx") == (0, "1\n", "")
    assert run(capsys, "eval", "-a", files["a1"], "-w", "")[1] == "0\n"


def test_tensor_then_eval(files, tmp_path, capsys):
    out = tmp_path / "t.json"
    code, _, _ = run(capsys, "tensor", "--comul", "delta3", "-a", files["sq_x"], "-b", files["sq_y"], "-o", out)
    assert code == 0
    assert run(capsys, "eval", "-a", out, "-w", "xxyy")[1] == "1\n"
    assert run(capsys, "eval", "-a", out, "-w", "xyx")[1] == "0\n"


def test_json_commands_match_library(files, a1, sq_x, sq_y, capsys):
    cases = [
        (["sum", "-a", files["a1"], "-b", files["sq_x"]], aut.direct_sum(a1, sq_x)),
        (["scale", "-a", files["a1"], "-k", "0"], aut.scale(a1, 0)),
        (["tensor", "--comul", "delta1", "-a", files["sq_x"], "-b", files["sq_y"]], aut.tensor(sq_x, sq_y, "delta1")),
        (["reverse", "-a", files["a1"]], aut.reverse(a1)),
        (["pullback", "-a", files["a1"], "--map", "z=xx,w=y"], aut.pullback(a1, {"z": "xx", "w": "y"})),
    ]
    for argv, expected in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        assert automaton_from_json(json.loads(out)) == expected


def test_convolve(files, a1, sq_x, capsys):
    for variant in ("delta1", "delta2", "delta3"):
        for w in ("", "xx", "xyx"):
            code, out, _ = run(capsys, "convolve", "--comul", variant, "-a", files["a1"], "-b", files["sq_x"], "-w", w)
            assert code == 0
            assert out == f"{convolve_eval(a1, sq_x, variant, w)}\n"


def test_determinize_minimize_linearize(files, a1, tmp_path, capsys):
    d_path = tmp_path / "d.json"
    assert run(capsys, "determinize", "-a", files["a1"], "-o", d_path)[0] == 0
    assert dfa_from_json(json.loads(d_path.read_text())) == determinize(a1)
    code, out, _ = run(capsys, "minimize", "-d", d_path)
    assert code == 0 and dfa_from_json(json.loads(out)) == minimize(determinize(a1))
    code, out2, _ = run(capsys, "minimize", "-a", files["a1"])
    assert out2 == out
    m_path = tmp_path / "m.json"
    m_path.write_text(out)
    code, out, _ = run(capsys, "linearize", "-d", m_path)
    assert automaton_from_json(json.loads(out)) == linearize(minimize(determinize(a1)))


def test_budget_flag(tmp_path, capsys):
    p = tmp_path / "dbl.json"
    p.write_text(json.dumps({"semiring": "nat", "alphabet": ["x"], "states": ["p"], "start": [1],
                             "transitions": {"x": [[2]]}, "output": [1]}))
    code, _, err = run(capsys, "determinize", "-a", p, "--budget", "4")
    assert code == 1 and "budget" in err


def test_prove_and_verify(files, a1, tmp_path, capsys):
    b_path = tmp_path / "b.json"
    b_path.write_text(json.dumps(automaton_to_json(linearize(minimize(determinize(a1))))))
    cert = tmp_path / "cert.json"
    assert run(capsys, "prove", "-a", files["a1"], "-b", b_path, "-o", cert) == (0, "EQUIVALENT\n", "")
    assert run(capsys, "verify", "-a", files["a1"], "-b", b_path, "-c", cert) == (0, "ACCEPT\n", "")
    # the same certificate does not connect A1 to the zero automaton
    code, out, _ = run(capsys, "verify", "-a", files["a1"], "-b", files["zero"], "-c", cert)
    assert code == 1 and out.startswith("REJECT")
    # tamper with one entry of an inner edge
    data = json.loads(cert.read_text())
    row = data["edges"][1]["matrix"][0]
    row[0] = 1 - row[0]
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "-a", files["a1"], "-b", b_path, "-c", cert)
    assert code == 1 and out.startswith("REJECT") and "edge 1" in out


def test_prove_inequivalent(files, capsys):
    code, out, _ = run(capsys, "prove", "-a", files["a1"], "-b", files["zero"])
    assert code == 1
    assert out == "NOT EQUIVALENT: separating word x (A=1, B=0)\n"


def test_check_morphism(files, a1, tmp_path, capsys):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"matrix": [[1, 0], [0, 1]], "direction": "forward"}))
    assert run(capsys, "check-morphism", "-a", files["a1"], "-b", files["a1"], "-m", m)[:2] == (0, "VALID\n")
    code, out, _ = run(capsys, "check-morphism", "-a", files["a1"], "-b", files["zero"], "-m", m)
    assert code == 1 and out.startswith("INVALID") and "start" in out
    m.write_text(json.dumps({"matrix": [[1, 0, 0]]}))
    code, _, err = run(capsys, "check-morphism", "-a", files["a1"], "-b", files["a1"], "-m", m)
    assert code == 1 and err


def test_random_is_reproducible(tmp_path, capsys):
    first = run(capsys, "random", "--semiring", "tropical", "--dim", "3", "--seed", "7")[1]
    second = run(capsys, "random", "--semiring", "tropical", "--dim", "3", "--seed", "7")[1]
    other = run(capsys, "random", "--semiring", "tropical", "--dim", "3", "--seed", "8")[1]
    assert first == second != other
    a = automaton_from_json(json.loads(first))
    assert a.dim == 3 and a.semiring.name == "tropical"


def test_table_flag(tmp_path, capsys):
    table = tmp_path / "tbl" / "maxmin.json"
    table.parent.mkdir()
    table.write_text(json.dumps({"elements": [0, 1, 2], "add": [[max(i, j) for j in range(3)] for i in range(3)],
                                 "mul": [[min(i, j) for j in range(3)] for i in range(3)], "zero": 0, "one": 2}))
    code, out, _ = run(capsys, "--table", table, "random", "--semiring", "table:maxmin", "--seed", "1")
    assert code == 0
    p = tmp_path / "r.json"
    p.write_text(out)
    code, out, _ = run(capsys, "--table", table, "eval", "-a", p, "-w", "xy")
    assert code == 0
    a = load_automaton(p)
    assert out == f"{a.eval('xy')}\n"


def test_error_exit_codes(files, tmp_path, capsys):
    assert run(capsys, "eval", "-a", tmp_path / "missing.json", "-w", "x")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "eval", "-a", bad, "-w", "x")[0] == 2
    assert run(capsys, "eval", "-a", files["a1"], "-w", "xz")[0] == 1
    assert run(capsys, "tensor", "--comul", "delta3", "-a", files["a1"], "-b", bad)[0] == 2
    nat = tmp_path / "nat.json"
    nat.write_text(json.dumps({"semiring": "nat", "alphabet": ["x", "y"], "states": ["p"], "start": [1],
                               "transitions": {"x": [[1]], "y": [[1]]}, "output": [1]}))
    code, _, err = run(capsys, "sum", "-a", files["a1"], "-b", nat)
    assert code == 1 and "semiring" in err
    with pytest.raises(SystemExit) as info:
        main(["tensor", "--comul", "delta2", "-a", files["a1"], "-b", files["a1"]])
    assert info.value.code == 2


def test_cli_eval_agrees_with_library_on_all_short_words(files, a1, capsys):
    for w in words_upto("xy", 4):
        assert run(capsys, "eval", "-a", files["a1"], "-w", w)[1] == f"{a1.eval(w)}\n"
