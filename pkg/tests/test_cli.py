import json
import subprocess
import sys

import pytest

from conftest import GRAPHS
from tga.cli import main
from tga.graph import parse_graph
from tga.semigroup import FarkasCertificate
from tga.terms import parse_word

LOOPS = str(GRAPHS / "g_loops.txt")
C4 = str(GRAPHS / "c4.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generators(capsys):
    code, out, _ = run(capsys, "generators", LOOPS)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[-3:] == ["p:(x1|x2)", "p:(x1|x3)", "p:(x2|x3)"]


def test_member_certificate(capsys):
    code, out, _ = run(capsys, "member", C4, "a=1,c=1")
    assert code == 1
    assert out.splitlines()[0] == "member: false"
    assert out.splitlines()[1].startswith("certificate (cone): ")


def test_member_json_round_trip(capsys):
    code, out, _ = run(capsys, "member", C4, "a=1,c=1", "--json")
    data = json.loads(out)
    assert code == 1 and data["member"] is False
    g = parse_graph(open(C4).read())
    from fractions import Fraction

    values = tuple(Fraction(data["certificate"]["values"][name]) for name in g.names)
    assert FarkasCertificate(values, data["certificate"]["kind"]).verify(g, (1, 0, 1, 0))


def test_member_true(capsys):
    code, out, _ = run(capsys, "member", LOOPS, "x1=1,x2=1,x3=1,x4=1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["member"] is True


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", LOOPS, "x1=1,x2=1,x3=1,x4=1")
    assert code == 0 and out.strip() == "e:x1-x4 p:(x2|x3)"
    code, _, _ = run(capsys, "decompose", C4, "a=1,c=1")
    assert code == 1


def test_normalize_json(capsys):
    code, out, _ = run(capsys, "normalize", LOOPS, "c:x1 c:x2 e:x1-x4", "--json")
    data = json.loads(out)
    assert code == 0 and data["standard"] == "e:x1-x1 e:x2-x4"
    assert [e["kind"] for e in data["log"]] == ["cycle-destroy"]


def test_equal_pair_words(capsys):
    code, out, _ = run(capsys, "equal", LOOPS, "e:x1-x4 p:(x2|x3)", "e:x2-x4 p:(x1|x3)")
    assert code == 0
    assert out.splitlines()[0] == "equal: 1 step(s)"
    assert "pair-shift-shared-cycle" in out


def test_equal_cycle_words_replay(capsys):
    a, b = "e:x1-x4 c:x2 c:x3", "e:x2-x4 c:x1 c:x3"
    code, out, _ = run(capsys, "equal", LOOPS, a, b, "--json")
    assert code == 0
    log = json.loads(out)["log"]
    g = parse_graph(open(LOOPS).read())
    word = parse_word(g, a)
    for entry in log:
        if entry["kind"] != "cancel":
            word = (word - parse_word(g, entry["source"])) + parse_word(g, entry["target"])
    assert word == parse_word(g, b)


def test_equal_different_weights(capsys):
    code, out, _ = run(capsys, "equal", C4, "e:a-b", "e:b-c")
    assert code == 1 and "weights differ" in out


def test_relations(capsys):
    code, out, _ = run(capsys, "relations", C4, "--max-walk", "4")
    assert code == 0 and out.splitlines() == ["[rotation] e:a-b e:c-d = e:a-d e:b-c"]
    code, out, _ = run(capsys, "relations", C4, "--binomial")
    assert " - " in out


def test_admissible_and_dot(capsys):
    code, out, _ = run(capsys, "admissible", C4)
    assert code == 0 and out.splitlines()[0] == "10 admissible subgraphs"
    code, out, _ = run(capsys, "admissible", C4, "--format", "dot")
    assert out.count("graph K {") == 10


def test_laurent(capsys):
    code, out, _ = run(capsys, "laurent", LOOPS, "all")
    assert code == 0 and out.split() == ["x1-x1", "x1-x4", "x2-x4", "x3-x4"]
    code, _, err = run(capsys, "laurent", C4, "a-b,c-d")
    assert code == 2 and "not admissible" in err


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "gens", "--max-vertices", "3")
    assert code == 0 and out.splitlines()[0] == "seed 0" and "failures 0" in out
    code, out, _ = run(capsys, "oracle", "congruence", LOOPS, "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["checks"] > 0


@pytest.mark.parametrize("argv, message", [
    (["generators", "/nonexistent/graph.txt"], "cannot read"),
    (["member", LOOPS, "q=1"], "unknown vertex"),
    (["normalize", LOOPS, "z:x1"], ""),
])
def test_data_errors_exit_2(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("tga: error: ") and message in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_bad_graph_file(tmp_path, capsys):
    path = tmp_path / "dup.txt"
    path.write_text("a b\na b\n")
    code, _, err = run(capsys, "generators", str(path))
    assert code == 2 and "line 2" in err


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "tga.cli", "relations", LOOPS, "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["relations"]
