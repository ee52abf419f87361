import json

import pytest

from torusk33.cli import main
from torusk33.graph import complete_bipartite, complete_graph


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_recognize_k5(tmp_path, capsys):
    p = tmp_path / "k5.txt"
    p.write_text(complete_graph(5).to_edge_list())
    code, out = run(capsys, "recognize", str(p))
    assert code == 0
    assert "core: K5" in out


def test_recognize_k33(tmp_path, capsys):
    p = tmp_path / "k33.txt"
    p.write_text(complete_bipartite(3, 3).to_edge_list())
    code, out = run(capsys, "recognize", str(p))
    assert code == 1
    assert out.splitlines()[0] == "ContainsK33"
    assert len(out.split("branch_vertices:")[1].splitlines()[0].split()) == 6


def test_recognize_structured(tmp_path, capsys):
    p = tmp_path / "k33.txt"
    p.write_text(complete_bipartite(3, 3).to_edge_list())
    code, out = run(capsys, "recognize", "--format", "structured", str(p))
    rec = json.loads(out)
    assert code == 1 and rec["category"] == "ContainsK33"
    assert len(rec["witness"]["branch_vertices"]) == 6


def test_recognize_malformed(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\na b\n")
    code, out = run(capsys, "recognize", str(p))
    assert code == 2
    assert out.startswith("ParseError")


@pytest.mark.parametrize("variant,order,line", [
    ("non-projective", 9, "9\t19\t50400"),
    ("totals", 10, "10\t42058800"),
    ("irreducible", 9, "9\t19\t5040"),
    ("all", 6, "6\t12\t60"),
])
def test_count(capsys, variant, order, line):
    code, out = run(capsys, "count", "--variant", variant, "--order", str(order))
    assert code == 0
    assert line in out.splitlines()


def test_count_beyond_table(capsys):
    code = main(["count", "--variant", "all", "--order", "12"])
    assert code == 2
    assert "n_cap" in capsys.readouterr().err


def test_count_is_deterministic(capsys):
    a = run(capsys, "count", "--order", "11")
    b = run(capsys, "count", "--order", "11", "--threads", "2")
    assert a == b


def test_verify(capsys):
    code, out = run(capsys, "verify", "--order", "11")
    assert code == 0
    assert "FAIL" not in out


def test_verify_corrupted_cache(tmp_path, capsys):
    from torusk33.planar_networks import load_table
    path = tmp_path / "c.txt"
    load_table(6).save(path)
    path.write_text(path.read_text().replace("4 5 6", "4 5 7"))
    code, out = run(capsys, "verify", "--cache", str(path))
    assert code == 1
    assert "FAIL planar table" in out


def test_bad_order(capsys):
    assert main(["count", "--order", "3"]) == 2
