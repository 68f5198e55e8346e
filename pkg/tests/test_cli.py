import io

import pytest

from stringiso.catalog import m24_generators
from stringiso.cli import main
from stringiso.formats import format_group


def run(argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return write


def test_order(files):
    assert run(["order", files("s4", "degree 4\ngen 1 0 2 3\ngen 1 2 3 0\n")]) == (0, "24\n")
    assert run(["order", files("e", "degree 7\n")]) == (0, "1\n")
    assert run(["order", files("m24", format_group(24, m24_generators()))]) == (0, "244823040\n")


def test_solve_and_verify(files, tmp_path):
    s2 = files("s2", "degree 2\ngen 1 0\n")
    ab, ba = files("ab", "str a b\n"), files("ba", "str b a\n")
    code, text = run(["solve", s2, ab, ba])
    assert code == 0 and text.splitlines()[:2] == ["order 1", "rep 1 0"]
    aa = files("aa", "str a a\n")
    code, text = run(["solve", s2, ab, aa])
    assert code == 0 and text.startswith("EMPTY")

    c4 = files("c4", "degree 4\ngen 1 2 3 0\n")
    x = files("x", "str a b a b\n")
    expr = tmp_path / "e.txt"
    code, text = run(["solve", c4, x, x, "--emit-expr", expr])
    assert code == 0 and text.startswith("order 2")
    atoms = int(text.split("atoms ")[1])
    assert atoms >= 1
    assert run(["verify-expr", expr, c4, x, x]) == (0, "PASS\n")

    tampered = files("bad", "(atom 4 (parts) (rep 1 0 2 3))\n")
    assert run(["verify-expr", tampered, c4, x, x]) == (2, "FAIL\n")
    empty = files("empty", "(empty 4)\n")
    assert run(["verify-expr", empty, c4, x, x])[0] == 2
    assert run(["verify-expr", files("junk", "(atom\n"), c4, x, x])[0] == 1


def test_structure_commands(files):
    c4 = files("c4", "degree 4\ngen 1 2 3 0\n")
    assert run(["orbits", c4]) == (0, "0 1 2 3\n")
    assert run(["blocks", c4]) == (0, "0 2\n1 3\n")
    assert run(["blocks", files("s3", "degree 3\ngen 1 0 2\ngen 1 2 0\n")]) == (0, "primitive\n")
    assert run(["member", c4, 2, 3, 0, 1]) == (0, "yes\n")
    assert run(["member", c4, 1, 0, 2, 3]) == (0, "no\n")
    code, text = run(["stab", c4, "--blocks", "0 2|1 3"])
    assert code == 0 and text.startswith("order 2")
    code, text = run(["stab", c4, "--points", 0])
    assert code == 0 and text.startswith("order 1")


def test_exit_codes(files, capsys):
    bad = files("bad", "degree 3\ngen 0 0 1\n")
    assert run(["order", bad])[0] == 1
    assert "bad:2:" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == 1
    assert run(["order", "/nonexistent/file"])[0] == 1
    c4 = files("c4", "degree 4\ngen 1 2 3 0\n")
    assert run(["stab", c4])[0] == 1
    assert run(["blocks", files("i", "degree 3\ngen 1 0 2\n")])[0] == 1
    pgl = files("pgl", "degree 6\ngen 1 2 3 4 0 5\ngen 0 2 4 1 3 5\ngen 5 4 2 3 1 0\n")
    x, y = files("x", "str a a b b c c\n"), files("y", "str a b a b c c\n")
    assert run(["solve", pgl, x, y, "--budget", 10])[0] == 3


def test_constants_command():
    code, text = run(["constants"])
    assert code == 0 and "109.99738" in text
    code, text = run(["constants", "--mode", "nocfsg", "--format", "table"])
    assert code == 0 and "111.3709" in text
    assert run(["constants", "--perturb-k2", 1])[0] == 2


def test_catalog_command_deterministic():
    a = run(["catalog", "--max-degree", 5, "--pairs", 2])
    b = run(["catalog", "--max-degree", 5, "--pairs", 2])
    assert a == b
    assert a[0] == 0 and "result=PASS" in a[1]
