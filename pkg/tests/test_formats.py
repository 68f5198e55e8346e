import pytest

from stringiso.formats import (
    FormatError, encode_strings, format_expression, format_group, parse_expression, parse_group,
    parse_string_tokens,
)
from stringiso.expr import singleton


def test_parse_group_image_and_cycles():
    spec = parse_group("# C4\ndegree 4\ngen 1 2 3 0\ngen (0 2)(1 3)  # square\n")
    assert spec.degree == 4
    assert spec.generators == ((1, 2, 3, 0), (2, 3, 0, 1))


def test_round_trip():
    text = format_group(3, [(1, 2, 0)], "cyclic")
    assert parse_group(text).generators == ((1, 2, 0),)


@pytest.mark.parametrize(
    "text, line",
    [
        ("gen 0 1\n", 1),
        ("degree 3\ngen 0 0 1\n", 2),
        ("degree 3\ngen 0 1\n", 2),
        ("degree 3\nfoo\n", 2),
        ("degree 3\ngen (0 1)(1 2)\n", 2),
        ("degree 0\n", 1),
    ],
)
def test_group_errors_have_line_numbers(text, line):
    with pytest.raises(FormatError) as info:
        parse_group(text, "g.txt")
    assert info.value.line == line
    assert str(info.value).startswith(f"g.txt:{line}:")


def test_missing_degree():
    with pytest.raises(FormatError):
        parse_group("# nothing\n")


def test_strings():
    assert parse_string_tokens("str a b a\n") == ("a", "b", "a")
    with pytest.raises(FormatError):
        parse_string_tokens("str a\nstr b\n")
    with pytest.raises(FormatError):
        parse_string_tokens("")
    x, y = encode_strings(("b", "a", "10", "2"), ("2", "b"))
    assert x == (3, 2, 1, 0) and y == (0, 3)


def test_expression_text():
    e = singleton((1, 0))
    assert parse_expression(format_expression(e)) == e
    with pytest.raises(FormatError):
        parse_expression("(atom")
