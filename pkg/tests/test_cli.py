"""Command-line interface: parsing, output formats, exit codes."""

import json

import pytest

from stansym.cli import (
    main,
    parse_affine,
    parse_partition,
    parse_permutation,
    parse_word,
)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_permutation():
    assert parse_permutation("2431").window == (2, 4, 3, 1)
    assert parse_permutation("[2, 4, 3, 1]").window == (2, 4, 3, 1)
    with pytest.raises(ValueError):
        parse_permutation("24x1")


def test_parse_word_and_partition():
    assert parse_word("21202") == (2, 1, 2, 0, 2)
    assert parse_partition("2,2,1") == (2, 2, 1)
    assert parse_partition("[2, 1]") == (2, 1)
    assert parse_partition("") == ()


def test_parse_affine_modes():
    w = parse_affine("21202", 3, "auto")
    assert w.length() == 5
    v = parse_affine("[-2, 2, 6]", 3, "auto")
    assert v.window == (-2, 2, 6)
    assert parse_affine("[-2, 2, 6]", 3, "window") == v


def test_stanley_command_text(capsys):
    code, out, _ = run(["stanley", "2431"], capsys)
    assert code == 0
    assert "m{2,1,1}" in out and "3" in out


def test_stanley_command_json(capsys):
    code, out, _ = run(["--format", "json", "stanley", "2431"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == 4
    assert {"part": [1, 1, 1, 1], "coeff": 3} in data["terms"]


def test_format_flag_after_subcommand(capsys):
    code, out, _ = run(["stanley", "2431", "--format", "json"], capsys)
    assert code == 0
    json.loads(out)


def test_schur_expand_command(capsys):
    code, out, _ = run(["schur-expand", "2431"], capsys)
    assert code == 0
    assert "s{2,1,1}" in out


def test_affine_commands(capsys):
    code, out, _ = run(["affine-stanley", "-n", "3", "21202", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert {"part": [1, 1, 1, 1, 1], "coeff": 3} in data["terms"]
    code, out, _ = run(["affine-schur-expand", "-n", "3", "21202", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert sorted(tuple(t["part"]) for t in data["terms"]) == [(2, 1, 1, 1), (2, 2, 1)]


def test_eg_insert_command(capsys):
    code, out, _ = run(["eg-insert", "21232", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["P"] == [[1, 2, 3], [2, 3]]
    assert data["Q"] == [[1, 3, 4], [2, 5]]


def test_reduced_words_command(capsys):
    code, out, _ = run(["reduced-words", "321"], capsys)
    assert code == 0
    assert set(out.split()) == {"121", "212"}
    code, out, _ = run(["reduced-words", "-n", "3", "[-2, 2, 6]"], capsys)
    assert code == 0
    assert set(out.split()) == {"1210", "2120"}


def test_little_move_command(capsys):
    code, out, _ = run(["little-move", "2134321", "5", "--format", "json"], capsys)
    assert code == 0
    chain = json.loads(out)
    assert chain[0]["word"] == [2, 1, 3, 4, 3, 2, 1]
    assert chain[-1]["word"] == [3, 2, 4, 5, 3, 2, 1]


def test_kschur_and_jbasis_commands(capsys):
    code, out, _ = run(["kschur", "-n", "3", "2,1", "--format", "json"], capsys)
    assert code == 0
    json.loads(out)
    code, out, _ = run(["jbasis", "-n", "3", "1", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data) == 3 and all(t["coeff"] == 1 for t in data)


def test_verify_examples_suite(capsys):
    code, out, _ = run(["verify", "examples"], capsys)
    assert code == 0
    assert "FAIL" not in out


def test_bad_input_exits_2(capsys):
    code, _, err = run(["stanley", "24x1"], capsys)
    assert code == 2
    assert "error" in err


def test_bad_window_exits_2(capsys):
    code, _, err = run(["affine-stanley", "-n", "3", "[1, 2, 4]"], capsys)
    assert code == 2
