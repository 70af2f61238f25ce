import pytest

from rainbowsub import errors
from rainbowsub.generators import hypercube, random_colored
from rainbowsub.io import load, loads, save


def test_save_load_hypercube(tmp_path):
    g = hypercube(2)
    save(g, tmp_path / "q2.txt")
    assert load(tmp_path / "q2.txt") == g


def test_save_load_random(tmp_path):
    g = random_colored(60, 8, seed=3)
    save(g, tmp_path / "r.txt")
    assert load(tmp_path / "r.txt") == g


def test_missing_color_is_parse_error():
    with pytest.raises(errors.ParseError) as info:
        loads("# header\n0 1 a\n0 1\n")
    assert info.value.line == 3


def test_improper_file_surfaces_build_error():
    with pytest.raises(errors.ImproperColoring):
        loads("0 1 red\n1 2 red\n")


def test_string_colors_interned_first_seen():
    g = loads("# comment\nn 5\n3 4 blue\n0 1 red\n1 2 blue\n")
    assert g.n == 5
    assert g.edge_color(3, 4) == 0
    assert g.edge_color(0, 1) == 1
    assert g.edge_color(1, 2) == 0


def test_n_inferred_from_max_vertex():
    assert loads("0 7 x\n").n == 8


def test_header_after_edge_rejected():
    with pytest.raises(errors.ParseError):
        loads("0 1 a\nn 4\n")


def test_missing_file():
    with pytest.raises(OSError):
        load("/nonexistent/graph.txt")
