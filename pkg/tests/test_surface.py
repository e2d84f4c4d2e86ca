import pytest

from turaev import Alphabet, InvalidInput, Surface, boundary_components, default_order
from turaev.surface import genus_of, rank


@pytest.mark.parametrize("g, b, r", [(0, 3, 2), (1, 1, 2), (0, 2, 1), (2, 1, 4), (1, 3, 4), (0, 5, 4)])
def test_rank(g, b, r):
    assert rank(Surface(g, b)) == r
    assert len(default_order(Surface(g, b)).order) == 2 * r


@pytest.mark.parametrize("g, b, order", [(0, 3, "abBA"), (1, 1, "abAB"), (0, 2, "aA"), (1, 2, "abABcC"), (0, 4, "abcCBA")])
def test_default_orders(g, b, order):
    assert default_order(Surface(g, b)).order == order


@pytest.mark.parametrize("g, b", [(g, b) for g in range(4) for b in range(1, 5) if (g, b) != (0, 1)])
def test_default_order_realizes_surface(g, b):
    a = default_order(Surface(g, b))
    assert boundary_components(a) == b
    assert genus_of(a) == g


def test_boundary_of_other_orders():
    assert boundary_components(Alphabet("aAbB")) == 3
    assert boundary_components(Alphabet("abAB")) == 1


@pytest.mark.parametrize("g, b", [(0, 0), (2, 0), (-1, 2), (0, 1), (13, 2)])
def test_invalid(g, b):
    with pytest.raises(InvalidInput):
        Surface(g, b)


def test_parse():
    assert Surface.parse("1,2") == Surface(1, 2)
    assert Surface(1, 2).euler_characteristic == -2
    with pytest.raises(InvalidInput):
        Surface.parse("1;2")
