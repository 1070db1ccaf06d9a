import itertools
from fractions import Fraction

import pytest

from degreal.core import SequenceError
from degreal.extensions import min_chebyshev, min_graphic_extension, min_relative_epsilon, relative_candidates
from degreal.oracle import brute_force_chebyshev, brute_force_extension, brute_force_relative
from degreal.verify import is_graphic


@pytest.mark.parametrize("prefix, n0", [((3, 3, 3), 4), ((1, 1), 2), ((2,), 3), ((0,), 1), ((5, 5), 6)])
def test_extension_examples(prefix, n0):
    out = min_graphic_extension(prefix)
    assert out.n0 == n0 == brute_force_extension(prefix)
    assert out.degrees[: len(prefix)].tolist() == list(prefix)
    assert all(v >= 1 for v in out.degrees[len(prefix) :])
    assert is_graphic(out.degrees)


def test_extension_examples_exact_witness():
    assert min_graphic_extension((3, 3, 3)).degrees.tolist() == [3, 3, 3, 3]
    assert min_graphic_extension((1, 1)).degrees.tolist() == [1, 1]


def test_extension_rejects_empty():
    with pytest.raises(SequenceError):
        min_graphic_extension([])


@pytest.mark.parametrize("a, c", [((2, 2, 2), 0), ((1, 1, 1), 1), ((2, 0, 0), 1)])
def test_chebyshev_examples(a, c):
    out = min_chebyshev(a)
    assert out.radius == c
    assert is_graphic(out.degrees)
    assert max(abs(x - y) for x, y in zip(out.degrees.tolist(), a)) <= c


@pytest.mark.parametrize("a, eps", [((2, 2, 2), 0), ((1, 1, 1), 1), ((1, 0, 0), 1)])
def test_relative_examples(a, eps):
    out = min_relative_epsilon(a)
    assert out.radius == eps
    assert is_graphic(out.degrees)


def test_relative_zero_pins():
    assert min_relative_epsilon((1, 0, 0)).degrees.tolist() == [0, 0, 0]


def test_relative_candidates_contain_breakpoints():
    c = relative_candidates((2, 3, 1, 0))
    assert Fraction(1, 2) in c and Fraction(1, 3) in c and c[0] == 0 and c == sorted(c)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_small_exhaustive(n):
    for a in itertools.product(range(n), repeat=n):
        assert min_chebyshev(a).radius == brute_force_chebyshev(a)[0]
        assert min_relative_epsilon(a).radius == brute_force_relative(a)[0]
        assert min_graphic_extension(a).n0 == brute_force_extension(a)
