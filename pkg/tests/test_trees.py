from fractions import Fraction
from math import gcd

import pytest

from markovcf.trees import (
    FAREY_ROOT,
    MARKOV_ROOT,
    FareyTriple,
    farey_branch,
    generate_tree,
    is_markov_triple,
    markov_branch,
    markov_number_via_tree,
    stern_brocot_path,
)


def test_markov_branch():
    assert markov_branch(MARKOV_ROOT, "L") == (1, 13, 5)
    assert markov_branch(MARKOV_ROOT, "R") == (5, 29, 2)
    assert markov_branch((5, 29, 2), "L") == (5, 433, 29)
    with pytest.raises(ValueError):
        markov_branch(MARKOV_ROOT, "X")


def test_farey_branch():
    assert farey_branch(FAREY_ROOT, "L") == ((0, 1), (1, 3), (1, 2))
    assert farey_branch(FAREY_ROOT, "R") == ((1, 2), (2, 3), (1, 1))
    left = farey_branch(FAREY_ROOT, "L")
    assert farey_branch(left, "R") == ((1, 3), (2, 5), (1, 2))


@pytest.mark.parametrize("t", [(1, 5, 2), (5, 433, 29), (1, 1, 2), (1, 2, 1), (1, 1, 1)])
def test_markov_triples(t):
    assert is_markov_triple(*t)


@pytest.mark.parametrize("t", [(1, 5, 3), (0, 0, 0), (2, 2, 2)])
def test_not_markov_triples(t):
    assert not is_markov_triple(*t)


@pytest.mark.parametrize("p, q, path", [(2, 5, "LR"), (1, 2, ""), (3, 5, "RL"), (1, 4, "LL")])
def test_stern_brocot_path(p, q, path):
    assert stern_brocot_path(p, q) == path


@pytest.mark.parametrize("p, q", [(2, 4), (3, 2), (0, 3), (5, 5)])
def test_stern_brocot_path_rejects(p, q):
    with pytest.raises(ValueError):
        stern_brocot_path(p, q)


@pytest.mark.parametrize("p, q, m", [(2, 5, 194), (1, 2, 5), (3, 5, 433), (0, 1, 1), (1, 1, 2)])
def test_markov_number_via_tree(p, q, m):
    assert markov_number_via_tree(p, q) == m


def test_tree_depths():
    assert generate_tree("farey", 0).triple == FAREY_ROOT
    m1 = generate_tree("markov", 1)
    assert [c.triple for c in m1.children] == [(1, 13, 5), (5, 29, 2)]
    leaves = [n.triple for n in generate_tree("markov", 2).level(2)]
    assert leaves == [(1, 34, 13), (13, 194, 5), (5, 433, 29), (29, 169, 2)]
    farey = [n.triple for n in generate_tree("farey", 2).level(2)]
    assert farey == [
        ((0, 1), (1, 4), (1, 3)),
        ((1, 3), (2, 5), (1, 2)),
        ((1, 2), (3, 5), (2, 3)),
        ((2, 3), (3, 4), (1, 1)),
    ]


def test_markov_tree_closed_under_branching():
    for node in generate_tree("markov", 10).walk():
        assert is_markov_triple(*node.triple)


def stern_brocot_level(d):
    """Mids at depth d: every reduced p/q in (0, 1) whose continued
    fraction digits sum to d + 2 (brute force over denominators)."""
    out = set()
    for q in range(2, 2 ** (d + 1) + 2):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            s, a, b = 0, q, p  # expansion of q/p gives the digits after the 0
            while b:
                s += a // b
                a, b = b, a % b
            if s == d + 2:
                out.add(Fraction(p, q))
    return out


def test_farey_levels_are_stern_brocot_levels():
    tree = generate_tree("farey", 5)
    for d in range(6):
        mids = [Fraction(*n.triple.mid) for n in tree.level(d)]
        assert all(gcd(*n.triple.mid) == 1 for n in tree.level(d))
        assert all(FareyTriple(*n.triple).is_valid() for n in tree.level(d))
        assert set(mids) == stern_brocot_level(d)
        assert mids == sorted(mids)


def test_positional_correspondence():
    markov = generate_tree("markov", 7)
    farey = generate_tree("farey", 7)
    for m, f in zip(markov.walk(), farey.walk()):
        assert m.path == f.path
        assert stern_brocot_path(*f.triple.mid) == f.path
        assert markov_number_via_tree(*f.triple.mid) == m.triple.y
