"""The Markov tree, the Farey tree, and the index map p/q -> m_{p/q}.

Both trees are complete binary trees with identical shape.  A node's
position is a word over ``"L"``/``"R"`` read from the root, and the
Markov number indexed by ``p/q`` is the middle entry of the Markov triple
sitting where ``p/q`` sits in the Farey tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple

__all__ = [
    "MarkovTriple",
    "FareyTriple",
    "TreeNode",
    "MARKOV_ROOT",
    "FAREY_ROOT",
    "is_markov_triple",
    "markov_branch",
    "farey_branch",
    "stern_brocot_path",
    "markov_number_via_tree",
    "generate_tree",
]

LEFT, RIGHT = "L", "R"


class MarkovTriple(NamedTuple):
    x: int
    y: int
    z: int


class FareyTriple(NamedTuple):
    """Three fractions ``(a/b, (a+c)/(b+d), c/d)`` stored as ``(num, den)`` pairs.

    Plain pairs rather than :class:`fractions.Fraction` so that ``0/1`` and
    ``1/1`` print the way they appear in the tree.
    """

    left: tuple[int, int]
    mid: tuple[int, int]
    right: tuple[int, int]

    def is_valid(self) -> bool:
        (a, b), (m, n), (c, d) = self
        return (
            (m, n) == (a + c, b + d)
            and b * c - a * d == 1
            and all(gcd(u, v) == 1 for u, v in self)
        )


MARKOV_ROOT = MarkovTriple(1, 5, 2)
FAREY_ROOT = FareyTriple((0, 1), (1, 2), (1, 1))

# endpoint convention for the index map
_ENDPOINTS = {(0, 1): 1, (1, 1): 2}


def is_markov_triple(x: int, y: int, z: int) -> bool:
    return x > 0 and y > 0 and z > 0 and x * x + y * y + z * z == 3 * x * y * z


def _side(side: str) -> str:
    side = side.upper()
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    return side


def markov_branch(t: MarkovTriple, side: str) -> MarkovTriple:
    x, y, z = t
    if _side(side) == LEFT:
        return MarkovTriple(x, 3 * x * y - z, y)
    return MarkovTriple(y, 3 * y * z - x, z)


def farey_branch(t: FareyTriple, side: str) -> FareyTriple:
    (a, b), (m, n), (c, d) = t
    if _side(side) == LEFT:
        return FareyTriple((a, b), (a + m, b + n), (m, n))
    return FareyTriple((m, n), (m + c, n + d), (c, d))


def stern_brocot_path(p: int, q: int) -> str:
    """Descent word from the Farey root to the triple whose middle is ``p/q``.

    Mediant bisection; requires ``gcd(p, q) == 1`` and ``0 < p < q``.
    """
    if not 0 < p < q:
        raise ValueError(f"need 0 < p < q, got {p}/{q}")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not reduced")
    a, b, c, d = 0, 1, 1, 1
    path = []
    while True:
        m, n = a + c, b + d
        # compare p/q with m/n without division
        if p * n == m * q:
            return "".join(path)
        if p * n < m * q:
            path.append(LEFT)
            c, d = m, n
        else:
            path.append(RIGHT)
            a, b = m, n


def markov_number_via_tree(p: int, q: int) -> int:
    """``m_{p/q}`` read off the Markov tree; ``0/1 -> 1`` and ``1/1 -> 2``."""
    if (p, q) in _ENDPOINTS:
        return _ENDPOINTS[(p, q)]
    t = MARKOV_ROOT
    for side in stern_brocot_path(p, q):
        t = markov_branch(t, side)
    return t.y


@dataclass
class TreeNode:
    triple: tuple
    path: str = ""
    children: list["TreeNode"] = field(default_factory=list)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def level(self, depth: int) -> list["TreeNode"]:
        """Nodes at ``depth`` below this one, left to right."""
        nodes = [self]
        for _ in range(depth):
            nodes = [c for n in nodes for c in n.children]
        return nodes


def generate_tree(kind: str, depth: int) -> TreeNode:
    """Complete tree of the given depth (``depth=0`` is just the root)."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if kind == "markov":
        root, branch = MARKOV_ROOT, markov_branch
    elif kind == "farey":
        root, branch = FAREY_ROOT, farey_branch
    else:
        raise ValueError(f"unknown tree kind {kind!r}")

    def grow(triple, path, remaining):
        node = TreeNode(triple, path)
        if remaining:
            node.children = [
                grow(branch(triple, s), path + s, remaining - 1) for s in (LEFT, RIGHT)
            ]
        return node

    return grow(root, "", depth)


def farey_mid(t: FareyTriple) -> Fraction:
    return Fraction(*t.mid)
