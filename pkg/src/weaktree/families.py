"""Symbolic tree families: chains, two-leg trees, and explicit trees.

Descriptors carry exact integer parameters (Python ints, so arbitrarily
large members cost nothing) with closed-form size/height/leaf measures and a
closed-form embedding predicate. The closed forms rest on two facts: a chain
embeds wherever a descending path of its length exists, and an embedding of
a two-leg tree must send its unique branch vertex to the target's unique
branch vertex. Images of distinct leaves are pairwise incomparable, so leaf
count is monotone and nothing with three or more leaves fits into these
families. The test suite validates every rule against the explicit checker
on a parameter grid before it is trusted at astronomical sizes.

Text syntax: ``chain:<n>``, ``twoleg:<s>:<l>:<r>``, ``explicit:<parens>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .embedding import inf_embeds
from .errors import CapacityError, TreeParseError
from .trees import RootedTree, chain_tree, leaf_count, make_tree, parse_tree

EXPLICIT_PAIR_CELL_CAP = 4_000_000


@dataclass(frozen=True)
class Chain:
    """Path of ``length`` vertices rooted at one end."""

    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("chain length must be at least 1")


@dataclass(frozen=True)
class TwoLeg:
    """Stem of ``stem`` vertices whose last vertex carries two chain legs.

    Legs are unordered; the longer one is normalized into ``left``.
    """

    stem: int
    left: int
    right: int

    def __post_init__(self) -> None:
        if self.stem < 1 or self.left < 1 or self.right < 1:
            raise ValueError("two-leg parameters must be at least 1")
        if self.left < self.right:
            longer, shorter = self.right, self.left
            object.__setattr__(self, "left", longer)
            object.__setattr__(self, "right", shorter)


@dataclass(frozen=True)
class Explicit:
    """A concrete tree, stored in canonical form."""

    tree: RootedTree


TreeDescriptor = Union[Chain, TwoLeg, Explicit]


def descriptor_size(d: TreeDescriptor) -> int:
    if isinstance(d, Chain):
        return d.length
    if isinstance(d, TwoLeg):
        return d.stem + d.left + d.right
    return d.tree.size


def descriptor_height(d: TreeDescriptor) -> int:
    if isinstance(d, Chain):
        return d.length
    if isinstance(d, TwoLeg):
        return d.stem + d.left
    return d.tree.height


def descriptor_leaf_count(d: TreeDescriptor) -> int:
    if isinstance(d, Chain):
        return 1
    if isinstance(d, TwoLeg):
        return 2
    return leaf_count(d.tree)


def expand(d: TreeDescriptor, limit: int) -> RootedTree:
    """Materialize ``d``; refuses descriptors larger than ``limit`` vertices."""
    size = descriptor_size(d)
    if size > limit:
        raise CapacityError(f"descriptor has {size} vertices, expansion limited to {limit}")
    if isinstance(d, Chain):
        return chain_tree(d.length)
    if isinstance(d, TwoLeg):
        t = make_tree((chain_tree(d.left), chain_tree(d.right)))
        for _ in range(d.stem - 1):
            t = make_tree((t,))
        return t
    return d.tree


def recognize_family(t: RootedTree) -> Chain | TwoLeg | None:
    """Chain or TwoLeg form of a tree with at most two leaves, else None."""
    leaves = leaf_count(t)
    if leaves == 1:
        return Chain(t.size)
    if leaves != 2:
        return None
    stem = 1
    node = t
    while len(node.children) == 1:
        stem += 1
        node = node.children[0]
    a, b = node.children
    return TwoLeg(stem, a.size, b.size)


def _shape(d: TreeDescriptor) -> TreeDescriptor:
    if isinstance(d, Explicit):
        return recognize_family(d.tree) or d
    return d


def family_embeds(d1: TreeDescriptor, d2: TreeDescriptor) -> bool:
    """Closed-form inf-embedding decision; equals ``inf_embeds`` on expansions."""
    s1 = _shape(d1)
    s2 = _shape(d2)
    if isinstance(s1, Chain):
        return s1.length <= descriptor_height(s2)
    if isinstance(s1, TwoLeg):
        if isinstance(s2, Chain):
            return False
        if isinstance(s2, TwoLeg):
            return s1.stem <= s2.stem and s1.right <= s2.right and s1.left <= s2.left
        if descriptor_size(s1) > s2.tree.size:
            return False
        return inf_embeds(expand(s1, s2.tree.size), s2.tree)
    if isinstance(s2, (Chain, TwoLeg)):
        return False
    t1, t2 = s1.tree, s2.tree
    if t1.size * t2.size > EXPLICIT_PAIR_CELL_CAP:
        raise CapacityError("explicit pair too large to decide")
    return inf_embeds(t1, t2)


def parse_descriptor(text: str) -> TreeDescriptor:
    """Parse the colon-separated descriptor syntax."""
    if text.startswith("chain:"):
        return Chain(_parse_int(text, 6))
    if text.startswith("twoleg:"):
        parts = text[7:].split(":")
        if len(parts) != 3:
            raise TreeParseError("twoleg takes three colon-separated integers", 7)
        stem, left, right = (_parse_int(text, 7, part) for part in parts)
        return TwoLeg(stem, left, right)
    if text.startswith("explicit:"):
        return Explicit(parse_tree(text[9:]))
    raise TreeParseError("expected chain:, twoleg:, or explicit: prefix", 0)


def format_descriptor(d: TreeDescriptor) -> str:
    if isinstance(d, Chain):
        return f"chain:{d.length}"
    if isinstance(d, TwoLeg):
        return f"twoleg:{d.stem}:{d.left}:{d.right}"
    return f"explicit:{d.tree.code}"


def _parse_int(text: str, offset: int, part: str | None = None) -> int:
    chunk = text[offset:] if part is None else part
    try:
        return int(chunk)
    except ValueError:
        raise TreeParseError(f"expected an integer, got {chunk!r}", offset) from None
