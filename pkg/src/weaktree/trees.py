"""Canonical unlabeled rooted trees: parsing, measures, enumeration, DOT export.

Trees are unordered; children are stored sorted by descending canonical code,
which makes the balanced-parenthesis serialization a complete isomorphism
invariant: two trees are isomorphic exactly when their codes are equal.
Vertices are addressed by preorder index (root = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import CapacityError, TreeParseError

DEFAULT_ENUMERATION_CAP = 12


@dataclass(frozen=True, eq=False, repr=False)
class RootedTree:
    """Immutable rooted tree held in canonical child order.

    ``size`` and ``height`` count vertices (a single vertex has height 1);
    both are cached at construction, as is the canonical ``code``.
    """

    children: tuple["RootedTree", ...]
    size: int
    height: int
    code: str

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __repr__(self) -> str:
        return f"RootedTree({self.code!r})"

    @property
    def is_leaf(self) -> bool:
        return not self.children


def make_tree(children: Iterable[RootedTree] = ()) -> RootedTree:
    """Build the canonical tree with the given child subtrees (order ignored)."""
    kids = tuple(sorted(children, key=lambda c: c.code, reverse=True))
    size = 1 + sum(c.size for c in kids)
    height = 1 + max((c.height for c in kids), default=0)
    code = "(" + "".join(c.code for c in kids) + ")"
    return RootedTree(kids, size, height, code)


_LEAF = make_tree()


def single_vertex() -> RootedTree:
    return _LEAF


def chain_tree(length: int) -> RootedTree:
    """Path of ``length`` vertices rooted at one end."""
    if length < 1:
        raise ValueError("chain length must be at least 1")
    t = _LEAF
    for _ in range(length - 1):
        t = make_tree((t,))
    return t


def parse_tree(text: str) -> RootedTree:
    """Parse a balanced-parenthesis code into its canonical tree.

    Accepts any child order; the result is canonicalized, so
    ``parse_tree(s).code`` is the canonical code of the isomorphism class.
    """
    if not text:
        raise TreeParseError("empty tree not permitted", 0)
    stack: list[list[RootedTree]] = []
    root: RootedTree | None = None
    for i, ch in enumerate(text):
        if root is not None:
            raise TreeParseError("trailing characters after the root", i)
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise TreeParseError("unmatched ')'", i)
            node = make_tree(stack.pop())
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise TreeParseError(f"unexpected character {ch!r}", i)
    if root is None:
        raise TreeParseError("unclosed '('", len(text))
    return root


def serialize_tree(t: RootedTree) -> str:
    """Canonical balanced-parenthesis code of ``t``."""
    return t.code


def tree_index(t: RootedTree) -> tuple[list[RootedTree], list[int], list[int], list[list[int]]]:
    """Preorder arrays for ``t``: nodes, parent ids, depths, children-id lists."""
    nodes: list[RootedTree] = []
    parents: list[int] = []
    depths: list[int] = []
    children_ids: list[list[int]] = []
    stack: list[tuple[RootedTree, int]] = [(t, -1)]
    while stack:
        node, par = stack.pop()
        my = len(nodes)
        nodes.append(node)
        parents.append(par)
        depths.append(0 if par < 0 else depths[par] + 1)
        children_ids.append([])
        if par >= 0:
            children_ids[par].append(my)
        for c in reversed(node.children):
            stack.append((c, my))
    return nodes, parents, depths, children_ids


def lca(t: RootedTree, u: int, v: int) -> int:
    """Deepest common ancestor of preorder vertices ``u`` and ``v``."""
    if not (0 <= u < t.size) or not (0 <= v < t.size):
        raise ValueError(f"vertex id out of range for a tree of size {t.size}")
    _, parents, depths, _ = tree_index(t)
    while depths[u] > depths[v]:
        u = parents[u]
    while depths[v] > depths[u]:
        v = parents[v]
    while u != v:
        u = parents[u]
        v = parents[v]
    return u


def leaf_count(t: RootedTree) -> int:
    """Number of vertices without children."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node.children:
            stack.extend(node.children)
        else:
            count += 1
    return count


def to_dot(t: RootedTree) -> str:
    """DOT digraph: root first, one edge per parent-child pair, filled circles."""
    nodes, parents, _, _ = tree_index(t)
    lines = [
        "digraph tree {",
        '  node [shape=circle, style=filled, fillcolor=black, fixedsize=true,'
        ' width=0.15, label=""];',
    ]
    lines.extend(f"  {i};" for i in range(len(nodes)))
    lines.extend(f"  {parents[i]} -> {i};" for i in range(1, len(nodes)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def enumerate_rooted_trees(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[RootedTree, ...]:
    """One canonical tree per isomorphism class with exactly ``n`` vertices.

    Sorted by canonical code. ``cap`` guards against runaway enumeration;
    the class count grows roughly like 2.96**n.
    """
    if n < 1:
        raise ValueError("tree size must be at least 1")
    if n > cap:
        raise CapacityError(f"enumeration capped at {cap} vertices (requested {n})")
    return _trees_of_size(n)


def _key(t: RootedTree) -> tuple[int, str]:
    return (t.size, t.code)


@lru_cache(maxsize=None)
def _trees_of_size(n: int) -> tuple[RootedTree, ...]:
    if n == 1:
        return (_LEAF,)
    out = [make_tree(forest) for forest in _forests(n - 1, None)]
    out.sort(key=lambda t: t.code)
    return tuple(out)


@lru_cache(maxsize=None)
def _forests(total: int, bound: RootedTree | None) -> tuple[tuple[RootedTree, ...], ...]:
    """Multisets of trees of the given total size, as key-non-increasing tuples.

    ``bound`` caps the first member, keeping generation duplicate-free.
    """
    if total == 0:
        return ((),)
    out: list[tuple[RootedTree, ...]] = []
    for size in range(total, 0, -1):
        if bound is not None and size > bound.size:
            continue
        for t in _trees_of_size(size):
            if bound is not None and _key(t) > _key(bound):
                continue
            for rest in _forests(total - size, t):
                out.append((t, *rest))
    return tuple(out)
