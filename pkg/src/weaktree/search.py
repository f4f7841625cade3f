"""Exhaustive search for the longest bad tree sequences at tiny slack values.

A bad sequence may always be extended by the single-vertex tree when it is
absent (nothing embeds into a single vertex except itself), and nothing can
follow it (a single vertex embeds into every tree), so every maximal branch
ends by playing it. Removing a leaf from a valid successor keeps it valid,
so a size cap never hides the existence of successors, only oversized
candidates that might enable longer continuations; the search records a cut
whenever such a candidate could have been excluded, and ``exhausted`` is
claimed only for runs with no cut of either kind.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import inf_embeds
from .trees import RootedTree, enumerate_rooted_trees

MAX_SLACK = 3
DEFAULT_STEP_CAP = 64


@dataclass(frozen=True)
class SearchResult:
    """Longest bad sequence found, with the caps under which it is exact."""

    n: int
    length: int
    witness: tuple[str, ...]
    exhausted: bool
    step_cap: int
    size_cap: int


def default_size_cap(n: int) -> int:
    """Cap covering every budget a live branch can reach for n <= 2.

    After the opening tree, the surviving candidates fall into a single
    strictly shrinking family, so no branch without the single-vertex tree
    outlives step n + 2; the budget there is 2n + 2, rounded up by one.
    """
    return 2 * n + 3


def longest_bad_sequence(
    n: int,
    step_cap: int = DEFAULT_STEP_CAP,
    size_cap: int | None = None,
) -> SearchResult:
    """Depth-first search over canonical trees for the longest bad sequence.

    Candidates at step k are every isomorphism class of size at most
    min(k + n, size_cap) that no earlier member embeds into, explored larger
    sizes first and in code order within a size. Ties between equally long
    witnesses go to the lexicographically smaller code tuple.
    """
    if not 0 <= n <= MAX_SLACK:
        raise ValueError(f"slack must be between 0 and {MAX_SLACK}")
    if step_cap < 1:
        raise ValueError("step cap must be at least 1")
    if size_cap is None:
        size_cap = default_size_cap(n)
    if size_cap < 1:
        raise ValueError("size cap must be at least 1")

    pools = {s: enumerate_rooted_trees(s) for s in range(1, size_cap + 1)}
    embed_cache: dict[tuple[str, str], bool] = {}

    def embeds(a: RootedTree, b: RootedTree) -> bool:
        key = (a.code, b.code)
        hit = embed_cache.get(key)
        if hit is None:
            hit = inf_embeds(a, b)
            embed_cache[key] = hit
        return hit

    best_length = 0
    best_witness: tuple[str, ...] = ()
    cut = False
    sequence: list[RootedTree] = []

    def record() -> None:
        nonlocal best_length, best_witness
        codes = tuple(t.code for t in sequence)
        if len(codes) > best_length or (len(codes) == best_length and codes < best_witness):
            best_length = len(codes)
            best_witness = codes

    def extend() -> None:
        nonlocal cut
        if sequence and sequence[-1].size == 1:
            record()
            return
        if len(sequence) == step_cap:
            cut = True  # the single-vertex tree is still appendable
            record()
            return
        budget = len(sequence) + 1 + n
        allowed = min(budget, size_cap)
        if allowed < budget:
            cut = True
        for size in range(allowed, 0, -1):
            for candidate in pools[size]:
                if all(not embeds(t, candidate) for t in sequence):
                    sequence.append(candidate)
                    extend()
                    sequence.pop()
                    if best_length == step_cap:
                        return

    extend()
    return SearchResult(n, best_length, best_witness, not cut, step_cap, size_cap)
