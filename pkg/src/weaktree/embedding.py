"""Deciding inf-embeddings between rooted trees.

An inf-embedding is an injective vertex map that preserves the descendant
relation and least common ancestors. ``inf_embeds`` runs a dynamic program
over vertex pairs: the subtree at u embeds with u pinned to v exactly when
the children of u can be assigned injectively to distinct child subtrees of
v, each child embedding somewhere inside its assigned subtree (infimum
preservation forces distinct children into distinct child subtrees). The
child assignment is a small bipartite matching solved with augmenting paths.

``brute_force_inf_embeds`` decides the same relation by trying injective
vertex maps directly against the literal conditions; it is the independent
oracle the tests compare against. Memoization is query-local throughout, so
all operations are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError
from .trees import RootedTree, leaf_count

BRUTE_FORCE_SOURCE_CAP = 8
BRUTE_FORCE_TARGET_CAP = 9


@dataclass(frozen=True)
class EmbeddingWitness:
    """Vertex map as (source preorder id, target preorder id) pairs, one per source vertex."""

    pairs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def _flat(t: RootedTree) -> tuple[list[list[int]], list[int], list[int]]:
    """Children-id lists, subtree sizes, and parent ids, indexed by preorder id."""
    kids: list[list[int]] = []
    sizes: list[int] = []
    parents: list[int] = []
    stack: list[tuple[RootedTree, int]] = [(t, -1)]
    while stack:
        node, par = stack.pop()
        my = len(kids)
        kids.append([])
        sizes.append(node.size)
        parents.append(par)
        if par >= 0:
            kids[par].append(my)
        for c in reversed(node.children):
            stack.append((c, my))
    return kids, sizes, parents


def _matchable(rows: list[list[bool]], cv: list[int]) -> bool:
    """True iff every row can be matched to a distinct member of ``cv`` it accepts."""
    owner: dict[int, int] = {}

    def assign(i: int, banned: set[int]) -> bool:
        for w in cv:
            if rows[i][w] and w not in banned:
                banned.add(w)
                j = owner.get(w)
                if j is None or assign(j, banned):
                    owner[w] = i
                    return True
        return False

    return all(assign(i, set()) for i in range(len(rows)))


def _match_assignment(rows: list[list[bool]], cv: list[int]) -> list[int] | None:
    """A concrete matching (row index -> member of ``cv``), or None."""
    owner: dict[int, int] = {}

    def assign(i: int, banned: set[int]) -> bool:
        for w in cv:
            if rows[i][w] and w not in banned:
                banned.add(w)
                j = owner.get(w)
                if j is None or assign(j, banned):
                    owner[w] = i
                    return True
        return False

    for i in range(len(rows)):
        if not assign(i, set()):
            return None
    result = [-1] * len(rows)
    for w, i in owner.items():
        result[i] = w
    return result


def _tables(t1: RootedTree, t2: RootedTree) -> tuple[list[list[bool]], list[list[bool]], list[list[int]], list[list[int]], list[int]]:
    """DP tables D and E over preorder id pairs.

    D[u][v]: subtree at u embeds with u mapped exactly to v.
    E[u][v]: subtree at u embeds with u mapped somewhere inside v's subtree.
    Preorder ids put parents before descendants, so iterating ids downward
    visits children before their parents on both sides.
    """
    kids1, _, _ = _flat(t1)
    kids2, sizes2, _ = _flat(t2)
    n1, n2 = t1.size, t2.size
    D = [[False] * n2 for _ in range(n1)]
    E = [[False] * n2 for _ in range(n1)]
    for u in range(n1 - 1, -1, -1):
        cu = kids1[u]
        Du = D[u]
        Eu = E[u]
        if not cu:
            for v in range(n2):
                Du[v] = True
                Eu[v] = True
            continue
        if len(cu) == 1:
            Ec = E[cu[0]]
            for v in range(n2 - 1, -1, -1):
                cv = kids2[v]
                hit = False
                for w in cv:
                    if Ec[w]:
                        hit = True
                        break
                if hit:
                    Du[v] = True
                    Eu[v] = True
                else:
                    for w in cv:
                        if Eu[w]:
                            Eu[v] = True
                            break
            continue
        rows = [E[c] for c in cu]
        need = len(cu)
        for v in range(n2 - 1, -1, -1):
            cv = kids2[v]
            if len(cv) >= need and _matchable(rows, cv):
                Du[v] = True
                Eu[v] = True
            else:
                for w in cv:
                    if Eu[w]:
                        Eu[v] = True
                        break
    return D, E, kids1, kids2, sizes2


def inf_embeds(t1: RootedTree, t2: RootedTree) -> bool:
    """Decide whether ``t1`` inf-embeds into ``t2``.

    Size, height, and leaf count are each monotone under the relation, so
    pairs failing those comparisons are rejected before the dynamic program.
    """
    if t1.size > t2.size or t1.height > t2.height:
        return False
    if leaf_count(t1) > leaf_count(t2):
        return False
    D, _, _, _, _ = _tables(t1, t2)
    return any(D[0])


def inf_embeds_witness(t1: RootedTree, t2: RootedTree) -> EmbeddingWitness | None:
    """A concrete embedding witness, or None.

    Deterministic: the root target is the smallest preorder id admitting an
    embedding, and each child lands on the smallest workable id inside its
    matched child subtree.
    """
    if t1.size > t2.size or t1.height > t2.height or leaf_count(t1) > leaf_count(t2):
        return None
    D, E, kids1, kids2, sizes2 = _tables(t1, t2)
    root_targets = [v for v in range(t2.size) if D[0][v]]
    if not root_targets:
        return None

    mapping: dict[int, int] = {}

    def place(u: int, v: int) -> None:
        mapping[u] = v
        cu = kids1[u]
        if not cu:
            return
        assignment = _match_assignment([E[c] for c in cu], kids2[v])
        if assignment is None:
            raise AssertionError("DP marked an unmatchable pair embeddable")
        for c, group in zip(cu, assignment):
            for w in range(group, group + sizes2[group]):
                if D[c][w]:
                    place(c, w)
                    break
            else:
                raise AssertionError("matched subtree lost its landing site")

    place(0, min(root_targets))
    return EmbeddingWitness(tuple(sorted(mapping.items())))


def _inf_table(parents: list[int]) -> list[list[int]]:
    n = len(parents)
    ancestors: list[list[int]] = []
    for v in range(n):
        chain = [v]
        while parents[chain[-1]] >= 0:
            chain.append(parents[chain[-1]])
        ancestors.append(chain)
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        anc_u = set(ancestors[u])
        for v in range(n):
            for w in ancestors[v]:
                if w in anc_u:
                    table[u][v] = w
                    break
    return table


def check_embedding_map(t1: RootedTree, t2: RootedTree, pairs: Iterable[tuple[int, int]]) -> bool:
    """Literal replay of the inf-embedding conditions for a full vertex map."""
    mapping = dict((int(u), int(v)) for u, v in pairs)
    n1, n2 = t1.size, t2.size
    if len(mapping) != n1 or set(mapping) != set(range(n1)):
        return False
    targets = list(mapping.values())
    if len(set(targets)) != n1 or any(not 0 <= v < n2 for v in targets):
        return False
    _, sizes1, parents1 = _flat(t1)
    _, sizes2, parents2 = _flat(t2)
    inf1 = _inf_table(parents1)
    inf2 = _inf_table(parents2)

    def desc1(a: int, b: int) -> bool:
        return a <= b < a + sizes1[a]

    def desc2(a: int, b: int) -> bool:
        return a <= b < a + sizes2[a]

    for u in range(n1):
        fu = mapping[u]
        for v in range(n1):
            fv = mapping[v]
            if desc1(u, v) and not desc2(fu, fv):
                return False
            if mapping[inf1[u][v]] != inf2[fu][fv]:
                return False
    return True


def brute_force_inf_embeds(t1: RootedTree, t2: RootedTree) -> bool:
    """Search all injective vertex maps for one satisfying the literal conditions.

    Assignments proceed in source preorder; a partial map is abandoned as
    soon as an already-checkable descendant or infimum condition fails, which
    filters the same map space the full enumeration would.
    """
    if t1.size > BRUTE_FORCE_SOURCE_CAP or t2.size > BRUTE_FORCE_TARGET_CAP:
        raise CapacityError(
            f"brute force capped at {BRUTE_FORCE_SOURCE_CAP}x{BRUTE_FORCE_TARGET_CAP} vertices"
        )
    _, sizes1, parents1 = _flat(t1)
    _, sizes2, parents2 = _flat(t2)
    inf1 = _inf_table(parents1)
    inf2 = _inf_table(parents2)
    n1, n2 = t1.size, t2.size
    used = [False] * n2
    target = [-1] * n1

    def place(u: int) -> bool:
        if u == n1:
            return True
        par = parents1[u]
        if par < 0:
            candidates = range(n2)
        else:
            tp = target[par]
            candidates = range(tp + 1, tp + sizes2[tp])
        for v in candidates:
            if used[v]:
                continue
            ok = True
            for u2 in range(u):
                if target[inf1[u][u2]] != inf2[v][target[u2]]:
                    ok = False
                    break
            if ok:
                used[v] = True
                target[u] = v
                if place(u + 1):
                    return True
                used[v] = False
                target[u] = -1
        return False

    return place(0)
