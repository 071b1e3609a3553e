"""Shared builders, independent oracles, and hypothesis strategies.

The oracles here recompute results by definition-level brute force
(permutation scans, relation filtering, chain enumeration) so that the
library's bitmask fast paths are checked against something that cannot
share their bugs.
"""

from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings, strategies as st

from tameorders import Poset, build_poset

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


def chain(n: int) -> Poset:
    labels = [f"c{i}" for i in range(n)]
    return build_poset(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return build_poset([f"a{i}" for i in range(n)], [])


def oracle_quartet_r22(p: Poset):
    """Brute scan over ordered quadruples for an induced two-chain pair."""
    for x, x2, y, y2 in itertools.permutations(p.elements, 4):
        quad = (x, x2, y, y2)
        wanted = {(x, y), (x2, y2)}
        ok = True
        for u in quad:
            for v in quad:
                if u is not v and p.less(u, v) != ((u, v) in wanted):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return quad
    return None


def oracle_embedding_exists(pattern: Poset, target: Poset) -> bool:
    """Brute scan over all injections for a two-way order embedding."""
    k = len(pattern)
    src = pattern.elements
    for image in itertools.permutations(target.elements, k):
        ok = True
        for i in range(k):
            for j in range(k):
                if i == j:
                    continue
                if pattern.less(src[i], src[j]) != target.less(image[i], image[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def oracle_longest_chain(p: Poset) -> int:
    """Longest chain length by exhaustive descent."""
    best = 0

    def descend(x, length):
        nonlocal best
        best = max(best, length)
        for y in p.elements:
            if p.less(x, y):
                descend(y, length + 1)

    for x in p.elements:
        descend(x, 1)
    return best


def oracle_posets_by_filter(n: int) -> set[tuple[int, ...]]:
    """All transitively closed irreflexive relations on n points, as mask rows."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = set()
    for selection in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if selection >> k & 1:
                adj[i] |= 1 << j
        ok = True
        for i in range(n):
            if adj[i] >> i & 1:
                ok = False
                break
            rest = adj[i]
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                rest ^= low
                if adj[j] & ~adj[i]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(tuple(adj))
    return found


@st.composite
def posets(draw, max_size: int = 7) -> Poset:
    """Random poset via a drawn linear extension plus a compatible pair subset."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    labels = [f"e{i}" for i in range(n)]
    perm = draw(st.permutations(range(n)))
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                pairs.append((labels[perm[i]], labels[perm[j]]))
    return build_poset(labels, pairs)
