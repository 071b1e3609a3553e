"""Finite strict partial orders backed by per-element bitmasks."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator

from .errors import (
    CycleDetected,
    DuplicateElement,
    SizeLimitExceeded,
    UnknownElement,
)

Label = Hashable

ISO_SIZE_LIMIT = 30


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite strict partial order.

    The element tuple fixes the index order used for deterministic tie
    breaking everywhere in the library.  ``up_masks[i]`` has bit ``j`` set
    exactly when ``elements[i] < elements[j]``; the relation handed to this
    constructor must already be transitively closed and irreflexive.  Use
    :func:`build_poset` to close an arbitrary generating set of pairs, and
    :meth:`validate` to recheck the axioms of a hand-built instance.
    """

    __slots__ = ("elements", "up_masks", "down_masks", "_index")

    def __init__(self, elements: Iterable[Label], up_masks: Iterable[int]):
        elements = tuple(elements)
        index: dict[Label, int] = {}
        for i, label in enumerate(elements):
            if label in index:
                raise DuplicateElement(f"duplicate element {label!r}")
            index[label] = i
        up = tuple(up_masks)
        n = len(elements)
        if len(up) != n:
            raise ValueError("one up mask per element required")
        down = [0] * n
        for i, mask in enumerate(up):
            if mask >> n:
                raise ValueError("up mask refers to an element index out of range")
            bit = 1 << i
            for j in iter_bits(mask):
                down[j] |= bit
        self.elements = elements
        self.up_masks = up
        self.down_masks = tuple(down)
        self._index = index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.elements)

    def __contains__(self, label: Label) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.up_masks == other.up_masks

    def __hash__(self) -> int:
        return hash((self.elements, self.up_masks))

    def __repr__(self) -> str:
        if len(self) <= 6:
            return f"Poset({list(self.elements)!r}, {self.pairs()!r})"
        return f"Poset(<{len(self)} elements, {self.num_relations} relations>)"

    def index(self, label: Label) -> int:
        """Dense index of ``label``; raises UnknownElement if absent."""
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"unknown element {label!r}") from None
        except TypeError:
            raise UnknownElement(f"unhashable element {label!r}") from None

    def less(self, x: Label, y: Label) -> bool:
        """True iff x is strictly below y."""
        return bool(self.up_masks[self.index(x)] >> self.index(y) & 1)

    def pairs(self) -> list[tuple[Label, Label]]:
        """All related pairs (x, y) with x < y, sorted by element index."""
        out = []
        for i, mask in enumerate(self.up_masks):
            x = self.elements[i]
            out.extend((x, self.elements[j]) for j in iter_bits(mask))
        return out

    @property
    def num_relations(self) -> int:
        return sum(mask.bit_count() for mask in self.up_masks)

    def label_set(self, mask: int) -> frozenset[Label]:
        """Labels of the elements whose index bits are set in ``mask``."""
        return frozenset(self.elements[i] for i in iter_bits(mask))

    def mask_of(self, labels: Iterable[Label]) -> int:
        """Bitmask of the given labels; raises UnknownElement on strangers."""
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def validate(self) -> None:
        """Recheck irreflexivity, transitivity and antisymmetry; raise on failure."""
        n = len(self)
        for i in range(n):
            mask = self.up_masks[i]
            if mask >> i & 1:
                raise CycleDetected(f"{self.elements[i]!r} below itself")
            if mask & self.down_masks[i]:
                j = next(iter_bits(mask & self.down_masks[i]))
                raise CycleDetected(
                    f"{self.elements[i]!r} and {self.elements[j]!r} below each other"
                )
            for j in iter_bits(mask):
                if self.up_masks[j] & ~mask:
                    k = next(iter_bits(self.up_masks[j] & ~mask))
                    raise ValueError(
                        f"relation not transitive at "
                        f"{self.elements[i]!r} < {self.elements[j]!r} < {self.elements[k]!r}"
                    )


def build_poset(
    elements: Iterable[Label], pairs: Iterable[tuple[Label, Label]]
) -> Poset:
    """Build the poset generated by ``pairs``, closing transitively.

    The input pairs need not be transitively closed.  Raises CycleDetected
    when the closure would relate an element to itself, UnknownElement when a
    pair mentions a stranger, and DuplicateElement on repeated identifiers.
    """
    elements = tuple(elements)
    index: dict[Label, int] = {}
    for i, label in enumerate(elements):
        if label in index:
            raise DuplicateElement(f"duplicate element {label!r}")
        index[label] = i
    n = len(elements)

    def lookup(label: Label) -> int:
        try:
            return index[label]
        except (KeyError, TypeError):
            raise UnknownElement(
                f"pair mentions unknown element {label!r}"
            ) from None

    adj = [0] * n
    for a, b in pairs:
        adj[lookup(a)] |= 1 << lookup(b)
    for k in range(n):
        bit = 1 << k
        row = adj[k]
        for i in range(n):
            if adj[i] & bit:
                adj[i] |= row
    for i in range(n):
        if adj[i] >> i & 1:
            raise CycleDetected(f"closure relates {elements[i]!r} to itself")
    return Poset(elements, adj)


def down_set(p: Poset, x: Label) -> frozenset[Label]:
    """Strict down-set {z : z < x}."""
    return p.label_set(p.down_masks[p.index(x)])


def up_set(p: Poset, x: Label) -> frozenset[Label]:
    """Strict up-set {z : x < z}."""
    return p.label_set(p.up_masks[p.index(x)])


def cu_set(p: Poset, x: Label) -> frozenset[Label]:
    """Complement of the up-set: {y : not x < y}.  Contains x itself."""
    full = (1 << len(p)) - 1
    return p.label_set(full & ~p.up_masks[p.index(x)])


def restrict(p: Poset, subset: Iterable[Label]) -> Poset:
    """Suborder induced on ``subset``, keeping p's element order."""
    keep = sorted({p.index(x) for x in subset})
    pos = {old: new for new, old in enumerate(keep)}
    masks = []
    for old in keep:
        mask = 0
        row = p.up_masks[old]
        for other in keep:
            if row >> other & 1:
                mask |= 1 << pos[other]
        masks.append(mask)
    return Poset((p.elements[old] for old in keep), masks)


def well_founded_rank(p: Poset) -> int:
    """Number of elements in a longest chain; 0 for the empty poset.

    Element ranks follow rank(x) = max(rank(y) + 1 for y < x), minimal
    elements at 0; the poset rank is max(rank(x)) + 1.
    """
    n = len(p)
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda i: p.down_masks[i].bit_count())
    rank = [0] * n
    for i in order:
        below = p.down_masks[i]
        rank[i] = max((rank[j] + 1 for j in iter_bits(below)), default=0)
    return max(rank) + 1


def _signatures(p: Poset, rounds: int = 2) -> list:
    """Structural per-element invariants used to prune isomorphism search."""
    sig: list = [
        (p.down_masks[i].bit_count(), p.up_masks[i].bit_count())
        for i in range(len(p))
    ]
    for _ in range(rounds):
        sig = [
            (
                sig[i],
                tuple(sorted(sig[j] for j in iter_bits(p.down_masks[i]))),
                tuple(sorted(sig[j] for j in iter_bits(p.up_masks[i]))),
            )
            for i in range(len(p))
        ]
    return sig


def is_isomorphic(p: Poset, q: Poset, *, size_limit: int = ISO_SIZE_LIMIT) -> bool:
    """True iff an order isomorphism p -> q exists.

    Backtracking with signature refinement; intended for instances of at
    most ``size_limit`` elements (SizeLimitExceeded above that).
    """
    if len(p) > size_limit or len(q) > size_limit:
        raise SizeLimitExceeded(
            f"isomorphism search limited to {size_limit} elements"
        )
    if len(p) != len(q) or p.num_relations != q.num_relations:
        return False
    n = len(p)
    if n == 0:
        return True
    sp = _signatures(p)
    sq = _signatures(q)
    if sorted(sp) != sorted(sq):
        return False
    candidates = [
        [j for j in range(n) if sq[j] == sp[i]] for i in range(n)
    ]

    assigned: dict[int, int] = {}
    used = [False] * n

    def consistent(i: int, j: int) -> bool:
        for i2, j2 in assigned.items():
            if (p.up_masks[i2] >> i & 1) != (q.up_masks[j2] >> j & 1):
                return False
            if (p.up_masks[i] >> i2 & 1) != (q.up_masks[j] >> j2 & 1):
                return False
        return True

    def extend() -> bool:
        if len(assigned) == n:
            return True
        # most-constrained source first keeps symmetric instances cheap
        best = min(
            (i for i in range(n) if i not in assigned),
            key=lambda i: sum(1 for j in candidates[i] if not used[j]),
        )
        for j in candidates[best]:
            if used[j] or not consistent(best, j):
                continue
            assigned[best] = j
            used[j] = True
            if extend():
                return True
            del assigned[best]
            used[j] = False
        return False

    return extend()
