"""Tameness analysis: reduction, set families, tame rank, canonical embedding.

A finite order is tame exactly when it avoids the two-disjoint-chains
pattern; the infinite second forbidden pattern cannot occur at finite scale,
which every report in this module takes for granted and documents.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .embedding import Embedding, embeds_r22, find_embedding, verify_embedding
from .errors import (
    BudgetExceeded,
    InternalInvariantViolation,
    NotReduced,
    NotTame,
    SizeLimitExceeded,
)
from .poset import Label, Poset, iter_bits
from .templates import order_pair_label, parse_order_pair, r_lambda

_UNION_CLOSURE_LIMIT = 4096
_BRUTEFORCE_SIZE_LIMIT = 8


def u_comparable(p: Poset) -> bool:
    """True iff all up-sets are pairwise comparable under inclusion."""
    return _pairwise_comparable(p.up_masks)


def d_comparable(p: Poset) -> bool:
    """True iff all down-sets are pairwise comparable under inclusion."""
    return _pairwise_comparable(p.down_masks)


def _pairwise_comparable(masks: Sequence[int]) -> bool:
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    for a, b in zip(unique, unique[1:]):
        if a & ~b:
            return False
    return True


def is_reduced(p: Poset) -> bool:
    """True iff no two distinct elements share (down-set, up-set)."""
    seen = set()
    for d, u in zip(p.down_masks, p.up_masks):
        if (d, u) in seen:
            return False
        seen.add((d, u))
    return True


@dataclass(frozen=True)
class ReductionResult:
    """Quotient by the same-(d, u)-signature equivalence.

    The quotient's elements are the class representatives (least index per
    class), in first-occurrence order; ``class_of`` maps every original
    element to its class index.
    """

    quotient: Poset
    class_of: dict[Label, int]
    representatives: tuple[Label, ...]

    def members(self, class_index: int) -> list[Label]:
        return [x for x in self.class_of if self.class_of[x] == class_index]


def reduce(p: Poset, *, check: bool = False) -> ReductionResult:
    """Collapse elements with equal (down-set, up-set) signatures.

    The quotient relation is taken from representatives; equal signatures
    make this independent of the choice, which ``check=True`` rechecks
    across every cross pair.
    """
    class_of: dict[Label, int] = {}
    reps: list[int] = []
    by_sig: dict[tuple[int, int], int] = {}
    for i, x in enumerate(p.elements):
        sig = (p.down_masks[i], p.up_masks[i])
        if sig not in by_sig:
            by_sig[sig] = len(reps)
            reps.append(i)
        class_of[x] = by_sig[sig]
    masks = []
    for i in reps:
        mask = 0
        for c, j in enumerate(reps):
            if p.up_masks[i] >> j & 1:
                mask |= 1 << c
        masks.append(mask)
    quotient = Poset((p.elements[i] for i in reps), masks)
    result = ReductionResult(
        quotient, class_of, tuple(p.elements[i] for i in reps)
    )
    if check:
        for ix, x in enumerate(p.elements):
            cx = class_of[x]
            for iy, y in enumerate(p.elements):
                related = bool(p.up_masks[ix] >> iy & 1)
                collapsed = bool(quotient.up_masks[cx] >> class_of[y] & 1)
                if related != collapsed:
                    raise InternalInvariantViolation(
                        f"quotient relation ill-defined at {x!r}, {y!r}"
                    )
    return result


@dataclass(frozen=True)
class SetFamily(Sequence):
    """A duplicate-free family of element sets.

    ``linear`` reports whether the family is sorted strictly increasing
    under inclusion, which holds whenever the poset avoids the forbidden
    pattern; otherwise the order is merely deterministic (by cardinality,
    then index mask).
    """

    sets: tuple[frozenset, ...]
    linear: bool

    def __getitem__(self, i):
        return self.sets[i]

    def __len__(self) -> int:
        return len(self.sets)


def _sorted_unique(masks: Sequence[int]) -> tuple[list[int], bool]:
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    linear = all(not a & ~b for a, b in zip(unique, unique[1:]))
    return unique, linear


def _family(p: Poset, masks: Sequence[int]) -> SetFamily:
    unique, linear = _sorted_unique(masks)
    return SetFamily(tuple(p.label_set(m) for m in unique), linear)


def _cu_masks(p: Poset) -> list[int]:
    full = (1 << len(p)) - 1
    return [full & ~m for m in p.up_masks]


def d_family(p: Poset) -> SetFamily:
    """The distinct down-sets, inclusion-sorted when that order is linear."""
    return _family(p, p.down_masks)


def cu_family(p: Poset) -> SetFamily:
    """The distinct up-set complements, inclusion-sorted when linear."""
    return _family(p, _cu_masks(p))


def _frak_d_masks(p: Poset) -> list[int]:
    """Down-set family completed by unions of inclusion-downward-closed subfamilies.

    A downward-closed subfamily has the same union as an arbitrary one (close
    any subfamily downward without changing its union), so the completion is
    the closure of the down-sets plus the empty set under pairwise unions.
    """
    base, _ = _sorted_unique(p.down_masks)
    family = set(base)
    family.add(0)
    frontier = list(family)
    while frontier:
        fresh = []
        for a in frontier:
            for b in base:
                u = a | b
                if u not in family:
                    family.add(u)
                    fresh.append(u)
        if len(family) > _UNION_CLOSURE_LIMIT:
            raise SizeLimitExceeded("union closure of the down-set family blew up")
        frontier = fresh
    unique = sorted(family, key=lambda m: (m.bit_count(), m))
    return unique


def frak_d_family(p: Poset) -> SetFamily:
    """The completed down-set family; equals d_family plus the empty set."""
    unique = _frak_d_masks(p)
    linear = all(not a & ~b for a, b in zip(unique, unique[1:]))
    return SetFamily(tuple(p.label_set(m) for m in unique), linear)


def _require_tame(p: Poset) -> None:
    witness = embeds_r22(p)
    if witness is not None:
        raise NotTame(witness)


def tame_rank(p: Poset) -> int:
    """Number of distinct up-set complements; the length of their chain.

    Defined for any tame poset, reduced or not; raises NotTame (with the
    witness quadruple) otherwise.
    """
    _require_tame(p)
    return len(set(_cu_masks(p)))


def _m_values(p: Poset) -> list[int]:
    frak = _frak_d_masks(p)
    out = []
    for dx in p.down_masks:
        out.append(sum(1 for m in frak if m != dx and not m & ~dx))
    return out


def _M_values(p: Poset) -> list[int]:
    cus = set(_cu_masks(p))
    out = []
    for cux in _cu_masks(p):
        out.append(sum(1 for m in cus if m != cux and not m & ~cux))
    return out


def m_value(p: Poset, x: Label) -> int:
    """How many members of the completed down-set family sit strictly below d(x)."""
    _require_tame(p)
    return _m_values(p)[p.index(x)]


def M_value(p: Poset, x: Label) -> int:
    """How many distinct up-set complements sit strictly below cu(x)."""
    _require_tame(p)
    return _M_values(p)[p.index(x)]


def canonical_embedding(p: Poset) -> Embedding:
    """Embed a reduced tame poset into the template of its tame rank.

    Maps x to the coordinate pair (m(x), M(x)).  The construction cannot
    fail on reduced tame input; a verification failure therefore raises
    InternalInvariantViolation rather than returning quietly.
    """
    _require_tame(p)
    if not is_reduced(p):
        raise NotReduced("canonical embedding wants a reduced poset")
    lam = tame_rank(p)
    target = r_lambda(lam)
    ms = _m_values(p)
    Ms = _M_values(p)
    mapping = {
        x: order_pair_label(ms[i], Ms[i]) for i, x in enumerate(p.elements)
    }
    emb = Embedding(p, target, mapping)
    if not verify_embedding(emb):
        raise InternalInvariantViolation("canonical coordinate map failed to embed")
    return Embedding(p, target, mapping, verified=True)


def minimal_rank_bruteforce(
    p: Poset, *, budget: int | None = None, size_limit: int = _BRUTEFORCE_SIZE_LIMIT
) -> int:
    """Least lam such that p embeds into the lam template, by ascending search.

    Restricted to reduced tame posets of at most ``size_limit`` elements
    (BudgetExceeded above that; the searches grow steeply).
    """
    _require_tame(p)
    if not is_reduced(p):
        raise NotReduced("minimal rank search wants a reduced poset")
    if len(p) > size_limit:
        raise BudgetExceeded(
            f"minimal rank brute force capped at {size_limit} elements"
        )
    for lam in range(len(p) + 1):
        if find_embedding(p, r_lambda(lam), budget=budget) is not None:
            return lam
    raise InternalInvariantViolation("reduced tame poset embedded nowhere")


def check_claim_inequalities(p: Poset) -> bool:
    """Coordinate inequalities behind the canonical embedding.

    Checks m(x) <= M(x) for every x, M(x) < m(y) whenever x < y, and
    m(y) <= M(x) whenever x is not below y (including incomparable pairs
    and y < x, exactly as quantified).
    """
    _require_tame(p)
    ms = _m_values(p)
    Ms = _M_values(p)
    n = len(p)
    for i in range(n):
        for j in range(n):
            if p.up_masks[i] >> j & 1:
                if not Ms[i] < ms[j]:
                    return False
            elif not ms[j] <= Ms[i]:
                return False
    return True


@dataclass(frozen=True)
class TameReport:
    """Verdict of a tameness check.

    Exactly one of ``witness`` (quadruple from the forbidden pattern) and
    ``tame_rank`` is present.  ``canonical`` is filled only for tame and
    reduced inputs.  Only the 4-element pattern is ever consulted: the
    infinite forbidden pattern cannot embed into a finite order.
    """

    tame: bool
    witness: tuple[Label, Label, Label, Label] | None = None
    tame_rank: int | None = None
    canonical: Embedding | None = None

    def __post_init__(self):
        if (self.witness is None) == (self.tame_rank is None):
            raise ValueError("exactly one of witness/tame_rank must be present")
        if self.canonical is not None and not self.canonical.verified:
            raise ValueError("canonical embedding must arrive verified")

    def to_json(self) -> dict:
        out: dict = {"tame": self.tame}
        if self.witness is not None:
            out["witness"] = [str(x) for x in self.witness]
        if self.tame_rank is not None:
            out["tame_rank"] = self.tame_rank
        if self.canonical is not None:
            out["embedding"] = {
                str(x): list(parse_order_pair(y))
                for x, y in self.canonical.mapping.items()
            }
        return out


def is_tame(p: Poset) -> TameReport:
    """Tameness verdict with witness or rank, plus the canonical embedding.

    The canonical embedding is included only when the input is already
    reduced; reduce first to embed an arbitrary tame order.
    """
    witness = embeds_r22(p)
    if witness is not None:
        return TameReport(tame=False, witness=witness)
    rank = len(set(_cu_masks(p)))
    canonical = canonical_embedding(p) if is_reduced(p) else None
    return TameReport(tame=True, tame_rank=rank, canonical=canonical)
