"""Exhaustive and seeded-random poset generation, and the verification sweep.

The exhaustive generator drives the oracle-grade checks: over every labeled
poset on up to five (optionally six) points, tameness must coincide with
embeddability of the reduction into the template of its tame rank, the
brute-force minimal width must equal the tame rank, and the coordinate
inequalities must hold.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass, field

from . import tame
from .embedding import embeds_r22, find_embedding
from .errors import InvalidParameter, SizeLimitExceeded
from .poset import Poset, build_poset
from .templates import r_lambda
from .textfmt import poset_json

ENUMERATION_CAP = 6
DEFAULT_EXHAUSTIVE_CAP = 5


@dataclass(frozen=True)
class GeneratorConfig:
    """Seeded random-poset parameters."""

    n: int
    edge_probability: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter("element count must be nonnegative")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise InvalidParameter("edge probability must lie in [0, 1]")


def all_labeled_posets(n: int) -> Iterator[Poset]:
    """Every labeled strict partial order on elements "0".."n-1", once each.

    Grown element by element: a poset on m+1 points is a poset on m points
    plus a choice of (down-set, up-set) for the new point, where the
    down-set is downward closed, the up-set is upward closed, and every
    chosen lower element lies below every chosen upper one.  Each labeled
    poset arises from exactly one choice sequence, so the stream is
    duplicate-free; the order is deterministic.
    """
    if n < 0:
        raise InvalidParameter("element count must be nonnegative")
    if n > ENUMERATION_CAP:
        raise SizeLimitExceeded(f"exhaustive enumeration capped at {ENUMERATION_CAP}")
    labels = tuple(str(i) for i in range(n))

    def grow(masks: tuple[int, ...], m: int) -> Iterator[tuple[int, ...]]:
        if m == n:
            yield masks
            return
        new_bit = 1 << m
        for down in range(1 << m):
            ok = True
            allowed = (1 << m) - 1
            for x in range(m):
                if masks[x] & down and not down >> x & 1:
                    ok = False  # down-set not downward closed
                    break
                if down >> x & 1:
                    allowed &= masks[x]
            if not ok:
                continue
            for up in range(1 << m):
                if up & ~allowed:
                    continue
                closed = True
                for x in range(m):
                    if up >> x & 1 and masks[x] & ~up:
                        closed = False  # up-set not upward closed
                        break
                if not closed:
                    continue
                grown = tuple(
                    masks[x] | (new_bit if down >> x & 1 else 0) for x in range(m)
                ) + (up,)
                yield from grow(grown, m + 1)

    for masks in grow((), 0):
        yield Poset(labels, masks)


def random_poset(cfg: GeneratorConfig) -> Poset:
    """Seeded random poset: random linear extension, independent edges.

    Draws a uniform permutation, keeps each permutation-compatible pair
    independently with the configured probability, and closes transitively.
    The same config always yields the same poset.
    """
    rng = random.Random(cfg.seed)
    labels = [str(i) for i in range(cfg.n)]
    perm = list(range(cfg.n))
    rng.shuffle(perm)
    pairs = []
    for i in range(cfg.n):
        for j in range(i + 1, cfg.n):
            if rng.random() < cfg.edge_probability:
                pairs.append((labels[perm[i]], labels[perm[j]]))
    return build_poset(labels, pairs)


@dataclass(frozen=True)
class VerificationReport:
    """Counts and counterexamples from a verification sweep."""

    n: int
    total: int
    tame_count: int
    counterexamples: tuple[dict, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "tame_count": self.tame_count,
            "counterexamples": list(self.counterexamples),
        }


def check_poset(p: Poset, budget: int | None = None) -> tuple[bool, list[dict]]:
    """Run the per-instance verification checks; returns (is_tame, failures).

    Checks, in order: the up/down comparability characterization of pattern
    freeness; constructive and brute-force embeddability of the reduction
    for tame inputs, and non-embeddability into any template for non-tame
    ones; minimal width equal to tame rank on reduced tame inputs; and the
    coordinate inequalities on tame inputs.
    """
    failures: list[dict] = []

    def fail(kind: str, detail: str) -> None:
        failures.append({"check": kind, "detail": detail, **poset_json(p)})

    witness = embeds_r22(p)
    tame_here = witness is None
    if tame_here != tame.u_comparable(p) or tame_here != tame.d_comparable(p):
        fail(
            "comparability",
            f"witness={witness!r} u_comparable={tame.u_comparable(p)} "
            f"d_comparable={tame.d_comparable(p)}",
        )
    if tame_here:
        rank = tame.tame_rank(p)
        quotient = tame.reduce(p, check=True).quotient
        if tame.tame_rank(quotient) != rank:
            fail("rank-invariance", f"quotient rank {tame.tame_rank(quotient)} != {rank}")
        emb = tame.canonical_embedding(quotient)
        if not emb.verified:
            fail("embed-tame", "canonical embedding not verified")
        if find_embedding(quotient, r_lambda(rank), budget=budget) is None:
            fail("embed-tame", f"no brute-force embedding into width {rank}")
        if tame.is_reduced(p):
            minimal = tame.minimal_rank_bruteforce(p, budget=budget)
            if minimal != rank:
                fail("minimality", f"minimal width {minimal} != tame rank {rank}")
        if not tame.check_claim_inequalities(p):
            fail("claim-inequalities", "coordinate inequality violated")
    else:
        if find_embedding(p, r_lambda(len(p)), budget=budget) is not None:
            fail(
                "embed-nontame",
                f"non-tame poset embedded into width {len(p)}",
            )
    return tame_here, failures


def verify_proposition(
    n: int, *, allow_large: bool = False, budget: int | None = None
) -> VerificationReport:
    """Exhaustively verify the tame characterization over all labeled posets.

    Covers n <= 5 by default; n = 6 is allowed behind ``allow_large`` and
    takes considerably longer.  Expected outcome on every n: zero
    counterexamples.
    """
    if n < 0:
        raise InvalidParameter("element count must be nonnegative")
    cap = ENUMERATION_CAP if allow_large else DEFAULT_EXHAUSTIVE_CAP
    if n > cap:
        raise SizeLimitExceeded(
            f"exhaustive verification capped at {cap}"
            + ("" if allow_large else " (n=6 is opt-in via --exhaustive)")
        )
    total = 0
    tame_count = 0
    counterexamples: list[dict] = []
    for index, p in enumerate(all_labeled_posets(n)):
        total += 1
        tame_here, failures = check_poset(p, budget=budget)
        tame_count += tame_here
        for failure in failures:
            counterexamples.append({"index": index, **failure})
    return VerificationReport(n, total, tame_count, tuple(counterexamples))


def verify_sampled(
    n: int, count: int, seed: int, *, budget: int | None = None
) -> VerificationReport:
    """Run the per-instance checks on seeded random posets of size n."""
    if n < 0:
        raise InvalidParameter("element count must be nonnegative")
    if count < 0:
        raise InvalidParameter("sample count must be nonnegative")
    rng = random.Random(seed)
    total = 0
    tame_count = 0
    counterexamples: list[dict] = []
    for index in range(count):
        cfg = GeneratorConfig(n, rng.random(), rng.getrandbits(32))
        p = random_poset(cfg)
        total += 1
        tame_here, failures = check_poset(p, budget=budget)
        tame_count += tame_here
        for failure in failures:
            counterexamples.append({"index": index, **failure})
    return VerificationReport(n, total, tame_count, tuple(counterexamples))
