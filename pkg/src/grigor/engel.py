"""Iterated commutators, Engel probes, the two tower lemmas, and proof replays.

The left-normed tower is [x,_1 g] = x^-1 g^-1 x g and
[x,_n g] = [[x,_{n-1} g], g].  Towers are reduced after every step and
abort visibly if the reduced length outgrows the configured cap.

The two replay operations produce self-contained certificates: a bounded
refutation of "x is left-N-Engel" built from a high-order element of K,
and a bounded refutation of "x is right Engel with sink <= N+1" built
from a non-Engel pair in K, cross-checked against the tower identity of
`lemma2_check` coordinate by coordinate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import config
from .branch import (
    TWord,
    emb_pair,
    flatten,
    random_tword,
    search_high_order,
)
from .decide import is_trivial, order, witness_vertex
from .errors import (
    PreconditionViolated,
    SearchExhausted,
    WordLengthCapExceeded,
)
from .tree import decompose, first_active_level
from .words import (
    IDENTITY,
    a_parity,
    conjugate,
    invert,
    multiply,
    power,
    reduce_word,
)


def iterated_commutator(
    x: str, g: str, n: int, length_cap: int = config.WORD_LENGTH_CAP
) -> str:
    """The left-normed tower [x,_n g], reduced after every step."""
    if n < 1:
        raise ValueError("tower depth must be >= 1")
    cur = x
    for _ in range(n):
        cur = reduce_word(cur[::-1] + g[::-1] + cur + g)
        if len(cur) > length_cap:
            raise WordLengthCapExceeded(
                f"tower representative grew past {length_cap} letters"
            )
    return cur


@dataclass(frozen=True)
class EngelSink:
    """Least n with [x,_n g] = 1, plus the reduced tower lengths on the way."""

    g: str
    x: str
    n: int
    transcript: tuple[int, ...]


@dataclass(frozen=True)
class NoSinkUpTo:
    """All towers [x,_m g] for m <= bound are nontrivial; witness moves the last."""

    g: str
    x: str
    bound: int
    transcript: tuple[int, ...]
    witness: str


def left_engel_probe(
    g: str,
    x: str,
    bound: int,
    length_cap: int = config.WORD_LENGTH_CAP,
    witness_depth: int = config.MAX_DEPTH,
) -> EngelSink | NoSinkUpTo:
    """Search the tower [x,_n g] for its first trivial entry, n <= bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    transcript: list[int] = []
    cur = reduce_word(x)
    g = reduce_word(g)
    for n in range(1, bound + 1):
        cur = reduce_word(cur[::-1] + g[::-1] + cur + g)
        if len(cur) > length_cap:
            raise WordLengthCapExceeded(
                f"tower at depth {n} grew past {length_cap} letters"
            )
        transcript.append(len(cur))
        if is_trivial(cur):
            return EngelSink(g, x, n, tuple(transcript))
    witness = witness_vertex(cur, witness_depth)
    depth = witness_depth
    while witness is None:
        # Nontrivial (is_trivial said so at every step), so a moved vertex
        # exists; deepen until found.
        depth *= 2
        witness = witness_vertex(cur, depth)
    return NoSinkUpTo(g, x, bound, tuple(transcript), witness)


def lemma1_check(k: TWord, g: str, m: int) -> bool:
    """Verify the tower formula for y with psi(y) = (k, 1) against x = a.g.

    Requires g in St(1) and (a.g)^2 = 1 (which forces g2 = g1^-1).  Both
    sides are computed independently: the left by running the tower and
    decomposing, the right from the closed form
    (k^((-1)^m 2^(m-1)), (k^g2)^((-1)^(m-1) 2^(m-1))).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    g = reduce_word(g)
    if a_parity(g):
        raise PreconditionViolated("g must lie in St(1)")
    x = multiply("a", g)
    if not is_trivial(multiply(x, x)):
        raise PreconditionViolated("a.g must be an involution")
    y = emb_pair(k, TWord())
    lhs = decompose(iterated_commutator(y, x, m))
    if lhs.active:
        return False
    flat = flatten(k)
    g2 = decompose(g).right
    exp = 1 << (m - 1)
    first = power(flat, exp if m % 2 == 0 else -exp)
    second = power(conjugate(flat, g2), exp if m % 2 == 1 else -exp)
    return is_trivial(multiply(lhs.left, invert(first))) and is_trivial(
        multiply(lhs.right, invert(second))
    )


def lemma2_check(x: str, y: str, m: int) -> bool:
    """Verify the section identity for towers [x,_{m+1} y] with y in St(1).

    Requires x = a.g with g in St(1), i.e. odd `a`-parity.  Writing
    psi(g) = (g1, g2) and psi(y) = (y1, y2), both coordinates of
    psi([x,_{m+1} y]) are compared against
    ([(y2^-1)^g1,_m y1]^y1, [(y1^-1)^g2,_m y2]^y2), each side computed
    independently.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    x = reduce_word(x)
    y = reduce_word(y)
    if not a_parity(x):
        raise PreconditionViolated("x must have odd a-parity")
    if a_parity(y):
        raise PreconditionViolated("y must lie in St(1)")
    g = multiply("a", x)
    dg = decompose(g)
    dy = decompose(y)
    lhs = decompose(iterated_commutator(x, y, m + 1))
    if lhs.active:
        return False
    first = conjugate(
        iterated_commutator(conjugate(invert(dy.right), dg.left), dy.left, m),
        dy.left,
    )
    second = conjugate(
        iterated_commutator(conjugate(invert(dy.left), dg.right), dy.right, m),
        dy.right,
    )
    return is_trivial(multiply(lhs.left, invert(first))) and is_trivial(
        multiply(lhs.right, invert(second))
    )


@dataclass(frozen=True)
class BoundedLeftRefutation:
    """Transcript refuting "x is left-N-Engel".

    The chain records the descent from x to an odd-parity section
    x_active; k has order > 2^(N-1); y embeds (flatten(k), 1); the
    witness vertex is moved by [y,_N x_active].
    """

    x: str
    chain: tuple[tuple[int, str], ...]  # (child bit, section) per descent step
    x_active: str
    k: TWord
    bound: int
    y: str
    witness: str


@dataclass(frozen=True)
class RightRefutation:
    """Transcript refuting "x is right Engel with sink <= N+1".

    y embeds the non-Engel pair data (y1, y2) with y2 = [y1, h]^(g1^-1);
    for each m <= N the vertex witnesses[m-1] is moved by
    [x_active,_{m+1} y], and the first coordinate of its decomposition
    equals [h,_{m+1} y1]^y1 (the tower identity cross-check).
    """

    x: str
    chain: tuple[tuple[int, str], ...]
    x_active: str
    h: TWord
    y1: TWord
    y2: TWord
    y: str
    bound: int
    witnesses: tuple[str, ...]


def section_chain(x: str) -> tuple[tuple[tuple[int, str], ...], str]:
    """Descend through first-level sections until an odd-parity word.

    Returns the recorded (child bit, section) steps and the final
    representative.  Each step picks the child whose subtree is active
    shallowest (ties toward 0), mirroring the reduction of an element of
    St(n) \\ St(n+1) to a section outside St(1).
    """
    x = reduce_word(x)
    chain: list[tuple[int, str]] = []
    while not a_parity(x):
        d = decompose(x)
        fl = first_active_level(d.left)
        fr = first_active_level(d.right)
        if fl is None and fr is None:
            raise PreconditionViolated("x must be nontrivial")
        if fr is None or (fl is not None and fl <= fr):
            bit, x = 0, d.left
        else:
            bit, x = 1, d.right
        chain.append((bit, x))
    return tuple(chain), x


def replay_bounded_left(
    x: str,
    bound: int,
    budget: int = config.SEARCH_BUDGET,
    seed: int = 0,
) -> BoundedLeftRefutation:
    """Produce a certificate that the involution x is not left-`bound`-Engel.

    Section-reduces x to an active representative, takes k in K of order
    > 2^(bound-1), embeds y with psi(y) = (flatten(k), 1), and records a
    vertex moved by [y,_bound x_active].
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    x = reduce_word(x)
    if is_trivial(x):
        raise PreconditionViolated("x must be nontrivial")
    if not is_trivial(multiply(x, x)):
        raise PreconditionViolated(
            "x must be an involution; non-involutions are handled empirically"
        )
    chain, active = section_chain(x)
    k = search_high_order(1 << bound, budget=budget, seed=seed)
    y = emb_pair(k, TWord())
    tower = iterated_commutator(y, active, bound)
    witness = witness_vertex(tower)
    depth = config.MAX_DEPTH
    while witness is None:
        if is_trivial(tower):
            raise AssertionError("tower vanished despite high-order k")
        depth *= 2
        witness = witness_vertex(tower, depth)
    return BoundedLeftRefutation(x, chain, active, k, bound, y, witness)


def search_nonengel_pair(
    bound: int,
    budget: int = config.SEARCH_BUDGET,
    seed: int = 0,
) -> tuple[TWord, TWord]:
    """A pair (h, y1) of TWords with [flatten(h),_n flatten(y1)] != 1, n <= bound.

    Bounded evidence for the fact that K is not an Engel group;
    deterministic given the seed.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = random.Random(seed)

    def qualifies(h: TWord, y1: TWord) -> bool:
        cur = flatten(h)
        fy = flatten(y1)
        for _ in range(bound):
            cur = reduce_word(cur[::-1] + fy[::-1] + cur + fy)
            if is_trivial(cur):
                return False
        return True

    # Simple canonical candidates first, then random ones.
    simple = [
        (TWord(((IDENTITY, 1),)), TWord((("b", 1),))),
        (TWord(((IDENTITY, 1),)), TWord((("ab", 1),))),
    ]
    for h, y1 in simple:
        if qualifies(h, y1):
            return h, y1
    for _ in range(budget):
        h = random_tword(rng, max_factors=2)
        y1 = random_tword(rng, max_factors=2)
        if qualifies(h, y1):
            return h, y1
    raise SearchExhausted(f"no non-Engel pair up to depth {bound} within {budget}")


def replay_right(
    x: str,
    bound: int,
    budget: int = config.SEARCH_BUDGET,
    seed: int = 0,
) -> RightRefutation:
    """Produce a certificate that x is not right Engel with sink <= bound + 1.

    Section-reduces x to an active representative a.g, finds a non-Engel
    pair (h, y1) in K, sets y2 = [y1, h]^(g1^-1), embeds y with
    psi(y) = (y1, y2), and verifies for every m <= bound that
    [x_active,_{m+1} y] is nontrivial both directly (witness vertex) and
    through the tower identity (first coordinate = [h,_{m+1} y1]^y1).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    x = reduce_word(x)
    if is_trivial(x):
        raise PreconditionViolated("x must be nontrivial")
    chain, active = section_chain(x)
    g = multiply("a", active)
    g1 = decompose(g).left
    h, y1 = search_nonengel_pair(bound + 1, budget=budget, seed=seed)
    y2 = y1.commutator_with(h).conjugated(invert(g1))
    y = emb_pair(y1, y2)
    fh = flatten(h)
    fy1 = flatten(y1)
    witnesses: list[str] = []
    for m in range(1, bound + 1):
        tower = iterated_commutator(active, y, m + 1)
        d = decompose(tower)
        if d.active:
            raise AssertionError("tower left St(1); identity preconditions broken")
        expected_first = conjugate(iterated_commutator(fh, fy1, m + 1), fy1)
        if not is_trivial(multiply(d.left, invert(expected_first))):
            raise AssertionError("tower identity cross-check failed")
        witness = witness_vertex(tower)
        depth = config.MAX_DEPTH
        while witness is None:
            depth *= 2
            witness = witness_vertex(tower, depth)
        witnesses.append(witness)
    return RightRefutation(
        x, chain, active, h, y1, y2, y, bound, tuple(witnesses)
    )


def random_word(rng: random.Random, length: int = config.WALK_LENGTH) -> str:
    """Reduced word from a random walk of the given length."""
    return reduce_word("".join(rng.choice("abcd") for _ in range(length)))


def random_involution(
    rng: random.Random, length: int = config.WALK_LENGTH, attempts: int = 10_000
) -> str:
    """A random element of order exactly 2, by rejection."""
    for _ in range(attempts):
        w = random_word(rng, length)
        if order(w).exponent == 1:
            return w
    raise SearchExhausted("no involution found by rejection sampling")


@dataclass(frozen=True)
class SurveyReport:
    """Outcome counts of left-Engel probes against random involutions."""

    samples: int
    opponents: int
    bound: int
    seed: int
    sinks: int = 0
    no_sink: int = 0
    overflow: int = 0
    sink_depths: dict[int, int] = field(default_factory=dict)
    flagged: tuple[tuple[str, str], ...] = ()  # (g, x) pairs that did not sink


def involution_survey(
    samples: int,
    bound: int,
    seed: int = 0,
    opponents: int = 1,
    length: int = config.WALK_LENGTH,
) -> SurveyReport:
    """Probe random (involution g, random x) pairs for Engel sinks.

    Empirical evidence only: probes that fail to sink within the bound
    (or overflow the length cap) are reported and flagged, never treated
    as counterexamples.
    """
    rng = random.Random(seed)
    sinks = no_sink = overflow = 0
    depths: dict[int, int] = {}
    flagged: list[tuple[str, str]] = []
    for _ in range(samples):
        g = random_involution(rng, length)
        for _ in range(opponents):
            x = random_word(rng, length)
            try:
                outcome = left_engel_probe(g, x, bound)
            except WordLengthCapExceeded:
                overflow += 1
                flagged.append((g, x))
                continue
            if isinstance(outcome, EngelSink):
                sinks += 1
                depths[outcome.n] = depths.get(outcome.n, 0) + 1
            else:
                no_sink += 1
                flagged.append((g, x))
    return SurveyReport(
        samples, opponents, bound, seed, sinks, no_sink, overflow,
        depths, tuple(flagged),
    )


def find_nonsink_opponent(
    g: str,
    bound: int,
    budget: int = 200,
    seed: int = 0,
) -> tuple[str, NoSinkUpTo]:
    """Search for an x whose tower against g survives to the given bound.

    Candidates are embeddings of random K-elements and random words; used
    to exhibit witnesses against non-involutions being left Engel.
    """
    rng = random.Random(seed)
    for i in range(budget):
        if i % 2 == 0:
            x = emb_pair(random_tword(rng, max_factors=2), TWord())
        else:
            x = random_word(rng)
        try:
            outcome = left_engel_probe(g, x, bound)
        except WordLengthCapExceeded:
            continue
        if isinstance(outcome, NoSinkUpTo):
            return x, outcome
    raise SearchExhausted(
        f"no opponent surviving {bound} tower steps found within {budget}"
    )
