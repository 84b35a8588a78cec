"""Decision procedures: triviality, equality, element order, moved-vertex oracle.

is_trivial is the classical contracting algorithm: a word is trivial iff
its `a`-parity is even and both first-level sections are trivial.  For a
reduced word of length L each section has length at most (L+1)//2, and
reduced even-parity words of length 2 do not exist, so the recursion is
well-founded; the bound is asserted at runtime rather than assumed.

witness_vertex is the independent semi-oracle: it composes generator leaf
permutations (module `leafperm`) and never touches the contraction
recursion, so agreement between the two is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import config
from .errors import SectionContractionError
from .leafperm import moved_vertex, word_perm
from .tree import decompose
from .words import invert, reduce_word


@lru_cache(maxsize=config.MEMO_SIZE)
def _is_trivial_reduced(g: str) -> bool:
    if g.count("a") & 1:
        return False
    if len(g) <= 1:
        return g == ""
    d = decompose(g)
    bound = (len(g) + 1) // 2
    if len(d.left) > bound or len(d.right) > bound:
        raise SectionContractionError(
            f"section of length-{len(g)} word exceeds bound {bound}: {d}"
        )
    return _is_trivial_reduced(d.left) and _is_trivial_reduced(d.right)


def is_trivial(g: str) -> bool:
    """Decide whether g represents the identity.  Accepts raw words."""
    return _is_trivial_reduced(reduce_word(g))


def are_equal(g: str, h: str) -> bool:
    """Element equality of two representatives."""
    return _is_trivial_reduced(reduce_word(g + invert(h)))


def witness_vertex(g: str, max_depth: int = config.MAX_DEPTH) -> str | None:
    """A minimal-depth vertex moved by g, or None if g fixes depth <= max_depth.

    Ties break toward the lexicographically least vertex.  A non-None
    result certifies nontriviality; None is only a bounded triviality probe.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    return moved_vertex(word_perm(g, max_depth), max_depth)


@dataclass(frozen=True)
class OrderResult:
    """Either an exact order 2**exponent, or evidence it exceeds 2**cap."""

    exponent: int | None
    cap: int

    @property
    def is_exact(self) -> bool:
        return self.exponent is not None

    @property
    def value(self) -> int:
        if self.exponent is None:
            raise ValueError(f"order exceeds cap 2**{self.cap}")
        return 1 << self.exponent

    def __str__(self) -> str:
        if self.exponent is None:
            return f"> 2^{self.cap}"
        return str(self.value)


def order(g: str, cap: int = config.ORDER_CAP) -> OrderResult:
    """Order of g by repeated squaring; exact up to 2**cap.

    All orders in the group are powers of two, so squaring loses nothing.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    cur = reduce_word(g)
    for k in range(cap + 1):
        if _is_trivial_reduced(cur):
            return OrderResult(k, cap)
        cur = reduce_word(cur + cur)
    return OrderResult(None, cap)
