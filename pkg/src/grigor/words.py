"""Words over the generators a, b, c, d and the length-reducing rewriting system.

Every generator is an involution (xx -> empty) and the three generators
b, c, d multiply by the Klein table (bc = cb = d, bd = db = c, cd = dc = b),
so reduced words strictly alternate between `a` and members of {b, c, d}.
A reduced word is a representative, not a canonical form: the group has
relations of unbounded length (e.g. (ad)^4 = 1), so element equality is
delegated to the `decide` module.

Words are plain strings; the identity is the empty string, spelled "1" in
text output and accepted as "1" or "" on input.
"""

from __future__ import annotations

LETTERS = "abcd"

# Klein four-group table on {b, c, d}.
_MERGE = {
    "bc": "d", "cb": "d",
    "bd": "c", "db": "c",
    "cd": "b", "dc": "b",
}

IDENTITY = ""


def reduce_word(raw: str) -> str:
    """Reduce a raw letter sequence to its rewriting-system fixpoint.

    Single left-to-right pass with a stack; every rule strictly shortens
    the word, so the scan is amortized O(n) and the fixpoint is unique.
    """
    out: list[str] = []
    push = out.append
    pop = out.pop
    for ch in raw:
        if ch not in LETTERS:
            raise ValueError(f"invalid letter {ch!r}; expected one of {LETTERS!r}")
        while True:
            if not out:
                push(ch)
                break
            top = out[-1]
            if top == ch:
                pop()
                break
            if top != "a" and ch != "a":
                pop()
                ch = _MERGE[top + ch]
                continue  # merged letter may interact with the new top
            push(ch)
            break
    return "".join(out)


def is_reduced(w: str) -> bool:
    """True iff w satisfies the reduced-shape invariants."""
    for i, ch in enumerate(w):
        if ch not in LETTERS:
            return False
        if i and (w[i - 1] == ch or (w[i - 1] != "a" and ch != "a")):
            return False
    return True


def a_parity(w: str) -> int:
    """Parity of the number of `a` letters; 1 means the root is active."""
    return w.count("a") & 1


def multiply(x: str, y: str) -> str:
    """Product of two representatives, reduced."""
    return reduce_word(x + y)


def invert(x: str) -> str:
    """Inverse representative: reversal, since every letter is an involution."""
    return x[::-1]


def conjugate(x: str, w: str) -> str:
    """x conjugated by w, i.e. w^-1 x w, reduced."""
    return reduce_word(w[::-1] + x + w)


def commutator(x: str, g: str) -> str:
    """[x, g] = x^-1 g^-1 x g, reduced."""
    return reduce_word(x[::-1] + g[::-1] + x + g)


def power(x: str, n: int) -> str:
    """x**n by binary powering, reduced. Negative exponents invert first."""
    if n < 0:
        x, n = invert(x), -n
    acc = IDENTITY
    sq = x
    while n:
        if n & 1:
            acc = reduce_word(acc + sq)
        n >>= 1
        if n:
            sq = reduce_word(sq + sq)
    return acc


def parse_word(text: str) -> str:
    """Parse a word literal ("1" or "" for the identity) and reduce it."""
    if text in ("", "1"):
        return IDENTITY
    return reduce_word(text)


def format_word(w: str) -> str:
    """Text form of a word; the identity prints as "1"."""
    return w if w else "1"
