"""Alphabets and primitive word operations.

Words are plain ``str`` values, one character per symbol.  An
:class:`Alphabet` fixes the symbol order; ``symbols[0]`` plays the role of
the zero-symbol and ``symbols[1]`` the one-symbol in the constructions.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Literal

AffixKind = Literal["lps", "lpp", "lpps", "lppp"]
Side = Literal["left", "right"]

EMPTY = ""


class WordError(ValueError):
    """A word or argument violates an operation's precondition."""


@dataclass(frozen=True)
class Alphabet:
    symbols: str

    def __post_init__(self) -> None:
        if len(self.symbols) < 2:
            raise WordError(f"alphabet needs at least 2 symbols, got {self.symbols!r}")
        if len(set(self.symbols)) != len(self.symbols):
            raise WordError(f"alphabet symbols must be distinct: {self.symbols!r}")

    @property
    def q(self) -> int:
        return len(self.symbols)

    @property
    def zero(self) -> str:
        return self.symbols[0]

    @property
    def one(self) -> str:
        return self.symbols[1]

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, str) and len(x) == 1 and x in self.symbols

    def index(self, x: str) -> int:
        i = self.symbols.find(x)
        if i < 0 or len(x) != 1:
            raise WordError(f"symbol {x!r} not in alphabet {self.symbols!r}")
        return i

    def validate(self, w: str) -> str:
        bad = set(w) - set(self.symbols)
        if bad:
            raise WordError(f"symbols {''.join(sorted(bad))!r} not in alphabet {self.symbols!r}")
        return w

    def encode(self, w: str) -> list[int]:
        self.validate(w)
        return [self.symbols.index(c) for c in w]

    def decode(self, letters: list[int]) -> str:
        return "".join(self.symbols[i] for i in letters)

    @classmethod
    def infer(cls, *words: str) -> Alphabet:
        """Sorted distinct characters of ``words``, padded with the smallest
        unused digits when fewer than two symbols occur."""
        chars = sorted(set("".join(words)))
        pad = (d for d in "0123456789" if d not in chars)
        while len(chars) < 2:
            chars.append(next(pad))
        return cls("".join(sorted(chars)))

    @classmethod
    def standard(cls, q: int) -> Alphabet:
        digits = "0123456789abcdefghijklmnopqrstuvwxyz"
        if not 2 <= q <= len(digits):
            raise WordError(f"alphabet size must be in [2, {len(digits)}], got {q}")
        return cls(digits[:q])


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def occ(u: str, v: str) -> int:
    """Number of (possibly overlapping) occurrences of ``v`` in ``u``."""
    if not v:
        raise WordError("occ is undefined for the empty pattern")
    count = 0
    i = u.find(v)
    while i >= 0:
        count += 1
        i = u.find(v, i + 1)
    return count


def factors(w: str) -> Iterator[str]:
    """All factors of ``w`` by position, including duplicates and the empty word."""
    yield EMPTY
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            yield w[i:j]


def prefixes(w: str) -> Iterator[str]:
    for i in range(len(w) + 1):
        yield w[:i]


def suffixes(w: str) -> Iterator[str]:
    for i in range(len(w), -1, -1):
        yield w[i:]


def _palindromic_prefix_lengths(w: str) -> list[int]:
    # Borders of w + sep + w^R are exactly the palindromic prefixes of w.
    if not w:
        return [0]
    s = [*w, None, *reversed(w)]
    fail = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    lengths = []
    k = fail[-1]
    while k:
        lengths.append(k)
        k = fail[k - 1]
    lengths.append(0)
    return lengths


def affix(w: str, kind: AffixKind) -> str:
    """Longest (proper) palindromic prefix or suffix of ``w``.

    ``lpps``/``lppp`` require a nonempty word and return the empty word for
    single letters.
    """
    if kind in ("lpps", "lppp") and not w:
        raise WordError(f"{kind} is undefined for the empty word")
    if kind in ("lps", "lpps"):
        return reverse(affix(reverse(w), "lpp" if kind == "lps" else "lppp"))
    if kind not in ("lpp", "lppp"):
        raise WordError(f"unknown affix kind {kind!r}")
    lengths = _palindromic_prefix_lengths(w)
    if kind == "lppp":
        lengths = [k for k in lengths if k < len(w)]
    return w[: lengths[0]]


def lps(w: str) -> str:
    return affix(w, "lps")


def lpp(w: str) -> str:
    return affix(w, "lpp")


def lpps(w: str) -> str:
    return affix(w, "lpps")


def lppp(w: str) -> str:
    return affix(w, "lppp")


def trim(w: str, side: Side) -> str:
    if not w:
        raise WordError("cannot trim the empty word")
    if side == "left":
        return w[1:]
    if side == "right":
        return w[:-1]
    raise WordError(f"unknown side {side!r}")


def ltrim(w: str) -> str:
    return trim(w, "left")


def rtrim(w: str) -> str:
    return trim(w, "right")


def suffix_union(v: str, u: str) -> set[str]:
    """Union of the suffix sets of ``v·t`` over nonempty prefixes ``t`` of ``u``."""
    if not u:
        raise WordError("suffix_union needs a nonempty u")
    out: set[str] = set()
    for i in range(1, len(u) + 1):
        out.update(suffixes(v + u[:i]))
    return out


def max_pow(w: str, x: str) -> int:
    """Largest k such that x^k is a factor of ``w``."""
    return max(map(len, re.findall(re.escape(x) + "+", w)), default=0)


def sort_words(words) -> list[str]:
    """Deterministic (length, lexicographic) order used for printed word sets."""
    return sorted(words, key=lambda s: (len(s), s))
