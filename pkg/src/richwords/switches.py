"""Switches x·p·y (x != y letters, p a palindrome) and their closures."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .words import WordError, is_palindrome, occ, reverse, sort_words


@dataclass
class SwitchSet:
    # switch -> start position of one occurrence in the source word
    positions: dict[str, int] = field(default_factory=dict)

    @property
    def elements(self) -> set[str]:
        return set(self.positions)

    def __iter__(self) -> Iterator[str]:
        return iter(sort_words(self.positions))

    def __len__(self) -> int:
        return len(self.positions)

    def __contains__(self, w: object) -> bool:
        return w in self.positions

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SwitchSet):
            return self.elements == other.elements
        if isinstance(other, (set, frozenset)):
            return self.elements == other
        return NotImplemented

    def sorted(self) -> list[str]:
        return sort_words(self.positions)


def is_switch(w: str) -> bool:
    return len(w) >= 2 and w[0] != w[-1] and is_palindrome(w[1:-1])


def _switch_occurrences(w: str) -> Iterator[tuple[int, int]]:
    # Each center has one maximal palindrome; its first mismatch is the only
    # switch around that center.
    n = len(w)
    for center in range(2 * n - 1):
        lo = center // 2
        hi = lo + center % 2
        if center % 2 == 0:
            # odd-length p around w[lo]; start with p = w[lo]
            i, j = lo, lo + 1
        else:
            # even-length p, possibly empty, between lo-1 and lo
            i, j = hi, hi
        while i > 0 and j < n and w[i - 1] == w[j]:
            i -= 1
            j += 1
        if i > 0 and j < n:
            yield i - 1, j + 1


def switches_of(v: str) -> SwitchSet:
    out = SwitchSet()
    for a, b in sorted(_switch_occurrences(v)):
        out.positions.setdefault(v[a:b], a)
    return out


def switch_suf(v: str, u: str) -> SwitchSet:
    """Switches of vu ending at one of the positions |v|+1 .. |vu|."""
    if not u:
        raise WordError("switch_suf needs a nonempty u")
    w = v + u
    out = SwitchSet()
    for a, b in sorted(_switch_occurrences(w)):
        if b > len(v):
            out.positions.setdefault(w[a:b], a)
    return out


def reduced(words: Iterable[str]) -> set[str]:
    """Elements not a proper factor of another element."""
    s = set(words)
    return {w for w in s if not any(w != o and w in o for o in s)}


def swc(t: str) -> str:
    if not is_switch(t):
        raise WordError(f"{t!r} is not a switch")
    return t[:-1] + t[0]


def swc_set(switches: Iterable[str]) -> set[str]:
    return reduced(swc(t) for t in switches)


def reverse_unioccurrent(w: str, u: str) -> bool:
    if not w or not u:
        raise WordError("reverse-unioccurrence needs nonempty words")
    return sum(occ(w, p) for p in {u, reverse(u)}) == 1
