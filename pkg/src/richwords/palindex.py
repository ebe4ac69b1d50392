"""Incremental palindromic tree (eertree) with an undo journal.

Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
Every other node is a distinct nonempty palindromic factor of the indexed
word.  Transitions live in one flat list, ``q`` slots per node.
"""
from __future__ import annotations

from typing import Iterable

from .words import Alphabet, WordError

_NONE = -1


class PalIndex:
    __slots__ = ("alphabet", "q", "length", "link", "nxt", "s", "last", "journal", "_code")

    def __init__(self, alphabet: Alphabet | str | int, word: str = "") -> None:
        if isinstance(alphabet, int):
            alphabet = Alphabet.standard(alphabet)
        elif isinstance(alphabet, str):
            alphabet = Alphabet(alphabet)
        self.alphabet = alphabet
        self.q = q = alphabet.q
        self._code = {c: i for i, c in enumerate(alphabet.symbols)}
        self.length = [-1, 0]
        self.link = [0, 0]
        self.nxt = [_NONE] * (2 * q)
        self.s: list[int] = []
        self.last = 1
        # one entry per appended letter: (previous last node, transition slot or -1)
        self.journal: list[tuple[int, int]] = []
        if word:
            self.extend(word)

    def __len__(self) -> int:
        return len(self.s)

    @property
    def word(self) -> str:
        return self.alphabet.decode(self.s)

    def push(self, c: int) -> bool:
        """Append symbol index ``c``; True iff the new longest palindromic
        suffix did not occur before (so it is unioccurrent)."""
        s = self.s
        length = self.length
        link = self.link
        nxt = self.nxt
        q = self.q
        pos = len(s)
        s.append(c)
        cur = self.last
        while True:
            j = pos - 1 - length[cur]
            if j >= 0 and s[j] == c:
                break
            if cur == 0:
                break
            cur = link[cur]
        slot = cur * q + c
        node = nxt[slot]
        if node != _NONE:
            self.journal.append((self.last, _NONE))
            self.last = node
            return False
        new_len = length[cur] + 2
        if new_len == 1:
            suf = 1
        else:
            cur2 = link[cur]
            while True:
                j = pos - 1 - length[cur2]
                if j >= 0 and s[j] == c:
                    break
                cur2 = link[cur2]
            suf = nxt[cur2 * q + c]
        node = len(length)
        length.append(new_len)
        link.append(suf)
        nxt.extend([_NONE] * q)
        nxt[slot] = node
        self.journal.append((self.last, slot))
        self.last = node
        return True

    def append(self, x: str) -> bool:
        try:
            c = self._code[x]
        except KeyError:
            raise WordError(f"symbol {x!r} not in alphabet {self.alphabet.symbols!r}") from None
        return self.push(c)

    def extend(self, w: Iterable[str]) -> list[bool]:
        return [self.append(x) for x in w]

    def pop(self) -> None:
        prev, slot = self.journal.pop()
        self.s.pop()
        if slot != _NONE:
            self.nxt[slot] = _NONE
            del self.nxt[-self.q :]
            self.length.pop()
            self.link.pop()
        self.last = prev

    def rollback(self, steps: int = 1) -> None:
        if steps < 0 or steps > len(self.journal):
            raise WordError(f"cannot roll back {steps} steps from a word of length {len(self.s)}")
        for _ in range(steps):
            self.pop()

    def distinct_palindromes(self) -> int:
        """Distinct palindromic factors, counting the empty word."""
        return len(self.length) - 1

    @property
    def lps_length(self) -> int:
        return self.length[self.last]

    @property
    def lpps_length(self) -> int:
        n = len(self.s)
        if n == 0:
            raise WordError("lpps is undefined for the empty word")
        k = self.length[self.last]
        return self.length[self.link[self.last]] if k == n else k

    def is_rich(self) -> bool:
        return self.distinct_palindromes() == len(self.s) + 1

    def rich_letters(self) -> list[int]:
        """Symbol indices c such that appending c keeps the word rich.

        Assumes the indexed word is rich.
        """
        out = []
        for c in range(self.q):
            if self.push(c):
                out.append(c)
            self.pop()
        return out

    def next_std_letter(self) -> int:
        """Symbol index of the right standard extension of the indexed word."""
        return self.s[len(self.s) - 1 - self.lpps_length]

    def state(self) -> tuple:
        """Structural snapshot, equal for equal words regardless of history."""
        return (tuple(self.s), tuple(self.length), tuple(self.link), tuple(self.nxt), self.last)
