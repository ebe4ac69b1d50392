"""Richness tests, certificates and complete returns."""
from __future__ import annotations

from dataclasses import dataclass, field

from .palindex import PalIndex
from .words import Alphabet, WordError, factors, reverse


@dataclass(frozen=True)
class RichnessCertificate:
    word: str
    verdict: bool
    # (start, end) span of the longest palindromic suffix of each nonempty prefix
    lps_per_prefix: list[tuple[int, int]] = field(repr=False)
    unioccurrent: list[bool] = field(repr=False)
    first_failure: int | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def lps_of_prefix(self, i: int) -> str:
        """Longest palindromic suffix of the prefix of length ``i + 1``."""
        s, e = self.lps_per_prefix[i]
        return self.word[s:e]

    def as_dict(self) -> dict:
        return {
            "word": self.word,
            "rich": self.verdict,
            "first_failure": self.first_failure,
            "lps_per_prefix": [[s, e] for s, e in self.lps_per_prefix],
        }


def is_rich(w: str, alphabet: Alphabet | None = None) -> RichnessCertificate:
    """Certificate from one left-to-right pass: a prefix conforms iff its
    longest palindromic suffix is new (hence unioccurrent)."""
    ix = PalIndex(alphabet or Alphabet.infer(w))
    spans = []
    flags = []
    first = None
    for i, x in enumerate(w):
        new = ix.append(x)
        spans.append((i + 1 - ix.lps_length, i + 1))
        flags.append(new)
        if not new and first is None:
            first = i
    return RichnessCertificate(w, first is None, spans, flags, first)


def rich(w: str) -> bool:
    ix = PalIndex(Alphabet.infer(w))
    return all(ix.extend(w))


def _require_rich(w: str, alphabet: Alphabet) -> PalIndex:
    ix = PalIndex(alphabet)
    if not all(ix.extend(w)):
        raise WordError(f"{w!r} is not rich")
    return ix


def rich_extension_letters(w: str, alphabet: Alphabet) -> list[str]:
    """Letters x of ``alphabet`` with wx rich, in alphabet order."""
    ix = _require_rich(w, alphabet)
    return [alphabet.symbols[c] for c in ix.rich_letters()]


def complete_returns(w: str, u: str) -> set[str]:
    if not u:
        raise WordError("complete returns to the empty word are undefined")
    starts = []
    i = w.find(u)
    while i >= 0:
        starts.append(i)
        i = w.find(u, i + 1)
    if not starts:
        raise WordError(f"{u!r} is not a factor of {w!r}")
    return {w[a : b + len(u)] for a, b in zip(starts, starts[1:])}


def reversal_closure_check(w: str) -> bool:
    """Every factor p of w has p and p^R rich."""
    return all(rich(p) and rich(reverse(p)) for p in set(factors(w)))

