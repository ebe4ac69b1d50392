"""Standard extensions, flexed points and the forced extension walk."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .palindex import PalIndex
from .words import Alphabet, Side, WordError, lpps, reverse


@dataclass
class ExtensionTrace:
    base: str
    path: str
    # None when the walk ran out of budget before reaching a branching word
    omega: int | None
    branch_letters: list[str] = field(default_factory=list)

    @property
    def steps(self) -> list[tuple[str, bool]]:
        return [(x, True) for x in self.path]

    @property
    def exceeded(self) -> bool:
        return self.omega is None

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "omega": self.omega,
            "path": self.path,
            "branch_letters": self.branch_letters[:2],
        }


@dataclass(frozen=True)
class GammaTriple:
    v: str
    vbar: str
    u: str


def _rich_index(w: str, alphabet: Alphabet | None = None) -> PalIndex:
    ix = PalIndex(alphabet or Alphabet.infer(w))
    if not all(ix.extend(w)):
        raise WordError(f"{w!r} is not rich")
    return ix


def std_ext(w: str, side: Side = "right", j: int = 1) -> str:
    """The j-th left or right standard extension of a nonempty rich word."""
    if not w:
        raise WordError("standard extension of the empty word is undefined")
    if j < 0:
        raise WordError(f"j must be nonnegative, got {j}")
    if side == "left":
        return reverse(std_ext(reverse(w), "right", j))
    if side != "right":
        raise WordError(f"unknown side {side!r}")
    ix = _rich_index(w)
    for _ in range(j):
        ix.push(ix.next_std_letter())
    return ix.word


def flexed_points(v: str) -> set[str]:
    """Prefixes ux of v (x a letter, u nonempty) with ux != std_ext(u)."""
    if len(v) <= 1:
        raise WordError("flexed points need a word of length > 1")
    ix = _rich_index(v[:1], Alphabet.infer(v))
    out = set()
    for i in range(1, len(v)):
        c = ix._code[v[i]]
        if c != ix.next_std_letter():
            out.add(v[: i + 1])
        if not ix.push(c):
            raise WordError(f"{v!r} is not rich")
    return out


def is_self_flexed(w: str) -> bool:
    """w is rich, |w| > 1 and w is one of its own flexed points."""
    if len(w) <= 1:
        return False
    ix = PalIndex(Alphabet.infer(w))
    if not all(ix.extend(w[:-1])):
        return False
    c = ix._code[w[-1]]
    expected = ix.next_std_letter()
    return ix.push(c) and c != expected


def two_way_extendable(w: str, alphabet: Alphabet) -> bool:
    return len(_rich_index(w, alphabet).rich_letters()) >= 2


def forced_walk(ix: PalIndex, budget: int) -> tuple[list[int], list[int] | None]:
    """Append the unique rich letter while there is exactly one.

    Returns the forced letters and the rich letters of the first branching
    word, or ``None`` when ``budget`` steps did not reach one.  The index is
    restored before returning.
    """
    path: list[int] = []
    branch = None
    while True:
        letters = ix.rich_letters()
        if len(letters) != 1:
            branch = letters
            break
        if len(path) == budget:
            break
        ix.push(letters[0])
        path.append(letters[0])
    ix.rollback(len(path))
    if branch is not None and not branch:
        raise WordError(f"{ix.word!r} has no rich extension; is it rich?")
    return path, branch


def omega(w: str, alphabet: Alphabet | None = None, budget: int | None = None) -> ExtensionTrace:
    """Length of the shortest u with wu rich and two-way extendable.

    Walks the forced path; ``budget`` defaults to |w|.
    """
    if not w:
        raise WordError("omega is defined for nonempty words")
    alphabet = alphabet or Alphabet.infer(w)
    ix = _rich_index(w, alphabet)
    path, branch = forced_walk(ix, len(w) if budget is None else budget)
    sym = alphabet.symbols
    return ExtensionTrace(
        base=w,
        path="".join(sym[c] for c in path),
        omega=None if branch is None else len(path),
        branch_letters=[] if branch is None else [sym[c] for c in branch],
    )


def unique_rich_extension(v: str, u: str, alphabet: Alphabet) -> bool:
    """No word v·t, t a proper prefix of u, is two-way extendable."""
    if not v or not u:
        raise WordError("unique rich extension needs nonempty v and u")
    ix = _rich_index(v, alphabet)
    for x in u:
        if len(ix.rich_letters()) >= 2:
            return False
        if not ix.append(x):
            raise WordError(f"{v + u!r} is not rich")
    return True


def gamma_check(v: str, vbar: str, u: str, alphabet: Alphabet | None = None) -> bool:
    if not (v and vbar and u):
        return False
    w = v + vbar
    alphabet = alphabet or Alphabet.infer(w + u)
    ix = PalIndex(alphabet)
    if not all(ix.extend(w + u)):
        return False
    if lpps(w) != vbar:
        return False
    return unique_rich_extension(w, u, alphabet)


def gamma_triples(w: str, alphabet: Alphabet, max_total: int | None = None) -> Iterator[GammaTriple]:
    """All Γ triples (v, vbar, u) with v·vbar = w and |w·u| <= max_total."""
    if len(w) < 2:
        return
    vbar = lpps(w)
    if not vbar:
        return
    ix = _rich_index(w, alphabet)
    limit = len(w) if max_total is None else max_total - len(w)
    path, _ = forced_walk(ix, max(limit, 0))
    # u may end with any rich letter of the last non-branching word, which is
    # the forced one, so the triples are exactly the nonempty walk prefixes
    sym = alphabet.symbols
    u = "".join(sym[c] for c in path)
    for k in range(1, len(u) + 1):
        yield GammaTriple(w[: -len(vbar)], vbar, u[:k])


def split_witness(v: str, vbar: str, ux: str) -> tuple[str, str] | None:
    """A split v = t1·t2 with t1, t2 rich, x·u^R a suffix of ltrim(t2) and
    vbar·t2^R self-flexed, or None if none exists."""
    from .richness import rich

    u, x = ux[:-1], ux[-1]
    tail = x + reverse(u)
    for i in range(len(v)):
        t1, t2 = v[:i], v[i:]
        if not t2[1:].endswith(tail):
            continue
        if rich(t1) and rich(t2) and is_self_flexed(vbar + reverse(t2)):
            return t1, t2
    return None
