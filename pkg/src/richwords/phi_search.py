"""Exhaustive enumeration of rich words and the maximal forced-walk length.

The search space is split by fixed-length prefixes; every shard owns its
own :class:`PalIndex` and the partial results are merged by taking the
maximum and the sorted union of witnesses, so the answer does not depend on
the shard count.
"""
from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from .extension import forced_walk
from .palindex import PalIndex
from .words import Alphabet, WordError

log = logging.getLogger(__name__)


class Falsification(RuntimeError):
    """A rich word whose forced walk exceeds its own length."""

    def __init__(self, word: str, budget: int) -> None:
        super().__init__(f"forced walk from {word!r} did not branch within {budget} steps")
        self.word = word
        self.budget = budget

    def __reduce__(self):
        return (type(self), (self.word, self.budget))


@dataclass
class PhiResult:
    n: int
    q: int
    phi: int
    witnesses: list[str] = field(default_factory=list)
    enumerated: int = 0
    wall_time_s: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> PhiResult:
        return cls(
            n=int(d["n"]),
            q=int(d["q"]),
            phi=int(d["phi"]),
            witnesses=[str(w) for w in d["witnesses"]],
            enumerated=int(d["enumerated"]),
            wall_time_s=float(d["wall_time_s"]),
        )


def _dfs(ix: PalIndex, n: int, visit: Callable[[PalIndex], None] | None, symmetric: bool, used: int) -> int:
    if len(ix) == n:
        if visit is not None:
            visit(ix)
        return 1
    count = 0
    top = min(ix.q, used + 1) if symmetric else ix.q
    for c in range(top):
        if ix.push(c):
            count += _dfs(ix, n, visit, symmetric, max(used, c + 1))
        ix.pop()
    return count


def _seed(alphabet: Alphabet, prefix: str, symmetric: bool) -> tuple[PalIndex, int] | None:
    ix = PalIndex(alphabet)
    if not all(ix.extend(prefix)):
        return None
    used = 0
    for c in ix.s:
        if c > used and symmetric:
            return None
        used = max(used, c + 1)
    return ix, used


def enumerate_rich(
    n: int,
    alphabet: Alphabet,
    visitor: Callable[[PalIndex], None] | None = None,
    prefix: str = "",
    symmetric: bool = False,
) -> int:
    """Visit every rich word of length n (starting with ``prefix``) once.

    The visitor gets the live index, positioned on the word; it must leave
    the index as it found it.  With ``symmetric`` only words whose letters
    first appear in alphabet order are visited.
    """
    if n < 1:
        raise WordError(f"n must be positive, got {n}")
    if len(prefix) > n:
        return 0
    seeded = _seed(alphabet, prefix, symmetric)
    if seeded is None:
        return 0
    ix, used = seeded
    return _dfs(ix, n, visitor, symmetric, used)


def rich_words(n: int, alphabet: Alphabet, symmetric: bool = False) -> Iterator[str]:
    """All rich words of length n, in lexicographic symbol order."""
    out: list[str] = []
    enumerate_rich(n, alphabet, lambda ix: out.append(ix.word), symmetric=symmetric)
    yield from out


def _shard_prefixes(n: int, alphabet: Alphabet, shards: int, symmetric: bool) -> list[str]:
    length = 0
    while alphabet.q**length < shards and length < n:
        length += 1
    if length == 0:
        return [""]
    return list(rich_words(length, alphabet, symmetric))


def _run_shard(n: int, symbols: str, prefixes: list[str], symmetric: bool) -> tuple[int, list[str], int]:
    alphabet = Alphabet(symbols)
    best = -1
    witnesses: list[str] = []
    count = 0

    def visit(ix: PalIndex) -> None:
        nonlocal best, witnesses
        path, branch = forced_walk(ix, n)
        if branch is None:
            raise Falsification(ix.word, n)
        w = len(path)
        if w > best:
            best, witnesses = w, [ix.word]
        elif w == best:
            witnesses.append(ix.word)

    for p in prefixes:
        count += enumerate_rich(n, alphabet, visit, prefix=p, symmetric=symmetric)
    return best, witnesses, count


def phi(
    n: int,
    alphabet: Alphabet,
    shards: int = 1,
    jobs: int | None = None,
    symmetric: bool = False,
    max_witnesses: int | None = None,
) -> PhiResult:
    """Maximum of omega over all rich words of length n, with witnesses.

    ``jobs`` worker processes (default: min(shards, cpu count)) run the
    shards; ``jobs=1`` runs them in-process.
    """
    if n < 1 or shards < 1:
        raise WordError(f"need n >= 1 and shards >= 1, got n={n}, shards={shards}")
    start = time.perf_counter()
    prefixes = _shard_prefixes(n, alphabet, shards, symmetric)
    work = [prefixes[i::shards] for i in range(shards)]
    workers = jobs if jobs is not None else min(shards, os.cpu_count() or 1)
    args = [(n, alphabet.symbols, part, symmetric) for part in work]
    if workers <= 1:
        parts = [_run_shard(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_shard, *zip(*args)))
    best = max(p[0] for p in parts)
    witnesses = sorted(w for b, ws, _ in parts if b == best for w in ws)
    if max_witnesses is not None:
        witnesses = witnesses[:max_witnesses]
    return PhiResult(
        n=n,
        q=alphabet.q,
        phi=best,
        witnesses=witnesses,
        enumerated=sum(p[2] for p in parts),
        wall_time_s=time.perf_counter() - start,
    )


def cache_store(record: PhiResult, path: str | os.PathLike) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record.as_dict(), sort_keys=True) + "\n")


def cache_lookup(n: int, q: int, path: str | os.PathLike) -> PhiResult | None:
    """Newest record for (n, q); malformed lines are skipped with a warning."""
    p = Path(path)
    if not p.exists():
        return None
    found = None
    with p.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = PhiResult.from_dict(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("%s:%d: skipping malformed cache line (%s)", p, lineno, exc)
                continue
            if rec.n == n and rec.q == q:
                found = rec
    return found
