"""Prefix-planting extensions (ewp, elpp) and the extremal words g_n, h_n.

All constructions are written over the symbols ``0`` and ``1`` and mapped
onto an alphabet's zero- and one-symbols at the end.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .extension import flexed_points, forced_walk
from .palindex import PalIndex
from .richness import rich
from .switches import reduced, swc_set, switches_of
from .words import Alphabet, WordError, is_palindrome, lppp, max_pow

BINARY = Alphabet("01")
TAIL_PALINDROMES = ("00100", "11011", "01010")


@lru_cache(maxsize=None)
def gen_g(n: int) -> str:
    """g_1 = 1, g_n = g_{n-1} 0 1^n 0 g_{n-1}."""
    if n < 1:
        raise WordError(f"g_n is defined for n >= 1, got {n}")
    if n == 1:
        return "1"
    prev = gen_g(n - 1)
    return prev + "0" + "1" * n + "0" + prev


def rho(n: int) -> int:
    """|g_n|, via rho(n) = 2 rho(n-1) + n + 2."""
    r = 1
    for m in range(2, n + 1):
        r = 2 * r + m + 2
    return r


def _g(n: int) -> str:
    return gen_g(n) if n >= 1 else ""


@lru_cache(maxsize=None)
def alpha(i: int, j: int) -> str:
    if j < 2:
        raise WordError(f"alpha is defined for j >= 2, got {j}")
    if i == 1:
        return "00" + _g(j - 1) + "00"
    if i == 2:
        return "0" + "1" * (j - 1) + "0" + _g(j - 2) + "0" + "1" * (j - 1) + "0"
    if i == 3:
        return "1" * j + "0" + _g(j - 2) + "0" + "1" * j
    if i == 4:
        return "1" * (j + 1)
    raise WordError(f"alpha index i must be in 1..4, got {i}")


@dataclass(frozen=True)
class EwpContext:
    w: str
    t: str
    sigma: list[str]
    # None when sigma is empty
    pi: str | None

    @property
    def applies(self) -> bool:
        return self.pi is not None and self.t not in self.pi[::-1] + self.w


def ewp_context(w: str, t: str) -> EwpContext:
    base = len(lppp(w))
    r = t[:-1]
    ends = []
    if not r:
        ends = list(range(base, len(w) + 1))
    else:
        pos = w.find(r, max(base - len(r), 0))
        while pos >= 0:
            ends.append(pos + len(r))
            pos = w.find(r, pos + 1)
    sigma = [w[:e] for e in ends]
    pi = w[base : ends[0]] if ends else None
    return EwpContext(w, t, sigma, pi)


def _check_ewp_args(w: str, t: str) -> None:
    if not w or not t:
        raise WordError("ewp needs nonempty w and t")
    if not is_palindrome(t):
        raise WordError(f"{t!r} is not a palindrome")
    if not rich(w):
        raise WordError(f"{w!r} is not rich")
    if not rich(t):
        raise WordError(f"{t!r} is not rich")


def ewp(w: str, t: str) -> str:
    """Extend w on the left so that t becomes its unioccurrent longest
    palindromic prefix, or return w when that is impossible.

    The guard "t is not a factor of pi^R w" binds the unnamed word of the
    definition to pi.
    """
    _check_ewp_args(w, t)
    ctx = ewp_context(w, t)
    if not ctx.applies:
        return w
    return t[0] + ctx.pi[::-1] + w


def ewp_chain(w: str, ts) -> str:
    for t in ts:
        w = ewp(w, t)
    return w


def elpp(w: str, y: str) -> str:
    return ewp(w, y * (max_pow(w, y) + 1))


class PrefixBuilder:
    """A word grown only on the left, with an eertree over its reversal so
    that the longest palindromic prefix is always at hand."""

    def __init__(self, w: str, alphabet: Alphabet | None = None) -> None:
        self.word = w
        self.ix = PalIndex(alphabet or Alphabet.infer(w, "01"))
        self.ix.extend(reversed(w))

    def __len__(self) -> int:
        return len(self.word)

    def lpp_length(self) -> int:
        return self.ix.lps_length

    def lppp_length(self) -> int:
        return self.ix.lpps_length

    def prepend(self, s: str) -> None:
        self.ix.extend(reversed(s))
        self.word = s + self.word

    def ewp(self, t: str) -> bool:
        """In-place ewp; returns whether the word changed."""
        w = self.word
        base = self.lppp_length()
        r = t[:-1]
        if r:
            pos = w.find(r, max(base - len(r), 0))
            if pos < 0:
                return False
            end = pos + len(r)
        else:
            end = base
        pi_rev = w[base:end][::-1]
        if t in w or t in pi_rev + w[: len(t) - 1]:
            return False
        self.prepend(t[0] + pi_rev)
        return True

    def elpp(self, y: str) -> bool:
        return self.ewp(y * (max_pow(self.word, y) + 1))

    def kappa(self, j: int) -> None:
        for i in (1, 2, 3, 4):
            self.ewp(alpha(i, j))
        self.elpp("0")


def kappa(j: int, w: str) -> str:
    if j < 3:
        raise WordError(f"kappa is defined for j >= 3, got {j}")
    if not rich(w):
        raise WordError(f"{w!r} is not rich")
    b = PrefixBuilder(w)
    b.kappa(j)
    return b.word


def kappa_bound(j: int, k: int, w_len: int, k_coeff: int = 5) -> int:
    """Length bound for kappa(j, w) when lpp(w) = 0^k; the statement uses
    5k, its derivation ends at 4k."""
    return w_len + 7 * rho(j - 1) + k_coeff * k + 5 * j + 10


def h_bound(n: int, q: int, first_stage: bool = False) -> Fraction:
    """The stated length bound for h_n.  Its derivation sums the per-stage
    kappa bounds from the second stage on; ``first_stage`` adds the omitted
    7 rho(n-1) + 5n + 22 of the stage j = n."""
    b = Fraction(11, 2) * rho(n) + (n - 3) * (5 * n + 22) + 3 * n + 20 + q
    if first_stage:
        b += 7 * rho(n - 1) + 5 * n + 22
    return b


@dataclass
class KappaStage:
    j: int
    k: int
    len_in: int
    len_out: int
    lpp_out: int

    @property
    def margin_stated(self) -> int:
        return kappa_bound(self.j, self.k, self.len_in, 5) - self.len_out

    @property
    def margin_derived(self) -> int:
        return kappa_bound(self.j, self.k, self.len_in, 4) - self.len_out


@dataclass
class ConstructionReport:
    n: int
    alphabet: Alphabet
    g_n: str
    alphas: dict[tuple[int, int], str]
    kappa_stages: list[str] = field(repr=False)
    kappa_log: list[KappaStage]
    h_n: str = field(repr=False)
    h_bar: str = field(repr=False)
    rho: int
    bound: Fraction
    verdicts: HVerdicts | None = None

    @property
    def q(self) -> int:
        return self.alphabet.q

    def as_dict(self) -> dict:
        v = self.verdicts
        return {
            "n": self.n,
            "q": self.q,
            "g_len": len(self.g_n),
            "h_len": len(self.h_n),
            "hbar_len": len(self.h_bar),
            "bound": -(-self.bound.numerator // self.bound.denominator),
            "rich": None if v is None else v.rich,
            "unique_extension": None if v is None else v.unique_extension,
            "bound_ok": None if v is None else v.bound_ok,
            "ratio": float(Fraction(self.rho - 1, len(self.h_bar))),
        }


def _to_alphabet(w: str, alphabet: Alphabet) -> str:
    if alphabet.symbols[:2] == "01":
        return w
    return w.translate(str.maketrans("01", alphabet.zero + alphabet.one))


def gen_h(n: int, alphabet: Alphabet | None = None) -> ConstructionReport:
    if n < 3:
        raise WordError(f"h_n is defined for n >= 3, got {n}")
    alphabet = alphabet or BINARY
    g = gen_g(n)
    b = PrefixBuilder("000" + g + "00" + g)
    stages = []
    log = []
    for j in range(n, 2, -1):
        len_in = len(b)
        k = b.lpp_length()
        b.kappa(j)
        log.append(KappaStage(j, k, len_in, len(b), b.lpp_length()))
        stages.append(b.word)
    for t in TAIL_PALINDROMES:
        b.ewp(t)
    sigma = alphabet.symbols[2:]
    h = sigma + _to_alphabet(b.word, alphabet)
    r = len(g)
    return ConstructionReport(
        n=n,
        alphabet=alphabet,
        g_n=_to_alphabet(g, alphabet),
        alphas={(i, j): _to_alphabet(alpha(i, j), alphabet) for j in range(3, n + 1) for i in (1, 2, 3, 4)},
        kappa_stages=[_to_alphabet(s, alphabet) for s in stages],
        kappa_log=log,
        h_n=h,
        h_bar=h[: len(h) - (r - 1)],
        rho=r,
        bound=h_bound(n, alphabet.q),
    )


@dataclass
class HVerdicts:
    rich: bool
    unique_extension: bool
    forced_steps: int
    bound_ok: bool
    ratio: Fraction
    # the ratio claim covers n > 3 only
    ratio_ok: bool | None
    # full forced walk from h_bar, None if it did not branch within |h_bar|
    omega_hbar: int | None

    @property
    def failures(self) -> list[str]:
        out = []
        if not self.rich:
            out.append("rich")
        if not self.unique_extension:
            out.append("unique_extension")
        if not self.bound_ok:
            out.append("bound")
        if self.ratio_ok is False:
            out.append("ratio")
        return out

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_h(report: ConstructionReport) -> HVerdicts:
    """Check richness of h_n, the forced walk from h_bar along ltrim(g_n),
    the length bound and the ratio (rho - 1) / |h_bar|."""
    a = report.alphabet
    ix = PalIndex(a)
    hbar_rich = all(ix.extend(report.h_bar))
    tail = report.h_n[len(report.h_bar) :]
    steps = 0
    h_rich = hbar_rich
    if hbar_rich:
        code = ix._code
        for x in tail:
            if ix.rich_letters() != [code[x]]:
                break
            ix.push(code[x])
            steps += 1
        if steps < len(tail):
            # the walk broke off; finish richness separately
            h_rich = all(ix.extend(tail[steps:]))
    unique = hbar_rich and steps == len(tail) == report.rho - 1
    omega_hbar = None
    if unique:
        path, branch = forced_walk(ix, len(report.h_bar) - steps)
        if branch is not None:
            omega_hbar = steps + len(path)
    ratio = Fraction(report.rho - 1, len(report.h_bar))
    v = HVerdicts(
        rich=h_rich,
        unique_extension=unique,
        forced_steps=steps,
        bound_ok=len(report.h_n) < report.bound,
        ratio=ratio,
        ratio_ok=(ratio <= Fraction(2, 9)) if report.n > 3 else None,
        omega_hbar=omega_hbar,
    )
    report.verdicts = v
    return v


def flexed_delta_check(n: int, k: int) -> bool:
    if n < 2 or k < 2:
        raise WordError(f"flexed_delta_check needs n, k >= 2, got n={n}, k={k}")
    w = "0" * k + gen_g(n)
    if not rich(w):
        return False
    prev = "0" * k + gen_g(n - 1)
    delta = flexed_points(w) - flexed_points(prev)
    return delta == {prev + "01", prev + "0" + "1" * n}


def switch_formula(n: int, k: int) -> set[str]:
    """Closed form for the switches of 0^k g_n (n >= 3, k >= 2).

    The zero-run family is 0^i 1 for 2 <= i <= k, and the families 01^i,
    1^i0 start at i = 2; with these index ranges the form agrees with direct
    enumeration.
    """
    out = {"0" * i + "1" for i in range(2, k + 1)}
    out |= {"01", "10", "00101", "11010", "01011", "011", "110"}
    for i in range(3, n + 1):
        g1, g2 = gen_g(i - 1), _g(i - 2)
        out |= {
            "00" + g1 + "01",
            "0" + "1" * (i - 1) + "0" + g2 + "0" + "1" * i,
            "1" * i + "0" + g2 + "0" + "1" * (i - 1) + "0",
            "0" + "1" * i,
            "1" * i + "0",
        }
    return out


def swc_formula(n: int, k: int) -> set[str]:
    """Closed form for swc(switches of 0^k g_n); the zero run is 0^(k+1)."""
    out = {"0" * (k + 1), "00100", "11011", "01010", alpha(4, n)}
    out |= {alpha(i, j) for j in range(3, n + 1) for i in (1, 2, 3)}
    return reduced(out)


def switch_formula_stated(n: int, k: int) -> set[str]:
    """The closed form as originally stated: 0^(i+1) 1 for 1 <= i <= k, no
    011 or 110 (the family index is read as the union variable)."""
    out = {"0" * (i + 1) + "1" for i in range(1, k + 1)}
    out |= {"01", "10", "00101", "11010", "01011"}
    for i in range(3, n + 1):
        g1, g2 = gen_g(i - 1), _g(i - 2)
        out |= {
            "00" + g1 + "01",
            "0" + "1" * (i - 1) + "0" + g2 + "0" + "1" * i,
            "1" * i + "0" + g2 + "0" + "1" * (i - 1) + "0",
            "0" + "1" * i,
            "1" * i + "0",
        }
    return out


def swc_formula_stated(n: int, k: int) -> set[str]:
    out = {"0" * k, "00100", "11011", "01010", alpha(4, n)}
    out |= {alpha(i, j) for j in range(3, n + 1) for i in (1, 2, 3)}
    return reduced(out)


def swtop(n: int, k: int) -> set[str]:
    """New switches of 0^k g_n that end a new flexed point."""
    w = "0" * k + gen_g(n)
    prev = "0" * k + gen_g(n - 1)
    new = switches_of(w).elements - switches_of(prev).elements
    delta = flexed_points(w) - flexed_points(prev)
    return {s for s in new if any(f.endswith(s) for f in delta)}


def switch_formula_check(n: int, k: int, stated: bool = False) -> bool:
    """Compare enumerated switches and closures of 0^k g_n with the closed
    forms; ``stated`` selects the uncorrected ones."""
    if n < 3 or k < 2:
        raise WordError(f"switch_formula_check needs n >= 3, k >= 2, got n={n}, k={k}")
    found = switches_of("0" * k + gen_g(n)).elements
    if stated:
        return found == switch_formula_stated(n, k) and swc_set(found) == swc_formula_stated(n, k)
    return found == switch_formula(n, k) and swc_set(found) == swc_formula(n, k)
