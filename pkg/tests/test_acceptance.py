"""Acceptance suite: one pytest mark per criterion, summarized at the end of
the run as one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import oracles
from richwords.construction import (
    elpp, ewp, ewp_chain, flexed_delta_check, gen_h, rho, switch_formula_check, verify_h,
)
from richwords.extension import flexed_points, gamma_triples, is_self_flexed, split_witness, std_ext
from richwords.palindex import PalIndex
from richwords.phi_search import phi, rich_words
from richwords.richness import rich
from richwords.switches import swc, switch_suf, switches_of
from richwords.words import Alphabet, max_pow, occ, reverse

c1, c2, c3, c4, c5, c6, c7, c8 = (pytest.mark.criterion(i) for i in range(1, 9))

W3 = "010200330"
W5 = "2020111010111010"


def _golden():
    # every printed value, as printed
    return {
        "right_extensions": (
            [std_ext(W3, "right", j) for j in range(1, 8)],
            ["0102003300", "01020033002", "010200330020", "0102003300201", "01020033002010",
             "010200330020102", "0102003300201020"],
        ),
        # printed in this order; two of the labels coincide, the values are L^1 .. L^8
        "left_extensions": (
            [std_ext(W3, "left", j) for j in range(1, 9)],
            ["2010200330", "02010200330", "002010200330", "3002010200330", "33002010200330",
             "033002010200330", "0033002010200330", "20033002010200330"],
        ),
        "richness_verdicts": (
            [rich(w) for w in ("00101", "001010", "001011", "001012", "200101100", "200101102", "200101101")],
            [True, True, True, True, False, False, True],
        ),
        "flexed_points": (
            flexed_points("2010110111011110111"),
            {"20", "201", "20101", "201011", "2010110111", "20101101110111", "201011011101111"},
        ),
        "switch_vu": (
            switches_of("010011012").elements,
            {"01", "10", "100", "110", "011", "001", "010011", "001101", "12", "012", "11012"},
        ),
        "switch_suf": (switch_suf("0100110", "12").elements, {"001101", "12", "012", "11012"}),
        "swc_values": (
            [swc(t) for t in ("001101", "12", "012", "11012")],
            ["001100", "11", "010", "11011"],
        ),
        "max_pow": ([max_pow(W5, "1"), max_pow(W5, "2")], [3, 1]),
        "ewp_t1": (ewp(W5, "11011"), "11011102020111010111010"),
        "ewp_t1_t2": (lambda: ewp_chain(W5, ["11011", "20201"]), "202020111011102020111010111010"),
        "elpp": (
            [elpp(W5, "1"), elpp(W5, "2"), elpp(W5, "0")],
            ["111102020111010111010", "22020111010111010", "002020111010111010"],
        ),
    }


@c1
@pytest.mark.parametrize("item", list(_golden()))
def test_c1_golden(item):
    got, expected = _golden()[item]
    if callable(got):
        got = got()
    assert got == expected


@c1
def test_c1_runtime():
    t = time.perf_counter()
    for got, _ in _golden().values():
        if callable(got):
            with pytest.raises(ValueError):
                got()
    assert time.perf_counter() - t < 1.0


@pytest.fixture(scope="module")
def phi_runs():
    t = time.perf_counter()
    runs = [phi(n, Alphabet("01"), shards=8) for n in range(1, 17)]
    runs += [phi(n, Alphabet("012"), shards=8) for n in range(1, 10)]
    return runs, time.perf_counter() - t


@c2
def test_c2_phi_at_most_n(phi_runs):
    runs, _ = phi_runs
    bad = [(r.q, r.n, r.phi) for r in runs if not 0 <= r.phi <= r.n]
    assert not bad
    assert [r.enumerated for r in runs if r.q == 2][:8] == [2, 4, 8, 16, 32, 64, 128, 252]


@c2
def test_c2_runtime(phi_runs):
    assert phi_runs[1] < 60


def _dfs_compare(ix, p, seen, depth, mismatches):
    # naive side: palindromic suffixes by slicing, a set of factors seen so far
    for x in "01":
        q = p + x
        suf = [q[j:] for j in range(len(q)) if q[j:] == q[j:][::-1]]
        flag = q.find(suf[0]) == len(q) - len(suf[0])
        added = [s for s in suf if s not in seen]
        seen.update(added)
        got = ix.push(ix._code[x])
        if got != flag or ix.distinct_palindromes() != len(seen) + 1:
            mismatches.append(q)
        if depth > 1:
            _dfs_compare(ix, q, seen, depth - 1, mismatches)
        ix.pop()
        seen.difference_update(added)


@c3
def test_c3_exhaustive_binary():
    mismatches = []
    _dfs_compare(PalIndex("01"), "", set(), 14, mismatches)
    assert mismatches == []


@c3
def test_c3_random_words():
    rng = random.Random(20261019)
    mismatches = []
    for _ in range(1000):
        alphabet = "0123"[: rng.choice((2, 3, 4))]
        w = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 200)))
        ix = PalIndex(alphabet)
        flags = ix.extend(w)
        prof = oracles.prefix_profile(w)
        if flags != [f for _, f in prof] or ix.distinct_palindromes() != prof[-1][0]:
            mismatches.append(w)
    assert mismatches == []


@pytest.fixture(scope="module")
def gamma_corpus():
    a = Alphabet("01")
    out = []
    for n in range(2, 14):
        for w in rich_words(n, a):
            out.extend(gamma_triples(w, a, 14))
    return out


@c4
def test_c4_u_not_longer_than_w(gamma_corpus):
    assert len(gamma_corpus) > 1000
    assert [g for g in gamma_corpus if len(g.u) > len(g.v) + len(g.vbar)] == []


@c4
def test_c4_vbar_unioccurrent(gamma_corpus):
    assert [g for g in gamma_corpus if occ(g.vbar + g.u, g.vbar) != 1] == []


@c4
def test_c4_mirror_properties(gamma_corpus):
    bad = []
    for g in gamma_corpus:
        if len(g.u) <= len(g.v) and not g.v.endswith(reverse(g.u)):
            bad.append(g)
        if len(g.u) >= len(g.v) and not g.u.startswith(reverse(g.v)):
            bad.append(g)
    assert bad == []


@c4
def test_c4_split_probe(gamma_corpus):
    probed = [g for g in gamma_corpus if is_self_flexed(g.vbar + g.u)]
    assert probed
    assert [g for g in probed if split_witness(g.v, g.vbar, g.u) is None] == []


@c5
def test_c5_flexed_delta():
    t = time.perf_counter()
    assert [(n, k) for n in range(2, 8) for k in range(2, 5) if not flexed_delta_check(n, k)] == []
    assert time.perf_counter() - t < 10


@c5
def test_c5_switch_formula():
    t = time.perf_counter()
    assert [(n, k) for n in range(3, 7) for k in (2, 3) if not switch_formula_check(n, k)] == []
    assert time.perf_counter() - t < 10


@c5
def test_c5_switch_formula_as_stated():
    # closed forms as written; only the union variable is read as the family index
    assert [(n, k) for n in range(3, 7) for k in (2, 3) if not switch_formula_check(n, k, stated=True)] == []


@pytest.fixture(scope="module")
def constructions():
    t = time.perf_counter()
    out = {}
    for q in (2, 3):
        for n in range(3, 13):
            r = gen_h(n, Alphabet.standard(q))
            out[n, q] = (r, verify_h(r))
    return out, time.perf_counter() - t


CASES = [(n, q) for q in (2, 3) for n in range(3, 13)]


@c6
@pytest.mark.parametrize("n, q", CASES)
def test_c6_rich_and_forced(constructions, n, q):
    r, v = constructions[0][n, q]
    assert v.rich
    assert v.unique_extension and v.forced_steps == rho(n) - 1


@c6
@pytest.mark.parametrize("n, q", CASES)
def test_c6_length_bound(constructions, n, q):
    r, v = constructions[0][n, q]
    assert len(r.h_n) < r.bound


@c6
def test_c6_runtime(constructions):
    assert constructions[1] < 120


@pytest.fixture(scope="module")
def ratios():
    out = {}
    for n in range(4, 17):
        r = gen_h(n)
        out[n] = verify_h(r).ratio
    return out


RATIO_16 = Fraction(65529, 475069)


@c7
def test_c7_ratio_at_most_two_ninths(ratios):
    assert {n: float(x) for n, x in ratios.items() if x > Fraction(2, 9)} == {}


@c7
def test_c7_ratio_regression(ratios):
    assert ratios[16] == RATIO_16


@c7
def test_c7_ratio_near_two_ninths(ratios):
    assert abs(ratios[16] - Fraction(2, 9)) <= Fraction(1, 100)


@c8
@pytest.mark.parametrize("q, n", [(2, n) for n in range(1, 13)] + [(3, n) for n in range(1, 8)])
def test_c8_shard_counts(q, n):
    runs = [phi(n, Alphabet.standard(q), shards=s) for s in (1, 2, 8)]
    assert len({(r.phi, tuple(r.witnesses), r.enumerated) for r in runs}) == 1


SET_COMMANDS = [
    ["palins", "001011010", "--list"],
    ["flexed", "2010110111011110111"],
    ["switches", "010011012"],
    ["switches", "0100110", "--tail", "12"],
    ["swc", "--reduce", "001101", "12", "012", "11012"],
    ["--json", "switches", "001011010"],
    ["phi", "9", "--q", "3", "--jobs", "2"],
    ["--json", "phi", "10", "--jobs", "8"],
]


def _normalized(out: bytes) -> bytes:
    # wall time is the one field allowed to differ between runs
    if not out.startswith(b"{"):
        return out
    d = json.loads(out)
    d.pop("wall_time_s", None)
    return json.dumps(d, sort_keys=True).encode()


@c8
@pytest.mark.parametrize("argv", SET_COMMANDS, ids=lambda a: "-".join(a))
def test_c8_cli_byte_identical(argv):
    runs = [
        subprocess.run([sys.executable, "-m", "richwords", *argv], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert _normalized(runs[0]) == _normalized(runs[1])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
