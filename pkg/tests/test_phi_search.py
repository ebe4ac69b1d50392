import json
import logging
import pickle

import pytest

import oracles
from richwords.phi_search import (
    Falsification, PhiResult, cache_lookup, cache_store, enumerate_rich, phi, rich_words,
)
from richwords.richness import rich
from richwords.words import Alphabet, WordError

A2, A3 = Alphabet("01"), Alphabet("012")


@pytest.mark.parametrize("alphabet, n", [("01", n) for n in range(1, 15)] + [("012", n) for n in range(1, 10)])
def test_enumeration_matches_naive_filter(alphabet, n):
    naive = [w for w in oracles.all_words(n, alphabet) if oracles.is_rich(w)]
    assert list(rich_words(n, Alphabet(alphabet))) == naive


def test_small_counts():
    assert enumerate_rich(1, A2) == 2 and enumerate_rich(3, A2) == 8
    assert enumerate_rich(5, A2, prefix="00") == len([w for w in rich_words(5, A2) if w.startswith("00")])
    assert enumerate_rich(2, A2, prefix="000") == 0
    with pytest.raises(WordError):
        enumerate_rich(0, A2)


def test_visitor_sees_consistent_index():
    seen = []

    def visit(ix):
        assert ix.is_rich() and rich(ix.word)
        seen.append(ix.word)

    enumerate_rich(8, A3, visit)
    assert len(seen) == len(set(seen)) == 3033


def test_symmetric_enumeration():
    words = list(rich_words(6, A3, symmetric=True))
    assert all(w[0] == "0" for w in words)
    assert "0102" in {w[:4] for w in words} and not any(w.startswith("02") for w in words)


@pytest.mark.parametrize("n", range(1, 13))
def test_phi_matches_double_loop(n):
    got = phi(n, A2)
    assert (got.phi, got.witnesses) == oracles.phi(n, "01")


def test_phi_ternary_example():
    r = phi(8, A3)
    assert r.phi == 1 and "20010110" in r.witnesses and r.enumerated == 3033
    assert all(len(w) == 8 and rich(w) for w in r.witnesses)


def test_phi_values_q2():
    # computed by this search, not published values
    assert [phi(n, A2).phi for n in range(1, 17)] == [0] * 6 + [1] * 4 + [2] * 3 + [3] * 3


@pytest.mark.parametrize("n", [5, 9, 12])
def test_shard_independence(n):
    runs = [phi(n, A2, shards=s, jobs=1) for s in (1, 2, 8)]
    assert len({(r.phi, tuple(r.witnesses), r.enumerated) for r in runs}) == 1


def test_process_pool_matches_inline():
    a = phi(10, A2, shards=2, jobs=2)
    b = phi(10, A2, shards=2, jobs=1)
    assert (a.phi, a.witnesses, a.enumerated) == (b.phi, b.witnesses, b.enumerated)


def test_max_witnesses():
    assert phi(8, A3, max_witnesses=3).witnesses == phi(8, A3).witnesses[:3]


def test_phi_rejects():
    with pytest.raises(WordError):
        phi(0, A2)
    with pytest.raises(WordError):
        phi(3, A2, shards=0)


def test_falsification_pickles():
    e = pickle.loads(pickle.dumps(Falsification("0101", 4)))
    assert (e.word, e.budget) == ("0101", 4) and "0101" in str(e)


def test_cache_round_trip(tmp_path):
    path = tmp_path / "phi.jsonl"
    assert cache_lookup(3, 2, path) is None
    path.write_text("")
    assert cache_lookup(3, 2, path) is None
    r = phi(9, A2)
    cache_store(r, path)
    assert cache_lookup(9, 2, path) == r
    assert cache_lookup(9, 3, path) is None


def test_cache_newest_wins(tmp_path):
    path = tmp_path / "phi.jsonl"
    cache_store(PhiResult(4, 2, 0, ["00"], 16, 0.5), path)
    cache_store(PhiResult(4, 2, 0, ["11"], 16, 0.25), path)
    assert cache_lookup(4, 2, path).witnesses == ["11"]


def test_cache_skips_malformed(tmp_path, caplog):
    path = tmp_path / "phi.jsonl"
    cache_store(PhiResult(4, 2, 0, [], 16, 0.1), path)
    with path.open("a") as fh:
        fh.write("{not json\n")
        fh.write(json.dumps({"n": 4}) + "\n")
    with caplog.at_level(logging.WARNING):
        assert cache_lookup(4, 2, path).enumerated == 16
    assert len(caplog.records) == 2


def test_cache_line_schema(tmp_path):
    path = tmp_path / "phi.jsonl"
    cache_store(phi(6, A2), path)
    rec = json.loads(path.read_text().splitlines()[0])
    assert set(rec) == {"n", "q", "phi", "witnesses", "enumerated", "wall_time_s"}
