"""Tabulate phi(n) (maximal forced-walk length over rich words of length n).

    python scripts/phi_table.py --q 2 --max-n 16 --shards 8 --cache phi.jsonl
"""
import argparse
import logging

from richwords.phi_search import cache_lookup, cache_store, phi
from richwords.words import Alphabet


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--shards", type=int, default=8)
    ap.add_argument("--jobs", type=int)
    ap.add_argument("--cache")
    ap.add_argument("--witnesses", type=int, default=3, help="witnesses shown per row")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    alphabet = Alphabet.standard(args.q)
    print(f"{'n':>3} {'phi':>4} {'rich words':>11} {'#wit':>5} {'secs':>7}  witnesses")
    for n in range(1, args.max_n + 1):
        r = cache_lookup(n, args.q, args.cache) if args.cache else None
        if r is None:
            r = phi(n, alphabet, shards=args.shards, jobs=args.jobs)
            if args.cache:
                cache_store(r, args.cache)
        shown = " ".join(r.witnesses[: args.witnesses])
        print(f"{n:>3} {r.phi:>4} {r.enumerated:>11} {len(r.witnesses):>5} {r.wall_time_s:>7.2f}  {shown}")


if __name__ == "__main__":
    main()
