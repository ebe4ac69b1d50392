"""Build h_n for a range of n and report lengths, the forced walk, the
stated length bound and the ratio (rho(n) - 1) / |h_bar|.

    python scripts/construction_table.py --max-n 16 --q 2
"""
import argparse
from fractions import Fraction

from richwords.construction import gen_h, verify_h
from richwords.words import Alphabet


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--stages", action="store_true", help="also print per-stage kappa lengths and margins")
    args = ap.parse_args()

    print(f"{'n':>3} {'rho':>7} {'|h_n|':>9} {'bound':>10} {'|h|/rho':>8} {'rich':>5} {'forced':>7} "
          f"{'omega':>7} {'ratio':>9} {'2/9-ratio':>9}")
    for n in range(args.min_n, args.max_n + 1):
        r = gen_h(n, Alphabet.standard(args.q))
        v = verify_h(r)
        print(f"{n:>3} {r.rho:>7} {len(r.h_n):>9} {float(r.bound):>10.1f} {len(r.h_n) / r.rho:>8.3f} "
              f"{str(v.rich):>5} {v.forced_steps:>7} {str(v.omega_hbar):>7} {float(v.ratio):>9.6f} "
              f"{float(Fraction(2, 9) - v.ratio):>9.6f}")
        if args.stages:
            for s in r.kappa_log:
                print(f"      j={s.j:<3} k={s.k:<3} {s.len_in:>9} -> {s.len_out:<9} "
                      f"lpp 0^{s.lpp_out}  margin 5k {s.margin_stated}  4k {s.margin_derived}")


if __name__ == "__main__":
    main()
