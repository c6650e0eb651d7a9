#!/usr/bin/env python3
"""Regenerates the shipped data files under data/.

Stieltjes constants and zero ordinates are not computed by the C++ library;
they are produced once with mpmath and checked in. Every value is computed
at two working precisions and only the digits on which both runs agree are
written (the script aborts if that is fewer than requested).
"""

import argparse
import pathlib

from mpmath import mp, mpf, nstr, stieltjes, zetazero


def stable(fn, digits):
    mp.dps = digits + 20
    a = fn()
    mp.dps = digits + 40
    b = fn()
    mp.dps = digits + 40
    scale = max(abs(b), mpf(1))
    if abs(a - b) > scale * mpf(10) ** (-(digits + 5)):
        raise SystemExit(f"unstable value: {nstr(a, 30)} vs {nstr(b, 30)}")
    return b


def write(path, header, rows):
    with open(path, "w", encoding="utf-8") as out:
        for line in header:
            out.write(f"# {line}\n")
        for k, v in rows:
            out.write(f"{k}\t{v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    ap.add_argument("--stieltjes-max", type=int, default=80)
    ap.add_argument("--stieltjes-digits", type=int, default=100)
    ap.add_argument("--zeros", type=int, default=100)
    ap.add_argument("--zero-digits", type=int, default=40)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    sd = args.stieltjes_digits
    rows = []
    for k in range(args.stieltjes_max + 1):
        v = stable(lambda: stieltjes(k), sd)
        mp.dps = sd + 40
        rows.append((k, mp.nstr(v, sd, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)))
    write(out / "stieltjes.tsv",
          ["Stieltjes constants gamma_k, k = 0.." + str(args.stieltjes_max),
           "source: mpmath stieltjes(), cross-checked at two working precisions",
           f"digits: {sd} significant"],
          rows)

    zd = args.zero_digits
    rows = []
    for k in range(1, args.zeros + 1):
        v = stable(lambda: zetazero(k).imag, zd)
        mp.dps = zd + 40
        rows.append((k, mp.nstr(v, zd, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)))
    write(out / "zeros.tsv",
          [f"Ordinates t_k of the first {args.zeros} nontrivial zeros rho = 1/2 + i t_k",
           "source: mpmath zetazero(), cross-checked at two working precisions",
           f"digits: {zd} significant"],
          rows)


if __name__ == "__main__":
    main()
