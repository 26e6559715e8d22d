"""Write an Odlyzko-style zeros table (one ordinate per line) using Arb.

Offline stand-in for downloading ``zeros1``: needs ``python-flint``, which is
not a runtime dependency of the package.

    python tools/make_zeros_table.py 100000 zeros_100k.txt
"""
from __future__ import annotations

import argparse
import sys

import flint


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("count", type=int)
    p.add_argument("out")
    p.add_argument("--digits", type=int, default=9)
    p.add_argument("--block", type=int, default=1000)
    args = p.parse_args(argv)

    flint.ctx.prec = 80
    with open(args.out, "w") as fh:
        n = 1
        while n <= args.count:
            num = min(args.block, args.count - n + 1)
            for z in flint.acb.zeta_zeros(n, num):
                fh.write(f"{float(z.imag.mid()):.{args.digits}f}\n")
            fh.flush()
            n += num
            print(f"{n - 1}/{args.count}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
