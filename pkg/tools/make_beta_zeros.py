"""Write ordinates of the zeros of L(s, chi_4) on the critical line using mpmath.

Test fixture generator; mpmath is not a runtime dependency of the package.
The Hardy-type function exp(i theta(t)) L(1/2 + it, chi_4) is real, so zeros
are bracketed by sign changes on a fine grid and refined by bisection.

    python tools/make_beta_zeros.py 1000 tests/data/beta_zeros.txt
"""
from __future__ import annotations

import argparse

import mpmath as mp

CHI4 = [0, 1, 0, -1]


def hardy(t):
    s = mp.mpf(0.5) + 1j * t
    theta = mp.im(mp.loggamma((s + 1) / 2)) + t / 2 * mp.log(4 / mp.pi)
    return mp.re(mp.exp(1j * theta) * mp.dirichlet(s, CHI4))


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("T", type=float, help="largest ordinate")
    p.add_argument("out")
    p.add_argument("--step", type=float, default=0.05)
    args = p.parse_args(argv)
    mp.mp.dps = 20
    zeros = []
    t, f = mp.mpf(1), hardy(1)
    while t < args.T:
        t2 = t + args.step
        f2 = hardy(t2)
        if f * f2 < 0:
            zeros.append(mp.findroot(hardy, (t, t2), solver="anderson"))
        t, f = t2, f2
    with open(args.out, "w") as fh:
        fh.write(f"# zeros of L(s, chi_4): {len(zeros)} ordinates below {args.T}\n")
        for z in zeros:
            fh.write(f"{float(z):.12f}\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
