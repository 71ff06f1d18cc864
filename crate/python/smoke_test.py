#!/usr/bin/env python3
"""Smoke test for the splitmerge_py extension module.

Build and stage the module first:

    cargo build --release -p splitmerge-py
    cp target/release/libsplitmerge_py.so python/splitmerge_py.so

then run `python3 python/smoke_test.py`.
"""

import math
import sys
from fractions import Fraction

sys.path.insert(0, __file__.rsplit("/", 1)[0])

import splitmerge_py as sm


def check(name, condition, detail=""):
    status = "ok" if condition else "FAIL"
    print(f"{status} - {name}" + (f" ({detail})" if detail else ""))
    return condition


def frac(s):
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def main():
    ok = True

    x = sm.MassPartition([0.2, 0.5, 0.3])
    ok &= check("constructor sorts and normalizes", x.parts() == [0.5, 0.3, 0.2])
    ok &= check("sum of squares", abs(x.sum_squares() - 0.38) < 1e-12)

    start = sm.MassPartition.point_mass()
    y = start.trajectory(8, seed=1, stream=0)
    ok &= check(
        "trajectory stays on the simplex",
        abs(sum(y.parts()) - 1.0) <= 1e-12 and len(y) <= 9,
        f"parts={len(y)}",
    )
    y2 = start.trajectory(8, seed=1, stream=0)
    ok &= check("trajectory is reproducible", y.parts() == y2.parts())

    pd = sm.pd1(seed=2, stream=0)
    parts = pd.parts()
    ok &= check(
        "stick-breaking sample is sorted with unit sum",
        all(a >= b for a, b in zip(parts, parts[1:])) and abs(sum(parts) - 1.0) <= 1e-12,
    )

    lengths = sm.haar_cycle_lengths(1000, seed=3, stream=0)
    ok &= check("haar cycle lengths partition the degree", sum(lengths) == 1000)

    lengths = sm.insertion_process_cycle_lengths(sm.MassPartition([0.5, 0.5]), 1000, 4, 0)
    ok &= check("insertion process has at most two cycles", 1 <= len(lengths) <= 2)

    z = sm.transposition_shift(start, 1000, seed=5, stream=0)
    ok &= check(
        "transposition shift splits the full cycle",
        len(z) == 2 and abs(sum(z.parts()) - 1.0) <= 1e-12,
        f"largest={z.largest():.4f}",
    )

    coeffs = sm.exact_coefficients(2, 3)
    ok &= check(
        "exact coefficients at n=2, q=3",
        coeffs == {1: "-1/5", 2: "1/2"},
        str(coeffs),
    )
    ok &= check(
        "coefficient magnitudes follow 1/(q+2)",
        all(abs(frac(sm.exact_coefficients(2, q)[1])) == Fraction(1, q + 2) for q in range(8)),
    )

    # Transposition value of the projected measure: 1/2 + 1/(q+2).
    value = frac(sm.chain_measure_value(2, 1, [2]))
    ok &= check("chain measure value at the transposition", value == Fraction(5, 6))

    # Monte Carlo moment against the exact engine at q=4: E[sum of squares]
    # is 1/2 + 1/6 = 2/3 within a few standard errors.
    replicas = 20000
    mean = (
        sum(start.trajectory(4, seed=6, stream=r).sum_squares() for r in range(replicas))
        / replicas
    )
    exact = 0.5 + 1.0 / 6.0
    ok &= check(
        "Monte Carlo matches the exact transposition moment",
        abs(mean - exact) < 0.005,
        f"mean={mean:.4f} exact={exact:.4f}",
    )

    if not ok:
        sys.exit(1)
    print("smoke test passed")


if __name__ == "__main__":
    main()
