"""How fast the simple splines approach the interpolation polynomial as r grows.

Prints sup|St - T_N| over odd r and the average-power gap PSt - PT_N over
r = 1..R for all four grid pairs, with the N = 9 example data.
"""
import argparse

import numpy as np

from trigspline import (
    EXAMPLE_DATA,
    build_spline,
    dft_coefficients,
    eval_trig_polynomial,
    make_config,
    make_grid,
    parseval_power,
    sample_values,
    trig_polynomial_power,
)

GRIDS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-max", type=int, default=41)
    ap.add_argument("--power-r-max", type=int, default=10)
    args = ap.parse_args()
    t = 2 * np.pi * np.arange(2048) / 2048
    for I1, I2 in GRIDS:
        s = sample_values(make_grid(I2, 9), EXAMPLE_DATA)
        co = dft_coefficients(s)
        T = eval_trig_polynomial(co, t)
        PT = trig_polynomial_power(co)
        print(f"St^({I1},{I2})   PT_N = {PT:.10f}")
        prev = None
        for r in range(1, args.r_max + 1, 2):
            d = float(np.max(np.abs(build_spline(s, make_config(I1, I2, r))(t) - T)))
            ratio = "" if prev is None else f"  ratio {d / prev:.4f}"
            print(f"  r={r:2d}  sup|St - T_N| = {d:.3e}{ratio}")
            prev = d
        for r in range(1, args.power_r_max + 1):
            P = parseval_power(build_spline(s, make_config(I1, I2, r))).total
            print(f"  r={r:2d}  PSt - PT_N = {P - PT:+.6f}")


if __name__ == "__main__":
    main()
