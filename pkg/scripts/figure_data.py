"""Write dense curve data for the N = 9 worked example, one CSV per panel.

Panels 1-4 use unit shape vectors with r in {0, 1, 3}; panels 5-8 use the
irregular vectors with r in {1, 2, 3}. Columns: t, then one column per r.
"""
import argparse
import warnings
from pathlib import Path

import numpy as np

from trigspline import (
    EXAMPLE_DATA,
    EXAMPLE_ETA,
    EXAMPLE_GAMMA,
    TruncationWarning,
    build_spline,
    make_config,
    make_grid,
    sample_values,
)

GRIDS = [(0, 0), (0, 1), (1, 0), (1, 1)]
PANELS = [(i + 1, g, (1, 1, 1), (1, 1, 1), (0, 1, 3)) for i, g in enumerate(GRIDS)] + [
    (i + 5, g, EXAMPLE_GAMMA, EXAMPLE_ETA, (1, 2, 3)) for i, g in enumerate(GRIDS)
]


def panel(grid, gamma, eta, rs, t):
    I1, I2 = grid
    s = sample_values(make_grid(I2, 9), EXAMPLE_DATA)
    cols = []
    for r in rs:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", TruncationWarning)
            cols.append(build_spline(s, make_config(I1, I2, r, gamma, eta))(t))
    return np.column_stack([t, *cols])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--points", type=int, default=1000)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t = 2 * np.pi * np.arange(args.points) / args.points
    for no, grid, gamma, eta, rs in PANELS:
        data = panel(grid, gamma, eta, rs, t)
        path = out / f"panel{no}_St{grid[0]}{grid[1]}.csv"
        header = "t," + ",".join(f"r{r}" for r in rs)
        np.savetxt(path, data, delimiter=",", header=header, comments="", fmt="%.17g")
        print(f"{path}: range [{data[:, 1:].min():.3f}, {data[:, 1:].max():.3f}]")


if __name__ == "__main__":
    main()
