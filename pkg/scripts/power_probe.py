"""Average power with gamma = eta = (.5, 10, 1) against the simple odd-degree splines.

The reference is St^(0,0) with unit vectors at r = 1 and r = 3 (the broken
line and the cubic spline through the N = 9 example data).
"""
from trigspline import EXAMPLE_DATA, build_spline, make_config, make_grid, parseval_power, sample_values

PROBE = (0.5, 10.0, 1.0)


def power(I1, I2, r, vec):
    s = sample_values(make_grid(I2, 9), EXAMPLE_DATA)
    return parseval_power(build_spline(s, make_config(I1, I2, r, vec, vec))).total


def main():
    ref = {r: power(0, 0, r, (1, 1, 1)) for r in (1, 3)}
    print(f"simple splines: linear {ref[1]:.6f}, cubic {ref[3]:.6f}")
    for I1 in (0, 1):
        for I2 in (0, 1):
            row = []
            for r in range(1, 6):
                P = power(I1, I2, r, PROBE)
                flag = "<" if P < min(ref.values()) else " "
                row.append(f"r={r}: {P:9.5f}{flag}")
            print(f"St^({I1},{I2})  " + "  ".join(row))
    print("'<' marks power below both simple odd-degree splines")


if __name__ == "__main__":
    main()
