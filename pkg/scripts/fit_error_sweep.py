#!/usr/bin/env python3
"""Error-versus-degree sweep for the rational circle components.

Fits t/(1+t^2) and (1-t^2)/(1+t^2) on [0, 1] by least squares for degrees
1..12 and several index values.  The errors shrink steadily but plateau far
above machine precision: neither target lies in any of these basis spans,
so the family cannot represent conics exactly.
"""

import math

from alphabezier import INFINITY, BasisSpec, HomographyMap, fit_least_squares

TARGETS = {
    "t/(1+t^2)": lambda t: t / (1.0 + t * t),
    "(1-t^2)/(1+t^2)": lambda t: (1.0 - t * t) / (1.0 + t * t),
}


def main() -> None:
    for label, f in TARGETS.items():
        print(f"\ntarget {label}, max error on a 1024-point grid")
        header = "degree" + "".join(f"{a!s:>12}" for a in (-1.0, 2.0, 5.0, "inf"))
        print(header)
        for n in range(1, 13):
            row = [f"{n:6d}"]
            for alpha in (-1.0, 2.0, 5.0, INFINITY):
                spec = BasisSpec(n, HomographyMap(0.0, 1.0, alpha))
                err = fit_least_squares(f, spec, 256).max_error
                row.append(f"{err:12.3e}")
            print("".join(row))
        floor = min(
            fit_least_squares(f, BasisSpec(12, HomographyMap(0.0, 1.0, alpha)), 256).max_error
            for alpha in (-1.0, 2.0, 5.0, INFINITY)
        )
        print(f"best degree-12 error: {floor:.3e}"
              f"  (exact representation would reach ~{math.ulp(1.0):.0e})")


if __name__ == "__main__":
    main()
