#!/usr/bin/env python3
"""Sample a monogenic plane wave on a regular grid and emit CSV.

Rows hold the five coordinates followed by the 32 blade coefficients,
one sample per line, suitable for plotting or diffing between runs.
"""

import argparse
import csv
import sys

import numpy as np

from ga41 import MomentumVector, plane_wave
from ga41.algebra import blade_name
from ga41.monogenic import vector_derivative

N_BLADES = 32


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        description="dump plane-wave samples on a grid as CSV"
    )
    parser.add_argument("p1", type=float, help="momentum component 1")
    parser.add_argument("p2", type=float, help="momentum component 2")
    parser.add_argument("p3", type=float, help="momentum component 3")
    parser.add_argument("mass", type=float, help="harmonic mass, nonnegative")
    parser.add_argument("--points", type=int, default=9,
                        help="grid points per varied axis (default 9)")
    parser.add_argument("--extent", type=float, default=1.0,
                        help="half-width of the grid (default 1.0)")
    parser.add_argument("--axes", default="0,1",
                        help="two comma-separated axes to vary (default 0,1)")
    parser.add_argument("--negative-energy", action="store_true",
                        help="use the negative-energy branch")
    parser.add_argument("--residuals", action="store_true",
                        help="append the first-order residual per sample")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        k = MomentumVector.from_mass_momentum(
            (args.p1, args.p2, args.p3), args.mass,
            negative_energy=args.negative_energy,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    axes = tuple(int(a) for a in args.axes.split(","))
    if len(axes) != 2 or not all(0 <= a <= 4 for a in axes):
        print("error: --axes needs two indices in 0..4", file=sys.stderr)
        return 2
    wave = plane_wave(k)
    ticks = np.linspace(-args.extent, args.extent, args.points)

    writer = csv.writer(sys.stdout)
    header = [f"x{a}" for a in range(5)] + [blade_name(m) for m in range(N_BLADES)]
    if args.residuals:
        header.append("residual")
    writer.writerow(header)
    for u in ticks:
        for v in ticks:
            x = np.zeros(5)
            x[axes[0]] = u
            x[axes[1]] = v
            value = wave(x)
            row = [f"{c:.12g}" for c in x] + [f"{c:.12g}" for c in value.coeffs]
            if args.residuals:
                row.append(f"{vector_derivative(wave, x).max_abs():.3e}")
            writer.writerow(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
