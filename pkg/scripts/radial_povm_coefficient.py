"""Radially integrate single-qutrit coherent-state projectors and report the coefficient.

Prints, for increasing radial node counts, the diagonal entries, the
off-diagonal moduli, their ratio, and the off-diagonal radial integral with
the 6/pi^2 prefactor stripped. Closed forms (Beta integrals):

    diagonal            = 1 / (4 pi^2)
    off-diagonal        = 1 / (16 pi)
    ratio               = pi / 4
    raw off-diagonal    = pi / 96
"""
import argparse
import json

import numpy as np

from qutrit_phase.coherent import radial_povm_report
from qutrit_phase.povm import PhasePoint


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--phi12", type=float, default=0.3)
    parser.add_argument("--phi23", type=float, default=1.2)
    parser.add_argument("--json", action="store_true", help="dump the full report for the finest rule")
    args = parser.parse_args()

    pt = PhasePoint(args.phi12, args.phi23)
    print(f"{'nodes':>6} {'diag err':>10} {'ratio':>14} {'raw offdiag':>14}")
    for nodes in (16, 32, 64, 128, 256, 512):
        rep = radial_povm_report(pt, nodes)
        diag_err = np.abs(np.array(rep["diagonal"]) - 1 / (4 * np.pi**2)).max()
        print(f"{nodes:6d} {diag_err:10.2e} {rep['ratio']:14.10f} {rep['raw_offdiagonal_integral']:14.10f}")
    print(f"pi/4  = {np.pi / 4:.10f}")
    print(f"pi/96 = {np.pi / 96:.10f}")
    if args.json:
        print(json.dumps(rep, indent=2))


if __name__ == "__main__":
    main()
