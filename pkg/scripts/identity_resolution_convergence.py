"""Deviation of the coherent-state resolution of identity versus quadrature size."""
import argparse
import time

from qutrit_phase.coherent import QuadratureScheme, verify_identity_resolution


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--phase-nodes", type=int, default=16)
    args = parser.parse_args()

    ladder = (8, 16, 32, 64, 128)
    print("N  " + "  ".join(f"R={r:<8d}" for r in ladder))
    for N in range(1, args.max_n + 1):
        start = time.perf_counter()
        devs = [verify_identity_resolution(N, QuadratureScheme(r, args.phase_nodes)) for r in ladder]
        print(f"{N}  " + "  ".join(f"{d:10.3e}" for d in devs) + f"   ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
