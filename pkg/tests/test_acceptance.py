"""Acceptance criteria, one test per criterion.

Each test measures every quantity the criterion names, records one
PASS/FAIL line (shown in the terminal summary), then asserts.
"""
import time

import numpy as np

from qutrit_phase import algebra, coherent, phase_ops, povm
from qutrit_phase.numerics import SeededSampler, sample_amplitudes
from qutrit_phase.states import PureState, is_pure_bloch, opening_angle

from conftest import ACCEPTANCE_LINES

SEED = 20240601
TWO_PI_3 = 2 * np.pi / 3


class Criterion:
    def __init__(self, label, budget_s):
        self.label = label
        self.budget = budget_s
        self.checks = []
        self.start = time.perf_counter()

    def check(self, name, value, bound, op="<"):
        ok = {"<": value < bound, "<=": value <= bound, ">": value > bound, ">=": value >= bound}[op]
        self.checks.append((name, value, op, bound, bool(ok)))

    def finish(self):
        elapsed = time.perf_counter() - self.start
        self.check("runtime [s]", elapsed, self.budget)
        failed = [c for c in self.checks if not c[4]]
        status = "PASS" if not failed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] {self.label}")
        for name, value, op, bound, ok in self.checks:
            ACCEPTANCE_LINES.append(f"    {'ok ' if ok else 'BAD'} {name}: {value:.4g} {op} {bound:.4g}")
        print(f"[{status}] {self.label}")
        assert not failed, "; ".join(f"{n} = {v:.6g} (need {o} {b:.3g})" for n, v, o, b, _ in failed)


def test_c1_algebra():
    c = Criterion("C1 su(3) commutation/anticommutation and Jacobi", 1.0)
    t = algebra.derive_structure_tensors(algebra.GELLMANN)
    c.check("max commutation residual (64 pairs)", algebra.commutation_residuals(algebra.GELLMANN, t).max(), 1e-12)
    c.check("max anticommutation residual (64 pairs)", algebra.anticommutation_residuals(algebra.GELLMANN, t).max(), 1e-12)
    c.check("Jacobi residual", algebra.jacobi_residual(t), 1e-12)
    c.finish()


def test_c2_bloch_geometry():
    c = Criterion("C2 Bloch-sphere geometry over 10^4 Haar states", 10.0)
    sampler = SeededSampler(SEED)
    states = [PureState(a) for a in sample_amplitudes(sampler, 10_000)]
    norm_dev = star_dev = 0.0
    blochs = []
    for psi in states:
        n = psi.bloch()
        blochs.append(n)
        norm_dev = max(norm_dev, abs(n.n @ n.n - 1))
        star_dev = max(star_dev, float(np.abs(algebra.star(n.n, n.n) - n.n).max()))
    c.check("max |n.n - 1|", norm_dev, 1e-10, "<=")
    c.check("max |n*n - n|", star_dev, 1e-10, "<=")

    others = sample_amplitudes(sampler, 10_000)
    ortho_dev = 0.0
    for psi, b in zip(states, others):
        a = psi.amplitudes
        b = b - np.vdot(a, b) * a
        perp = PureState.normalized(b)
        ortho_dev = max(ortho_dev, abs(opening_angle(psi.bloch(), perp.bloch()) - TWO_PI_3))
    c.check("max |angle - 2pi/3| over orthogonal pairs", ortho_dev, 1e-10, "<=")

    worst = max(opening_angle(n1, n2) for n1, n2 in zip(blochs, blochs[1:] + blochs[:1]))
    c.check("max angle over random pairs", worst, TWO_PI_3 + 1e-10, "<=")
    c.finish()


def test_c3_phase_operators():
    c = Criterion("C3 phase operators: spectra, polar residuals, noncommutativity", 1.0)
    target = np.array([np.pi / 2, 0.0, -np.pi / 2])
    for pair in phase_ops.PAIRS:
        op = phase_ops.phase_operator(pair)
        c.check(f"E{pair} eigenphase deviation", float(np.abs(np.array(op.phases) - target).max()), 1e-12, "<=")
        c.check(f"||R{pair} E{pair} - S{pair}||", phase_ops.polar_residual(pair), 1e-12)
    deviation, table = phase_ops.check_noncommutativity()
    c.check("||E12 E23 - E13||", deviation, 1.0, ">")
    for key in ("[E12,R23]", "[E23,R12]", "[R23,R12]"):
        c.check(f"||{key}||", table[key], 1e-12, "<=")
    c.finish()


def test_c4_povm():
    c = Criterion("C4 covariant POVM at gamma = 1", 10.0)
    params = povm.PovmParams.symmetric(1.0)
    axis = povm.grid_axis(64)
    herm = rank1 = 0.0
    low = np.inf
    for p12 in axis:
        for p23 in axis:
            pt = povm.PhasePoint(p12, p23)
            d = povm.delta(pt, params)
            herm = max(herm, float(np.abs(d - d.conj().T).max()))
            low = min(low, float(np.linalg.eigvalsh(d)[0]))
            u = povm.phase_state(pt).amplitudes
            rank1 = max(rank1, float(np.linalg.norm(d - 3 / (2 * np.pi) ** 2 * np.outer(u, u.conj()))))
    c.check("Hermiticity deviation", herm, 1e-14)
    c.check("min eigenvalue on 64^2 grid", low, -1e-12, ">=")
    c.check("normalization ||int Delta - 1||", povm.verify_povm_axioms(params, 16).normalization, 1e-12)
    rng = SeededSampler(SEED).rng
    shifts = rng.uniform(-4 * np.pi, 4 * np.pi, (100, 2))
    bases = [povm.PhasePoint(*p) for p in rng.uniform(0, 2 * np.pi, (3, 2))]
    c.check("covariance deviation (100 shifts)", povm.verify_covariance(params, shifts, bases), 1e-12)
    c.check("rank-one deviation", rank1, 1e-12)
    c.finish()


def test_c5_six_point_reconstruction():
    c = Criterion("C5 six-point reconstruction of 10^3 states", 5.0)
    worst = 0.0
    for a in sample_amplitudes(SeededSampler(SEED + 1), 1000):
        m = np.outer(a, a.conj())
        rho = PureState(a).density()
        rec = povm.reconstruct_offdiagonals(povm.sample_density(rho))
        worst = max(worst, abs(rec.rho12 - m[0, 1]), abs(rec.rho23 - m[1, 2]), abs(rec.rho13 - m[0, 2]))
    c.check("max off-diagonal error", worst, 1e-10, "<=")
    c.finish()


def test_c6_coherent_states():
    c = Criterion("C6 coherent-state closed forms vs Fock brute force (N <= 5)", 30.0)
    sampler = SeededSampler(SEED + 2)
    ov = mv = add = 0.0
    for N in range(1, 6):
        for a1, b1, a2, b2 in sampler.complex_normal((1000, 4)):
            l1, l2 = coherent.CoherentLabel(N, a1, b1), coherent.CoherentLabel(N, a2, b2)
            ov = max(ov, abs(coherent.overlap(l1, l2) - coherent.coherent_state(l1).inner(coherent.coherent_state(l2))))
            closed, brute = coherent.mean_values(l1), coherent.brute_force_mean_values(l1)
            mv = max(mv, max(abs(getattr(closed, k) - getattr(brute, k)) for k in ("n1", "n2", "n3", "s32", "s21", "s31")))
            gap = np.angle(brute.s31) - np.angle(brute.s32) - np.angle(brute.s21)
            add = max(add, abs(np.angle(np.exp(1j * gap))))
    c.check("overlap: closed form vs Fock inner product", ov, 1e-12, "<=")
    c.check("mean values: closed form vs Fock expectation", mv, 1e-12, "<=")
    c.check("phase additivity arg<S31> - arg<S32> - arg<S21>", add, 1e-12, "<=")
    c.finish()


def test_c7_identity_resolution():
    c = Criterion("C7 resolution of identity", 60.0)
    c.check("deviation N=1 (64 radial x 16 phase)", coherent.verify_identity_resolution(1), 1e-6)
    c.check("deviation N=2 (64 radial x 16 phase)", coherent.verify_identity_resolution(2), 1e-5)
    for N in (1, 2):
        ladder = [coherent.verify_identity_resolution(N, coherent.QuadratureScheme(r, 16)) for r in (16, 32, 64)]
        c.check(f"N={N} ladder 16->32 decrease", ladder[0] - ladder[1], 0.0, ">")
        c.check(f"N={N} ladder 32->64 decrease", ladder[1] - ladder[2], 0.0, ">")
    c.finish()


def test_c8_radial_povm_coefficient():
    c = Criterion("C8 radially integrated coherent-state POVM vs pi/96", 60.0)
    diag_dev = ratio_dev = 0.0
    ratios = []
    for p12, p23 in SeededSampler(SEED + 3).uniform(0, 2 * np.pi, (8, 2)):
        rep = coherent.radial_povm_report(povm.PhasePoint(p12, p23))
        diag_dev = max(diag_dev, float(np.abs(np.array(rep["diagonal"]) - 1 / (4 * np.pi**2)).max()))
        ratio_dev = max(ratio_dev, abs(rep["ratio"] - np.pi / 96))
        ratios.append(rep["ratio"])
    c.check("max |diagonal - 1/(4 pi^2)|", diag_dev, 1e-8, "<=")
    c.check(f"max |ratio - pi/96| (measured ratio {np.mean(ratios):.10f})", ratio_dev, 1e-6, "<=")
    c.finish()
