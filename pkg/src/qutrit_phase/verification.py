"""Named verification suites behind ``qutrit-phase verify``.

Each check records the relation tested, the measured value and the bound it
is held to. A suite passes only if every check does.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from . import algebra, coherent, phase_ops, povm
from .numerics import SeededSampler, sample_amplitudes

SUITES = ("algebra", "phase", "povm", "coherent")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    relation: str
    value: float
    bound: float
    # "max": value <= bound; "min": value >= bound; "gt": value > bound
    mode: str = "max"

    @property
    def passed(self) -> bool:
        if not np.isfinite(self.value):
            return False
        if self.mode == "max":
            return self.value <= self.bound
        if self.mode == "min":
            return self.value >= self.bound
        return self.value > self.bound

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def algebra_suite(tol: float = 1e-12) -> list[Check]:
    t = algebra.derive_structure_tensors(algebra.GELLMANN)
    f_anti, d_sym = algebra.symmetry_residuals(t)
    gram = np.abs(algebra.trace_gram(algebra.GELLMANN) - 2 * np.eye(8)).max()
    s = "algebra"
    return [
        Check(s, "trace_orthogonality", "Tr(l_r l_s) = 2 delta_rs", float(gram), tol),
        Check(s, "commutation", "[l_r, l_s] = 2i f_rst l_t", float(algebra.commutation_residuals(algebra.GELLMANN, t).max()), tol),
        Check(s, "anticommutation", "{l_r, l_s} = 4/3 delta_rs 1 + 2 d_rst l_t",
              float(algebra.anticommutation_residuals(algebra.GELLMANN, t).max()), tol),
        Check(s, "jacobi", "f_abe f_ecd + f_cbe f_aed + f_dbe f_ace = 0", algebra.jacobi_residual(t), tol),
        Check(s, "f_antisymmetric", "f totally antisymmetric", f_anti, tol),
        Check(s, "d_symmetric", "d totally symmetric", d_sym, tol),
    ]


def phase_suite(tol: float = 1e-12) -> list[Check]:
    s = "phase"
    checks = []
    target = np.array([np.pi / 2, 0.0, -np.pi / 2])
    for pair in phase_ops.PAIRS:
        op = phase_ops.phase_operator(pair)
        checks += [
            Check(s, f"eigenphases_E{pair}", f"spectrum(phi_{pair}) = {{pi/2, 0, -pi/2}}",
                  float(np.abs(np.array(op.phases) - target).max()), tol),
            Check(s, f"unitary_E{pair}", f"E_{pair}^dag E_{pair} = 1", phase_ops.unitarity_residual(op.E), tol),
            Check(s, f"polar_{pair}", f"R_{pair} E_{pair} = S_{pair}", phase_ops.polar_residual(pair), tol),
        ]
    deviation, table = phase_ops.check_noncommutativity()
    checks.append(Check(s, "noncommutativity", "||E12 E23 - E13|| > 1", deviation, 1.0, "gt"))
    for key in ("[E12,R23]", "[E23,R12]", "[R23,R12]"):
        checks.append(Check(s, f"commutator {key}", f"{key} = 0", table[key], tol))
    checks.append(Check(s, "commutator [E12,E23]", "[E12,E23] != 0", table["[E12,E23]"], 0.0, "gt"))
    return checks


def povm_suite(seed: int = 0, resolution: int = 64, shifts: int = 100, tol: float = 1e-12) -> list[Check]:
    s = "povm"
    params = povm.PovmParams.symmetric(1.0)
    axes = povm.grid_axis(resolution)
    herm = rank1 = 0.0
    low = np.inf
    for p12 in axes:
        for p23 in axes:
            pt = povm.PhasePoint(p12, p23)
            d = povm.delta(pt, params)
            herm = max(herm, float(np.abs(d - d.conj().T).max()))
            low = min(low, float(np.linalg.eigvalsh(d)[0]))
            u = povm.phase_state(pt).amplitudes
            rank1 = max(rank1, float(np.linalg.norm(d - 3 * povm.PREFACTOR * np.outer(u, u.conj()))))
    norm = povm.verify_povm_axioms(params, 16).normalization
    rng = SeededSampler(seed).rng
    shift_list = rng.uniform(-4 * np.pi, 4 * np.pi, size=(shifts, 2))
    bases = [povm.PhasePoint(*p) for p in rng.uniform(0, 2 * np.pi, size=(4, 2))]
    cov = povm.verify_covariance(params, shift_list, bases)
    return [
        Check(s, "hermiticity", "Delta^dag = Delta", herm, 1e-14),
        Check(s, "positivity", f"min eig Delta >= 0 on a {resolution}^2 grid", low, -tol, "min"),
        Check(s, "normalization", "integral of Delta over both phases = 1", norm, tol),
        Check(s, "covariance", "phase shifts translate Delta", cov, tol),
        Check(s, "rank_one", "Delta = 3/(2 pi)^2 |u><u|", rank1, tol),
    ]


def coherent_suite(seed: int = 0, scheme: coherent.QuadratureScheme = coherent.QuadratureScheme(),
                   radial_nodes: int = coherent.RADIAL_POVM_NODES, labels: int = 50) -> list[Check]:
    s = "coherent"
    sampler = SeededSampler(seed)
    overlap_dev = mean_dev = additivity = 0.0
    for N in range(1, 6):
        ab = sampler.complex_normal((labels, 4))
        for a1, b1, a2, b2 in ab:
            l1, l2 = coherent.CoherentLabel(N, a1, b1), coherent.CoherentLabel(N, a2, b2)
            brute = coherent.coherent_state(l1).inner(coherent.coherent_state(l2))
            overlap_dev = max(overlap_dev, abs(coherent.overlap(l1, l2) - brute))
            closed, bf = coherent.mean_values(l1), coherent.brute_force_mean_values(l1)
            mean_dev = max(mean_dev, max(abs(getattr(closed, k) - getattr(bf, k))
                                         for k in ("n1", "n2", "n3", "s32", "s21", "s31")))
            gap = np.angle(bf.s31) - np.angle(bf.s32) - np.angle(bf.s21)
            additivity = max(additivity, abs(np.angle(np.exp(1j * gap))))
    checks = [
        Check(s, "overlap", "closed-form overlap = Fock inner product (N <= 5)", float(overlap_dev), 1e-12),
        Check(s, "mean_values", "closed-form mean values = Fock expectations (N <= 5)", float(mean_dev), 1e-12),
        Check(s, "phase_additivity", "arg<S31> = arg<S32> + arg<S21>", float(additivity), 1e-12),
        Check(s, "identity_N1", "(N+1)(N+2)/pi^2 int d mu |a,b><a,b| = 1, N = 1",
              coherent.verify_identity_resolution(1, scheme), 1e-6),
        Check(s, "identity_N2", "(N+1)(N+2)/pi^2 int d mu |a,b><a,b| = 1, N = 2",
              coherent.verify_identity_resolution(2, scheme), 1e-5),
    ]
    diag_dev = ratio_dev = 0.0
    for p12, p23 in sampler.uniform(0, 2 * np.pi, size=(8, 2)):
        rep = coherent.radial_povm_report(povm.PhasePoint(p12, p23), radial_nodes)
        diag_dev = max(diag_dev, float(np.abs(np.array(rep["diagonal"]) - 1 / (4 * np.pi**2)).max()))
        ratio_dev = max(ratio_dev, rep["ratio_deviation"])
    checks += [
        Check(s, "radial_povm_diagonal", "radially integrated POVM diagonal = 1/(4 pi^2)", diag_dev, 1e-8),
        Check(s, "radial_povm_ratio", "off-diagonal/diagonal = pi/96", ratio_dev, 1e-6),
    ]
    return checks


def run(suites, seed: int = 0, scheme: coherent.QuadratureScheme | None = None,
        radial_nodes: int | None = None, tol: float = 1e-12) -> list[Check]:
    scheme = scheme or coherent.QuadratureScheme()
    out: list[Check] = []
    for name in suites:
        if name == "algebra":
            out += algebra_suite(tol)
        elif name == "phase":
            out += phase_suite(tol)
        elif name == "povm":
            out += povm_suite(seed, tol=tol)
        elif name == "coherent":
            out += coherent_suite(seed, scheme, radial_nodes or coherent.RADIAL_POVM_NODES)
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out


def random_states(seed: int, count: int) -> np.ndarray:
    return sample_amplitudes(SeededSampler(seed), count)
