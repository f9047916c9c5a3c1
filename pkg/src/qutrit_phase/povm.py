"""Covariant two-phase POVM for a qutrit.

Delta(phi12, phi23) = (2 pi)^-2 {1 + [g12 e^{i(2 phi12 - phi23)} |2><1|
    + g23 e^{i(2 phi23 - phi12)} |3><2| + g13 e^{i(phi12 + phi23)} |3><1| + h.c.]}
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import SingularDesign
from .numerics import tree_sum, trapezoid_periodic
from .phase_ops import inversion
from .states import PureState, as_density

TWO_PI = 2 * np.pi
PREFACTOR = 1 / TWO_PI**2
DEFAULT_RESOLUTION = 16
MAX_CONDITION = 1e8

DEFAULT_RECONSTRUCTION_POINTS = (
    (0.0, 0.0),
    (np.pi / 2, 0.0),
    (0.0, np.pi / 2),
    (np.pi, 0.0),
    (0.0, np.pi),
    (np.pi / 2, np.pi / 2),
)


@dataclass(frozen=True)
class PovmParams:
    gamma12: float = 1.0
    gamma23: float = 1.0
    gamma13: float = 1.0

    def __post_init__(self):
        for name in ("gamma12", "gamma23", "gamma13"):
            g = float(getattr(self, name))
            if not 0.0 <= g <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {g}")
            object.__setattr__(self, name, g)

    @classmethod
    def symmetric(cls, gamma: float = 1.0) -> "PovmParams":
        return cls(gamma, gamma, gamma)


@dataclass(frozen=True)
class PhasePoint:
    """(phi12, phi23), stored reduced to [0, 2 pi)."""

    phi12: float
    phi23: float

    def __post_init__(self):
        for name in ("phi12", "phi23"):
            v = float(getattr(self, name)) % TWO_PI
            # x % 2pi can round up to exactly 2pi for tiny negative x
            object.__setattr__(self, name, 0.0 if v >= TWO_PI else v)


def exponents(phi12, phi23):
    """Phases multiplying |2><1|, |3><2| and |3><1|."""
    return 2 * phi12 - phi23, 2 * phi23 - phi12, phi12 + phi23


def delta(point: PhasePoint, params: PovmParams = PovmParams()) -> np.ndarray:
    a, b, c = exponents(point.phi12, point.phi23)
    low = np.zeros((3, 3), dtype=complex)
    low[1, 0] = params.gamma12 * np.exp(1j * a)
    low[2, 1] = params.gamma23 * np.exp(1j * b)
    low[2, 0] = params.gamma13 * np.exp(1j * c)
    return PREFACTOR * (np.eye(3) + low + low.conj().T)


def _density_values(rho: np.ndarray, phi12, phi23, params: PovmParams):
    a, b, c = exponents(np.asarray(phi12, float), np.asarray(phi23, float))
    cross = (
        params.gamma12 * rho[0, 1] * np.exp(1j * a)
        + params.gamma23 * rho[1, 2] * np.exp(1j * b)
        + params.gamma13 * rho[0, 2] * np.exp(1j * c)
    )
    return PREFACTOR * (1 + 2 * cross.real)


def probability_density(rho, point: PhasePoint, params: PovmParams = PovmParams()) -> float:
    """P = Tr(rho Delta)."""
    m = as_density(rho).matrix
    return float(_density_values(m, point.phi12, point.phi23, params))


def grid_axis(resolution: int) -> np.ndarray:
    """Left endpoints of ``resolution`` equal cells on [0, 2 pi)."""
    return TWO_PI * np.arange(resolution) / resolution


@dataclass(frozen=True)
class PhaseGrid:
    """P sampled at left cell endpoints; ``values[i, j]`` is at (phi12_i, phi23_j)."""

    resolution: int
    values: np.ndarray

    @property
    def axis(self) -> np.ndarray:
        return grid_axis(self.resolution)

    @property
    def cell_area(self) -> float:
        return (TWO_PI / self.resolution) ** 2

    def riemann_sum(self) -> float:
        return float(tree_sum(self.values.reshape(-1)) * self.cell_area)

    def argmax(self) -> PhasePoint:
        i, j = np.unravel_index(np.argmax(self.values), self.values.shape)
        return PhasePoint(self.axis[i], self.axis[j])

    def to_csv(self, stream=None) -> str | None:
        """Header ``phi12,phi23,P``; phi12 is the outer loop; 17 significant digits."""
        own = stream is None
        out = io.StringIO() if own else stream
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["phi12", "phi23", "P"])
        ax = self.axis
        for i, p12 in enumerate(ax):
            for j, p23 in enumerate(ax):
                writer.writerow([f"{p12:.17g}", f"{p23:.17g}", f"{self.values[i, j]:.17g}"])
        return out.getvalue() if own else None

    @classmethod
    def from_csv(cls, text: str) -> "PhaseGrid":
        rows = list(csv.reader(io.StringIO(text)))
        if rows[0] != ["phi12", "phi23", "P"]:
            raise ValueError(f"unexpected CSV header {rows[0]}")
        vals = np.array([float(r[2]) for r in rows[1:]])
        res = int(round(np.sqrt(vals.size)))
        if res * res != vals.size:
            raise ValueError(f"{vals.size} rows do not form a square grid")
        return cls(res, vals.reshape(res, res))


def density_grid(rho, resolution: int = DEFAULT_RESOLUTION, params: PovmParams = PovmParams(),
                 workers: int | None = None) -> PhaseGrid:
    """Evaluate P on the ``resolution x resolution`` grid.

    With ``workers`` set, rows are computed on a thread pool; every cell is
    computed independently, so the result is identical to the sequential one.
    """
    m = as_density(rho).matrix
    ax = grid_axis(resolution)

    def row(i):
        return _density_values(m, ax[i], ax, params)

    if workers:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(resolution)))
    else:
        rows = [row(i) for i in range(resolution)]
    return PhaseGrid(resolution, np.array(rows))


@dataclass(frozen=True)
class PovmAxiomReport:
    hermiticity: float
    min_eigenvalue: float
    normalization: float

    def passed(self, tol: float = 1e-12) -> bool:
        return self.hermiticity <= tol and self.min_eigenvalue >= -tol and self.normalization <= tol


def verify_povm_axioms(params: PovmParams = PovmParams(), grid_resolution: int = DEFAULT_RESOLUTION) -> PovmAxiomReport:
    """Hermiticity, positivity over the grid, and trapezoid-rule normalization."""
    if grid_resolution < 8:
        raise ValueError("grid_resolution must be at least 8")
    rule = trapezoid_periodic(grid_resolution)
    x, w = rule.points()
    herm, low = 0.0, np.inf
    terms = []
    for p12, w12 in zip(x, w):
        for p23, w23 in zip(x, w):
            d = delta(PhasePoint(p12, p23), params)
            herm = max(herm, float(np.abs(d - d.conj().T).max()))
            low = min(low, float(np.linalg.eigvalsh(d)[0]))
            terms.append(w12 * w23 * d)
    total = tree_sum(np.array(terms))
    norm_dev = float(np.linalg.norm(total - np.eye(3)))
    return PovmAxiomReport(herm, low, norm_dev)


def phase_shift(phi1: float, phi2: float) -> np.ndarray:
    """exp(2i phi1 S^z_12) exp(2i phi2 S^z_23)."""
    return expm(2j * phi1 * inversion(12)) @ expm(2j * phi2 * inversion(23))


def verify_covariance(params: PovmParams, shifts, base_points=None) -> float:
    """Largest Frobenius deviation from the two covariance relations.

    Each shift ``(s1, s2)`` is checked separately along phi12 (by s1) and
    along phi23 (by s2) at every base point.
    """
    if base_points is None:
        base_points = [PhasePoint(0.3, 1.1), PhasePoint(2.0, 4.5), PhasePoint(5.9, 0.2)]
    worst = 0.0
    for s1, s2 in shifts:
        u1 = expm(2j * s1 * inversion(12))
        u2 = expm(2j * s2 * inversion(23))
        for p in base_points:
            d = delta(p, params)
            lhs1 = u1 @ d @ u1.conj().T
            rhs1 = delta(PhasePoint(p.phi12 + s1, p.phi23), params)
            lhs2 = u2 @ d @ u2.conj().T
            rhs2 = delta(PhasePoint(p.phi12, p.phi23 + s2), params)
            worst = max(worst, float(np.linalg.norm(lhs1 - rhs1)), float(np.linalg.norm(lhs2 - rhs2)))
    return worst


def phase_state(point: PhasePoint) -> PureState:
    """Unit vector u with Delta(point; gamma = 1) = 3/(2 pi)^2 |u><u|."""
    a, _, c = exponents(point.phi12, point.phi23)
    return PureState(np.array([1, np.exp(1j * a), np.exp(1j * c)]) / np.sqrt(3))


def design_matrix(points) -> np.ndarray:
    """Rows map (Re r12, Im r12, Re r23, Im r23, Re r13, Im r13) to (2 pi)^2 P - 1."""
    rows = []
    for p12, p23 in points:
        row = []
        for ang in exponents(p12, p23):
            row += [2 * np.cos(ang), -2 * np.sin(ang)]
        rows.append(row)
    return np.array(rows)


@dataclass(frozen=True)
class Reconstruction:
    rho12: complex
    rho23: complex
    rho13: complex
    condition_number: float


def reconstruct_offdiagonals(samples, max_condition: float = MAX_CONDITION) -> Reconstruction:
    """Recover rho12, rho23, rho13 from six ``(PhasePoint or (phi12, phi23), P)`` samples (gamma = 1)."""
    samples = list(samples)
    if len(samples) != 6:
        raise ValueError(f"exactly six samples are required, got {len(samples)}")
    points, values = [], []
    for pt, val in samples:
        if isinstance(pt, PhasePoint):
            pt = (pt.phi12, pt.phi23)
        points.append((float(pt[0]), float(pt[1])))
        values.append(float(val))
    A = design_matrix(points)
    cond = float(np.linalg.cond(A))
    if not np.isfinite(cond) or cond >= max_condition:
        raise SingularDesign(f"design matrix condition number {cond:.3g} exceeds {max_condition:.3g}")
    rhs = TWO_PI**2 * np.array(values) - 1
    x = np.linalg.solve(A, rhs)
    return Reconstruction(complex(x[0], x[1]), complex(x[2], x[3]), complex(x[4], x[5]), cond)


def sample_density(rho, points=DEFAULT_RECONSTRUCTION_POINTS, params: PovmParams = PovmParams()):
    """``[(PhasePoint, P), ...]`` at the given points."""
    return [(PhasePoint(*p), probability_density(rho, PhasePoint(*p), params)) for p in points]


def min_density_over_grid(rho, resolution: int, params: PovmParams) -> float:
    return float(density_grid(rho, resolution, params).values.min())

