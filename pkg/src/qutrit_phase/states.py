"""Pure and mixed qutrit states and their generalized Poincare (Bloch) vectors."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import GELLMANN, SQRT3, star
from .errors import NotAState, NotPure

TWO_PI = 2 * np.pi
NORM_TOL = 1e-12
PSD_TOL = 1e-10
PURITY_TOL = 1e-8
# amplitudes below this are treated as zero when fixing the gauge
GAUGE_ZERO = 1e-12


def canonical_gauge(amps: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the first nonzero amplitude is real and >= 0.

    Works on a single vector ``(3,)`` or a stack ``(..., 3)``.
    """
    amps = np.asarray(amps, dtype=complex)
    nonzero = np.abs(amps) > GAUGE_ZERO
    first = np.argmax(nonzero, axis=-1)
    lead = np.take_along_axis(amps, first[..., None], axis=-1)
    mag = np.abs(lead)
    phase = np.where(mag > 0, lead / np.where(mag > 0, mag, 1), 1)
    out = amps * np.conj(phase)
    idx = first[..., None]
    np.put_along_axis(out, idx, np.abs(np.take_along_axis(out, idx, axis=-1)), axis=-1)
    return out


@dataclass(frozen=True)
class PureState:
    """Normalized qutrit vector on (|1>, |2>, |3>) in canonical gauge."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if a.shape != (3,):
            raise NotAState(f"a qutrit needs 3 amplitudes, got {a.shape[0]}")
        norm = np.linalg.norm(a)
        if abs(norm - 1) > NORM_TOL:
            raise NotAState(f"amplitudes have norm {norm!r}; use PureState.normalized for raw vectors")
        a = canonical_gauge(a)
        a.flags.writeable = False
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def normalized(cls, amps) -> "PureState":
        a = np.asarray(amps, dtype=complex)
        norm = np.linalg.norm(a)
        if norm == 0:
            raise NotAState("the zero vector is not a state")
        return cls(a / norm)

    @classmethod
    def basis(cls, level: int) -> "PureState":
        """|level> for level in 1, 2, 3."""
        a = np.zeros(3, complex)
        a[level - 1] = 1
        return cls(a)

    @classmethod
    def from_density(cls, rho: "DensityMatrix", tol: float = PURITY_TOL) -> "PureState":
        w, v = np.linalg.eigh(rho.matrix)
        if abs(w[-1] - 1) > tol:
            raise NotPure(f"largest eigenvalue {w[-1]:.6g} != 1, state is mixed")
        return cls.normalized(v[:, -1])

    def density(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def bloch(self) -> "Bloch8":
        return bloch_from_density(self.density())

    def to_angles(self) -> tuple[float, float, float, float]:
        """``(xi, theta, phi12, phi13)`` reproducing this state after gauging.

        Phases are in [0, 2 pi); undefined phases (zero amplitudes) are 0.
        """
        c1, c2, c3 = self.amplitudes
        xi = 2 * np.arccos(np.clip(abs(c3), 0.0, 1.0))
        theta = 2 * np.arctan2(abs(c2), abs(c1))
        phi12 = phi13 = 0.0
        if abs(c1) > GAUGE_ZERO:
            if abs(c2) > GAUGE_ZERO:
                phi12 = np.angle(c2 * np.conj(c1))
            if abs(c3) > GAUGE_ZERO:
                phi13 = np.angle(c3 * np.conj(c1))
        elif abs(c2) > GAUGE_ZERO and abs(c3) > GAUGE_ZERO:
            phi13 = np.angle(c3 * np.conj(c2))
        return float(xi), float(theta), float(phi12 % TWO_PI), float(phi13 % TWO_PI)

    def inner(self, other: "PureState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def pure_from_angles(xi: float, theta: float, phi12: float, phi13: float) -> PureState:
    """sin(xi/2)cos(theta/2)|1> + e^{i phi12} sin(xi/2)sin(theta/2)|2> + e^{i phi13} cos(xi/2)|3>."""
    xi, theta, phi12, phi13 = (float(x) % TWO_PI for x in (xi, theta, phi12, phi13))
    amps = np.array(
        [
            np.sin(xi / 2) * np.cos(theta / 2),
            np.exp(1j * phi12) * np.sin(xi / 2) * np.sin(theta / 2),
            np.exp(1j * phi13) * np.cos(xi / 2),
        ]
    )
    return PureState(amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite 3x3 matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (3, 3):
            raise NotAState(f"density matrix must be 3x3, got {m.shape}")
        herm = np.abs(m - m.conj().T).max()
        if herm > NORM_TOL:
            raise NotAState(f"matrix is not Hermitian (deviation {herm:.3g})")
        tr = np.trace(m).real
        if abs(tr - 1) > NORM_TOL:
            raise NotAState(f"trace is {tr!r}, expected 1")
        low = np.linalg.eigvalsh(m)[0]
        if low < -PSD_TOL:
            raise NotAState(f"smallest eigenvalue {low:.6g} is negative")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @classmethod
    def maximally_mixed(cls) -> "DensityMatrix":
        return cls(np.eye(3) / 3)

    def element(self, i: int, j: int) -> complex:
        """<i|rho|j> with 1-based levels."""
        return complex(self.matrix[i - 1, j - 1])

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


@dataclass(frozen=True)
class Bloch8:
    """The 8 real coefficients of rho = (1 + sqrt(3) n . lambda) / 3."""

    n: np.ndarray

    def __post_init__(self):
        n = np.array(self.n, dtype=float).reshape(-1)
        if n.shape != (8,):
            raise ValueError(f"a Bloch vector has 8 components, got {n.shape[0]}")
        if not np.all(np.isfinite(n)):
            raise ValueError("Bloch vector components must be finite")
        n.flags.writeable = False
        object.__setattr__(self, "n", n)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.n))

    def dot(self, other: "Bloch8") -> float:
        return float(self.n @ other.n)


def density_from_bloch(n: Bloch8) -> DensityMatrix:
    """rho = (1 + sqrt(3) n . lambda) / 3; raises NotAState outside the state space."""
    if not isinstance(n, Bloch8):
        n = Bloch8(n)
    m = (np.eye(3) + SQRT3 * np.einsum("r,rij->ij", n.n, GELLMANN)) / 3
    m = 0.5 * (m + m.conj().T)
    low = np.linalg.eigvalsh(m)[0]
    if low < -PSD_TOL:
        raise NotAState(f"Bloch vector with |n| = {n.norm:.6g} gives smallest eigenvalue {low:.6g}")
    return DensityMatrix(m)


def bloch_from_density(rho: DensityMatrix) -> Bloch8:
    """n_r = (sqrt(3)/2) Tr(rho lambda_r)."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    return Bloch8(SQRT3 / 2 * np.einsum("ij,rji->r", m, GELLMANN).real)


def bloch_from_amplitudes(amps: np.ndarray) -> np.ndarray:
    """Vectorized Bloch vectors for a stack of normalized amplitudes ``(..., 3)``."""
    amps = np.asarray(amps, dtype=complex)
    return SQRT3 / 2 * np.einsum("...i,rij,...j->...r", amps.conj(), GELLMANN, amps).real


def is_pure_bloch(n: Bloch8, tol: float = PURITY_TOL) -> bool:
    """True iff n.n = 1 and n * n = n, each to ``tol``."""
    v = n.n if isinstance(n, Bloch8) else np.asarray(n, float)
    if abs(v @ v - 1) > tol:
        return False
    return bool(np.abs(star(v, v) - v).max() <= tol)


def opening_angle(n1: Bloch8, n2: Bloch8) -> float:
    """Angle between two pure-state Bloch vectors; at most 2 pi / 3."""
    for label, n in (("n1", n1), ("n2", n2)):
        if not is_pure_bloch(n, PURITY_TOL):
            raise NotPure(f"{label} does not describe a pure state")
    c = float(np.asarray(getattr(n1, "n", n1)) @ np.asarray(getattr(n2, "n", n2)))
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


# --- JSON state descriptors -------------------------------------------------

DESCRIPTOR_FORMS = ("amplitudes", "angles", "bloch")


def state_from_descriptor(desc: dict) -> PureState | DensityMatrix:
    """Parse one of

    ``{"amplitudes": [[re, im], x3]}``, ``{"angles": {"xi", "theta", "phi12", "phi13"}}``,
    ``{"bloch": [8 reals]}``.

    Amplitude and angle forms give a :class:`PureState`; the Bloch form gives a
    :class:`DensityMatrix`. Malformed input raises ``ValueError`` (or
    ``KeyError``/``TypeError``); a well-formed but unphysical Bloch vector raises
    :class:`NotAState`.
    """
    if not isinstance(desc, dict):
        raise ValueError("state descriptor must be a JSON object")
    forms = [k for k in DESCRIPTOR_FORMS if k in desc]
    if len(forms) != 1:
        raise ValueError(f"state descriptor needs exactly one of {DESCRIPTOR_FORMS}")
    form = forms[0]
    if form == "amplitudes":
        raw = desc["amplitudes"]
        if len(raw) != 3 or any(len(pair) != 2 for pair in raw):
            raise ValueError("amplitudes must be three [re, im] pairs")
        amps = np.array([complex(float(re), float(im)) for re, im in raw])
        return PureState.normalized(amps) if abs(np.linalg.norm(amps) - 1) > NORM_TOL else PureState(amps)
    if form == "angles":
        a = desc["angles"]
        return pure_from_angles(*(float(a[k]) for k in ("xi", "theta", "phi12", "phi13")))
    vals = desc["bloch"]
    if len(vals) != 8:
        raise ValueError("bloch needs 8 components")
    return density_from_bloch(Bloch8([float(x) for x in vals]))


def descriptor_from_state(state: PureState | DensityMatrix, form: str) -> dict:
    if form not in DESCRIPTOR_FORMS:
        raise ValueError(f"unknown descriptor form {form!r}")
    if form == "bloch":
        rho = state.density() if isinstance(state, PureState) else state
        return {"bloch": bloch_from_density(rho).n.tolist()}
    psi = state if isinstance(state, PureState) else PureState.from_density(state)
    if form == "amplitudes":
        return {"amplitudes": [[c.real, c.imag] for c in psi.amplitudes.tolist()]}
    xi, theta, phi12, phi13 = psi.to_angles()
    return {"angles": {"xi": xi, "theta": theta, "phi12": phi12, "phi13": phi13}}


def as_density(state: PureState | DensityMatrix) -> DensityMatrix:
    return state.density() if isinstance(state, PureState) else state
