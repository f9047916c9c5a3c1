"""Transition operators, polar decomposition and the qutrit phase operators."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadLevel, NotNormalized
from .states import PureState

PAIRS = (12, 23, 13)
UNITARY_TOL = 1e-12


def _ket_bra(i: int, j: int) -> np.ndarray:
    m = np.zeros((3, 3), dtype=complex)
    m[i - 1, j - 1] = 1
    return m


def _levels(pair, allowed=PAIRS) -> tuple[int, int]:
    try:
        p = int(pair)
    except (TypeError, ValueError):
        raise BadLevel(f"unknown level pair {pair!r}") from None
    if p not in allowed:
        raise BadLevel(f"level pair must be one of {allowed}, got {pair!r}")
    return divmod(p, 10)


@dataclass(frozen=True)
class TransitionOperator:
    """S_ij = |i><j|, levels 1-based."""

    i: int
    j: int
    matrix: np.ndarray


def transition(i: int, j: int) -> TransitionOperator:
    for level in (i, j):
        if level not in (1, 2, 3):
            raise BadLevel(f"levels are 1, 2 or 3, got {level!r}")
    m = _ket_bra(i, j)
    m.flags.writeable = False
    return TransitionOperator(i, j, m)


def inversion(pair) -> np.ndarray:
    """S^z_12 = (S_22 - S_11)/2 or S^z_23 = (S_33 - S_22)/2."""
    i, j = _levels(pair, (12, 23))
    return 0.5 * (_ket_bra(j, j) - _ket_bra(i, i))


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix."""
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    return (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T


def modulus(pair) -> np.ndarray:
    """R_ij = sqrt(S_ij S_ji)."""
    i, j = _levels(pair)
    s = transition(i, j).matrix
    return psd_sqrt(s @ s.conj().T)


@dataclass(frozen=True)
class PhaseOperator:
    """Unitary E_ij with its eigensystem.

    ``eigenvalues``, ``eigenvectors`` and ``phases`` are ordered by phase,
    descending; phases lie in (-pi, pi].
    """

    pair: int
    E: np.ndarray
    eigenvalues: tuple[complex, ...]
    eigenvectors: tuple[PureState, ...]
    phases: tuple[float, ...]

    @property
    def eigenpairs(self):
        return list(zip(self.eigenvalues, self.eigenvectors))

    def phase_matrix(self) -> np.ndarray:
        """Hermitian phase operator phi_ij with E = exp(i phi_ij)."""
        vecs = np.array([v.amplitudes for v in self.eigenvectors]).T
        return (vecs * np.array(self.phases)) @ vecs.conj().T


def principal_arg(z) -> float:
    a = float(np.angle(z))
    return np.pi if a <= -np.pi else a


def canonical_phase_matrix(pair) -> np.ndarray:
    """E_ij = |i><j| - |j><i| + |k><k|, k the spectator level."""
    i, j = _levels(pair)
    (k,) = {1, 2, 3} - {i, j}
    return _ket_bra(i, j) - _ket_bra(j, i) + _ket_bra(k, k)


def phase_operator(pair) -> PhaseOperator:
    p = int(pair)
    E = canonical_phase_matrix(p)
    vals, vecs = np.linalg.eig(E)
    phases = [principal_arg(v) for v in vals]
    order = np.argsort(phases)[::-1]
    E.flags.writeable = False
    return PhaseOperator(
        pair=p,
        E=E,
        eigenvalues=tuple(complex(vals[k]) for k in order),
        eigenvectors=tuple(PureState.normalized(vecs[:, k]) for k in order),
        phases=tuple(phases[k] for k in order),
    )


def polar_decompose(pair) -> tuple[np.ndarray, PhaseOperator]:
    """Split S_ij into R_ij (positive) times the canonical unitary E_ij."""
    return modulus(pair), phase_operator(pair)


def polar_residual(pair) -> float:
    i, j = _levels(pair)
    R, op = polar_decompose(pair)
    return float(np.linalg.norm(R @ op.E - transition(i, j).matrix))


def unitarity_residual(m: np.ndarray) -> float:
    return float(np.linalg.norm(m.conj().T @ m - np.eye(3)))


def check_noncommutativity() -> tuple[float, dict[str, float]]:
    """Return ``||E12 E23 - E13||`` and a table of commutator norms."""
    E12, E23, E13 = (canonical_phase_matrix(p) for p in PAIRS)
    R12, R23 = modulus(12), modulus(23)
    deviation = float(np.linalg.norm(E12 @ E23 - E13))

    def cnorm(a, b):
        return float(np.linalg.norm(a @ b - b @ a))

    table = {
        "[E12,R23]": cnorm(E12, R23),
        "[E23,R12]": cnorm(E23, R12),
        "[R23,R12]": cnorm(R23, R12),
        "[E12,E23]": cnorm(E12, E23),
    }
    return deviation, table


def general_E13(a: complex, b: complex) -> np.ndarray:
    """a|3><2| - b*|3><1| + b|2><2| + a*|2><1| + |1><3|, with |a|^2 + |b|^2 = 1."""
    a, b = complex(a), complex(b)
    norm = abs(a) ** 2 + abs(b) ** 2
    if abs(norm - 1) > UNITARY_TOL:
        raise NotNormalized(f"|a|^2 + |b|^2 = {norm!r}, expected 1")
    return (
        a * _ket_bra(3, 2)
        - np.conj(b) * _ket_bra(3, 1)
        + b * _ket_bra(2, 2)
        + np.conj(a) * _ket_bra(2, 1)
        + _ket_bra(1, 3)
    )
