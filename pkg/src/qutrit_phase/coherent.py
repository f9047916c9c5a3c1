"""su(3) coherent states on the symmetric subspace of N qutrits.

Fock states |n1, n2, n3> with n1 + n2 + n3 = N are indexed by (n, m),
0 <= n <= m <= N, meaning |n, m - n, N - m>.  The highest-weight state
|0, 0, N> is (0, 0).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadLevelPair, MismatchedN, QuadratureBudgetExceeded
from .numerics import semi_infinite, trapezoid_periodic, tree_sum
from .povm import PhasePoint, exponents

MAX_IDENTITY_N = 4
# total 4-D quadrature nodes allowed in one identity-resolution run
MAX_NODES = 2**22
MAX_RADIAL_NODES = 4096
# the 2-D radial integral converges algebraically; 256 nodes reach ~1e-10
RADIAL_POVM_NODES = 256


@lru_cache(maxsize=None)
def fock_index(N: int) -> tuple[tuple[int, int], ...]:
    """Basis labels (n, m) in storage order."""
    if int(N) < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    return tuple((n, m) for m in range(N + 1) for n in range(m + 1))


def dimension(N: int) -> int:
    return (N + 1) * (N + 2) // 2


def occupations(N: int) -> np.ndarray:
    """``(dim, 3)`` array of (n1, n2, n3) for each basis label."""
    return np.array([(n, m - n, N - m) for n, m in fock_index(N)])


def _lookup(N: int) -> dict[tuple[int, int, int], int]:
    return {tuple(occ): k for k, occ in enumerate(occupations(N).tolist())}


@dataclass(frozen=True)
class SymmetricFockState:
    N: int
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=complex).reshape(-1)
        if c.size != dimension(self.N):
            raise ValueError(f"N={self.N} needs {dimension(self.N)} coefficients, got {c.size}")
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))

    def inner(self, other: "SymmetricFockState") -> complex:
        if other.N != self.N:
            raise MismatchedN(f"cannot take the inner product of N={self.N} and N={other.N} states")
        return complex(np.vdot(self.coefficients, other.coefficients))

    def expectation(self, op: np.ndarray) -> complex:
        return complex(np.vdot(self.coefficients, op @ self.coefficients))

    def amplitude(self, n1: int, n2: int, n3: int) -> complex:
        return complex(self.coefficients[_lookup(self.N)[(n1, n2, n3)]])


_PAIRS = (11, 12, 13, 21, 22, 23, 31, 32, 33)


def collective_operator(pair, N: int) -> np.ndarray:
    """Matrix of S_ij = sum over qutrits of |i><j| on the symmetric subspace.

    On Fock states this is a_i^dag a_j: it moves one qutrit from level j to
    level i with amplitude sqrt(n_j (n_i + 1)).
    """
    try:
        p = int(pair)
    except (TypeError, ValueError):
        raise BadLevelPair(f"unknown level pair {pair!r}") from None
    if p not in _PAIRS:
        raise BadLevelPair(f"level pair must be one of {_PAIRS}, got {pair!r}")
    i, j = (d - 1 for d in divmod(p, 10))
    occ = occupations(N)
    where = _lookup(N)
    dim = len(occ)
    op = np.zeros((dim, dim))
    for col, o in enumerate(occ.tolist()):
        if o[j] == 0:
            continue
        if i == j:
            op[col, col] = o[i]
            continue
        amp = math.sqrt(o[j] * (o[i] + 1))
        o[j] -= 1
        o[i] += 1
        op[where[tuple(o)], col] = amp
    return op


@dataclass(frozen=True)
class CoherentLabel:
    N: int
    alpha: complex
    beta: complex

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))

    @property
    def C(self) -> float:
        return 1 + abs(self.alpha) ** 2 * (1 + abs(self.beta) ** 2)

    @property
    def normalization(self) -> float:
        return self.C ** (-self.N)


@lru_cache(maxsize=None)
def _binomial_weights(N: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """sqrt(C(N, m) C(m, n)) per basis label, with the exponents m and n."""
    idx = fock_index(N)
    lg = math.lgamma
    logw = [0.5 * (lg(N + 1) - lg(m + 1) - lg(N - m + 1) + lg(m + 1) - lg(n + 1) - lg(m - n + 1)) for n, m in idx]
    m = np.array([m for _, m in idx])
    n = np.array([n for n, _ in idx])
    return np.exp(logw), m, n


def coherent_amplitudes(N: int, alpha, beta) -> np.ndarray:
    """Vectorized Fock coefficients of |alpha, beta>, shape ``broadcast(alpha, beta) + (dim,)``."""
    alpha = np.asarray(alpha, dtype=complex)[..., None]
    beta = np.asarray(beta, dtype=complex)[..., None]
    w, m, n = _binomial_weights(N)
    C = 1 + np.abs(alpha) ** 2 * (1 + np.abs(beta) ** 2)
    return w * alpha**m * beta**n / C ** (N / 2)


def coherent_state(label: CoherentLabel) -> SymmetricFockState:
    return SymmetricFockState(label.N, coherent_amplitudes(label.N, label.alpha, label.beta))


def single_qutrit_state(alpha: complex, beta: complex) -> np.ndarray:
    """(alpha beta |1> + alpha |2> + |3>) / sqrt(C) in level order."""
    C = 1 + abs(alpha) ** 2 * (1 + abs(beta) ** 2)
    return np.array([alpha * beta, alpha, 1], dtype=complex) / np.sqrt(C)


def fock_to_levels(vec) -> np.ndarray:
    """Reorder an N = 1 Fock vector ``(..., 3)`` into level order (|1>, |2>, |3>)."""
    vec = np.asarray(vec)
    # N=1 labels (0,0), (0,1), (1,1) are |3>, |2>, |1>
    return vec[..., ::-1]


@dataclass(frozen=True)
class MeanValues:
    n1: float
    n2: float
    n3: float
    s32: complex
    s21: complex
    s31: complex

    def populations(self) -> tuple[float, float, float]:
        return self.n1, self.n2, self.n3


def mean_values(label: CoherentLabel) -> MeanValues:
    """Closed-form populations and transition expectations."""
    a, b = label.alpha, label.beta
    k = label.N / label.C
    return MeanValues(
        n1=k * abs(a) ** 2 * abs(b) ** 2,
        n2=k * abs(a) ** 2,
        n3=k,
        s32=k * a,
        s21=k * abs(a) ** 2 * b,
        s31=k * a * b,
    )


def brute_force_mean_values(label: CoherentLabel) -> MeanValues:
    """Same quantities as :func:`mean_values`, from the Fock vector and collective operators."""
    psi = coherent_state(label)
    N = label.N
    return MeanValues(
        n1=psi.expectation(collective_operator(11, N)).real,
        n2=psi.expectation(collective_operator(22, N)).real,
        n3=psi.expectation(collective_operator(33, N)).real,
        s32=psi.expectation(collective_operator(32, N)),
        s21=psi.expectation(collective_operator(21, N)),
        s31=psi.expectation(collective_operator(31, N)),
    )


def overlap(a: CoherentLabel, b: CoherentLabel) -> complex:
    """<alpha1, beta1 | alpha2, beta2>, closed form."""
    if a.N != b.N:
        raise MismatchedN(f"labels have N={a.N} and N={b.N}")
    N = a.N
    num = (1 + np.conj(a.alpha) * b.alpha * (1 + np.conj(a.beta) * b.beta)) ** N
    return complex(num / (a.C ** (N / 2) * b.C ** (N / 2)))


def measure_weight(alpha, beta):
    """Density of d mu with respect to d^2 alpha d^2 beta."""
    a2 = np.abs(alpha) ** 2
    out = a2 / (1 + a2 * (1 + np.abs(beta) ** 2)) ** 3
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class QuadratureScheme:
    """Gauss-Legendre nodes on the mapped radius and equally spaced phase nodes, per complex variable."""

    radial_nodes: int = 64
    phase_nodes: int = 16

    def __post_init__(self):
        for name in ("radial_nodes", "phase_nodes"):
            v = getattr(self, name)
            if int(v) != v or v < 2:
                raise ValueError(f"{name} must be an integer >= 2, got {v!r}")

    @classmethod
    def from_json(cls, text_or_dict) -> "QuadratureScheme":
        d = json.loads(text_or_dict) if isinstance(text_or_dict, str) else dict(text_or_dict)
        extra = set(d) - {"radial_nodes", "phase_nodes"}
        if extra:
            raise ValueError(f"unknown quadrature keys {sorted(extra)}")
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps({"radial_nodes": self.radial_nodes, "phase_nodes": self.phase_nodes})

    def complex_plane_nodes(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes z and weights for integrals over d^2 z (Jacobian r included)."""
        r, wr = semi_infinite(self.radial_nodes).points()
        th, wth = trapezoid_periodic(self.phase_nodes).points()
        z = (r[:, None] * np.exp(1j * th[None, :])).reshape(-1)
        w = ((wr * r)[:, None] * wth[None, :]).reshape(-1)
        return z, w


def identity_resolution(N: int, scheme: QuadratureScheme = QuadratureScheme()) -> np.ndarray:
    """(N+1)(N+2)/pi^2 * integral of d mu |alpha, beta><alpha, beta|, by product quadrature."""
    if N > MAX_IDENTITY_N:
        raise QuadratureBudgetExceeded(f"identity resolution is limited to N <= {MAX_IDENTITY_N}, got {N}")
    total = (scheme.radial_nodes * scheme.phase_nodes) ** 2
    if total > MAX_NODES:
        raise QuadratureBudgetExceeded(f"{total} quadrature nodes exceed the budget of {MAX_NODES}")
    z, w = scheme.complex_plane_nodes()
    pref = (N + 1) * (N + 2) / np.pi**2
    contributions = []
    for alpha, wa in zip(z, w):
        psi = coherent_amplitudes(N, alpha, z)
        weights = pref * wa * w * measure_weight(alpha, z)
        contributions.append((psi * weights[:, None]).T @ psi.conj())
    return tree_sum(np.array(contributions))


def verify_identity_resolution(N: int, scheme: QuadratureScheme = QuadratureScheme()) -> float:
    """Max-norm deviation of the quadrature from the identity on the symmetric subspace."""
    m = identity_resolution(N, scheme)
    return float(np.abs(m - np.eye(dimension(N))).max())


def radial_povm(point: PhasePoint, radial_nodes: int = RADIAL_POVM_NODES) -> np.ndarray:
    """Single-qutrit coherent-state projectors integrated over both radii.

    alpha = r23 e^{i phi23}, beta = r12 e^{i phi12}; returns a 3x3 matrix in
    level order, a density per d phi12 d phi23.
    """
    if radial_nodes > MAX_RADIAL_NODES:
        raise QuadratureBudgetExceeded(f"{radial_nodes} radial nodes exceed the budget of {MAX_RADIAL_NODES}")
    r, wr = semi_infinite(radial_nodes).points()
    r23, r12 = np.meshgrid(r, r, indexing="ij")
    alpha = r23 * np.exp(1j * point.phi23)
    beta = r12 * np.exp(1j * point.phi12)
    weights = 6 / np.pi**2 * np.outer(wr, wr) * r23 * r12 * measure_weight(alpha, beta)
    psi = fock_to_levels(coherent_amplitudes(1, alpha, beta))
    terms = weights[..., None, None] * psi[..., :, None] * psi[..., None, :].conj()
    return tree_sum(terms.reshape(-1, 3, 3))


RADIAL_TARGET_RATIO = np.pi / 96
_ELEMENTS = {"21": (1, 0), "32": (2, 1), "31": (2, 0)}


def radial_povm_report(point: PhasePoint, radial_nodes: int = RADIAL_POVM_NODES) -> dict:
    """Diagnostics for :func:`radial_povm`.

    The off-diagonal phases are reported next to the covariant exponents
    (2 phi12 - phi23, 2 phi23 - phi12, phi12 + phi23) for comparison only.
    ``raw_offdiagonal_integral`` is the off-diagonal modulus with the
    (N+1)(N+2)/pi^2 = 6/pi^2 prefactor removed.
    """
    d = radial_povm(point, radial_nodes)
    diag = np.diag(d).real
    moduli = {k: float(abs(d[ij])) for k, ij in _ELEMENTS.items()}
    phases = {k: float(np.angle(d[ij])) for k, ij in _ELEMENTS.items()}
    ratio = float(np.mean(list(moduli.values())) / np.mean(diag))
    cov = dict(zip(_ELEMENTS, (float(np.angle(np.exp(1j * e))) for e in exponents(point.phi12, point.phi23))))
    return {
        "phi12": point.phi12,
        "phi23": point.phi23,
        "radial_nodes": radial_nodes,
        "diagonal": diag.tolist(),
        "offdiagonal_moduli": moduli,
        "offdiagonal_phases": phases,
        "covariant_exponents": cov,
        "ratio": ratio,
        "target_ratio": RADIAL_TARGET_RATIO,
        "ratio_deviation": abs(ratio - RADIAL_TARGET_RATIO),
        "raw_offdiagonal_integral": float(np.mean(list(moduli.values())) * np.pi**2 / 6),
    }
