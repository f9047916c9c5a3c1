"""Deterministic quadrature rules and seeded sampling.

Every reduction that feeds a reported number goes through :func:`tree_sum`,
so results do not depend on how work was split up before the final sum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NonFiniteIntegrand

GAUSS_LEGENDRE = "gauss-legendre"
TRAPEZOID_PERIODIC = "trapezoid-periodic"

#: Name of the bit generator behind :class:`SeededSampler`.
GENERATOR = "numpy.random.PCG64"


def tree_sum(values, axis: int = 0) -> np.ndarray:
    """Pairwise (balanced binary tree) sum along ``axis``.

    The pairing only depends on the length of the axis, never on memory
    layout or thread count.
    """
    a = np.moveaxis(np.asarray(values), axis, 0)
    if a.shape[0] == 0:
        return np.zeros(a.shape[1:], dtype=a.dtype)
    while a.shape[0] > 1:
        if a.shape[0] % 2:
            head, last = a[:-1], a[-1:]
            a = np.concatenate([head[0::2] + head[1::2], last])
        else:
            a = a[0::2] + a[1::2]
    return a[0]


@dataclass(frozen=True)
class QuadratureRule:
    """A fixed 1-D rule.

    ``kind`` is ``"gauss-legendre"`` or ``"trapezoid-periodic"``.  With
    ``semi_infinite=True`` a Gauss-Legendre rule on ``t in [0, 1)`` is pushed
    through ``r = t / (1 - t)`` to cover ``[0, inf)``; ``interval`` is then
    ignored.
    """

    kind: str
    nodes: int
    interval: tuple[float, float] = (0.0, 1.0)
    semi_infinite: bool = False
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in (GAUSS_LEGENDRE, TRAPEZOID_PERIODIC):
            raise ValueError(f"unknown quadrature kind {self.kind!r}")
        if int(self.nodes) < 2:
            raise ValueError("a quadrature rule needs at least 2 nodes")
        if self.semi_infinite and self.kind != GAUSS_LEGENDRE:
            raise ValueError("the semi-infinite transform is only defined for gauss-legendre")

    def base(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights on the untransformed interval."""
        if "base" not in self._cache:
            a, b = (0.0, 1.0) if self.semi_infinite else self.interval
            n = int(self.nodes)
            if self.kind == GAUSS_LEGENDRE:
                x, w = np.polynomial.legendre.leggauss(n)
                x = 0.5 * (b - a) * x + 0.5 * (b + a)
                w = 0.5 * (b - a) * w
            else:
                h = (b - a) / n
                x = a + h * np.arange(n)
                w = np.full(n, h)
            x.flags.writeable = False
            w.flags.writeable = False
            self._cache["base"] = (x, w)
        return self._cache["base"]

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights in the integration variable."""
        t, w = self.base()
        if not self.semi_infinite:
            return t, w
        return t / (1.0 - t), w / (1.0 - t) ** 2


def gauss_legendre(nodes: int, a: float = -1.0, b: float = 1.0) -> QuadratureRule:
    return QuadratureRule(GAUSS_LEGENDRE, nodes, (float(a), float(b)))


def semi_infinite(nodes: int) -> QuadratureRule:
    return QuadratureRule(GAUSS_LEGENDRE, nodes, semi_infinite=True)


def trapezoid_periodic(nodes: int, a: float = 0.0, b: float = 2 * np.pi) -> QuadratureRule:
    return QuadratureRule(TRAPEZOID_PERIODIC, nodes, (float(a), float(b)))


def integrate_1d(f: Callable[[np.ndarray], np.ndarray], rule: QuadratureRule) -> float:
    """Weighted node sum of ``f`` under ``rule``.

    ``f`` is called once with the full node array.
    """
    x, w = rule.points()
    fx = np.asarray(f(x))
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape)
    if not np.all(np.isfinite(fx)):
        bad = x[~np.isfinite(fx)]
        raise NonFiniteIntegrand(f"integrand is not finite at {bad.size} node(s), first at x={bad[0]!r}")
    return tree_sum(w * fx).item()


class SeededSampler:
    """Single-owner random stream.

    Backed by numpy's PCG64, whose output for a given seed is fixed across
    platforms. Do not share one instance between threads; spawn children with
    :meth:`spawn` instead.
    """

    algorithm = GENERATOR

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._seq = np.random.SeedSequence(self.seed)
        self.rng = np.random.Generator(np.random.PCG64(self._seq))

    def __repr__(self):
        return f"SeededSampler(seed={self.seed})"

    def spawn(self, n: int) -> list["SeededSampler"]:
        children = []
        for child in self._seq.spawn(n):
            s = SeededSampler.__new__(SeededSampler)
            s.seed = self.seed
            s._seq = child
            s.rng = np.random.Generator(np.random.PCG64(child))
            children.append(s)
        return children

    def complex_normal(self, size) -> np.ndarray:
        """Standard complex Gaussian, E|z|^2 = 1."""
        re = self.rng.standard_normal(size)
        im = self.rng.standard_normal(size)
        return (re + 1j * im) / np.sqrt(2.0)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self.rng.uniform(low, high, size)


def sample_amplitudes(sampler: SeededSampler, count: int) -> np.ndarray:
    """``count`` Haar-random unit vectors in C^3, shape ``(count, 3)``, gauged."""
    from .states import canonical_gauge

    z = sampler.complex_normal((count, 3))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    return canonical_gauge(z)


def sample_pure_state(sampler: SeededSampler):
    """One Haar-random pure qutrit."""
    from .states import PureState

    return PureState(sample_amplitudes(sampler, 1)[0])
