"""Gell-Mann matrices, su(3) structure tensors and the 8-vector products.

Labels in messages are 1-based (lambda_1 ... lambda_8); arrays are indexed
from 0 internally.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import NonOrthogonalBasis

SQRT3 = np.sqrt(3.0)
ALGEBRA_TOL = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.flags.writeable = False
    return a


def gellmann_matrices() -> np.ndarray:
    """The eight standard Gell-Mann matrices, shape ``(8, 3, 3)``.

    Rows/columns 0, 1, 2 correspond to the levels |1>, |2>, |3>.
    """
    lam = np.zeros((8, 3, 3), dtype=complex)
    lam[0][0, 1] = lam[0][1, 0] = 1
    lam[1][0, 1], lam[1][1, 0] = -1j, 1j
    lam[2][0, 0], lam[2][1, 1] = 1, -1
    lam[3][0, 2] = lam[3][2, 0] = 1
    lam[4][0, 2], lam[4][2, 0] = -1j, 1j
    lam[5][1, 2] = lam[5][2, 1] = 1
    lam[6][1, 2], lam[6][2, 1] = -1j, 1j
    lam[7] = np.diag([1, 1, -2]) / SQRT3
    return _frozen(lam)


GELLMANN = gellmann_matrices()


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


@dataclass(frozen=True)
class StructureTensors:
    """Antisymmetric ``f`` and symmetric ``d`` tensors, each ``(8, 8, 8)``."""

    f: np.ndarray
    d: np.ndarray

    def f_at(self, r: int, s: int, t: int) -> float:
        """``f_rst`` with 1-based labels."""
        return float(self.f[r - 1, s - 1, t - 1])

    def d_at(self, r: int, s: int, t: int) -> float:
        """``d_rst`` with 1-based labels."""
        return float(self.d[r - 1, s - 1, t - 1])


def trace_gram(basis) -> np.ndarray:
    """Matrix of ``Tr(lambda_r lambda_s)``."""
    basis = np.asarray(basis)
    return np.einsum("rij,sji->rs", basis, basis)


def derive_structure_tensors(basis=GELLMANN) -> StructureTensors:
    """Compute f and d from the trace formulas

    ``f_rst = Tr([l_r, l_s] l_t) / 4i`` and ``d_rst = Tr({l_r, l_s} l_t) / 4``.

    Raises NonOrthogonalBasis unless ``Tr(l_r l_s) = 2 delta_rs``.
    """
    basis = np.asarray(basis, dtype=complex)
    if basis.shape != (8, 3, 3):
        raise NonOrthogonalBasis(f"expected 8 matrices of shape 3x3, got {basis.shape}")
    gram = trace_gram(basis)
    bad = np.argwhere(np.abs(gram - 2 * np.eye(8)) > ALGEBRA_TOL)
    if bad.size:
        r, s = bad[0] + 1
        raise NonOrthogonalBasis(f"Tr(lambda_{r} lambda_{s}) = {gram[r - 1, s - 1]:.6g}, expected {2 * (r == s)}")
    prod = np.einsum("rij,sjk->rsik", basis, basis)
    comm = prod - prod.transpose(1, 0, 2, 3)
    anti = prod + prod.transpose(1, 0, 2, 3)
    f = np.einsum("rsij,tji->rst", comm, basis) / 4j
    d = np.einsum("rsij,tji->rst", anti, basis) / 4
    return StructureTensors(f=_frozen(f.real), d=_frozen(d.real))


STRUCTURE = derive_structure_tensors(GELLMANN)


def wedge(a, b, tensors: StructureTensors = STRUCTURE) -> np.ndarray:
    """Antisymmetric product ``(A ^ B)_r = f_rst A_s B_t``."""
    return np.einsum("rst,...s,...t->...r", tensors.f, np.asarray(a, float), np.asarray(b, float))


def star(a, b, tensors: StructureTensors = STRUCTURE) -> np.ndarray:
    """Symmetric product ``(A * B)_r = sqrt(3) d_rst A_s B_t``."""
    return SQRT3 * np.einsum("rst,...s,...t->...r", tensors.d, np.asarray(a, float), np.asarray(b, float))


def commutation_residuals(basis=GELLMANN, tensors: StructureTensors = STRUCTURE) -> np.ndarray:
    """Frobenius norm of ``[l_r, l_s] - 2i f_rst l_t`` for every pair, ``(8, 8)``."""
    basis = np.asarray(basis)
    prod = np.einsum("rij,sjk->rsik", basis, basis)
    lhs = prod - prod.transpose(1, 0, 2, 3)
    rhs = 2j * np.einsum("rst,tij->rsij", tensors.f, basis)
    return np.linalg.norm(lhs - rhs, axis=(2, 3))


def anticommutation_residuals(basis=GELLMANN, tensors: StructureTensors = STRUCTURE) -> np.ndarray:
    """Frobenius norm of ``{l_r, l_s} - 4/3 delta_rs 1 - 2 d_rst l_t``, ``(8, 8)``."""
    basis = np.asarray(basis)
    prod = np.einsum("rij,sjk->rsik", basis, basis)
    lhs = prod + prod.transpose(1, 0, 2, 3)
    rhs = 4 / 3 * np.einsum("rs,ij->rsij", np.eye(8), np.eye(3))
    rhs = rhs + 2 * np.einsum("rst,tij->rsij", tensors.d, basis)
    return np.linalg.norm(lhs - rhs, axis=(2, 3))


def jacobi_residual(tensors: StructureTensors = STRUCTURE) -> float:
    """Largest |f_abe f_ecd + f_cbe f_aed + f_dbe f_ace| over all a, b, c, d."""
    f = tensors.f
    total = (
        np.einsum("abe,ecd->abcd", f, f)
        + np.einsum("cbe,aed->abcd", f, f)
        + np.einsum("dbe,ace->abcd", f, f)
    )
    return float(np.abs(total).max())


def symmetry_residuals(tensors: StructureTensors = STRUCTURE) -> tuple[float, float]:
    """Distance of f from total antisymmetry and of d from total symmetry."""
    f_dev = d_dev = 0.0
    for perm in itertools.permutations(range(3)):
        sign = np.linalg.det(np.eye(3)[list(perm)])
        f_dev = max(f_dev, float(np.abs(tensors.f - sign * tensors.f.transpose(perm)).max()))
        d_dev = max(d_dev, float(np.abs(tensors.d - tensors.d.transpose(perm)).max()))
    return f_dev, d_dev
