import numpy as np
import pytest
from hypothesis import given, strategies as st

from qutrit_phase.algebra import SQRT3
from qutrit_phase.errors import NotAState, NotPure
from qutrit_phase.states import (
    Bloch8,
    DensityMatrix,
    PureState,
    bloch_from_amplitudes,
    bloch_from_density,
    canonical_gauge,
    density_from_bloch,
    descriptor_from_state,
    is_pure_bloch,
    opening_angle,
    pure_from_angles,
    state_from_descriptor,
)

from conftest import random_amplitudes

angle = st.floats(-20, 20, allow_nan=False)
E = np.eye(8)


def ket(*amps):
    return np.array(amps, dtype=complex)


# qubit baseline: rho = (1 + n.sigma)/2 on span{|1>, |2>}
PAULI = np.array([[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]])


def _qubit_rho(psi):
    # this parametrization has |2> as the upper component and the opposite azimuth sign
    up_down = psi[::-1]
    return np.outer(up_down, up_down.conj()).conj()


def test_qubit_bloch_sphere_baseline():
    for theta, phi in [(0.3, 1.1), (2.0, 4.0), (np.pi / 2, 0.0)]:
        psi = np.array([np.sin(theta / 2), np.exp(1j * phi) * np.cos(theta / 2)])
        n = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
        rho = (np.eye(2) + np.einsum("r,rij->ij", n, PAULI)) / 2
        np.testing.assert_allclose(rho, _qubit_rho(psi), atol=1e-15)
        # orthogonal qubit states are antipodal
        perp = np.array([-np.conj(psi[1]), np.conj(psi[0])])
        n_perp = np.einsum("ij,rji->r", _qubit_rho(perp), PAULI).real
        np.testing.assert_allclose(n_perp, -n, atol=1e-14)


def test_qubit_states_embed_in_the_qutrit_ball():
    psi = PureState.normalized([0.6, 0.8j, 0])
    n = psi.bloch().n
    q = psi.amplitudes[:2]
    qubit_n = np.einsum("i,rij,j->r", q.conj(), PAULI, q).real
    np.testing.assert_allclose(n[:3], SQRT3 / 2 * qubit_n, atol=1e-15)
    assert n[7] == pytest.approx(0.5, abs=1e-15)
    np.testing.assert_allclose(n[3:7], 0, atol=1e-15)


def test_pure_from_angles_examples():
    np.testing.assert_allclose(pure_from_angles(0, 1.3, 0.4, 2.2).amplitudes, [0, 0, 1], atol=1e-15)
    np.testing.assert_allclose(pure_from_angles(np.pi, 0, 0.7, 0.1).amplitudes, [1, 0, 0], atol=1e-15)
    np.testing.assert_allclose(pure_from_angles(np.pi, np.pi, np.pi / 3, 0).amplitudes, [0, 1, 0], atol=1e-15)


def test_gauge_is_canonical():
    a = canonical_gauge(np.array([0, 1j, -1]) / np.sqrt(2))
    np.testing.assert_allclose(a, [0, 1 / np.sqrt(2), 1j / np.sqrt(2)], atol=1e-16)
    stack = canonical_gauge(np.array([[1j, 0, 0], [0, 0, -1]]))
    np.testing.assert_allclose(stack, [[1, 0, 0], [0, 0, 1]])


def test_pure_state_rejects_bad_norm():
    with pytest.raises(NotAState):
        PureState([1, 1, 0])
    with pytest.raises(NotAState):
        PureState.normalized([0, 0, 0])


def test_density_from_bloch_examples():
    np.testing.assert_allclose(density_from_bloch(Bloch8(np.zeros(8))).matrix, np.eye(3) / 3, atol=1e-16)
    np.testing.assert_allclose(density_from_bloch(Bloch8(-E[7])).matrix, np.diag([0, 0, 1]), atol=1e-15)
    # unit n along lambda_1 has n*n != n; eigenvalues of (1 + sqrt3 lambda_1)/3 include (1 - sqrt3)/3 < 0
    with pytest.raises(NotAState):
        density_from_bloch(Bloch8(E[0]))


def test_bloch_from_density_examples():
    np.testing.assert_allclose(bloch_from_density(DensityMatrix.maximally_mixed()).n, 0, atol=1e-16)
    n1 = bloch_from_density(DensityMatrix(np.diag([1, 0, 0]))).n
    np.testing.assert_allclose(n1, SQRT3 / 2 * E[2] + 0.5 * E[7], atol=1e-15)
    np.testing.assert_allclose(bloch_from_density(DensityMatrix(np.diag([0, 0, 1]))).n, -E[7], atol=1e-15)


def test_density_matrix_validation():
    with pytest.raises(NotAState):
        DensityMatrix(np.diag([1.2, -0.2, 0]))
    with pytest.raises(NotAState):
        DensityMatrix(np.eye(3))
    with pytest.raises(NotAState):
        DensityMatrix(np.array([[0.5, 0.1], [0.1, 0.5]]))


def test_is_pure_bloch_examples():
    assert is_pure_bloch(PureState.normalized([1, 2j, -1]).bloch())
    assert not is_pure_bloch(Bloch8(np.zeros(8)))
    assert is_pure_bloch(Bloch8(-E[7]))


def test_opening_angle_examples():
    n1, n2 = PureState.basis(1).bloch(), PureState.basis(2).bloch()
    assert opening_angle(n1, n1) == pytest.approx(0, abs=1e-7)
    assert opening_angle(n1, n2) == pytest.approx(2 * np.pi / 3, abs=1e-12)
    with pytest.raises(NotPure):
        opening_angle(n1, Bloch8(np.zeros(8)))


def test_opening_angle_sweep():
    rng = np.random.default_rng(11)
    a, b = random_amplitudes(rng, 2000), random_amplitudes(rng, 2000)
    cos = np.einsum("kr,kr->k", bloch_from_amplitudes(a), bloch_from_amplitudes(b))
    assert np.arccos(np.clip(cos, -1, 1)).max() <= 2 * np.pi / 3 + 1e-10
    # Tr(rho rho') = (1 + 2 n.n')/3 links the angle to the overlap
    np.testing.assert_allclose((1 + 2 * cos) / 3, np.abs(np.einsum("ki,ki->k", a.conj(), b)) ** 2, atol=1e-13)


@given(angle, angle, angle, angle)
def test_pure_states_satisfy_bloch_sphere_conditions(xi, theta, p12, p13):
    psi = pure_from_angles(xi, theta, p12, p13)
    rho = psi.density().matrix
    np.testing.assert_allclose(rho @ rho, rho, atol=1e-12)
    assert is_pure_bloch(psi.bloch(), 1e-10)


@given(st.integers(0, 2**32 - 1))
def test_angle_parametrization_covers_random_states(seed):
    amps = random_amplitudes(np.random.default_rng(seed), 1)[0]
    psi = PureState(amps)
    back = pure_from_angles(*psi.to_angles())
    np.testing.assert_allclose(back.amplitudes, psi.amplitudes, atol=1e-12)


@pytest.mark.parametrize("amps", [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, 1j], [1, 0, -1], [1j, 1, 0]])
def test_angle_parametrization_on_degenerate_states(amps):
    psi = PureState.normalized(amps)
    xi, theta, p12, p13 = psi.to_angles()
    assert 0 <= p12 < 2 * np.pi and 0 <= p13 < 2 * np.pi
    np.testing.assert_allclose(pure_from_angles(xi, theta, p12, p13).amplitudes, psi.amplitudes, atol=1e-12)


@given(st.integers(0, 2**32 - 1))
def test_bloch_round_trip(seed):
    rng = np.random.default_rng(seed)
    amps = random_amplitudes(rng, 2)
    w = rng.uniform(0, 1)
    rho = DensityMatrix(w * np.outer(amps[0], amps[0].conj()) + (1 - w) * np.outer(amps[1], amps[1].conj()))
    n = bloch_from_density(rho)
    assert n.norm <= 1 + 1e-10
    np.testing.assert_allclose(bloch_from_density(density_from_bloch(n)).n, n.n, atol=1e-12)
    np.testing.assert_allclose(density_from_bloch(n).matrix, rho.matrix, atol=1e-12)


def test_orthogonal_states_sit_at_two_pi_over_three():
    rng = np.random.default_rng(5)
    for a, b in zip(random_amplitudes(rng, 200), random_amplitudes(rng, 200)):
        b = b - np.vdot(a, b) * a
        b /= np.linalg.norm(b)
        angle_ = opening_angle(PureState(a).bloch(), PureState(b).bloch())
        assert angle_ == pytest.approx(2 * np.pi / 3, abs=1e-10)


@pytest.mark.parametrize("form", ["amplitudes", "angles", "bloch"])
def test_descriptor_round_trip(form):
    psi = PureState.normalized([0.3, 0.5 - 0.2j, -0.7j])
    desc = descriptor_from_state(psi, form)
    back = state_from_descriptor(desc)
    rho = back.density() if isinstance(back, PureState) else back
    np.testing.assert_allclose(rho.matrix, psi.density().matrix, atol=1e-12)
    # and through every other form
    for other in ("amplitudes", "angles", "bloch"):
        again = state_from_descriptor(descriptor_from_state(back, other))
        rho2 = again.density() if isinstance(again, PureState) else again
        np.testing.assert_allclose(rho2.matrix, psi.density().matrix, atol=1e-10)


def test_descriptor_errors():
    with pytest.raises(ValueError):
        state_from_descriptor({"amplitudes": [[1, 0]]})
    with pytest.raises(ValueError):
        state_from_descriptor({})
    with pytest.raises(ValueError):
        state_from_descriptor({"bloch": [0] * 8, "amplitudes": [[1, 0]] * 3})
    with pytest.raises(NotAState):
        state_from_descriptor({"bloch": [1, 0, 0, 0, 0, 0, 0, 0]})
    with pytest.raises(NotPure):
        descriptor_from_state(DensityMatrix.maximally_mixed(), "amplitudes")
