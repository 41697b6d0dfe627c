"""Gate teleportation through the phase-free braid gate.

Oracles come from the simulated protocols themselves: closed-form
correction operators are compared against brute-force expansions of the
layered circuits, never against copies of their own formulas.
"""

import itertools

import numpy as np
import pytest

from braidtel.gate_teleport import (
    DoubleOutcome,
    PauliString,
    b0_forward_residual,
    b0_reverse_residual,
    clifford_check,
    double_protocol_residuals,
    k_gate,
    l_gate,
    p_correction,
    q_correction,
    qp_factorization_residual,
    r_gate,
    r_gate_hadamard,
    r_gate_t,
    recognize_pauli,
    single_gate_closed_form_residuals,
    teleport_single_gate,
    teleport_two_qubit,
)
from braidtel.gates import EPR, H, S, X, Z, elementary, t_gate, yb_clifford
from braidtel.linalg import fidelity, is_unitary, kron, max_abs_diff
from braidtel.teleport import BIT_PAIRS, random_ket

ALL_TUPLES = list(itertools.product((0, 1), repeat=4))


def test_pauli_string_matrix_and_repr():
    ps = PauliString(-1j, ("X", "Z"))
    assert str(ps) == "-iX.Z"
    assert max_abs_diff(ps.matrix(), -1j * kron(X, Z)) == 0.0
    assert ps.n_qubits == 2


def test_pauli_string_rejects_bad_phase():
    with pytest.raises(ValueError):
        PauliString(0.5, ("X",))
    with pytest.raises(ValueError):
        PauliString(1, ("Q",))


def test_recognize_pauli_round_trip():
    found = recognize_pauli(1j * kron(X, Z))
    assert found is not None
    assert found.phase == 1j and found.factors == ("X", "Z")
    assert recognize_pauli(H) is None


def test_clifford_table_of_the_braid_point():
    ok, table = clifford_check(yb_clifford())
    assert ok
    rows = {key: str(val) for key, val in table.items()}
    assert rows == {
        ("X", 1): "-I.X",
        ("X", 2): "-X.I",
        ("Z", 1): "+X.Z",
        ("Z", 2): "+Z.X",
    }


def test_clifford_check_on_single_qubit_gates():
    ok, table = clifford_check(H)
    assert ok
    assert str(table[("X", 1)]) == "+Z"
    assert str(table[("Z", 1)]) == "+X"
    ok_s, _ = clifford_check(S)
    assert ok_s
    ok_t, table_t = clifford_check(t_gate())
    assert not ok_t and table_t == {}


def test_clifford_check_rejects_non_unitary():
    with pytest.raises(ValueError):
        clifford_check(np.ones((2, 2)))


def test_k_at_origin_is_xz():
    assert max_abs_diff(k_gate(0, 0, 0, 0), X @ Z) == 0.0


def test_forward_closed_form_against_protocol():
    # K_{ijkl} is only correct if the expanded two-layer circuit agrees
    assert b0_forward_residual(seed=6) < 1e-12


def test_reverse_closed_form_against_protocol():
    assert b0_reverse_residual(seed=6) < 1e-12


@pytest.mark.parametrize("i,j,k,l", ALL_TUPLES)
def test_k_and_l_are_signed_paulis(i, j, k, l):
    for op in (k_gate(i, j, k, l), l_gate(i, j, k, l)):
        found = recognize_pauli(op)
        assert found is not None
        assert found.phase in (1, -1)


@pytest.mark.parametrize("i,j,k,l", ALL_TUPLES)
def test_conjugated_correction_closed_forms(i, j, k, l):
    assert max_abs_diff(r_gate(H, i, j, k, l), r_gate_hadamard(i, j, k, l)) < 1e-14
    assert max_abs_diff(r_gate(t_gate(), i, j, k, l), r_gate_t(i, j, k, l)) < 1e-14


@pytest.mark.parametrize("i,j,k,l", ALL_TUPLES)
def test_t_correction_stays_clifford(i, j, k, l):
    ok, _ = clifford_check(r_gate(t_gate(), i, j, k, l))
    assert ok


@pytest.mark.parametrize("i,j,k,l", ALL_TUPLES)
def test_hadamard_correction_is_a_signed_pauli(i, j, k, l):
    assert recognize_pauli(r_gate_hadamard(i, j, k, l)) is not None


def test_single_gate_closed_form_residuals():
    residuals = single_gate_closed_form_residuals()
    assert residuals["hadamard"] < 1e-12
    assert residuals["t"] < 1e-12


@pytest.mark.parametrize("name", ["H", "S", "T", "X"])
def test_single_gate_teleportation(name):
    u = elementary(name)
    alpha = random_ket(np.random.default_rng(13))
    outcome, corrected = teleport_single_gate(u, alpha, 1, 0, rng_seed=13)
    assert fidelity(u @ alpha, corrected) == pytest.approx(1.0, abs=1e-12)
    assert outcome.probability == pytest.approx(0.25, abs=1e-12)


def test_single_gate_teleportation_input_validation():
    alpha = random_ket(np.random.default_rng(1))
    with pytest.raises(ValueError):
        teleport_single_gate(np.eye(4), alpha, 0, 0)
    with pytest.raises(ValueError):
        teleport_single_gate(np.ones((2, 2)), alpha, 0, 0)


def test_two_qubit_correction_factorization():
    # Q (x) P must equal B0 (K (x) L) B0^dag over all 256 index tuples
    assert qp_factorization_residual() < 1e-12


def test_q_and_p_are_signed_paulis():
    for bits in itertools.product((0, 1), repeat=8):
        q = q_correction(*bits)
        p = p_correction(*bits)
        assert recognize_pauli(q) is not None
        assert recognize_pauli(p) is not None
        assert is_unitary(q) and is_unitary(p)


def test_double_protocol_bracketing():
    residuals = double_protocol_residuals(seed=8)
    # a single middle braid layer closes the identity; doubling it does not
    assert residuals["single-middle"] < 1e-10
    assert residuals["doubled-middle"] > 0.1


def test_two_qubit_teleportation_on_product_input():
    rng = np.random.default_rng(21)
    alphabeta = kron(random_ket(rng), random_ket(rng))
    outcome, corrected = teleport_two_qubit(alphabeta, 0, 1, 1, 0, rng_seed=21)
    assert isinstance(outcome, DoubleOutcome)
    assert outcome.first in BIT_PAIRS and outcome.second in BIT_PAIRS
    assert outcome.probability == pytest.approx(1 / 16, abs=1e-12)
    assert fidelity(yb_clifford() @ alphabeta, corrected) == pytest.approx(1.0, abs=1e-12)


def test_two_qubit_teleportation_on_entangled_input():
    outcome, corrected = teleport_two_qubit(EPR, 1, 1, 0, 0, rng_seed=3)
    assert outcome.probability == pytest.approx(1 / 16, abs=1e-12)
    assert fidelity(yb_clifford() @ EPR, corrected) == pytest.approx(1.0, abs=1e-12)
