"""Pure-state algebra for small qubit registers.

Conventions: qubit 0 is the leftmost tensor factor, so amplitudes reshape
to ``(2,) * n`` with axis ``i`` belonging to qubit ``i``.  A two-qubit state
``sum a_ij |ij>`` corresponds to the 2x2 matrix ``[[a_00, a_01], [a_10,
a_11]]``.  Constructors normalise and keep the dropped norm in ``scale`` so
that ``scale * amplitudes`` recovers the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ImpossibleOutcome, QuantumError

RANK_TOL = 1e-9
ZERO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PureState:
    amplitudes: np.ndarray
    scale: complex = 1.0

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        n = amps.size.bit_length() - 1
        if amps.size < 2 or 1 << n != amps.size:
            raise QuantumError(f"amplitude count {amps.size} is not a power of two >= 2")
        norm = np.linalg.norm(amps)
        if abs(norm - 1) > 1e-9:
            raise QuantumError(f"state is not normalised (norm {norm})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amps) -> "PureState":
        amps = np.asarray(amps, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm < ZERO_TOL:
            raise QuantumError("zero vector is not a state")
        return cls(amps / norm, scale=norm)

    @property
    def num_qubits(self) -> int:
        return self.amplitudes.size.bit_length() - 1

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.num_qubits)

    def __repr__(self):
        return f"PureState(n={self.num_qubits}, amplitudes={np.round(self.amplitudes, 6).tolist()})"


def basis_state(bits: str) -> PureState:
    """``basis_state("01")`` is |01>."""
    amps = np.zeros(1 << len(bits), dtype=complex)
    amps[int(bits, 2)] = 1
    return PureState(amps)


def state_to_matrix(s: PureState) -> np.ndarray:
    if s.num_qubits != 2:
        raise QuantumError(f"expected a two-qubit state, got {s.num_qubits} qubits")
    return s.amplitudes.reshape(2, 2).copy()


def matrix_to_state(m) -> PureState:
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise QuantumError(f"expected a 2x2 matrix, got shape {m.shape}")
    return PureState.from_amplitudes(m.reshape(4))


def schmidt_rank(s: PureState, cut: Sequence[int], tol: float = RANK_TOL) -> int:
    """Rank of the amplitude matrix with qubits ``cut`` as rows."""
    n = s.num_qubits
    left = sorted(set(cut))
    if not left or len(left) == n or any(q < 0 or q >= n for q in left):
        raise QuantumError(f"invalid cut {list(cut)} for {n} qubits")
    right = [q for q in range(n) if q not in left]
    mat = np.transpose(s.tensor(), left + right).reshape(1 << len(left), -1)
    return int(np.sum(np.linalg.svd(mat, compute_uv=False) > tol))


def is_entangled(s: PureState, tol: float = RANK_TOL) -> bool:
    """Two-qubit entanglement test: the state matrix is invertible."""
    return bool(abs(np.linalg.det(state_to_matrix(s))) > tol)


def outcome_probability(s: PureState, qubit: int, outcome: int) -> float:
    n = s.num_qubits
    if not 0 <= qubit < n:
        raise QuantumError(f"qubit {qubit} out of range for {n} qubits")
    if outcome not in (0, 1):
        raise QuantumError(f"outcome must be 0 or 1, got {outcome}")
    branch = np.take(s.tensor(), outcome, axis=qubit)
    return float(np.vdot(branch, branch).real)


def measure_qubit(s: PureState, qubit: int, outcome: int) -> tuple[float, PureState]:
    """Project ``qubit`` onto ``outcome`` in the standard basis.

    Returns the outcome probability and the normalised state of the
    remaining ``n - 1`` qubits (original order kept).
    """
    if s.num_qubits < 2:
        raise QuantumError("measurement needs at least two qubits")
    prob = outcome_probability(s, qubit, outcome)
    if prob < ZERO_TOL:
        raise ImpossibleOutcome(f"outcome {outcome} on qubit {qubit} has probability {prob:.3g}")
    branch = np.take(s.tensor(), outcome, axis=qubit).reshape(-1)
    return prob, PureState(branch / np.sqrt(prob))


def sample_measurement(s: PureState, qubit: int, seed: Optional[int] = None) -> tuple[int, float, PureState]:
    """Draw an outcome with the Born probabilities; deterministic for a fixed seed."""
    rng = np.random.default_rng(seed)
    p0 = outcome_probability(s, qubit, 0)
    outcome = 0 if rng.random() < p0 else 1
    prob, residual = measure_qubit(s, qubit, outcome)
    return outcome, prob, residual


def teleport(psi: PureState, m, e) -> PureState:
    """Bob's qubit after Alice's successful measurement ``<M|``.

    Uses the index form ``psi'_k = sum_ij psi_i m_ij e_jk``, i.e. the row
    vector ``psi @ m @ e``; the result is normalised with the norm in
    ``scale``.
    """
    if psi.num_qubits != 1:
        raise QuantumError("teleport takes a single-qubit state")
    m = _as_matrix(m, "m")
    e = _as_matrix(e, "e")
    out = psi.amplitudes @ m @ e
    if np.linalg.norm(out) < ZERO_TOL:
        raise ImpossibleOutcome("measurement branch annihilates the state")
    return PureState.from_amplitudes(out)


def teleport_correction(m, e) -> np.ndarray:
    """Matrix ``w`` with ``teleport(psi, m, e).amplitudes @ w`` proportional to psi."""
    me = _as_matrix(m, "m") @ _as_matrix(e, "e")
    if abs(np.linalg.det(me)) < RANK_TOL:
        raise QuantumError("measurement and link matrices are not jointly invertible")
    return np.linalg.inv(me)


def entanglement_swap(e, m, e2) -> np.ndarray:
    """State matrix linking the outer sites after measuring ``<M|`` in the middle.

    Contracting ``<M| = sum m_jk <jk|`` against qubits 1 and 2 of
    ``|E> (x) |E'>`` leaves ``sum_jk e_ij m_jk e2_kl``, the product
    ``e @ m @ e2``.  A zero result is an impossible measurement branch.
    """
    return _as_matrix(e, "e") @ _as_matrix(m, "m") @ _as_matrix(e2, "e2")


def ghz(n: int) -> PureState:
    if n < 2:
        raise QuantumError("ghz needs n >= 2")
    amps = np.zeros(1 << n, dtype=complex)
    amps[0] = amps[-1] = 1
    return PureState.from_amplitudes(amps)


def w(n: int) -> PureState:
    if n < 3:
        raise QuantumError("w needs n >= 3")
    amps = np.zeros(1 << n, dtype=complex)
    for q in range(n):
        amps[1 << (n - 1 - q)] = 1
    return PureState.from_amplitudes(amps)


def _as_matrix(x, name):
    x = np.asarray(x, dtype=complex)
    if x.shape != (2, 2):
        raise QuantumError(f"{name} must be 2x2, got shape {x.shape}")
    return x
