"""Dense complex linear algebra for small qubit registers.

Everything is a plain numpy array of dtype complex128: matrices are 2-d,
kets are 1-d.  Qubit 1 is the most significant bit of the index, so the
two-qubit basis order is |00>, |01>, |10>, |11> and |ij> sits at index 2i+j.
All helpers are pure functions; nothing here mutates its arguments.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-10
STRICT_TOL = 1e-12

MAX_SITES = 10


def mat(rows) -> np.ndarray:
    """Build a complex matrix from nested rows (finite entries required)."""
    a = np.array(rows, dtype=complex)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def ket(amps, normalize: bool = False) -> np.ndarray:
    """Build a state vector. Dimension must be a power of 2 and norm 1.

    With normalize=True the input is rescaled; otherwise a norm deviating
    from 1 by more than 1e-12 is an error.
    """
    v = np.asarray(amps, dtype=complex).reshape(-1)
    if v.size == 0 or v.size & (v.size - 1):
        raise ValueError(f"ket dimension {v.size} is not a power of 2")
    if not np.all(np.isfinite(v)):
        raise ValueError("ket amplitudes must be finite")
    norm = np.linalg.norm(v)
    if normalize:
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return v / norm
    if abs(norm - 1.0) > STRICT_TOL:
        raise ValueError(f"ket is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
    return v


def basis_ket(index: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def kron(*ops: np.ndarray) -> np.ndarray:
    """Tensor product of one or more matrices/vectors, left to right."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def mul(*ops: np.ndarray) -> np.ndarray:
    """Matrix product of one or more factors, left to right."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = out @ op
    return out


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def transpose(a: np.ndarray) -> np.ndarray:
    return np.asarray(a).T


def conj(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a))


def trace(a: np.ndarray) -> complex:
    return complex(np.trace(a))


def outer(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """|u><v| including the conjugation of v."""
    return np.outer(u, np.conj(v))


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def embed(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """Place a 4x4 operator on neighbouring qubits (site, site+1) of n_sites.

    Sites count from 1 and qubit 1 is the most significant bit, so the
    result is 1^(site-1) (x) op (x) 1^(n_sites-site-1).
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (4, 4):
        raise ValueError(f"embed expects a 4x4 operator, got {op.shape}")
    if n_sites < 2 or n_sites > MAX_SITES:
        raise ValueError(f"n_sites must be in [2, {MAX_SITES}], got {n_sites}")
    if not 1 <= site <= n_sites - 1:
        raise ValueError(f"site {site} out of range for {n_sites} sites")
    left = identity(2 ** (site - 1))
    right = identity(2 ** (n_sites - site - 1))
    return kron(left, op, right)


def embed_single(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """Place a 2x2 operator on one qubit (1-based, MSB first)."""
    op = np.asarray(op, dtype=complex)
    if op.shape != (2, 2):
        raise ValueError(f"embed_single expects a 2x2 operator, got {op.shape}")
    if not 1 <= site <= n_sites:
        raise ValueError(f"site {site} out of range for {n_sites} sites")
    left = identity(2 ** (site - 1))
    right = identity(2 ** (n_sites - site))
    return kron(left, op, right)


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def approx_eq(a: np.ndarray, b: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Entrywise max-distance comparison."""
    return max_abs_diff(a, b) <= tol


def approx_eq_phase(a: np.ndarray, b: np.ndarray, tol: float = DEFAULT_TOL):
    """Return the unit phase theta with a = theta * b, or None.

    The phase is read off at the largest-modulus entry of the reference b
    (ties broken by lowest row-major index), which keeps the result
    deterministic and avoids dividing by near-zero entries.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    flat_b = b.reshape(-1)
    anchor = int(np.argmax(np.abs(flat_b)))
    pivot = flat_b[anchor]
    if abs(pivot) <= tol:
        return 1.0 + 0.0j if approx_eq(a, b, tol) else None
    theta = a.reshape(-1)[anchor] / pivot
    mag = abs(theta)
    if mag == 0:
        return None
    theta /= mag
    if max_abs_diff(a, theta * b) <= tol:
        return complex(theta)
    return None


def is_unitary(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return approx_eq(a @ dagger(a), identity(a.shape[0]), tol)


def fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """|<u|v>|^2 for normalized kets."""
    return float(abs(np.vdot(u, v)) ** 2)
