"""Relation checking for tensor-product braid/Temperley-Lieb representations.

A representation is the family e_i = embed(E, i, n), b_i = embed(B, i, n)
built from a single 4x4 projector E and a 4x4 braid matrix B.  The checkers
compute entrywise residuals for each defining relation and collect them in
RelationReport records with stable relation-id strings, so reports can be
diffed across runs.

Relation families:
  TL      e^2 = e, e_i e_{i+-1} e_i = d^-2 e_i, far commutation
  Braid   b_i b_{i+-1} b_i = b_{i+-1} b_i b_{i+-1}, far commutation
  Mixed   b - b^-1 = w(1 - d e), e b = b e = sigma e, wing conjugation
  Tangle  b_{i+-1} b_i e_{i+-1} = e_i b_{i+-1} b_i = d e_i e_{i+-1}
  Brauer  the undeformed case: E = EPR projector, B = SWAP, d = 2
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gates import EPR, I2, brauer_projector, pauli_w, permutation_p
from .linalg import (
    DEFAULT_TOL,
    dagger,
    embed,
    identity,
    is_unitary,
    kron,
    max_abs_diff,
    mul,
    outer,
)


@dataclass(frozen=True)
class BmwParams:
    """The algebra parameters read off a braid matrix spectrum."""

    sigma: complex
    w: complex
    d: float
    lambdas: tuple[complex, complex, complex]  # (lambda1, lambda2, lambda3)

    def constraint_residual(self) -> float:
        """|d - (1 - (sigma - 1/sigma)/w)|, zero for a consistent triple."""
        return abs(self.d - (1 - (self.sigma - 1 / self.sigma) / self.w))


@dataclass
class RelationReport:
    family: str
    site_count: int
    tolerance: float
    entries: list[tuple[str, float]] = field(default_factory=list)

    def add(self, relation_id: str, residual: float) -> None:
        self.entries.append((relation_id, float(residual)))

    @property
    def max_residual(self) -> float:
        return max((r for _, r in self.entries), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def worst(self) -> tuple[str, float]:
        return max(self.entries, key=lambda item: item[1])


@dataclass(frozen=True)
class Representation:
    """Embedded generators e_1..e_{n-1}, b_1..b_{n-1} on n sites."""

    n: int
    e: tuple[np.ndarray, ...]
    b: tuple[np.ndarray, ...]

    def e_at(self, i: int) -> np.ndarray:
        return self.e[i - 1]

    def b_at(self, i: int) -> np.ndarray:
        return self.b[i - 1]


def build_rep(E: np.ndarray, B: np.ndarray, n: int) -> Representation:
    if n < 2:
        raise ValueError(f"need at least 2 sites, got {n}")
    E = np.asarray(E, dtype=complex)
    B = np.asarray(B, dtype=complex)
    es = tuple(embed(E, i, n) for i in range(1, n))
    bs = tuple(embed(B, i, n) for i in range(1, n))
    return Representation(n=n, e=es, b=bs)


def derive_params(B: np.ndarray, tol: float = 1e-8) -> BmwParams:
    """Read (sigma, w, d) off the eigenvalues of a 4x4 braid matrix.

    The matrix must have exactly three distinct eigenvalues.  sigma is the
    one whose complementary pair multiplies to -1; that selection must be
    unique, otherwise the spectrum does not fit the three-eigenvalue
    pattern and we refuse to guess.
    """
    B = np.asarray(B, dtype=complex)
    if B.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {B.shape}")
    eigvals = np.linalg.eigvals(B)
    clusters: list[list[complex]] = []
    for lam in eigvals:
        for cluster in clusters:
            if abs(lam - cluster[0]) <= tol:
                cluster.append(lam)
                break
        else:
            clusters.append([lam])
    if len(clusters) != 3:
        raise ValueError(
            f"expected 3 distinct eigenvalues, found {len(clusters)} "
            f"(tolerance {tol:g})"
        )
    means = [complex(np.mean(c)) for c in clusters]

    candidates = []
    for k in range(3):
        sigma = means[k]
        lam2, lam3 = (means[m] for m in range(3) if m != k)
        if abs(lam2 * lam3 + 1) > tol:
            continue
        w = lam2 + lam3
        if abs(w) <= tol:
            continue
        d = 1 - (sigma - 1 / sigma) / w
        if abs(d.imag) > tol:
            continue
        candidates.append(BmwParams(sigma=sigma, w=w, d=float(d.real), lambdas=(sigma, lam2, lam3)))
    if len(candidates) != 1:
        raise ValueError(
            f"eigenvalue pattern is ambiguous: {len(candidates)} candidate "
            "sigma assignments satisfy lambda2*lambda3 = -1 with real d"
        )
    return candidates[0]


def _inverse(b: np.ndarray) -> np.ndarray:
    # unitary fast path, LU fallback for non-unitary braid matrices
    if is_unitary(b, 1e-12):
        return dagger(b)
    return np.linalg.inv(b)


def check_temperley_lieb(rep: Representation, d: float, tol: float = DEFAULT_TOL) -> RelationReport:
    report = RelationReport(family="TL", site_count=rep.n, tolerance=tol)
    dinv2 = 1.0 / (d * d)
    for i in range(1, rep.n):
        ei = rep.e_at(i)
        report.add(f"TL.e{i}^2=e{i}", max_abs_diff(ei @ ei, ei))
    for i in range(1, rep.n):
        for j in (i + 1, i - 1):
            if not 1 <= j <= rep.n - 1:
                continue
            ei, ej = rep.e_at(i), rep.e_at(j)
            report.add(f"TL.e{i}e{j}e{i}=d^-2.e{i}", max_abs_diff(mul(ei, ej, ei), dinv2 * ei))
    _far_commutators(report, "TL", rep.e, "e")
    return report


def check_braid(rep: Representation, tol: float = DEFAULT_TOL) -> RelationReport:
    report = RelationReport(family="Braid", site_count=rep.n, tolerance=tol)
    for i in range(1, rep.n - 1):
        bi, bj = rep.b_at(i), rep.b_at(i + 1)
        report.add(
            f"braid.b{i}b{i + 1}b{i}=b{i + 1}b{i}b{i + 1}",
            max_abs_diff(mul(bi, bj, bi), mul(bj, bi, bj)),
        )
    _far_commutators(report, "braid", rep.b, "b")
    return report


def check_mixed(rep: Representation, params: BmwParams, tol: float = DEFAULT_TOL) -> RelationReport:
    report = RelationReport(family="Mixed", site_count=rep.n, tolerance=tol)
    dim = 2**rep.n
    one = identity(dim)
    for i in range(1, rep.n):
        ei, bi = rep.e_at(i), rep.b_at(i)
        bi_inv = _inverse(bi)
        report.add(
            f"mixed.b{i}-b{i}^-1=w(1-d.e{i})",
            max_abs_diff(bi - bi_inv, params.w * (one - params.d * ei)),
        )
        report.add(f"mixed.e{i}b{i}=sigma.e{i}", max_abs_diff(ei @ bi, params.sigma * ei))
        report.add(f"mixed.b{i}e{i}=sigma.e{i}", max_abs_diff(bi @ ei, params.sigma * ei))
    for i in range(1, rep.n):
        for j in (i + 1, i - 1):
            if not 1 <= j <= rep.n - 1:
                continue
            ei, ej = rep.e_at(i), rep.e_at(j)
            bj = rep.b_at(j)
            bi_inv = _inverse(rep.b_at(i))
            report.add(
                f"mixed.b{j}e{i}b{j}=b{i}^-1e{j}b{i}^-1",
                max_abs_diff(mul(bj, ei, bj), mul(bi_inv, ej, bi_inv)),
            )
    return report


def check_tangle(rep: Representation, d: float, tol: float = DEFAULT_TOL) -> RelationReport:
    """Tangle relations on the chain, plus their 3-site matrix forms.

    The chain relations are b_{i+-1} b_i e_{i+-1} = e_i b_{i+-1} b_i
    = d e_i e_{i+-1}.  On 3 sites with local matrices (E, B) they are
    equivalent to four explicit 8x8 identities, which are re-checked
    independently as a guard against index bookkeeping errors.
    """
    report = RelationReport(family="Tangle", site_count=rep.n, tolerance=tol)
    for i in range(1, rep.n):
        for s, label in ((1, "+1"), (-1, "-1")):
            j = i + s
            if not 1 <= j <= rep.n - 1:
                continue
            ei, ej = rep.e_at(i), rep.e_at(j)
            bi, bj = rep.b_at(i), rep.b_at(j)
            rhs = d * (ei @ ej)
            report.add(f"tangle.{label}.left.b{j}b{i}e{j}", max_abs_diff(mul(bj, bi, ej), rhs))
            report.add(f"tangle.{label}.right.e{i}b{j}b{i}", max_abs_diff(mul(ei, bj, bi), rhs))
    _append_matrix_tangle_forms(report, rep, d)
    return report


def _append_matrix_tangle_forms(report: RelationReport, rep: Representation, d: float) -> None:
    if rep.n < 3:
        return
    e1, e2 = rep.e_at(1), rep.e_at(2)
    b1, b2 = rep.b_at(1), rep.b_at(2)
    forms = [
        ("tangle.matrix.1", mul(b1, b2, e1), d * mul(e2, e1)),
        ("tangle.matrix.2", mul(b2, b1, e2), d * mul(e1, e2)),
        ("tangle.matrix.3", mul(e1, b2, b1), d * mul(e1, e2)),
        ("tangle.matrix.4", mul(e2, b1, b2), d * mul(e2, e1)),
    ]
    for relation_id, lhs, rhs in forms:
        report.add(relation_id, max_abs_diff(lhs, rhs))


def check_all(
    E: np.ndarray,
    B: np.ndarray,
    params: BmwParams,
    n: int = 3,
    tol: float = DEFAULT_TOL,
) -> list[RelationReport]:
    """Run the four braid/TL/mixed/tangle families for one (E, B) pair."""
    rep = build_rep(E, B, n)
    return [
        check_temperley_lieb(rep, params.d, tol),
        check_braid(rep, tol),
        check_mixed(rep, params, tol),
        check_tangle(rep, params.d, tol),
    ]


def check_brauer(n: int = 3, tol: float = DEFAULT_TOL) -> list[RelationReport]:
    """Relation suite for the undeformed pair (EPR projector, SWAP).

    The swap generators square to one and commute with the projectors
    pointwise (e v = v e = e), so the mixed family is replaced by those
    two identities; everything else matches the deformed case with d = 2.
    """
    E = brauer_projector()
    P = permutation_p()
    rep = build_rep(E, P, n)
    reports = [
        check_temperley_lieb(rep, 2.0, tol),
        check_braid(rep, tol),
        check_tangle(rep, 2.0, tol),
    ]
    mixed = RelationReport(family="Brauer", site_count=n, tolerance=tol)
    dim = 2**n
    for i in range(1, n):
        ei, vi = rep.e_at(i), rep.b_at(i)
        mixed.add(f"brauer.v{i}^2=1", max_abs_diff(vi @ vi, identity(dim)))
        mixed.add(f"brauer.e{i}v{i}=e{i}", max_abs_diff(ei @ vi, ei))
        mixed.add(f"brauer.v{i}e{i}=e{i}", max_abs_diff(vi @ ei, ei))
    reports.append(mixed)
    return reports


def swap_cup_cap_expansion() -> np.ndarray:
    """SWAP written as a signed sum of dressed Bell cups and caps."""
    total = np.zeros((4, 4), dtype=complex)
    for i in (0, 1):
        for j in (0, 1):
            w = pauli_w(i, j)
            dressed = kron(I2, w) @ EPR
            total += (-1) ** (i * j) * outer(dressed, dressed)
    return total


def brauer_teleportation_residuals(seed: int = 42, count: int = 20) -> dict:
    """State-level identities of the swap representation.

    Checks, over random one-qubit states: the Bell projector pulling a
    state through the resource with weight 1/2; the double swap moving a
    state across a basis pair; and the tangle product collapsing to twice
    the nested projector action.  Also reports the cup-cap expansion of
    SWAP as a matrix identity.
    """
    rng = np.random.default_rng(seed)
    E = brauer_projector()
    P = permutation_p()
    res = {
        "projector": 0.0,
        "swap": 0.0,
        "tangle": 0.0,
        "cup-cap": max_abs_diff(swap_cup_cap_expansion(), P),
    }
    basis2 = [np.eye(4)[:, k] for k in range(4)]
    for _ in range(count):
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        alpha = v / np.linalg.norm(v)
        lhs = kron(E, I2) @ kron(alpha, EPR)
        res["projector"] = max(
            res["projector"], float(np.linalg.norm(lhs - 0.5 * kron(EPR, alpha)))
        )
        for pair in basis2:
            moved = mul(kron(I2, P), kron(P, I2)) @ kron(alpha, pair)
            res["swap"] = max(
                res["swap"], float(np.linalg.norm(moved - kron(pair, alpha)))
            )
        left = mul(kron(P, I2), kron(I2, P)) @ kron(EPR, alpha)
        right = 2.0 * kron(I2, E) @ kron(EPR, alpha)
        res["tangle"] = max(res["tangle"], float(np.linalg.norm(left - right)))
    return res


def _far_commutators(report: RelationReport, prefix: str, gens, symbol: str) -> None:
    count = len(gens)
    for i in range(count):
        for j in range(i + 2, count):
            gi, gj = gens[i], gens[j]
            report.add(
                f"{prefix}.{symbol}{i + 1}{symbol}{j + 1}={symbol}{j + 1}{symbol}{i + 1}",
                max_abs_diff(gi @ gj, gj @ gi),
            )
