"""Entropy and channel-capacity calculations: von Neumann entropy, the
Holevo bound, the dense-coding capacity chi = log2(d_A) + S(B) - S(AB),
and counting orthogonal states reachable by sender-local operations."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bellbasis import apply_pauli_string, pauli_string
from .statevec import DensityMatrix, Ket, hermitian_eigenvalues

EIGENVALUE_FLOOR = 1e-12  # eigenvalues at or below this count as exact zeros
ORTHOGONALITY_TOL = 1e-8


def von_neumann_entropy(m: DensityMatrix | np.ndarray) -> float:
    """S = -sum(p * log2 p) over the eigenvalues, in bits."""
    if not isinstance(m, DensityMatrix):
        m = DensityMatrix(m)
    eigs = hermitian_eigenvalues(m)
    if eigs[-1] < -1e-10:
        raise ValueError(f"negative eigenvalue {eigs[-1]}; not a density matrix")
    s = -sum(float(p) * math.log2(p) for p in eigs if p > EIGENVALUE_FLOOR)
    return max(0.0, s)


def holevo_bound(d: int) -> float:
    """log2(d): the most classical information a d-dimensional system carries."""
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    return math.log2(d)


def _sig12(x: float) -> float:
    """Round to 12 significant digits, the precision reports are emitted at."""
    return float(f"{x:.12g}")


@dataclass(frozen=True)
class CapacityReport:
    """Dense-coding capacity audit for one shared state."""

    d_A: int
    entropy_B: float
    entropy_AB: float
    chi: float
    holevo: float

    def to_dict(self) -> dict:
        return {
            "d_A": self.d_A,
            "S_B": self.entropy_B,
            "S_AB": self.entropy_AB,
            "chi": self.chi,
            "holevo": self.holevo,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CapacityReport:
        return cls(
            d_A=int(data["d_A"]),
            entropy_B=float(data["S_B"]),
            entropy_AB=float(data["S_AB"]),
            chi=float(data["chi"]),
            holevo=float(data["holevo"]),
        )


def dense_coding_capacity(rho_ab: DensityMatrix, d_a: int, bob_dims: int) -> CapacityReport:
    """chi = log2(d_A) + S(rho_B) - S(rho_AB) for the given bipartition.

    The sender's subsystem is the left (more significant) tensor factor;
    ``bob_dims`` is passed explicitly because a flat matrix does not
    describe its own split.
    """
    if d_a < 1 or bob_dims < 1 or d_a * bob_dims != rho_ab.dim:
        raise ValueError(
            f"bipartition {d_a} x {bob_dims} does not match dimension {rho_ab.dim}"
        )
    rho4 = rho_ab.entries.reshape(d_a, bob_dims, d_a, bob_dims)
    rho_b = np.trace(rho4, axis1=0, axis2=2)
    s_b = von_neumann_entropy(DensityMatrix(rho_b))
    s_ab = von_neumann_entropy(rho_ab)
    return CapacityReport(
        d_A=d_a,
        entropy_B=_sig12(s_b),
        entropy_AB=_sig12(s_ab),
        chi=_sig12(math.log2(d_a) + s_b - s_ab),
        holevo=_sig12(holevo_bound(d_a * bob_dims)),
    )


def orthogonal_orbit_count(k: Ket, alice_qubits: int) -> int:
    """Size of a greedy maximal mutually-orthogonal set among the states the
    sender can reach from k with local Pauli strings.

    Candidates are visited in ascending string index; one is kept when its
    overlap with every kept state stays below 1e-8 in modulus.  The overlaps
    arising here are exactly 0, 1/2, 1/sqrt(2) or 1 up to rounding, so the
    greedy pass has no ties.
    """
    if k.num_qubits != 2 * alice_qubits:
        raise ValueError(f"expected {2 * alice_qubits} qubits, got {k.num_qubits}")
    kept: list[np.ndarray] = []
    for j in range(4**alice_qubits):
        candidate = apply_pauli_string(k, pauli_string(j, alice_qubits)).amplitudes
        if all(abs(np.vdot(other, candidate)) < ORTHOGONALITY_TOL for other in kept):
            kept.append(candidate)
    return len(kept)
