"""Bipartite correlation measures on small multiqubit states.

Negativity follows the un-halved convention N = ||rho^{T_A}|| - 1 throughout
(the conventional halved value is available via ``halved=True``).  SCREN and
SCRENoA are provided only where closed forms exist: pure states and two-qubit
mixed states.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from . import linalg
from .states import DensityMatrix, PureState, reduce_density, to_density

# Eigenvalues of rho @ rho_tilde above this floor are treated as round-off
# negatives and clipped before the square root.
_MU_EIG_FLOOR = -1e-10

MAX_QUBITS = 6

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


class MeasureKind(str, Enum):
    CONCURRENCE = "concurrence"
    NEGATIVITY_SCREN = "negativity_scren"
    SCRENOA = "screnoa"
    CONCURRENCE_ASSISTANCE = "concurrence_assistance"


@dataclass(frozen=True)
class MeasureVector:
    """One-vs-rest value and pairwise values of a measure on one state.

    ``pairwise[i]`` is the measure on the reduction to subsystems (0, i+1).
    """

    kind: MeasureKind
    one_vs_rest: float
    pairwise: tuple[float, ...]

    def __post_init__(self):
        vals = (self.one_vs_rest, *self.pairwise)
        if not all(np.isfinite(v) and v >= 0 for v in vals):
            raise ValueError(f"measure values must be finite and nonnegative: {vals}")
        object.__setattr__(self, "pairwise", tuple(float(v) for v in self.pairwise))
        object.__setattr__(self, "one_vs_rest", float(self.one_vs_rest))


def _check_bipartition(n: int, part_a: Sequence[int]) -> list[int]:
    part = sorted(set(int(i) for i in part_a))
    if not part or len(part) >= n:
        raise ValueError(f"part_a {part} is not a proper nonempty subset of {n} subsystems")
    if any(i < 0 or i >= n for i in part):
        raise ValueError(f"part_a {part} out of range for {n} subsystems")
    return part


def concurrence_pure(psi: PureState, part_a: Sequence[int]) -> float:
    """Pure-state concurrence sqrt(2 (1 - Tr rho_A^2)) across a bipartition."""
    part = _check_bipartition(psi.n_subsystems, part_a)
    rho_a = linalg.partial_trace(
        np.outer(psi.amps, psi.amps.conj()), psi.dims, part
    )
    purity = float(np.trace(rho_a @ rho_a).real)
    return float(np.sqrt(max(0.0, 2.0 * (1.0 - purity))))


def _wootters_mu(rho: DensityMatrix) -> np.ndarray:
    """Square roots of the eigenvalues of rho @ rho_tilde, descending.

    Computed from the similar Hermitian matrix sqrt(rho) rho_tilde sqrt(rho),
    which is much better conditioned than the non-Hermitian product.
    """
    if rho.dims != (2, 2):
        raise ValueError(f"expected a two-qubit state, got dims {rho.dims}")
    m = rho.mat
    rho_tilde = _YY @ m.conj() @ _YY
    s = linalg.psd_sqrt(m)
    ev = np.linalg.eigvalsh(s @ rho_tilde @ s)
    if ev.min() < _MU_EIG_FLOOR:
        raise ValueError(f"spin-flip spectrum has eigenvalue {ev.min():.3e} < 0")
    # round-off residue of structural zeros would blow up to ~1e-8 under the
    # square root; clip relative to the dominant eigenvalue
    ev = np.clip(ev, 0.0, None)
    ev[ev < 1e-13 * ev.max(initial=0.0)] = 0.0
    mu = np.sqrt(ev)
    return np.sort(mu)[::-1]


def concurrence_2q(rho: DensityMatrix) -> float:
    """Two-qubit mixed-state concurrence via the spin-flip closed form."""
    mu = _wootters_mu(rho)
    return float(max(0.0, mu[0] - mu[1] - mu[2] - mu[3]))


def concurrence_assistance_2q(rho: DensityMatrix) -> float:
    """Two-qubit concurrence of assistance: the sum of the spin-flip roots."""
    return float(np.sum(_wootters_mu(rho)))


def negativity(rho: DensityMatrix, part_a: Sequence[int], halved: bool = False) -> float:
    """Negativity ||rho^{T_A}|| - 1 (un-halved convention by default)."""
    part = _check_bipartition(rho.n_subsystems, part_a)
    pt = rho.mat
    for p in part:
        pt = linalg.partial_transpose(pt, rho.dims, p)
    val = linalg.trace_norm(pt) - 1.0
    val = max(0.0, val)
    return float(val / 2.0 if halved else val)


def negativity_pure(psi: PureState, part_a: Sequence[int]) -> float:
    """Pure-state negativity (Tr sqrt(rho_A))^2 - 1."""
    part = _check_bipartition(psi.n_subsystems, part_a)
    rho_a = linalg.partial_trace(np.outer(psi.amps, psi.amps.conj()), psi.dims, part)
    lam = np.clip(np.linalg.eigvalsh(rho_a), 0.0, None)
    return float(max(0.0, np.sum(np.sqrt(lam)) ** 2 - 1.0))


def scren_pure(psi: PureState, part_a: Sequence[int]) -> float:
    """Squared negativity of a pure state (SCREN and SCRENoA coincide here)."""
    return negativity_pure(psi, part_a) ** 2


def scren_2q(rho: DensityMatrix) -> float:
    """Two-qubit SCREN; pure-state negativity equals concurrence on two
    qubits, so the convex-roof optimum is the squared concurrence."""
    return concurrence_2q(rho) ** 2


def screnoa_2q(rho: DensityMatrix) -> float:
    """Two-qubit SCRENoA: squared concurrence of assistance (the assisted
    convex-roof optima of negativity and concurrence coincide on two qubits)."""
    return concurrence_assistance_2q(rho) ** 2


_PAIRWISE = {
    MeasureKind.CONCURRENCE: concurrence_2q,
    MeasureKind.NEGATIVITY_SCREN: scren_2q,
    MeasureKind.SCRENOA: screnoa_2q,
    MeasureKind.CONCURRENCE_ASSISTANCE: concurrence_assistance_2q,
}


def _one_vs_rest(psi: PureState, kind: MeasureKind) -> float:
    rest = list(range(1, psi.n_subsystems))
    if kind in (MeasureKind.CONCURRENCE, MeasureKind.CONCURRENCE_ASSISTANCE):
        # on pure states the assisted value has a single-term decomposition
        return concurrence_pure(psi, [0])
    return scren_pure(psi, [0])


def measure_vector(psi: PureState, kind: MeasureKind | str) -> MeasureVector:
    """Assemble (one-vs-rest, pairwise) values of a measure for an n-qubit
    pure state, 3 <= n <= 6."""
    kind = MeasureKind(kind)
    n = psi.n_subsystems
    if n < 3 or n > MAX_QUBITS or any(d != 2 for d in psi.dims):
        raise ValueError(
            f"measure_vector needs an n-qubit pure state with 3 <= n <= {MAX_QUBITS}, "
            f"got dims {psi.dims}"
        )
    rho = to_density(psi)
    pair_fn = _PAIRWISE[kind]
    pairwise = tuple(pair_fn(reduce_density(rho, [0, i])) for i in range(1, n))
    return MeasureVector(kind, _one_vs_rest(psi, kind), pairwise)
