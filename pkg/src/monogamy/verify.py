"""Random-sampling verification of the inequalities and parameter-sweep scans.

Every report is deterministic for a fixed (seed, n, grid): sampling uses a
single PCG64 generator and cells are emitted in canonical order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .measures import MeasureKind, MeasureVector, measure_vector
from .states import PureState, haar_random_amps, w_class_state

MAX_FAILURE_SAMPLES = 100

# Worked-example fixtures: pairwise values, the associated ratio parameter and
# the measured one-vs-rest value.
EXAMPLE1_PAIRWISE = (math.sqrt(6) / 6, 0.5)  # concurrences C_{A1A2}, C_{A1A3}
EXAMPLE1_A = math.sqrt(6) / 2
EXAMPLE1_MEASURED = math.sqrt(21) / 6
EXAMPLE2_PAIRWISE = (0.25, 0.5)  # SCRENoA values
EXAMPLE2_S_MIN = 0.6
EXAMPLE2_A = 2**0.6
EXAMPLE2_MEASURED = 0.75

# Polygamy sampling: ratio condition becomes vacuous as the two pairwise
# values approach each other; samples with log2(ratio) below this floor are
# skipped rather than evaluated at a degenerate exponent.
MIN_LOG2_RATIO = 0.05


@dataclass(frozen=True)
class SweepGrid:
    """Two named, evenly stepped axes (end points inclusive)."""

    axis1: str
    start1: float
    stop1: float
    step1: float
    axis2: str
    start2: float
    stop2: float
    step2: float

    def __post_init__(self):
        if self.step1 <= 0 or self.step2 <= 0:
            raise ValueError("grid steps must be positive")
        if self.stop1 < self.start1 or self.stop2 < self.start2:
            raise ValueError("grid ranges must be nonempty")
        if len(self.values1()) * len(self.values2()) > 10**6:
            raise ValueError("grid size exceeds 10^6 cells")

    def values1(self) -> np.ndarray:
        return _axis(self.start1, self.stop1, self.step1)

    def values2(self) -> np.ndarray:
        return _axis(self.start2, self.stop2, self.step2)


def _axis(start: float, stop: float, step: float) -> np.ndarray:
    n = int(round((stop - start) / step)) + 1
    vals = start + step * np.arange(n)
    return vals[vals <= stop + 1e-12]


@dataclass
class VerificationReport:
    total: int = 0
    failures: int = 0
    skipped: int = 0
    worst_margin: float = math.inf
    failure_samples: list = field(default_factory=list)

    def record(self, margin: float, tol: float, sample=None):
        self.total += 1
        if margin < self.worst_margin:
            self.worst_margin = margin
        if margin < -tol:
            self.failures += 1
            if len(self.failure_samples) < MAX_FAILURE_SAMPLES:
                self.failure_samples.append((sample, margin))

    def skip(self):
        self.skipped += 1

    def merge(self, other: "VerificationReport"):
        self.total += other.total
        self.failures += other.failures
        self.skipped += other.skipped
        self.worst_margin = min(self.worst_margin, other.worst_margin)
        room = MAX_FAILURE_SAMPLES - len(self.failure_samples)
        self.failure_samples.extend(other.failure_samples[:room])

    def summary(self) -> dict:
        worst = self.worst_margin if self.total else None
        return {
            "total": self.total,
            "failures": self.failures,
            "skipped": self.skipped,
            "worst_margin": worst,
        }


def _record_array(report: VerificationReport, margins: np.ndarray, tol, label: str):
    margins = np.asarray(margins, dtype=float).ravel()
    report.total += margins.size
    if margins.size:
        worst = float(margins.min())
        report.worst_margin = min(report.worst_margin, worst)
        bad = margins < -tol if np.isscalar(tol) else margins < -np.asarray(tol).ravel()
        nbad = int(np.count_nonzero(bad))
        report.failures += nbad
        if nbad:
            idx = np.flatnonzero(bad)[: MAX_FAILURE_SAMPLES - len(report.failure_samples)]
            for i in idx:
                report.failure_samples.append((f"{label}[{i}]", float(margins[i])))


def verify_scalar(n: int, seed: int = 0, tol: float = 1e-12,
                  rtol: float = 1e-9) -> VerificationReport:
    """Sample the scalar inequality families and count violations.

    Families (n samples each): the lower bound on (1+t)^x for 0 < x <= 1,
    the upper bound for x >= 1, lower dominance over the jfq/zjz1/zjz2
    variants, and upper dominance below them.  Absolute tolerance ``tol``
    for O(1) magnitudes, relative tolerance ``rtol`` for the large-x upper
    families.
    """
    report = VerificationReport()
    n = int(n)
    if n == 0:
        report.worst_margin = math.inf
        return report
    rng = np.random.default_rng(seed)

    a = rng.uniform(1.0, 10.0, n)
    t = rng.uniform(a, 100.0)
    x_lo = rng.uniform(0.0, 1.0, n)
    x_lo[x_lo == 0.0] = 1.0
    x_half = rng.uniform(0.0, 0.5, n)
    x_up = rng.uniform(1.0, 8.0, n)
    x_dom = rng.uniform(1.0, 6.0, n)
    p = rng.uniform(0.5, 1.0, n)
    q = rng.uniform(0.0, 1.0, n)
    q[q == 0.0] = 1.0

    exact_lo = np.power(1 + t, x_lo)
    ours_lo = bounds.scalar_lower_bound(t, x_lo, a)
    _record_array(report, exact_lo - ours_lo, tol, "scalar-lower")

    exact_up = np.power(1 + t, x_up)
    ours_up = bounds.scalar_upper_bound(t, x_up, a)
    _record_array(report, (ours_up - exact_up) / exact_up, rtol, "scalar-upper")

    jfq_lo = bounds.scalar_lower_bound(t, x_lo, a, "jfq")
    _record_array(report, bounds.scalar_lower_bound(t, x_lo, a) - jfq_lo, tol,
                  "dominance-lower-jfq")
    # ours at x in [0, 1/2]: evaluate directly, the x = 0 boundary is benign
    ours_half = bounds._scalar_bound(t, a, x_half, "ours", 0.5)
    zjz1_lo = bounds.scalar_lower_bound(t, x_half, a, "zjz1", p=p)
    zjz2_lo = bounds.scalar_lower_bound(t, x_half, a, "zjz2")
    _record_array(report, ours_half - zjz1_lo, tol, "dominance-lower-zjz1")
    _record_array(report, ours_half - zjz2_lo, tol, "dominance-lower-zjz2")

    ours_dom = bounds.scalar_upper_bound(t, x_dom, a)
    exact_dom = np.power(1 + t, x_dom)
    for name, variant, param in (
        ("dominance-upper-jfq", "jfq", 0.5),
        ("dominance-upper-zjz1", "zjz1", q),
        ("dominance-upper-zjz2", "zjz2", 0.5),
    ):
        other = bounds._scalar_bound(t, a, x_dom, variant, param)
        _record_array(report, (other - ours_dom) / exact_dom, rtol, name)
    return report


def _haar_concurrence_vector(dims: tuple[int, ...], rng: np.random.Generator) -> MeasureVector:
    psi = PureState(dims, haar_random_amps(int(np.prod(dims)), rng))
    return measure_vector(psi, MeasureKind.CONCURRENCE)


def default_alpha_grid(r: float = 2.0) -> np.ndarray:
    return np.linspace(0.25, float(r), 8)


def verify_monogamy_states(n: int, seed: int = 0, r: float = 2.0,
                           alpha_grid=None, tol: float = 1e-8,
                           n_qubits: int = 3) -> VerificationReport:
    """Check the weighted monogamy bound on Haar-random qubit states.

    Uses concurrence with base exponent ``r`` and the tightest admissible
    ratio parameter a = max(1, max_admissible_a).  Tripartite states use the
    two-term bound; more parties use the ordered weighted sum.
    """
    report = VerificationReport()
    rng = np.random.default_rng(seed)
    if alpha_grid is None:
        alpha_grid = default_alpha_grid(r)
    dims = (2,) * int(n_qubits)
    for k in range(int(n)):
        mv = _haar_concurrence_vector(dims, rng)
        for alpha in alpha_grid:
            spec = bounds.BoundSpec("monogamy", r, float(alpha))
            rep = bounds.monogamy_bound(mv, spec)
            report.record(rep.margin, tol, sample=(k, float(alpha)))
    return report


def verify_polygamy_states(n: int, seed: int = 0, s: float | None = None,
                           beta_grid=None, tol: float = 1e-8) -> VerificationReport:
    """Check the weighted polygamy bound on random W-class states (SCRENoA).

    When ``s`` is None, each sample uses s = min(1, log2(v1/v2)) of its
    sorted pairwise values, mirroring the worked-example construction; the
    ratio parameter is then a = 2^s.  Samples whose ratio condition fails
    (or whose pairwise ratio is degenerate) are skipped, not failed.
    """
    report = VerificationReport()
    rng = np.random.default_rng(seed)
    for k in range(int(n)):
        coeffs = np.abs(rng.standard_normal(3))
        coeffs /= np.linalg.norm(coeffs)
        mv = measure_vector(w_class_state(*coeffs), MeasureKind.SCRENOA)
        v = np.sort(np.asarray(mv.pairwise))[::-1]
        if v[1] == 0 or v[0] == 0:
            report.skip()
            continue
        if s is None:
            log2_ratio = math.log2(v[0] / v[1])
            if log2_ratio < MIN_LOG2_RATIO:
                report.skip()
                continue
            s_k = min(1.0, log2_ratio)
            a_k = 2.0**s_k
        else:
            s_k = float(s)
            a_k = None
        if not bounds.ratio_condition(v, a_k if a_k is not None else 1.0, s_k):
            report.skip()
            continue
        grid = np.linspace(s_k, 3.0, 8) if beta_grid is None else beta_grid
        for beta in grid:
            if beta < s_k:
                continue
            spec = bounds.BoundSpec("polygamy", s_k, float(beta), a=a_k)
            rep = bounds.polygamy_bound(mv, spec, strict=False)
            if not rep.ratio_condition_ok:
                report.skip()
                continue
            report.record(rep.margin, tol, sample=(k, s_k, float(beta)))
    return report


def default_grid(example: str) -> SweepGrid:
    """Default scan grids for the worked examples; only the axis ranges are
    fixed, the step sizes are this library's choice."""
    if example == "example1":
        return SweepGrid("alpha", 0.0, 1.0, 0.02, "r", 2.0, 5.0, 0.05)
    if example == "example2":
        return SweepGrid("s", 0.6, 1.0, 0.01, "beta", 0.6, 3.0, 0.05)
    raise ValueError(f"unknown example {example!r}")


def _example1_cell(alpha: float, r: float) -> tuple[float, float | None, float]:
    """(Z1, Z2, Z3) lower bounds for the Schmidt-state fixture; Z2 is None
    outside its alpha/r <= 1/2 validity region."""
    v2, v1 = EXAMPLE1_PAIRWISE  # smaller, larger
    a = EXAMPLE1_A
    x = alpha / r
    z1 = bounds._two_term(v2, v1, alpha, x, a, "jfq", 0.5)
    z3 = bounds._two_term(v2, v1, alpha, x, a, "ours", 0.5)
    z2 = bounds._two_term(v2, v1, alpha, x, a, "zjz2", 0.5) if x <= 0.5 else None
    return z1, z2, z3


def _example2_cell(beta: float, s: float) -> tuple[float, float, float]:
    """(W1, W2, W3) upper bounds for the W-state fixture."""
    v2, v1 = EXAMPLE2_PAIRWISE
    a = EXAMPLE2_A
    x = beta / s
    w1 = bounds._two_term(v2, v1, beta, x, a, "jfq", 0.5)
    w2 = bounds._two_term(v2, v1, beta, x, a, "zjz2", 0.5)
    w3 = bounds._two_term(v2, v1, beta, x, a, "ours", 0.5)
    return w1, w2, w3


def dominance_scan(example: str, grid: SweepGrid | None = None) -> tuple[list[str], list[tuple]]:
    """Tabulate bound surfaces over a grid.

    example1 rows: (alpha, r, Z1, Z2, Z3) with Z2 None out of domain.
    example2 rows: (beta, s, W1, W2, W3, W1 - W3, W2 - W3); only cells with
    beta >= s are emitted.
    """
    if grid is None:
        grid = default_grid(example)
    rows = []
    if example == "example1":
        header = ["alpha", "r", "Z1", "Z2", "Z3"]
        for alpha in grid.values1():
            for r in grid.values2():
                z1, z2, z3 = _example1_cell(float(alpha), float(r))
                rows.append((float(alpha), float(r), z1, z2, z3))
        return header, rows
    if example == "example2":
        header = ["beta", "s", "W1", "W2", "W3", "W1_minus_W3", "W2_minus_W3"]
        for s in grid.values1():
            for beta in grid.values2():
                if beta < s - 1e-12:
                    continue
                w1, w2, w3 = _example2_cell(float(beta), float(s))
                rows.append((float(beta), float(s), w1, w2, w3, w1 - w3, w2 - w3))
        return header, rows
    raise ValueError(f"unknown example {example!r}")


def verify_dominance(example: str, grid: SweepGrid | None = None,
                     tol: float = 1e-12) -> VerificationReport:
    """Assert the dominance-ordering claims over the scan grid.

    example1: Z3 >= Z1 for alpha > 0, and Z3 >= Z2 wherever the zjz domain
    alpha/r <= 1/2 applies (the alpha = 0 boundary is assertion-exempt).
    example2: W1 - W3 >= 0 and W2 - W3 >= 0 everywhere.
    """
    report = VerificationReport()
    _, rows = dominance_scan(example, grid)
    if example == "example1":
        for alpha, r, z1, z2, z3 in rows:
            if alpha == 0:
                report.skip()
                continue
            report.record(z3 - z1, tol, sample=("Z3-Z1", alpha, r))
            if z2 is not None:
                report.record(z3 - z2, tol, sample=("Z3-Z2", alpha, r))
    else:
        for beta, s, w1, w2, w3, d1, d2 in rows:
            report.record(d1, tol, sample=("W1-W3", beta, s))
            report.record(d2, tol, sample=("W2-W3", beta, s))
    return report
