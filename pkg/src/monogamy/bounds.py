"""Weighted bounds on powers of correlation-measure sums.

The core scalar estimates bound (1+t)^x for t >= a >= 1: from below for
0 < x <= 1 and from above for x >= 1.  The "ours" variant uses the
(1+a)^{x-1} / (1+1/a)^{x-1} weights; "jfq", "zjz1" and "zjz2" are the three
earlier bound families kept for dominance comparison.  On top of these sit
the weighted monogamy and polygamy evaluators for measure vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .measures import MeasureKind, MeasureVector

VARIANTS = ("ours", "jfq", "zjz1", "zjz2")

# Default ceiling for the automatically chosen ratio parameter when all
# trailing pairwise values vanish and any a is admissible.
A_CAP = 1e8

# Measure kinds whose base relation is established (CKW r=2 for concurrence
# and SCREN in monogamy mode; assisted measures at s<=1 in polygamy mode).
_VERIFIED_MONOGAMY = {MeasureKind.CONCURRENCE, MeasureKind.NEGATIVITY_SCREN}
_VERIFIED_POLYGAMY = {MeasureKind.SCRENOA, MeasureKind.CONCURRENCE_ASSISTANCE}


@dataclass(frozen=True)
class BoundSpec:
    """Parameters of one weighted-bound evaluation.

    mode "monogamy": base_exp is r >= 2, target_exp is alpha in [0, r].
    mode "polygamy": base_exp is s in (0, 1], target_exp is beta >= s.
    ``a`` may be None, in which case the tightest admissible value
    max(1, max_admissible_a) is used (capped at A_CAP).  ``p`` parametrizes
    the zjz1 variant (1/2 <= p <= 1 in monogamy mode, 0 < p <= 1 in
    polygamy mode); zjz2 is zjz1 with p = 1/2.
    """

    mode: str
    base_exp: float
    target_exp: float
    a: float | None = None
    variant: str = "ours"
    p: float = 0.5

    def __post_init__(self):
        if self.mode not in ("monogamy", "polygamy"):
            raise ValueError(f"mode must be 'monogamy' or 'polygamy', got {self.mode!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        r, e = float(self.base_exp), float(self.target_exp)
        if self.mode == "monogamy":
            if r < 2:
                raise ValueError(f"monogamy base exponent must be >= 2, got {r}")
            if not 0 <= e <= r:
                raise ValueError(f"monogamy target exponent must be in [0, {r}], got {e}")
            if self.variant == "zjz1" and not 0.5 <= self.p <= 1:
                raise ValueError(f"zjz1 requires 1/2 <= p <= 1, got {self.p}")
        else:
            if not 0 < r <= 1:
                raise ValueError(f"polygamy base exponent must be in (0, 1], got {r}")
            if e < r:
                raise ValueError(f"polygamy target exponent must be >= {r}, got {e}")
            if self.variant == "zjz1" and not 0 < self.p <= 1:
                raise ValueError(f"zjz1 requires 0 < p <= 1 in polygamy mode, got {self.p}")
        if self.a is not None and self.a < 1:
            raise ValueError(f"ratio parameter a must be >= 1, got {self.a}")

    @property
    def x(self) -> float:
        """Exponent ratio alpha/r (monogamy) or beta/s (polygamy)."""
        return float(self.target_exp) / float(self.base_exp)


@dataclass(frozen=True)
class BoundReport:
    bound_value: float
    measured_value: float | None
    margin: float | None
    ratio_condition_ok: bool
    max_admissible_a: float
    a: float
    base_relation_assumed: bool = False


def _w0(variant: str, x, p: float):
    if variant == "jfq":
        return np.ones_like(np.asarray(x, dtype=float))
    if variant == "zjz1":
        return np.power(p, x)
    if variant == "zjz2":
        return np.power(0.5, x)
    raise ValueError(f"unknown variant {variant!r}")


def _check_tax(t, a, variant: str, x, lower: bool):
    t, a, x = (np.asarray(v, dtype=float) for v in (t, a, x))
    if np.any(a < 1):
        raise ValueError("ratio parameter a must satisfy a >= 1")
    if np.any(t < a):
        raise ValueError("t must satisfy t >= a")
    if lower:
        if variant in ("ours", "jfq"):
            if np.any(x <= 0) or np.any(x > 1):
                raise ValueError(f"variant {variant!r} needs 0 < x <= 1, got {x}")
        elif np.any(x < 0) or np.any(x > 0.5):
            raise ValueError(f"variant {variant!r} needs 0 <= x <= 1/2, got {x}")
    else:
        if np.any(x < 1):
            raise ValueError(f"upper bounds need x >= 1, got {x}")
    return t, a, x


def _scalar_bound(t, a, x, variant: str, p: float):
    if variant == "ours":
        val = np.power(1 + a, x - 1) + np.power(1 + 1 / a, x - 1) * np.power(t, x)
    else:
        w0 = _w0(variant, x, p)
        val = w0 + (np.power(1 + a, x) - w0) / np.power(a, x) * np.power(t, x)
    return val if val.ndim else float(val)


def scalar_lower_bound(t, x, a, variant: str = "ours", p: float = 0.5):
    """Lower bound on (1+t)^x for t >= a >= 1 and 0 < x <= 1.

    The zjz variants are only valid for 0 <= x <= 1/2 (with 1/2 <= p <= 1);
    evaluating them outside that region is an error.  Accepts scalars or
    broadcastable arrays.
    """
    if variant == "zjz1" and (np.any(np.asarray(p) < 0.5) or np.any(np.asarray(p) > 1)):
        raise ValueError(f"zjz1 lower bound requires 1/2 <= p <= 1, got {p}")
    t, a, x = _check_tax(t, a, variant, x, lower=True)
    return _scalar_bound(t, a, x, variant, p)


def scalar_upper_bound(t, x, a, variant: str = "ours", p: float = 0.5):
    """Upper bound on (1+t)^x for t >= a >= 1 and x >= 1.

    Same four formulas as the lower bound; the zjz1 parameter q satisfies
    0 < q <= 1 here (passed as ``p``).
    """
    if variant == "zjz1" and (np.any(np.asarray(p) <= 0) or np.any(np.asarray(p) > 1)):
        raise ValueError(f"zjz1 upper bound requires 0 < q <= 1, got {p}")
    t, a, x = _check_tax(t, a, variant, x, lower=False)
    return _scalar_bound(t, a, x, variant, p)


def _check_values(values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("values must be a nonempty 1-d sequence")
    if np.any(v < 0) or not np.all(np.isfinite(v)):
        raise ValueError(f"values must be finite and nonnegative, got {list(v)}")
    return v


def ordered_weighted_sum(values, x: float, a: float) -> float:
    """Weighted power sum (1+a)^{x-1} sum_i ((1+1/a)^{x-1})^{n-i} v_(i)^x.

    ``values`` must already be sorted in descending order; v_(i) is the i-th
    largest.  Under the ratio condition this bounds (sum v_i)^x from below
    for 0 < x <= 1 and from above for x >= 1.
    """
    v = _check_values(values)
    if np.any(np.diff(v) > 0):
        raise ValueError("values must be sorted in descending order")
    x, a = float(x), float(a)
    if a < 1:
        raise ValueError(f"ratio parameter a must be >= 1, got {a}")
    if x <= 0:
        raise ValueError(f"exponent ratio x must be positive, got {x}")
    n = v.size
    w = (1 + 1 / a) ** (x - 1)
    weights = w ** np.arange(n - 1, -1, -1, dtype=float)
    return float((1 + a) ** (x - 1) * np.sum(weights * np.power(v, x)))


def ratio_condition(values, a: float, exponent: float, rtol: float = 1e-12) -> bool:
    """True iff v_(i)^exp >= a v_(i+1)^exp for all consecutive sorted pairs.

    Pairs whose successor is zero pass vacuously.  ``rtol`` absorbs round-off
    so that a = max_admissible_a itself passes.
    """
    v = np.sort(_check_values(values))[::-1]
    a, exponent = float(a), float(exponent)
    if a < 1:
        raise ValueError(f"ratio parameter a must be >= 1, got {a}")
    if exponent <= 0:
        raise ValueError(f"exponent must be positive, got {exponent}")
    for hi, lo in zip(v[:-1], v[1:]):
        if lo == 0:
            continue
        if hi**exponent < a * lo**exponent * (1.0 - rtol):
            return False
    return True


def max_admissible_a(values, exponent: float) -> float:
    """Largest a satisfying the ratio condition: min over consecutive sorted
    pairs of (v_(i)/v_(i+1))^exponent, +inf when every successor is zero."""
    v = np.sort(_check_values(values))[::-1]
    exponent = float(exponent)
    if exponent <= 0:
        raise ValueError(f"exponent must be positive, got {exponent}")
    best = np.inf
    for hi, lo in zip(v[:-1], v[1:]):
        if lo == 0:
            continue
        best = min(best, (hi / lo) ** exponent)
    return float(best)


def _resolve_a(spec: BoundSpec, values: np.ndarray) -> tuple[float, float]:
    amax = max_admissible_a(values, spec.base_exp)
    if spec.a is not None:
        return float(spec.a), amax
    return float(min(max(1.0, amax), A_CAP)), amax


def _two_term(smaller: float, larger: float, target: float, x: float, a: float,
              variant: str, p: float) -> float:
    """Tripartite bound: weighted sum of the two pairwise powers."""
    if variant == "ours":
        return float(
            (1 + a) ** (x - 1) * smaller**target
            + (1 + 1 / a) ** (x - 1) * larger**target
        )
    w0 = float(_w0(variant, x, p))
    return float(w0 * smaller**target + ((1 + a) ** x - w0) / a**x * larger**target)


def _evaluate(mv: MeasureVector, spec: BoundSpec, strict: bool) -> BoundReport:
    v = np.sort(np.asarray(mv.pairwise, dtype=float))[::-1]
    a, amax = _resolve_a(spec, v)
    ok = ratio_condition(v, a, spec.base_exp)
    if strict and not ok:
        raise ValueError(
            f"ratio condition fails at a={a} (max admissible {amax})"
        )
    x = spec.x
    target = float(spec.target_exp)

    if spec.mode == "monogamy" and spec.variant in ("zjz1", "zjz2") and x > 0.5:
        raise ValueError(f"variant {spec.variant!r} requires alpha/r <= 1/2, got {x}")

    if spec.variant != "ours" and v.size != 2:
        raise ValueError(
            f"variant {spec.variant!r} is defined for tripartite states only"
        )
    # alpha = 0 collapses every power to 1 (0^0 taken as 1)
    measured = 1.0 if x == 0 else float(mv.one_vs_rest**target)
    if v.size == 2:
        bound = _two_term(v[1], v[0], target, x, a, spec.variant, spec.p)
    elif x == 0:
        w = (1 + 1 / a) ** (x - 1)
        weights = w ** np.arange(v.size - 1, -1, -1, dtype=float)
        bound = float((1 + a) ** (x - 1) * np.sum(weights))
    else:
        bound = ordered_weighted_sum(np.power(v, spec.base_exp), x, a)

    if spec.mode == "monogamy":
        margin = measured - bound
        assumed = mv.kind not in _VERIFIED_MONOGAMY
    else:
        margin = bound - measured
        assumed = mv.kind not in _VERIFIED_POLYGAMY
    return BoundReport(
        bound_value=float(bound),
        measured_value=measured,
        margin=float(margin),
        ratio_condition_ok=ok,
        max_admissible_a=amax,
        a=a,
        base_relation_assumed=assumed,
    )


def monogamy_bound(mv: MeasureVector, spec: BoundSpec, strict: bool = True) -> BoundReport:
    """Evaluate the weighted monogamy lower bound for a measure vector.

    ``margin`` is measured - bound; under the ratio condition and a valid
    base relation it is nonnegative up to round-off.  With ``strict=False``
    a failing ratio condition is reported instead of raised.
    """
    if spec.mode != "monogamy":
        raise ValueError("monogamy_bound needs a spec in monogamy mode")
    return _evaluate(mv, spec, strict)


def polygamy_bound(mv: MeasureVector, spec: BoundSpec, strict: bool = True) -> BoundReport:
    """Evaluate the weighted polygamy upper bound; margin is bound - measured."""
    if spec.mode != "polygamy":
        raise ValueError("polygamy_bound needs a spec in polygamy mode")
    return _evaluate(mv, spec, strict)
