"""Selection of an admissible offset A and assembly of certified instances.

The quasiconformal bound |omega| <= k holds once A is large enough that
|S Log S Psi'(S)| dominates eps(1 + 1/k) on the image strip.  Instead of
relying on an implicit constant, both searches here evaluate the exact
quantities: the analytic hint scans the strip infimum of

    alpha |Log s| exp(Im s^alpha) |1 - i s^(-alpha)|,

and certification measures sup|omega| directly on a disk grid.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GridBoundaryWarning, SearchExhaustedError
from .kernel import ConstructionParams, HALF_PI
from .verify import GridSpec, _sup_omega

__all__ = ["MappingInstance", "analytic_A_hint", "select_A", "k_to_K"]

SEARCH_CAP = 1e150          # keeps log A0 well inside double range
SELECTION_MARGIN = 0.98     # grid sup underestimates the true sup; leave 2%
BISECT_FACTOR = 1.01        # informational minimality only


@dataclass
class MappingInstance:
    """A certified construction instance with its selection history.

    selection_trace records every (A candidate, grid sup|omega|) pair that
    the search evaluated; the final entry is the accepted A.
    """

    params: ConstructionParams
    dilatation_sup_estimate: float
    selection_trace: list[tuple[float, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = self.params.to_dict()
        d["dilatation_sup_estimate"] = self.dilatation_sup_estimate
        d["selection_trace"] = [[a, s] for a, s in self.selection_trace]
        return d


def k_to_K(k: float) -> float:
    """Maximal dilatation K = (1 + k)/(1 - k); K(0) = 1 is the conformal case."""
    if not (0.0 <= k < 1.0):
        raise DomainError(f"k_to_K requires 0 <= k < 1, got {k}")
    return (1.0 + k) / (1.0 - k)


def _strip_infimum(A: float, alpha: float, b: float) -> float:
    """Infimum over a strip sample of alpha |Log s| e^{Im s^a} |1 - i s^-a|.

    The product grows in x while the exponential and bracket factors tend
    to 1, so the infimum sits near the left edge; x in (A0, A0 + 50) with a
    fixed deterministic grid suffices for a seed value.
    """
    A0 = A - math.log(2.0)
    x = np.linspace(A0, A0 + 50.0, 201)
    y = np.linspace(-b, b, 41)
    s = x[None, :] + 1j * y[:, None]
    logs = np.log(s)
    sa = np.exp(alpha * logs)
    vals = alpha * np.abs(logs) * np.exp(sa.imag) * np.abs(1.0 - 1j * np.exp(-alpha * logs))
    return float(vals.min())


def analytic_A_hint(k: float, eps: float, alpha: float, b: float = HALF_PI) -> float:
    """Smallest A on a doubling search whose strip infimum beats eps(1 + 1/k).

    The hint seeds select_A; the authoritative check is the disk-grid
    certification, not this sample.
    """
    _validate_triple(k, eps, alpha)
    threshold = eps * (1.0 + 1.0 / k)
    A = 8.0
    while A <= SEARCH_CAP:
        if _strip_infimum(A, alpha, b) > threshold:
            return A
        A *= 2.0
    raise SearchExhaustedError(
        f"no A <= {SEARCH_CAP:g} satisfies the strip bound for "
        f"k={k}, eps={eps}, alpha={alpha}")


def _validate_triple(k: float, eps: float, alpha: float) -> None:
    # Reuse the dataclass validation with a placeholder A.
    ConstructionParams(alpha=alpha, eps=eps, k=k, A=8.0)


def select_A(k: float, eps: float, alpha: float, grid: GridSpec,
             b: float = HALF_PI) -> MappingInstance:
    """Certified instance: double A from the analytic hint until the grid
    sup of |omega| drops below 0.98 k, then bisect to within a factor 1.01
    of the smallest passing candidate (informational minimality; any
    passing A is acceptable).

    Deterministic for identical (k, eps, alpha, grid) since the grid owns
    its seed.
    """
    _validate_triple(k, eps, alpha)
    target = SELECTION_MARGIN * k
    trace: list[tuple[float, float]] = []
    cache: dict[float, tuple[float, complex, bool]] = {}

    def measure(A: float) -> float:
        if A not in cache:
            cache[A] = _sup_omega(ConstructionParams(alpha, eps, k, A, b), grid)
            trace.append((A, cache[A][0]))
        return cache[A][0]

    A = max(analytic_A_hint(k, eps, alpha, b), 8.0)
    lo = None  # largest failing candidate
    while measure(A) > target:
        lo = A
        A *= 2.0
        if A > SEARCH_CAP:
            raise SearchExhaustedError(
                f"certification failed up to A={SEARCH_CAP:g} for "
                f"k={k}, eps={eps}, alpha={alpha}")
    hi = A

    if lo is not None:
        while hi / lo > BISECT_FACTOR:
            mid = math.sqrt(lo * hi)
            if measure(mid) <= target:
                hi = mid
            else:
                lo = mid

    sup, witness, on_boundary = cache[hi]
    if trace[-1][0] != hi:
        trace.append((hi, sup))
    if on_boundary:
        warnings.warn(
            f"sup|omega| witness {witness} sits on the outermost grid ring; "
            "the grid may be too coarse", GridBoundaryWarning, stacklevel=2)
    return MappingInstance(
        params=ConstructionParams(alpha, eps, k, hi, b),
        dilatation_sup_estimate=sup,
        selection_trace=trace,
    )
