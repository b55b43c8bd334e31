"""Solve reports: tour plus bound certificate emitted by every solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .graphs import Tour

if TYPE_CHECKING:
    from .christofides import ChristofidesTrace

METHOD_MST2 = "mst2"
METHOD_CHRISTOFIDES = "christofides"
METHOD_EXACT = "exact"

# Relative slack used by every runtime guarantee assertion, absorbing
# floating summation noise; never used in combinatorial comparisons.
GUARANTEE_RTOL = 1e-9


@dataclass(frozen=True)
class SolveReport:
    """Tour, certified lower bound and the guarantee factor of the method.

    lower_bound is the MST weight for the approximation methods and the
    optimum itself for the exact method; achieved_ratio is
    tour.weight / lower_bound.
    """

    method: str
    tour: Tour
    lower_bound: float
    beta: float
    gamma: float
    guarantee_factor: float
    achieved_ratio: float
    trace: "ChristofidesTrace | None" = None
