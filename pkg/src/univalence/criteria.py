"""Pointwise evaluation of the master univalence criterion and its five
corollary specializations.

All criteria share the pass convention "LHS modulus <= 1"; the Nehari-type
output is rescaled by its bound so the same threshold applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .catalog import HFunction, MeromorphicFn, constant_one, identity
from .errors import (
    CriticalPoint,
    EvaluationFailure,
    HVanishes,
    InvalidSpec,
    OutsideDomain,
)

CRITERIA = (
    "theorem1",
    "alpha_zero",
    "miazga_wesolowski",
    "epstein",
    "becker",
    "nehari",
)

_CODES = {
    "theorem1": _kernels.CRIT_THEOREM1,
    "alpha_zero": _kernels.CRIT_ALPHA_ZERO,
    "miazga_wesolowski": _kernels.CRIT_MIAZGA_WESOLOWSKI,
    "epstein": _kernels.CRIT_EPSTEIN,
    "becker": _kernels.CRIT_BECKER,
    "nehari": _kernels.CRIT_NEHARI,
}


@dataclass(frozen=True)
class CriterionParams:
    """One criterion instance: the function pair, the auxiliary h, the complex
    parameter, and which formula to apply.

    For 'becker' and 'nehari' the unused g and h are forcibly recorded as
    identity / constant one so reports stay reproducible.
    """

    f: MeromorphicFn
    g: MeromorphicFn = field(default_factory=identity)
    h: HFunction = field(default_factory=constant_one)
    alpha: complex = 0.5 + 0j
    criterion: str = "theorem1"
    squared_variant: bool = True

    def __post_init__(self):
        if self.criterion not in CRITERIA:
            raise InvalidSpec(f"unknown criterion {self.criterion!r}")
        object.__setattr__(self, "alpha", complex(self.alpha))
        if self.criterion in ("becker", "nehari"):
            object.__setattr__(self, "g", identity())
            object.__setattr__(self, "h", constant_one())


def _diagnose(params: CriterionParams, points: np.ndarray):
    """Re-derive which precondition failed when a fused evaluation produced
    non-finite output; raises the precise error with the offending point."""
    fd1 = params.f.derivs(points, order=1)[1]
    gd1 = params.g.derivs(points, order=1)[1]
    h0 = params.h.derivs(points, order=0)[0]
    for name, bad in (("f'", fd1 == 0), ("g'", gd1 == 0)):
        if np.any(bad):
            exc = CriticalPoint(f"{name} vanishes at {points[bad][0]}")
            exc.point = complex(points[bad][0])
            raise exc
    if np.any(h0 == 0):
        exc = HVanishes(f"h vanishes at {points[h0 == 0][0]}")
        exc.point = complex(points[h0 == 0][0])
        raise exc
    finite = np.isfinite(fd1) & np.isfinite(gd1) & np.isfinite(h0)
    witness = points[~finite][0] if not finite.all() else points[0]
    raise EvaluationFailure(f"criterion not evaluable at {witness}")


def _lhs_with_code(params: CriterionParams, points: np.ndarray, code: int):
    points = np.asarray(points, dtype=np.complex128)
    if np.any(np.abs(points) <= 1.0):
        bad = points[np.abs(points) <= 1.0][0]
        raise OutsideDomain(f"criterion point {bad} not in the exterior disk")
    flow = params.f.lower_coeffs()
    glow = params.g.lower_coeffs()
    if flow is not None and glow is not None:
        hb, hb0, htail = params.h.lower_coeffs()
        try:
            out = _kernels.criterion_lhs(
                points,
                flow[0],
                flow[1],
                flow[2],
                glow[0],
                glow[1],
                glow[2],
                hb,
                hb0,
                htail,
                params.alpha,
                params.squared_variant,
                code,
            )
        except ZeroDivisionError:
            # the jitted kernel raises instead of emitting inf/nan
            _diagnose(params, points)
    else:
        fd = params.f.derivs(points, order=3)
        gd = params.g.derivs(points, order=3)
        hd = params.h.derivs(points, order=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            pf = fd[2] / fd[1]
            pg = gd[2] / gd[1]
            sf = fd[3] / fd[1] - 1.5 * pf * pf
            sg = gd[3] / gd[1] - 1.5 * pg * pg
            out = _kernels.assemble_lhs_numpy(
                points,
                hd[0],
                hd[1],
                pf,
                sf,
                pg,
                sg,
                params.alpha,
                params.squared_variant,
                code,
            )
    if not np.all(np.isfinite(out)):
        _diagnose(params, points[~np.isfinite(out)])
    return out


def evaluate_lhs(params: CriterionParams, points) -> np.ndarray:
    """Criterion LHS modulus at every point, using the formula selected by
    ``params.criterion``."""
    return _lhs_with_code(params, points, _CODES[params.criterion])


def theorem1_lhs(params: CriterionParams, zeta: complex) -> float:
    """Master criterion LHS modulus at one point (ignores params.criterion)."""
    out = _lhs_with_code(
        params, np.array([zeta], dtype=np.complex128), _kernels.CRIT_THEOREM1
    )
    return float(out[0])


def corollary_lhs(params: CriterionParams, zeta: complex) -> float:
    """Corollary LHS modulus at one point; params.criterion picks the formula."""
    if params.criterion == "theorem1":
        raise InvalidSpec("corollary_lhs needs a corollary criterion id")
    out = _lhs_with_code(
        params, np.array([zeta], dtype=np.complex128), _CODES[params.criterion]
    )
    return float(out[0])
