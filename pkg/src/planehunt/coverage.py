"""Lower-bound machinery: tube areas and closed-form cost certifiers.

The key geometric fact is the sausage bound: the set of points within r
of a curve of length x has area at most 2rx + pi r^2.  tube_area measures
that set by rasterization; the certifier functions evaluate the
closed-form lower bounds on search cost that follow from it, plus the
impossibility certificate for polynomially accelerating searchers.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CoverageReport:
    trajectory_length: float
    r: float
    estimated_area: float
    analytic_bound: float  # 2 r x + pi r^2
    grid_res: int
    cell_area: float
    cell_diagonal: float

    @property
    def slack(self):
        """Discretization allowance: 4 * cell diagonal * trajectory length."""
        return 4.0 * self.cell_diagonal * self.trajectory_length


@dataclass(frozen=True)
class PolySpeedCertificate:
    c: int
    v: float
    r: float
    min_catch_time: float
    min_cost: float
    optimal_cost: float
    exceeds: bool
    alpha: float
    beta: float


def area_bound(length, r):
    """Area bound 2 r x + pi r^2 for the r-tube around a curve of length x."""
    if length < 0 or r <= 0:
        raise ValueError("require length >= 0 and r > 0")
    return 2.0 * r * length + math.pi * r * r


def polyline_length(polyline):
    polyline = np.asarray(polyline, dtype=np.float64)
    if len(polyline) < 2:
        return 0.0
    return float(np.linalg.norm(np.diff(polyline, axis=0), axis=1).sum())


def tube_area(polyline, r, grid_res=256):
    """Rasterized area of the set of points within r of the polyline.

    Counts cells of a grid_res x grid_res grid over the r-inflated
    bounding box whose centers lie within r of the polyline; the estimate
    carries a discretization slack of 4 * cell diagonal * length.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if grid_res < 32:
        raise ValueError("grid_res must be >= 32")
    polyline = np.asarray(polyline, dtype=np.float64)
    if polyline.ndim != 2 or polyline.shape[0] < 1:
        raise ValueError("polyline must be an (n, 2) array with n >= 1")
    if polyline.shape[0] == 1:
        polyline = np.vstack([polyline, polyline])

    lo = polyline.min(axis=0) - r
    hi = polyline.max(axis=0) + r
    dx = (hi[0] - lo[0]) / grid_res
    dy = (hi[1] - lo[1]) / grid_res
    xs = lo[0] + (np.arange(grid_res) + 0.5) * dx
    ys = lo[1] + (np.arange(grid_res) + 0.5) * dy

    marked = np.zeros((grid_res, grid_res), dtype=bool)
    a_all = polyline[:-1]
    d_all = polyline[1:] - a_all
    for a, d in zip(a_all, d_all):
        b = a + d
        x0, x1 = min(a[0], b[0]) - r, max(a[0], b[0]) + r
        y0, y1 = min(a[1], b[1]) - r, max(a[1], b[1]) + r
        ix0 = max(0, int(np.searchsorted(xs, x0, side="left")))
        ix1 = min(grid_res, int(np.searchsorted(xs, x1, side="right")))
        iy0 = max(0, int(np.searchsorted(ys, y0, side="left")))
        iy1 = min(grid_res, int(np.searchsorted(ys, y1, side="right")))
        if ix0 >= ix1 or iy0 >= iy1:
            continue
        gx, gy = np.meshgrid(xs[ix0:ix1], ys[iy0:iy1], indexing="ij")
        len2 = d @ d
        if len2 == 0.0:
            dist2 = (gx - a[0]) ** 2 + (gy - a[1]) ** 2
        else:
            t = ((gx - a[0]) * d[0] + (gy - a[1]) * d[1]) / len2
            np.clip(t, 0.0, 1.0, out=t)
            dist2 = (gx - (a[0] + t * d[0])) ** 2 + (gy - (a[1] + t * d[1])) ** 2
        marked[ix0:ix1, iy0:iy1] |= dist2 <= r * r

    cell_area = dx * dy
    length = polyline_length(polyline)
    return CoverageReport(
        trajectory_length=length,
        r=r,
        estimated_area=float(marked.sum()) * cell_area,
        analytic_bound=area_bound(length, r),
        grid_res=grid_res,
        cell_area=cell_area,
        cell_diagonal=math.hypot(dx, dy),
    )


def _log_term(big, r):
    return math.log2(big) + math.log2(1.0 / r)


def static_lb(D, r):
    """Cost lower bound (1/16)(log2 D + log2 1/r) D^2 / r for inert targets."""
    if D <= 0 or r <= 0:
        raise ValueError("D and r must be positive")
    term = _log_term(D, r)
    if term <= 0:
        raise ValueError(
            f"(D={D}, r={r}) lies outside the bound's regime: log2 D + log2 1/r <= 0"
        )
    return term * D * D / r / 16.0


def dynamic_lb(v, r, t0):
    """Cost lower bound (t0^2/128)(log2 v + log2 1/r) v^2 / r for moving targets.

    t0 is the time the flee-then-freeze adversary lets the target run; the
    witness region is a square of side v*t0/2.
    """
    if v <= 0 or r <= 0 or t0 <= 0:
        raise ValueError("v, r and t0 must be positive")
    term = _log_term(v, r)
    if term <= 0:
        raise ValueError(
            f"(v={v}, r={r}) lies outside the bound's regime: log2 v + log2 1/r <= 0"
        )
    return t0 * t0 / 128.0 * term * v * v / r


def poly_speed_certificate(c, v, r, d):
    """Contradiction certificate for a searcher with speed at most t^c.

    Such a searcher needs time at least ((c+1) v^2 / 2r)^(1/(c-1)) to
    reach a fleeing target, hence cost at least
    (1/(c+1)) ((c+1) v^2 / 2r)^((c+1)/(c-1)) = alpha (v^2/r)^beta with
    beta = (c+1)/(c-1) > 1.  `exceeds` is set once that cost surpasses
    the optimal d (log2 v + log2 1/r) v^2 / r.
    """
    if not isinstance(c, int) or c < 2:
        raise ValueError("require integer speed exponent c >= 2 (c = 1 degenerates)")
    if v < 1 or not (0 < r < 1) or d <= 0:
        raise ValueError("require v >= 1, 0 < r < 1, d > 0")
    base = (c + 1) * v * v / (2.0 * r)
    min_catch_time = base ** (1.0 / (c - 1))
    min_cost = base ** ((c + 1) / (c - 1)) / (c + 1)
    optimal_cost = d * _log_term(v, r) * v * v / r
    beta = (c + 1) / (c - 1)
    alpha = ((c + 1) / 2.0) ** beta / (c + 1)
    return PolySpeedCertificate(
        c=c,
        v=v,
        r=r,
        min_catch_time=min_catch_time,
        min_cost=min_cost,
        optimal_cost=optimal_cost,
        exceeds=min_cost > optimal_cost,
        alpha=alpha,
        beta=beta,
    )
