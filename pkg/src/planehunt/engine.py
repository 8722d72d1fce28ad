"""Deterministic continuous-time simulation of searcher vs target.

The searcher walks the instruction stream leg by leg.  Within a leg its
velocity is constant, and targets are piecewise-linear, so every
searcher/target interval reduces to an exact quadratic contact test.
Inert targets take a vectorized path over whole out-and-back blocks,
which the large parameter sweeps rely on; the two paths solve the same
quadratics and agree to floating rounding.
"""

import math
from dataclasses import dataclass
from itertools import count

import numpy as np

from .geometry import Point, first_contact_time
from .trajectory import UNIT, diagonal_terms, pi_arrays


@dataclass(frozen=True)
class SimConfig:
    agent_start: Point = Point(0.0, 0.0)
    r: float = 1.0
    max_cost: float = math.inf
    max_diagonal: int = None

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("sensing radius r must be positive")
        if self.max_cost <= 0:
            raise ValueError("max_cost must be positive")
        if math.isinf(self.max_cost) and self.max_diagonal is None:
            raise ValueError("need a finite max_cost or max_diagonal")
        if self.max_diagonal is not None and self.max_diagonal < 1:
            raise ValueError("max_diagonal must be >= 1")


@dataclass(frozen=True)
class SimOutcome:
    sensed: bool
    time: float
    cost: float
    agent_pos: Point
    target_pos: Point
    diagonal: int
    legs_processed: int
    stop_reason: str  # "sensed" | "cost_budget" | "diagonal_budget"


class _Trace:
    """Line-per-event trace: `t cost ax ay tx ty event`."""

    def __init__(self, sink):
        self._own = isinstance(sink, str)
        self._fh = open(sink, "w") if self._own else sink

    def emit(self, t, cost, agent, tgt, event):
        self._fh.write(
            f"{t:.12g} {cost:.12g} {agent.x:.12g} {agent.y:.12g} "
            f"{tgt.x:.12g} {tgt.y:.12g} {event}\n"
        )

    def close(self):
        if self._own:
            self._fh.close()


def simulate(plan, strategy, cfg, trace=None):
    """Run one searcher plan against one target strategy.

    Stops at the first of: sensing (distance <= r), the arc-length budget
    max_cost, or the end of diagonal max_diagonal.  Deterministic.
    """
    tracer = _Trace(trace) if trace is not None else None
    try:
        if strategy.is_inert and tracer is None:
            return _simulate_inert(plan, strategy.points[0], cfg)
        return _simulate_event_driven(plan, strategy, cfg, tracer)
    finally:
        if tracer is not None:
            tracer.close()


def _outcome(sensed, t, cost, agent, tgt, diagonal, legs, reason):
    return SimOutcome(
        sensed=bool(sensed),
        time=float(t),
        cost=float(cost),
        agent_pos=agent,
        target_pos=tgt,
        diagonal=int(diagonal),
        legs_processed=int(legs),
        stop_reason=reason,
    )


def _simulate_event_driven(plan, strategy, cfg, tracer):
    pos = cfg.agent_start
    t = 0.0
    cost = 0.0
    legs = 0
    diagonal = 0
    tgt0 = strategy.position(0.0)
    if (tgt0 - pos).norm() <= cfg.r:
        if tracer:
            tracer.emit(0.0, 0.0, pos, tgt0, "sense")
        return _outcome(True, 0.0, 0.0, pos, tgt0, 0, 0, "sensed")

    for i, instr in plan.schedule():
        if cfg.max_diagonal is not None and i > cfg.max_diagonal:
            return _outcome(False, t, cost, pos, strategy.position(t), diagonal, legs, "diagonal_budget")
        diagonal = i
        speed = plan.speed_of_diagonal(i)
        ux, uy = UNIT[instr.direction]
        u = Point(ux * speed, uy * speed)

        budget_left = cfg.max_cost - cost
        leg_len = min(instr.distance, budget_left)
        truncated = leg_len < instr.distance
        leg_dt = leg_len / speed
        if tracer:
            tracer.emit(t, cost, pos, strategy.position(t), "leg_start")

        for ts, te, tgt_pos, w in strategy.constant_velocity_pieces(t, t + leg_dt):
            agent_at_ts = pos + Point(u.x * (ts - t), u.y * (ts - t))
            hit = first_contact_time(agent_at_ts, u, tgt_pos, w, cfg.r, te - ts)
            if hit is not None:
                t_hit = ts + hit
                cost_hit = cost + speed * (t_hit - t)
                agent_hit = pos + Point(u.x * (t_hit - t), u.y * (t_hit - t))
                tgt_hit = strategy.position(t_hit)
                if tracer:
                    tracer.emit(t_hit, cost_hit, agent_hit, tgt_hit, "sense")
                return _outcome(True, t_hit, cost_hit, agent_hit, tgt_hit, i, legs + 1, "sensed")

        pos = pos + Point(u.x * leg_dt, u.y * leg_dt)
        t += leg_dt
        cost += leg_len
        legs += 1
        if tracer:
            tracer.emit(t, cost, pos, strategy.position(t), "leg_end")
        if truncated or cost >= cfg.max_cost:
            if tracer:
                tracer.emit(t, cost, pos, strategy.position(t), "cost_budget")
            return _outcome(False, t, cost, pos, strategy.position(t), i, legs, "cost_budget")
    raise AssertionError("schedule is infinite")  # pragma: no cover


def _first_contact_in_block(verts, lengths, cum, q_rel, r, arc_allowance):
    """First contact arc length within one out-and-back block, or None.

    q_rel is the inert target relative to the block origin; only the first
    arc_allowance of arc length is admissible (cost budget truncation).
    """
    a = verts[:-1]
    d = verts[1:] - a
    len2 = lengths * lengths
    rel = q_rel - a
    tpar = np.einsum("ij,ij->i", rel, d) / len2
    np.clip(tpar, 0.0, 1.0, out=tpar)
    closest = a + tpar[:, None] * d
    dist2 = np.einsum("ij,ij->i", q_rel - closest, q_rel - closest)
    hits = np.nonzero(dist2 <= r * r)[0]
    cum_prev = cum - lengths
    for idx in hits:
        if cum_prev[idx] >= arc_allowance:
            break
        # exact first-contact arc on this leg: |a + u*l - q|^2 = r^2
        u = d[idx] / lengths[idx]
        ra = a[idx] - q_rel
        c0 = ra @ ra - r * r
        if c0 <= 0.0:
            arc = cum_prev[idx]
        else:
            bh = ra @ u  # half of the linear coefficient
            disc = max(bh * bh - c0, 0.0)
            ell = -bh - math.sqrt(disc)
            ell = min(max(ell, 0.0), lengths[idx])
            arc = cum_prev[idx] + ell
        if arc <= arc_allowance:
            return arc, idx
    return None


def _simulate_inert(plan, target, cfg):
    start = np.array([cfg.agent_start.x, cfg.agent_start.y])
    q_rel = np.array([target.x, target.y]) - start

    if math.hypot(*q_rel) <= cfg.r:
        return _outcome(True, 0.0, 0.0, cfg.agent_start, target, 0, 0, "sensed")

    cost = 0.0
    t = 0.0
    legs = 0
    for i in count(1):
        if cfg.max_diagonal is not None and i > cfg.max_diagonal:
            return _outcome(False, t, cost, cfg.agent_start, target, i - 1, legs, "diagonal_budget")
        speed = plan.speed_of_diagonal(i)
        for params in diagonal_terms(i):
            verts, lengths, cum = pi_arrays(params.k, params.j)
            allowance = cfg.max_cost - cost
            hit = _first_contact_in_block(verts, lengths, cum, q_rel, cfg.r, allowance)
            if hit is not None:
                arc, idx = hit
                agent = start + _point_at_arc(verts, lengths, cum, arc, idx)
                return _outcome(
                    True,
                    t + arc / speed,
                    cost + arc,
                    Point(float(agent[0]), float(agent[1])),
                    target,
                    i,
                    legs + idx + 1,
                    "sensed",
                )
            block_len = cum[-1]
            if block_len >= allowance:
                cut_idx = int(np.searchsorted(cum, allowance, side="left"))
                agent = start + _point_at_arc(verts, lengths, cum, allowance, cut_idx)
                return _outcome(
                    False,
                    t + allowance / speed,
                    cfg.max_cost,
                    Point(float(agent[0]), float(agent[1])),
                    target,
                    i,
                    legs + cut_idx + 1,
                    "cost_budget",
                )
            cost += block_len
            t += block_len / speed
            legs += lengths.size


def _point_at_arc(verts, lengths, cum, arc, idx):
    cum_prev = cum[idx] - lengths[idx]
    frac = (arc - cum_prev) / lengths[idx]
    return verts[idx] + frac * (verts[idx + 1] - verts[idx])


def brute_force_oracle(plan, strategy, cfg, step):
    """Fixed-arc-step reference simulation, independent of `simulate`.

    Advances the searcher `step` units of arc at a time and checks the
    plain distance condition at each sample; converges to the exact
    result as step -> 0.  Vectorized per leg but otherwise naive.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    bp_t = np.array(strategy.times)
    bp_x = np.array([p.x for p in strategy.points])
    bp_y = np.array([p.y for p in strategy.points])

    pos = np.array([cfg.agent_start.x, cfg.agent_start.y])
    t = 0.0
    cost = 0.0
    legs = 0

    def target_at(times):
        return np.column_stack(
            [np.interp(times, bp_t, bp_x), np.interp(times, bp_t, bp_y)]
        )

    tgt0 = strategy.position(0.0)
    if math.hypot(tgt0.x - pos[0], tgt0.y - pos[1]) <= cfg.r:
        return _outcome(True, 0.0, 0.0, cfg.agent_start, tgt0, 0, 0, "sensed")

    for i, instr in plan.schedule():
        if cfg.max_diagonal is not None and i > cfg.max_diagonal:
            tp = strategy.position(t)
            return _outcome(False, t, cost, Point(*pos), tp, i - 1, legs, "diagonal_budget")
        speed = plan.speed_of_diagonal(i)
        ux, uy = UNIT[instr.direction]
        leg_len = min(instr.distance, cfg.max_cost - cost)
        truncated = leg_len < instr.distance

        n = int(math.ceil(leg_len / step))
        arcs = np.minimum((np.arange(1, n + 1)) * step, leg_len)
        ax = pos[0] + ux * arcs
        ay = pos[1] + uy * arcs
        times = t + arcs / speed
        tgt = target_at(times)
        d2 = (ax - tgt[:, 0]) ** 2 + (ay - tgt[:, 1]) ** 2
        hits = np.nonzero(d2 <= cfg.r * cfg.r)[0]
        if hits.size:
            h = hits[0]
            return _outcome(
                True,
                float(times[h]),
                cost + float(arcs[h]),
                Point(float(ax[h]), float(ay[h])),
                Point(float(tgt[h, 0]), float(tgt[h, 1])),
                i,
                legs + 1,
                "sensed",
            )
        pos = pos + np.array([ux * leg_len, uy * leg_len])
        t += leg_len / speed
        cost += leg_len
        legs += 1
        if truncated or cost >= cfg.max_cost:
            tp = strategy.position(t)
            return _outcome(False, t, cost, Point(*pos), tp, i, legs, "cost_budget")
    raise AssertionError("schedule is infinite")  # pragma: no cover
