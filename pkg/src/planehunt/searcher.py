"""Searcher plans: the shared trajectory schedule plus a speed profile.

Both searchers walk the identical instruction stream; they differ only in
how fast each diagonal is traversed.  The static searcher moves at unit
speed (cost and elapsed time coincide); the exponential searcher uses
speed 2^(5i) on diagonal i, which makes the total traversal time of all
diagonals converge to a constant q.
"""

import math
from dataclasses import dataclass

from .trajectory import diagonal_length, full_schedule, predict_static

# Per-diagonal traversal time decays like 2^(-2i) once i >= 11; the tail
# of the time series is certified by that geometric bound.
TAIL_START = 10
DEFAULT_Q_TERMS = 48


@dataclass(frozen=True)
class SearcherPlan:
    """Immutable description of a searcher: trajectory plus speeds."""

    name: str
    speed_exponent: int  # speed on diagonal i is 2**(speed_exponent * i)

    def speed_of_diagonal(self, i):
        if i < 1:
            raise ValueError("diagonal index must be >= 1")
        return 2.0 ** (self.speed_exponent * i)

    def schedule(self):
        return full_schedule()

    def traversal_time(self, i):
        return diagonal_length(i) / self.speed_of_diagonal(i)


def static_plan():
    """Unit-speed searcher; cost is identically elapsed time."""
    return SearcherPlan(name="static", speed_exponent=0)


def dynamic_plan():
    """Exponentially accelerating searcher: speed 2^(5i) on diagonal i."""
    return SearcherPlan(name="dynamic", speed_exponent=5)


@dataclass(frozen=True)
class TimingTable:
    per_diagonal: tuple  # t_i for i = 1..n
    cumulative: tuple
    q: float  # certified upper bound on the total time (dynamic plan)


def timing_table(plan, upto):
    """Traversal and cumulative times for diagonals 1..upto."""
    times = []
    cum = []
    total = 0.0
    for i in range(1, upto + 1):
        t = plan.traversal_time(i)
        times.append(t)
        total += t
        cum.append(total)
    q = dynamic_q(upto) if plan.speed_exponent > 0 else math.inf
    return TimingTable(per_diagonal=tuple(times), cumulative=tuple(cum), q=q)


def dynamic_q(upto=DEFAULT_Q_TERMS):
    """Certified upper bound on the dynamic plan's total traversal time.

    Exact partial sum of t_i for i <= upto, plus the geometric tail
    sum_{i > max(upto, 10)} 2^(-2i) that dominates the remaining terms.
    """
    if upto < 1:
        raise ValueError("upto must be >= 1")
    plan = dynamic_plan()
    partial = sum(plan.traversal_time(i) for i in range(1, upto + 1))
    n = max(upto, TAIL_START)
    tail = 4.0 ** (-n) / 3.0  # sum_{i>n} 4^-i
    return partial + tail


@dataclass(frozen=True)
class DynamicPrediction:
    """Sufficient catch diagonal for the exponential searcher.

    y starts from the closed formula a' + b/2 - 1 with a' = max(a, ceil(qv)) + 1
    and is raised to the least index where the timing condition
    t_y <= 1 / (v * 2^(b+1)) holds, keeping the bound sound at small indices.
    """

    a: int
    b: int
    c: int
    a_prime: int
    y: int
    cost_bound: float
    condition_holds_at_formula_y: bool


def predict_dynamic(D, v, r, q_terms=DEFAULT_Q_TERMS):
    """Catch diagonal for a target of speed <= v starting within D."""
    if D <= 0 or r <= 0 or v < 0:
        raise ValueError("require D > 0, r > 0, v >= 0")
    base = predict_static(D, r)
    a, b = base.a, base.b
    q = dynamic_q(q_terms)
    c = int(math.ceil(q * v))
    a_prime = max(a, c) + 1
    y0 = max(1, a_prime + b // 2 - 1)

    plan = dynamic_plan()

    def condition(y):
        if v == 0:
            return True
        return plan.traversal_time(y) <= 1.0 / (v * 2.0 ** (b + 1))

    holds = condition(y0)
    y = y0
    while not condition(y):
        y += 1
        if y > y0 + 200:
            raise RuntimeError("timing condition failed to stabilize")
    return DynamicPrediction(
        a=a,
        b=b,
        c=c,
        a_prime=a_prime,
        y=y,
        cost_bound=80.0 * y * 2.0 ** (2 * y + 2),
        condition_holds_at_formula_y=holds,
    )
