"""Search and pursuit in the plane with square-spiral schedules.

A searcher starting with no knowledge of the target's distance D, the
sensing radius r, or the target's speed bound v walks an infinite
schedule of out-and-back square spirals that simultaneously enlarges the
searched square and refines its resolution.  The package provides the
trajectory generators, the unit-speed and exponentially accelerating
searchers with their cost certificates, adversarial target strategies,
an exact event-driven simulator, the tube-area lower-bound machinery,
and seeded experiment sweeps.
"""

from .coverage import (
    CoverageReport,
    PolySpeedCertificate,
    area_bound,
    dynamic_lb,
    poly_speed_certificate,
    static_lb,
    tube_area,
)
from .engine import SimConfig, SimOutcome, brute_force_oracle, simulate
from .geometry import Point, Segment, first_contact_time, point_segment_distance
from .searcher import (
    DynamicPrediction,
    SearcherPlan,
    dynamic_plan,
    dynamic_q,
    predict_dynamic,
    static_plan,
    timing_table,
)
from .target import (
    TargetStrategy,
    adversarial_static_placement,
    inert,
    load_waypoints,
    radial_flee,
    waypoints,
)
from .trajectory import (
    CatchPrediction,
    MoveInstruction,
    SpiralParams,
    diagonal_length,
    diagonal_terms,
    full_schedule,
    pi_instructions,
    pi_length,
    predict_static,
    prefix_polyline,
    spiral_instructions,
)

__version__ = "0.1.0"
