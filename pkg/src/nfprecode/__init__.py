"""Near-field multiuser MISO precoding: zero-forcing and QR-based
dirty-paper coding with exact sum-rate power allocation."""

from .channel import ChannelMatrix, ScenarioConfig, build_channel, channel_coefficient, channel_gram
from .dpc import (
    CapExceededError,
    DpcDecomposition,
    DpcSolution,
    best_order_exhaustive,
    best_order_greedy,
    decompose,
    dpc_sum_rate,
    validate_order,
)
from .geometry import (
    ArrayConfig,
    LayoutKind,
    Position,
    UserLayout,
    build_array,
    build_users,
    far_field_boundary,
)
from .rateregion import RatePoint, RateRegion, area_improvement, dpc_region, region_union, zf_region
from .waterfill import PowerAllocation, WaterfillProblem, solve_waterfill
from .zf import RankDeficientError, ZfPrecoder, build_zf, zf_sum_rate

__version__ = "0.1.0"
