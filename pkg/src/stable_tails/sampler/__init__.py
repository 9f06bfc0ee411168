"""Random variate generation for stable laws."""

from .arrivals import ArrivalStream, ResidualStream, make_rng
from .calibration import calibrate_c_alpha, lookup_c_alpha
from .cms import cms_batch, sample_cms
from .compound import TruncationSplit, sample_xupper, xupper_batch
from .series import (
    Asym12Series,
    SeriesConfig,
    asym01_batch,
    asym12_batch,
    residual_batch,
    sample_asym_01,
    sample_asym_12,
    sample_residual_S,
    sample_sym,
    sym_batch,
)
from .sharding import THREADS_ENV, run_sharded, worker_count

__all__ = [
    "ArrivalStream",
    "ResidualStream",
    "make_rng",
    "SeriesConfig",
    "Asym12Series",
    "TruncationSplit",
    "sample_asym_01",
    "sample_sym",
    "sample_asym_12",
    "sample_residual_S",
    "sample_xupper",
    "sample_cms",
    "asym01_batch",
    "sym_batch",
    "asym12_batch",
    "residual_batch",
    "xupper_batch",
    "cms_batch",
    "calibrate_c_alpha",
    "lookup_c_alpha",
    "run_sharded",
    "worker_count",
    "THREADS_ENV",
]
