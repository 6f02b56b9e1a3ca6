"""Variance ratios of original and linearly interpolated time series."""

from ._core import (
    DegenerateSeries,
    DgpSpec,
    Family,
    InsufficientData,
    Model,
    SegmentedSeries,
    Variant,
    __version__,
    ag_sums,
    arma_moments,
    arma_vy_threshold,
    benchmarks,
    diff_var,
    interpolate,
    long_var,
    long_var_phase,
    mc_compare,
    phase_vars,
    short_var,
    simulate,
    surface,
    table,
    to_segment_index,
    variance_ratio,
    variance_shrinkage,
    vr_hat,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
