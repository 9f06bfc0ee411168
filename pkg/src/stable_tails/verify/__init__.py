"""Monte Carlo and quadrature verification of tail bounds."""

from .bounds import (
    DEFAULT_N,
    FAIL,
    INCONCLUSIVE,
    MAX_N,
    PASS,
    REFUSED,
    VACUOUS,
    VERDICTS,
    PointResult,
    VerificationReport,
    config_hash,
    verdict_for,
    verify_bound,
)
from .campaigns import (
    CAMPAIGNS,
    Campaign,
    CampaignResult,
    campaign_for_law,
    default_grid,
    regime_interval,
    run_campaign,
    theorem_ids,
)
from .checks import (
    CFReport,
    KSResult,
    MGFReport,
    MomentReport,
    empirical_cf,
    ks_test,
    ks_two_sample,
    levy_cdf,
    levy_median,
    verify_cf,
    verify_mgf,
    verify_residual_moments,
)
from .estimate import (
    DEFAULT_CONFIDENCE,
    MCEstimate,
    QuadratureEstimate,
    clopper_pearson,
    empirical_tail,
    estimate_from_samples,
    tail_count,
)
from .io import (
    REPORT_COLUMNS,
    campaign_document,
    csv_text,
    dump_json,
    format_value,
    load_schema,
    report_rows,
    table_document,
    validate,
    write_csv,
)
from .sources import METHODS, SamplerSource, default_method

__all__ = [name for name in dir() if not name.startswith("_")]
