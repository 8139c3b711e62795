"""Fano-inequality bounds on data-reconstruction advantage under differential privacy."""

from fano_privacy.info_theory import (
    ChannelMatrix,
    Prior,
    arimoto_information,
    binary_entropy,
    entropy,
    kl_divergence,
    mutual_information,
    renyi_divergence,
    renyi_entropy,
)
from fano_privacy.mi_bounds import (
    BoundKind,
    GaussianSpec,
    MiBound,
    RdpCurve,
    RrSpec,
    dpsgd_rdp_curve,
    gaussian_mi_bound_thm2,
    gaussian_mi_monte_carlo,
    gaussian_rdp_curve,
    load_encodings_csv,
    mi_from_rdp,
    pairwise_sensitivity,
    rr_channel,
    rr_epsilon_dp,
    rr_exact_mi,
    rr_rdp_curve,
)
from fano_privacy.fano import (
    AdvantageBound,
    BoundAssertionError,
    advantage_from_success,
    best_generalized_fano,
    f_eps,
    fano_advantage_bound,
    generalized_fano_bound,
    rero_baseline_bound,
    rero_to_advantage,
)
from fano_privacy.attack_sim import (
    TrialReport,
    map_adversary_gaussian,
    map_adversary_rr,
    run_game,
    run_gaussian,
    run_rr,
    sample_secret,
    wilson_interval,
)

__version__ = "0.1.0"
