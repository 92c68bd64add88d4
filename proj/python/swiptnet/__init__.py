"""Coverage and RF-exposure analysis of a large-scale SWIPT ad hoc network.

Closed-form exposure/coverage probabilities (characteristic-function inversion)
next to a reproducible Monte Carlo estimator, plus the scenario presets used
by the `swiptnet` command-line tool.
"""

from ._core import (  # noqa: F401
    __version__,
    AntennaPattern,
    ConvergenceError,
    CoverageThresholds,
    DiagnosticError,
    DomainError,
    EstimateSet,
    GainClass,
    Interferer,
    IoError,
    McSettings,
    NetworkParams,
    ParseError,
    PoleError,
    ProbabilityEstimate,
    QuadratureOptions,
    RangeError,
    Realization,
    RectennaModel,
    SaturationError,
    Scenario,
    db_to_linear,
    empirical_cf,
    energy_coverage,
    estimate,
    estimate_power_grid,
    exact_joint_with_mpe,
    gain_pmf,
    gil_pelaez_cdf,
    harvest_threshold,
    harvested_energy,
    info_coverage,
    interference_cf,
    joint_coverage,
    joint_with_mpe,
    linear_to_db,
    load_config,
    mmwave_preset,
    mpe_of,
    mpe_prob,
    mpe_prob_asymptotic,
    no_interference_joint,
    optimal_power,
    preset_by_name,
    preset_names,
    psi,
    received_power,
    run_sweep,
    sample_realization,
    sinr_of,
    truncated_tail_mean,
    uhf_preset,
    wilson_half_width,
)
