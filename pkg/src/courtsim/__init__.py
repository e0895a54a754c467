"""courtsim: hybrid NBA season simulation and backtesting.

Two-step game prediction (strength rating -> outcome distribution), optional
standings-aware team incentives, deterministic replicated Monte Carlo runs
against real seasons, and accuracy/window analysis.
"""

from .agents import (
    IncentiveParams,
    PlayoffStatus,
    StandingsSnapshot,
    TeamStanding,
    compute_standings,
    incentive_adjustment,
    playoff_status,
)
from .analysis import (
    AccuracyReport,
    Interval,
    MethodComparison,
    SweepPoint,
    WinsDeltaRecord,
    accuracy,
    aggregate_accuracy,
    compare_methods,
    seasons_mean_accuracy,
    sweep_windows,
    wins_delta,
)
from .data_io import (
    DatasetBundle,
    Diagnostic,
    emit_games_csv,
    emit_reports,
    load_bundle,
    parse_games_csv,
    parse_picks_csv,
    parse_priors_csv,
    parse_teams_csv,
    scan_bundle,
)
from .domain import (
    BoxLine,
    Conference,
    EraRules,
    GameRecord,
    SeasonDataset,
    TeamGameOutcome,
    TeamHistoryView,
    TeamId,
    estimate_possessions,
    history_before,
    order_season,
)
from .engine import (
    GamePrediction,
    Mode,
    Model,
    ReplicationResult,
    SimulationConfig,
    replication_stream,
    run_replications,
    simulate_replication,
)
from .errors import AnalysisError, ConfigError, CourtsimError, DataError, DataValidationError
from .outcomes import (
    METHODS,
    GameOutcome,
    MethodSpec,
    OutcomeDistribution,
    OutcomeFunction,
    bernoulli_race_no_ties,
    bernoulli_race_with_ties,
    largest_value,
    method,
    sample_outcome,
)
from .ratings import (
    Rating,
    RatingKind,
    Statistic,
    WindowPolicy,
    net_rating,
    rate_for_game,
    win_percentage,
)

__version__ = "0.1.0"
