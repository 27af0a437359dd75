"""Deterministic measurement harness for time injection on blockchains.

Simulates a single-miner chain that includes transactions into blocks at a
fixed cadence, stamps the blocks under a configurable miner policy, and
scores a time interval-constrained contract on how often execution against
injected time agrees with execution against world time.
"""

from .errors import (
    BatchShapeError,
    ConfigError,
    IncompleteTraceError,
    OutOfWindowError,
    UndefinedMetricError,
    ValidationError,
)
from .model import (
    ConfusionCounts,
    ConstraintInterval,
    ContractState,
    Outcome,
    TransactionRecord,
    classify,
    contract_state,
)
from .injection import (
    PARENT_PLUS_BLOCKTIME,
    SKEWED_WALL_CLOCK,
    WALL_CLOCK_FLOOR,
    InjectionMethod,
    TimestampPolicy,
    assign_block_timestamp,
    inject_parameter,
    injected_time_of,
)
from .simulator import (
    Block,
    ConstantLatency,
    ExponentialLatency,
    ParetoLatency,
    SimConfig,
    SimTrace,
    UniformLatency,
    classify_trace,
    run_simulation,
    schedule_transactions,
)
from .metrics import (
    Batch,
    BatchTable,
    OffsetStats,
    average_batch_tables,
    batch_frequencies,
    execution_accuracy,
    injection_offsets,
)
from .experiment import (
    DipReport,
    ExperimentConfig,
    ExperimentResult,
    dip_report,
    preset,
    run_experiment,
    sweep_blocktime,
)
from .seeds import derive_seed

__version__ = "0.1.0"
