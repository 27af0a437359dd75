"""Time-injection methods and miner timestamp-assignment policies.

Two injection methods are supported: the parameter method (the sender
attaches world time, so injected time equals world time) and the block
timestamp method (the timestamp of the including block serves as the
injected time). How a miner picks that timestamp is not fixed by any
protocol we model, so it is a policy axis: stamp the wall clock floored
to whole seconds, stamp parent + blocktime, or stamp a skewed clock.
All policies are forced to produce strictly increasing chains.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ValidationError

WALL_CLOCK_FLOOR = "wall-clock-floor"
PARENT_PLUS_BLOCKTIME = "parent-plus-blocktime"
SKEWED_WALL_CLOCK = "skewed-wall-clock"

POLICY_NAMES = (WALL_CLOCK_FLOOR, PARENT_PLUS_BLOCKTIME, SKEWED_WALL_CLOCK)


class InjectionMethod(enum.Enum):
    PARAMETER = "parameter"
    BLOCK_TIMESTAMP = "block-timestamp"


@dataclass(frozen=True)
class TimestampPolicy:
    """Miner policy for stamping a freshly produced block.

    ``offset`` is the constant clock skew in whole seconds and is only
    meaningful for the skewed-wall-clock policy (it may be negative).
    """

    kind: str
    offset: int = 0

    def __post_init__(self):
        if self.kind not in POLICY_NAMES:
            raise ValidationError(
                f"unknown timestamp policy {self.kind!r}; expected one of {', '.join(POLICY_NAMES)}"
            )
        if int(self.offset) != self.offset:
            raise ValidationError(f"policy offset must be an integer, got {self.offset!r}")
        if self.offset != 0 and self.kind != SKEWED_WALL_CLOCK:
            raise ValidationError(f"policy {self.kind!r} does not take an offset")

    @classmethod
    def from_name(cls, name, offset=0):
        return cls(name, offset=offset)


def inject_parameter(sent_at):
    """Parameter method: the honest sender's attached time is the world time."""
    return sent_at


def assign_block_timestamp(policy, parent_ts, production_time, blocktime):
    """Timestamp for a block produced at ``production_time``.

    Whatever the policy computes is bumped to ``parent_ts + 1`` when it
    would not exceed the parent, keeping the chain strictly increasing.
    """
    if blocktime < 1:
        raise ValidationError(f"blocktime must be >= 1, got {blocktime}")
    if production_time < 0:
        raise ValidationError(f"production time must be >= 0, got {production_time}")
    if policy.kind == WALL_CLOCK_FLOOR:
        candidate = math.floor(production_time)
    elif policy.kind == PARENT_PLUS_BLOCKTIME:
        candidate = parent_ts + blocktime
    else:  # SKEWED_WALL_CLOCK
        candidate = math.floor(production_time) + policy.offset
    if candidate <= parent_ts:
        candidate = parent_ts + 1
    return candidate


def injected_time_of(record, method, param_value=None):
    """The reference time the contract executes on for one record."""
    if method is InjectionMethod.BLOCK_TIMESTAMP:
        return record.injected_at
    if param_value is None:
        raise ValidationError("parameter method requires a param_value")
    return param_value
