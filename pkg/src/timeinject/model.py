"""Time-constraint semantics of the contract under test.

A contract is parameterized by a closed interval I = [a, b]. Each calling
transaction carries two times: the world time it was sent at and the time
the chain injected for it. Comparing the interval membership of the two
yields one of four outcomes, the cells of a binary confusion matrix.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import ValidationError

__all__ = [
    "ValidationError",
    "ConstraintInterval",
    "ContractState",
    "Outcome",
    "ConfusionCounts",
    "TransactionRecord",
    "classify",
    "contract_state",
    "validate_world_time",
    "validate_block_timestamp",
]


def validate_world_time(value, name="world time"):
    """Check a world-time value: finite real, >= 0 seconds since epoch."""
    value = float(value)
    if not math.isfinite(value) or value < 0:
        raise ValidationError(f"{name} must be a finite non-negative number, got {value!r}")
    return value


def validate_block_timestamp(value, name="block timestamp"):
    """Check a block timestamp: non-negative integer seconds."""
    if int(value) != value or value < 0:
        raise ValidationError(f"{name} must be a non-negative integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class ConstraintInterval:
    """The closed interval [a, b] of the time-sensitive contract."""

    a: int
    b: int

    def __post_init__(self):
        if int(self.a) != self.a or int(self.b) != self.b:
            raise ValidationError(f"interval bounds must be integers, got [{self.a!r}, {self.b!r}]")
        if self.a < 0 or self.b < 0:
            raise ValidationError(f"interval bounds must be non-negative, got [{self.a}, {self.b}]")
        if self.a > self.b:
            raise ValidationError(f"interval lower bound exceeds upper bound: [{self.a}, {self.b}]")

    def contains(self, t):
        """True iff a <= t <= b. Both bounds are inclusive."""
        return self.a <= t <= self.b

    def width(self):
        return self.b - self.a


class Outcome(enum.Enum):
    """The four contract states, keyed by the (true, predicted) membership pair."""

    TRUE_POSITIVE = "TP"
    FALSE_POSITIVE = "FP"
    TRUE_NEGATIVE = "TN"
    FALSE_NEGATIVE = "FN"

    @property
    def short_name(self):
        return self.value

    @property
    def is_correct(self):
        """True for the two states where world and injected time agree."""
        return self in (Outcome.TRUE_POSITIVE, Outcome.TRUE_NEGATIVE)

    @classmethod
    def from_short_name(cls, name):
        try:
            return cls(name)
        except ValueError:
            raise ValidationError(f"unknown outcome tag {name!r}") from None

    @classmethod
    def from_state(cls, state):
        return _OUTCOME_BY_STATE[(state.p, state.p_hat)]


@dataclass(frozen=True)
class ContractState:
    """The pair of binary state variables set by one calling transaction.

    ``p`` is the true condition (world time in the interval) and ``p_hat``
    the predicted condition (injected time in the interval).
    """

    p: int
    p_hat: int

    def __post_init__(self):
        if self.p not in (0, 1) or self.p_hat not in (0, 1):
            raise ValidationError(f"state variables must be 0 or 1, got ({self.p!r}, {self.p_hat!r})")

    def outcome(self):
        return Outcome.from_state(self)


_OUTCOME_BY_STATE = {
    (1, 1): Outcome.TRUE_POSITIVE,
    (0, 1): Outcome.FALSE_POSITIVE,
    (0, 0): Outcome.TRUE_NEGATIVE,
    (1, 0): Outcome.FALSE_NEGATIVE,
}


def contract_state(sent_at, injected_at, interval):
    """State pair (p, p_hat) for a transaction sent at ``sent_at`` whose
    injected time is ``injected_at``."""
    return ContractState(
        p=int(interval.contains(sent_at)),
        p_hat=int(interval.contains(injected_at)),
    )


def classify(sent_at, injected_at, interval):
    """Four-way outcome of one transaction against the constraint interval.

    Depends only on the membership pair, so any two calls with equal
    memberships yield the identical outcome.
    """
    return Outcome.from_state(contract_state(sent_at, injected_at, interval))


@dataclass(frozen=True)
class ConfusionCounts:
    """Outcome tallies. ``n`` is always the sum of the four counters."""

    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    def __post_init__(self):
        for name in ("tp", "fp", "tn", "fn"):
            if getattr(self, name) < 0:
                raise ValidationError(f"count {name} must be non-negative")

    @property
    def n(self):
        return self.tp + self.fp + self.tn + self.fn

    @property
    def correct(self):
        return self.tp + self.tn

    def accumulate(self, outcome):
        """New counts with the counter matching ``outcome`` incremented."""
        field = _FIELD_BY_OUTCOME[outcome]
        return replace(self, **{field: getattr(self, field) + 1})

    @classmethod
    def from_outcomes(cls, outcomes):
        counts = cls()
        for outcome in outcomes:
            counts = counts.accumulate(outcome)
        return counts


_FIELD_BY_OUTCOME = {
    Outcome.TRUE_POSITIVE: "tp",
    Outcome.FALSE_POSITIVE: "fp",
    Outcome.TRUE_NEGATIVE: "tn",
    Outcome.FALSE_NEGATIVE: "fn",
}


@dataclass(frozen=True)
class TransactionRecord:
    """One transaction's trace entry.

    ``injected_at`` is the integer block timestamp under the block
    timestamp method, or the carried (real-valued) parameter under the
    parameter method.
    """

    id: int
    sent_at: float
    injected_at: float
    block_height: int

    def __post_init__(self):
        if self.id < 0:
            raise ValidationError(f"transaction id must be non-negative, got {self.id}")
        validate_world_time(self.sent_at, "sent_at")
        validate_world_time(self.injected_at, "injected_at")
        if self.block_height < 1:
            raise ValidationError(f"block height must be >= 1, got {self.block_height}")

    @property
    def offset(self):
        """Injection offset: injected time minus world time."""
        return self.injected_at - self.sent_at
