import random

import pytest

from timeinject.model import (
    ConfusionCounts,
    ConstraintInterval,
    ContractState,
    Outcome,
    TransactionRecord,
    ValidationError,
    classify,
    contract_state,
)

from oracles import outcome_name


def test_contains_closed_bounds():
    interval = ConstraintInterval(15, 30)
    assert interval.contains(15)
    assert interval.contains(30)
    assert not interval.contains(14.999)
    assert interval.contains(22.5)
    assert not interval.contains(30.001)


def test_interval_validation():
    with pytest.raises(ValidationError):
        ConstraintInterval(31, 30)
    with pytest.raises(ValidationError):
        ConstraintInterval(-1, 30)
    # degenerate single-point interval is legal
    assert ConstraintInterval(5, 5).contains(5)


def test_classify_table():
    interval = ConstraintInterval(15, 30)
    assert classify(16, 20, interval) is Outcome.TRUE_POSITIVE
    assert classify(14.5, 16, interval) is Outcome.FALSE_POSITIVE
    assert classify(29.5, 32, interval) is Outcome.FALSE_NEGATIVE
    assert classify(35, 36, interval) is Outcome.TRUE_NEGATIVE


def test_classify_records_state_pair():
    interval = ConstraintInterval(15, 30)
    assert contract_state(16, 20, interval) == ContractState(1, 1)
    assert contract_state(14.5, 16, interval) == ContractState(0, 1)
    assert contract_state(29.5, 32, interval) == ContractState(1, 0)
    assert contract_state(35, 36, interval) == ContractState(0, 0)
    # the state pair and the outcome are two views of the same thing
    for sent, injected in [(16, 20), (14.5, 16), (29.5, 32), (35, 36)]:
        state = contract_state(sent, injected, interval)
        assert state.outcome() is classify(sent, injected, interval)


def test_classify_exhaustive_and_matches_oracle():
    rng = random.Random(101)
    interval = ConstraintInterval(15, 30)
    for _ in range(500):
        sent = rng.uniform(0, 60)
        injected = rng.uniform(0, 60)
        outcome = classify(sent, injected, interval)
        assert isinstance(outcome, Outcome)
        assert outcome.short_name == outcome_name(sent, injected, 15, 30)


def test_classify_identity_consistency():
    rng = random.Random(7)
    for _ in range(200):
        a = rng.randint(0, 50)
        b = rng.randint(a, 100)
        interval = ConstraintInterval(a, b)
        t = rng.uniform(0, 120)
        assert classify(t, t, interval) in (Outcome.TRUE_POSITIVE, Outcome.TRUE_NEGATIVE)


def test_classify_membership_determinism():
    # any two inputs with the same membership pair yield the same outcome
    interval = ConstraintInterval(10, 20)
    assert classify(11, 12, interval) is classify(19.5, 10, interval)
    assert classify(2, 15, interval) is classify(25, 20, interval)
    assert classify(15, 3, interval) is classify(10, 21, interval)


def test_contract_state_validation():
    with pytest.raises(ValidationError):
        ContractState(2, 0)
    with pytest.raises(ValidationError):
        ContractState(0, -1)


def test_accumulate_increments_matching_counter():
    counts = ConfusionCounts()
    counts = counts.accumulate(Outcome.TRUE_POSITIVE)
    assert counts == ConfusionCounts(tp=1)
    assert counts.n == 1

    counts = ConfusionCounts(tp=3, fp=2, tn=4, fn=1).accumulate(Outcome.FALSE_NEGATIVE)
    assert counts == ConfusionCounts(tp=3, fp=2, tn=4, fn=2)
    assert counts.n == 11


def test_accumulate_fold():
    outcomes = [Outcome.TRUE_POSITIVE, Outcome.TRUE_POSITIVE, Outcome.TRUE_NEGATIVE]
    counts = ConfusionCounts.from_outcomes(outcomes)
    assert counts == ConfusionCounts(tp=2, tn=1)
    assert counts.n == 3


def test_accumulate_preserves_total():
    rng = random.Random(13)
    counts = ConfusionCounts()
    tags = list(Outcome)
    for i in range(300):
        counts = counts.accumulate(rng.choice(tags))
        assert counts.n == i + 1
        assert counts.n == counts.tp + counts.fp + counts.tn + counts.fn


def test_counts_reject_negative():
    with pytest.raises(ValidationError):
        ConfusionCounts(tp=-1)


def test_transaction_record_validation():
    record = TransactionRecord(id=0, sent_at=0.5, injected_at=4, block_height=1)
    assert record.injected_at == 4
    with pytest.raises(ValidationError):
        TransactionRecord(id=0, sent_at=-0.1, injected_at=4, block_height=1)
    with pytest.raises(ValidationError):
        TransactionRecord(id=0, sent_at=0.5, injected_at=-1, block_height=1)
    with pytest.raises(ValidationError):
        TransactionRecord(id=0, sent_at=0.5, injected_at=4, block_height=0)
    with pytest.raises(ValidationError):
        TransactionRecord(id=0, sent_at=float("nan"), injected_at=4, block_height=1)
