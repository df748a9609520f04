"""Set-based and user-oriented measure formulas, identities, and errors."""

from fractions import Fraction

import pytest

from metriclass.enumeration import enumerate_domain, parse_domain
from metriclass.errors import ParameterError, UndefinedValueError
from metriclass.measures import (
    classification_accuracy,
    coverage_ratio,
    error_rate,
    f_measure,
    fallout,
    inverse_recall,
    measure_from_id,
    miss_rate,
    novelty_ratio,
    precision,
    recall,
    recall_effort,
    retrieval_recall,
    utility,
)
from metriclass.model import ContingencyTable, UserContext
from metriclass.values import exact, value_eq

ALL_TABLES = list(enumerate_domain(parse_domain("contingency:N=15,R=5")))


class TestContingencyFormulas:
    def test_recall_zero_numerator(self):
        assert recall(ContingencyTable(0, 0, 5, 10)) == exact(0)

    def test_precision_all_retrieved_relevant(self):
        assert precision(ContingencyTable(3, 0, 2, 10)) == exact(1)

    def test_f_measure_hand_evaluated(self):
        # prec = recall = 2/5, harmonic mean stays 2/5
        assert f_measure(ContingencyTable(2, 3, 3, 7)) == exact(2, 5)

    def test_utility_equal_weights_sums_collection(self):
        one = Fraction(1)
        t = ContingencyTable(2, 3, 3, 7)
        assert utility(t, one, one, one, one) == exact(15)

    def test_utility_rejects_nonpositive_weight(self):
        with pytest.raises(ParameterError):
            utility(ContingencyTable(1, 1, 1, 1), Fraction(0), Fraction(1), Fraction(1), Fraction(1))

    def test_precision_undefined_when_nothing_retrieved(self):
        with pytest.raises(UndefinedValueError) as err:
            precision(ContingencyTable(0, 0, 5, 10))
        assert err.value.measure_id == "precision"
        assert "tp=0" in err.value.element

    def test_f_measure_undefined_when_both_components_zero(self):
        with pytest.raises(UndefinedValueError):
            f_measure(ContingencyTable(0, 3, 5, 7))

    def test_recall_plus_miss_rate_is_one(self):
        for t in ALL_TABLES:
            if t.tp + t.fn:
                assert recall(t).rational + miss_rate(t).rational == 1

    def test_fallout_plus_inverse_recall_is_one(self):
        for t in ALL_TABLES:
            if t.fp + t.tn:
                assert fallout(t).rational + inverse_recall(t).rational == 1

    def test_f_measure_algebraic_identity(self):
        # harmonic mean of precision and recall == 2tp / (2tp + fp + fn)
        checked = 0
        for t in ALL_TABLES:
            try:
                harmonic = f_measure(t).rational
            except UndefinedValueError:
                continue
            checked += 1
            assert harmonic == Fraction(2 * t.tp, 2 * t.tp + t.fp + t.fn)
        assert checked == 55  # 66 tables, 11 with tp == 0

    def test_accuracy_error_rate_complement(self):
        for t in ALL_TABLES:
            total = classification_accuracy(t).rational + error_rate(t).rational
            assert total == 1


class TestUserOriented:
    def test_retrieval_recall_insensitive_to_extra_nonrelevant(self):
        a = retrieval_recall(UserContext(1, 1, 0, 1))
        b = retrieval_recall(UserContext(1, 1, 0, 2))
        assert a == b == exact(1)

    def test_recall_effort_collision(self):
        a = recall_effort(UserContext(1, 0, 1, 2))
        b = recall_effort(UserContext(1, 0, 0, 2))
        assert a == b == exact(1, 2)

    def test_coverage_full(self):
        assert coverage_ratio(UserContext(3, 3, 0, 4)) == exact(1)

    def test_novelty_undefined_with_no_relevant_retrieved(self):
        with pytest.raises(UndefinedValueError):
            novelty_ratio(UserContext(1, 0, 0, 2))

    def test_novelty_all_new(self):
        assert novelty_ratio(UserContext(1, 0, 2, 3)) == exact(1)


class TestRegistryIds:
    def test_plain_ids_resolve(self):
        m = measure_from_id("recall")
        assert m.family == "contingency" and m.backend == "exact"
        assert value_eq(m.evaluate(ContingencyTable(2, 3, 3, 7)), exact(2, 5))

    def test_utility_requires_all_weights(self):
        with pytest.raises(ParameterError):
            measure_from_id("utility?alpha=1,beta=1")
        m = measure_from_id("utility?alpha=1,beta=1,gamma=1,delta=1")
        assert m.evaluate(ContingencyTable(2, 3, 3, 7)) == exact(15)

    def test_unknown_id_rejected(self):
        from metriclass.errors import ParseError

        with pytest.raises(ParseError):
            measure_from_id("made-up-measure")

    def test_user_measure_family(self):
        m = measure_from_id("novelty-ratio")
        assert m.family == "user"
