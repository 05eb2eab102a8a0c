"""
Equivalence Test - the weight, rank and matroidal oracles agree on random instances
"""

import numpy as np

from ecic_matroid_system.bridge import EquivalenceHarness, EquivalenceOutcome
from ecic_matroid_system.coding import ErrorProfile, IndexCode, Problem


def test_oracles_agree_on_500_random_instances(config, random_instance):
    harness = EquivalenceHarness(config)
    rng = np.random.default_rng(2024)
    outcomes = [harness.evaluate(*random_instance(rng)) for _ in range(500)]

    disagreements = [o for o in outcomes if not o.agree]
    assert disagreements == []
    # both verdicts occur, so the sweep is not vacuous
    assert any(o.weight for o in outcomes)
    assert any(not o.weight for o in outcomes)


def test_oracles_agree_on_zero_column_free_codes(config, random_instance):
    harness = EquivalenceHarness(config)
    rng = np.random.default_rng(77)
    for _ in range(100):
        problem, profile, code = random_instance(rng, allow_zero_columns=False)
        outcome = harness.evaluate(problem, profile, code)
        assert outcome.matroid is not None
        assert outcome.weight == outcome.rank == outcome.matroid


def test_worked_instances_agree(config, load):
    harness = EquivalenceHarness(config)
    expected = {
        "weighted_three": True,
        "all_ones": True,
        "all_ones_double": False,
        "three_parity": True,
        "three_parity_all": False,
        "clique": True,
    }
    for name, verdict in expected.items():
        instance = load(name)
        outcome = harness.evaluate(instance.problem, instance.profile, instance.code)
        assert outcome.agree, name
        assert outcome.weight is verdict, name


def test_zero_column_code_is_rejected_by_the_matroid_leg(config, load):
    instance = load("zero_column")
    outcome = EquivalenceHarness(config).evaluate(instance.problem, instance.profile, instance.code)
    assert outcome.zero_columns == (4,)
    assert outcome.matroid is None
    assert outcome.weight and outcome.rank
    assert outcome.agree


def test_agreement_rule():
    assert EquivalenceOutcome(True, True, True).agree
    assert not EquivalenceOutcome(True, True, False).agree
    assert not EquivalenceOutcome(True, True, None).agree
    assert EquivalenceOutcome(False, False, None, zero_columns=(2,)).agree
    assert not EquivalenceOutcome(False, False, False, zero_columns=(2,)).agree


def test_check_shortcut(config):
    problem = Problem.create(2, 2, [{2}, {1}], [1, 2])
    code = IndexCode.from_rows(2, [[1, 1, 1], [1, 1, 1]])
    assert EquivalenceHarness(config).check(problem, ErrorProfile((1, 1)), code)
