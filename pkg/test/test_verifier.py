"""
Code Verifier Test - weight and rank oracles on the worked instances and random codes
"""

import numpy as np
import pytest

from ecic_matroid_system.coding import (
    CodeVerifier,
    ErrorProfile,
    IndexCode,
    OracleKind,
    PatternWitness,
    Problem,
    WeightWitness,
)
from ecic_matroid_system.exceptions import (
    DemandInSideInfoError,
    IndexOutOfRangeError,
    InvalidArgumentError,
)


@pytest.fixture
def verifier(config):
    return CodeVerifier(config)


def both_oracles(verifier, problem, profile, code):
    return (verifier.verify_weight(problem, profile, code),
            verifier.verify_rank(problem, profile, code))


class TestProblemValidation:

    def test_weighted_three_problem_is_valid(self, weighted_three):
        weighted_three.problem.validate()
        assert weighted_three.problem.is_valid()

    def test_demand_in_side_info_names_receiver(self):
        problem = Problem.create(2, 3, [{2}, {1, 3}, {1, 2}], [2, 2, 3])
        with pytest.raises(DemandInSideInfoError) as info:
            problem.validate()
        assert info.value.receiver == 1
        assert "R1" in str(info.value)

    def test_index_out_of_range(self):
        problem = Problem.create(2, 3, [{4}, {1, 3}, {1, 2}], [1, 2, 3])
        with pytest.raises(IndexOutOfRangeError) as info:
            problem.validate()
        assert info.value.receiver == 1

    def test_unknowns_and_demand_position(self, weighted_three):
        problem = weighted_three.problem
        assert problem.unknowns(1) == (1, 3)
        assert problem.demand_position(1) == 0
        assert problem.unknowns(2) == (2,)

    def test_profile_length_must_match(self, verifier, weighted_three):
        with pytest.raises(InvalidArgumentError):
            verifier.verify_weight(weighted_three.problem, ErrorProfile((1, 1)), weighted_three.code)

    def test_code_rows_must_match(self, verifier, weighted_three):
        code = IndexCode.from_rows(2, [[1, 1], [0, 1]])
        with pytest.raises(InvalidArgumentError):
            verifier.verify_rank(weighted_three.problem, weighted_three.profile, code)

    def test_profile_helpers(self):
        assert ErrorProfile.uniform(3, 2).deltas == (2, 2, 2)
        assert ErrorProfile.subset(3, [1], 1).deltas == (1, 0, 0)
        assert ErrorProfile((2, 1, 1)).dominates(ErrorProfile((1, 1, 0)))
        with pytest.raises(InvalidArgumentError):
            ErrorProfile((1, -1))


class TestWorkedInstances:

    def test_weighted_three_passes_both_oracles(self, verifier, weighted_three):
        weight, rank = both_oracles(verifier, weighted_three.problem, weighted_three.profile, weighted_three.code)
        assert weight.overall and rank.overall
        assert weight.oracle == OracleKind.WEIGHT and rank.oracle == OracleKind.RANK
        assert weight.passed_count == 3

    def test_five_receivers_passes_differential_profile(self, verifier, five_receivers):
        weight, rank = both_oracles(verifier, five_receivers.problem, five_receivers.profile, five_receivers.code)
        assert weight.overall and rank.overall

    def test_five_receivers_fails_uniform_double_correction(self, verifier, load):
        instance = load("five_receivers_uniform")
        weight, rank = both_oracles(verifier, instance.problem, instance.profile, instance.code)
        assert not weight.overall and not rank.overall
        assert weight.verdict_pattern() == rank.verdict_pattern()

    def test_all_ones_single_error(self, verifier, all_ones):
        weight, rank = both_oracles(verifier, all_ones.problem, all_ones.profile, all_ones.code)
        assert weight.overall and rank.overall

    def test_all_ones_double_error_is_infeasible_everywhere(self, verifier, load):
        instance = load("all_ones_double")
        weight, rank = both_oracles(verifier, instance.problem, instance.profile, instance.code)
        for report in (weight, rank):
            assert report.failed_receivers == (1, 2, 3)
            assert all(v.infeasible for v in report.verdicts)
            assert "infeasible" in report.verdict(1).describe()

    def test_three_parity_subset_profile_passes(self, verifier, three_parity):
        weight, rank = both_oracles(verifier, three_parity.problem, three_parity.profile, three_parity.code)
        assert weight.overall and rank.overall

    def test_three_parity_weight_witness_at_r2(self, verifier, three_parity):
        report = verifier.verify_weight(three_parity.problem, ErrorProfile((1, 1, 0)), three_parity.code)
        assert report.failed_receivers == (2,)
        witness = report.verdict(2).witness
        assert isinstance(witness, WeightWitness)
        assert witness.z == (0, 1, 0)
        assert witness.weight == 2 and witness.required == 3
        assert witness.describe() == "z=(0,1,0) wt=2 < 3"

    @pytest.mark.parametrize("deltas, receiver, pattern", [
        ((0, 1, 0), 2, (1, 2)),
        ((0, 0, 1), 3, (1, 3)),
    ])
    def test_three_parity_rank_witnesses(self, verifier, three_parity, deltas, receiver, pattern):
        report = verifier.verify_rank(three_parity.problem, ErrorProfile(deltas), three_parity.code)
        assert report.failed_receivers == (receiver,)
        witness = report.verdict(receiver).witness
        assert isinstance(witness, PatternWitness)
        assert witness.pattern.indices == pattern

    def test_identity_code_without_side_information(self, verifier):
        problem = Problem.create(3, 3, [set(), set(), set()], [1, 2, 3])
        code = IndexCode.from_rows(3, np.eye(3, dtype=int).tolist())
        weight, rank = both_oracles(verifier, problem, ErrorProfile.uniform(3, 0), code)
        assert weight.overall and rank.overall

    def test_report_dict(self, verifier, three_parity):
        report = verifier.verify_weight(three_parity.problem, ErrorProfile((1, 1, 1)), three_parity.code)
        data = report.to_dict()
        assert data['oracle'] == 'weight'
        assert data['overall'] is False
        assert data['verdicts'][1]['witness']['z'] == [0, 1, 0]


class TestVerifierProperties:

    def test_oracles_agree_on_random_instances(self, verifier, random_instance):
        rng = np.random.default_rng(7)
        for _ in range(200):
            problem, profile, code = random_instance(rng, max_n=4, max_length=5, max_delta=2)
            if any(2 * d > code.length for d in profile.deltas):
                continue
            weight, rank = both_oracles(verifier, problem, profile, code)
            assert weight.verdict_pattern() == rank.verdict_pattern()

    def test_monotone_in_the_profile(self, verifier, random_instance):
        rng = np.random.default_rng(11)
        for _ in range(100):
            problem, profile, code = random_instance(rng, max_delta=2)
            report = verifier.verify_weight(problem, profile, code)
            if not report.overall:
                continue
            weaker = ErrorProfile(tuple(int(rng.integers(0, d + 1)) for d in profile.deltas))
            assert profile.dominates(weaker)
            assert verifier.verify_weight(problem, weaker, code).overall
            assert verifier.verify_rank(problem, weaker, code).overall

    def test_column_scaling_keeps_verdicts(self, verifier, random_instance):
        rng = np.random.default_rng(13)
        for _ in range(100):
            problem, profile, code = random_instance(rng)
            column = int(rng.integers(code.length))
            scalar = int(rng.integers(1, problem.q))
            scaled = IndexCode(code.matrix.scale_column(column, scalar))
            before = both_oracles(verifier, problem, profile, code)
            after = both_oracles(verifier, problem, profile, scaled)
            assert [r.verdict_pattern() for r in before] == [r.verdict_pattern() for r in after]

    def test_message_relabelling_keeps_verdicts(self, verifier, random_instance):
        rng = np.random.default_rng(17)
        for _ in range(100):
            problem, profile, code = random_instance(rng)
            perm = rng.permutation(problem.n)  # message j moves to perm[j-1] + 1
            relabel = {j: int(perm[j - 1]) + 1 for j in range(1, problem.n + 1)}
            moved = Problem.create(
                problem.q, problem.n,
                [{relabel[j] for j in side} for side in problem.side_info],
                [relabel[f] for f in problem.demands],
            )
            rows = [None] * problem.n
            for j in range(1, problem.n + 1):
                rows[relabel[j] - 1] = code.matrix.row(j - 1).entries
            moved_code = IndexCode.from_rows(problem.q, rows)
            before = both_oracles(verifier, problem, profile, code)
            after = both_oracles(verifier, moved, profile, moved_code)
            assert [r.verdict_pattern() for r in before] == [r.verdict_pattern() for r in after]

    def test_passes_weight_matches_report(self, verifier, random_instance):
        rng = np.random.default_rng(19)
        for _ in range(100):
            problem, profile, code = random_instance(rng)
            fast = verifier.passes_weight(problem, profile, code.matrix.data)
            assert fast == verifier.verify_weight(problem, profile, code).overall

    def test_verify_dispatch_rejects_matroid_oracle(self, verifier, weighted_three):
        with pytest.raises(ValueError):
            verifier.verify(OracleKind.MATROID, weighted_three.problem, weighted_three.profile, weighted_three.code)
