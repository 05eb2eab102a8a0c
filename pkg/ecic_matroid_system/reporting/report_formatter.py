"""
Report Formatter - ECIC Matroid System
Deterministic plain-text reports; every index shown is 1-based
"""

from typing import Iterable, List, Optional, Sequence

from ..bridge import ContractionEntry, EquivalenceOutcome
from ..coding import VerifierReport, IndexCode
from ..search import SearchResult
from ..simulation import SimulationResult


class ReportFormatter:
    """Builds report lines; no timestamps, so output is byte-identical across runs"""

    @staticmethod
    def matrix(rows: Sequence[Sequence[int]], indent: str = "  ") -> List[str]:
        return [indent + "[" + " ".join(str(v) for v in row) + "]" for row in rows]

    @staticmethod
    def labelled_matrix(rows: Sequence[Sequence[int]], labels: Sequence[int], indent: str = "  ") -> List[str]:
        width = max([len(str(label)) for label in labels] + [1])
        header = indent + " " + " ".join(str(label).rjust(width) for label in labels)
        body = [indent + "[" + " ".join(str(v).rjust(width) for v in row) + "]" for row in rows]
        return [header] + body

    def code(self, code: IndexCode, title: str = "L") -> List[str]:
        return [f"{title} ({code.n}x{code.length} over F_{code.field.q}):"] + self.matrix(code.to_lists())

    def verifier_report(self, report: VerifierReport, receivers: int) -> List[str]:
        name = report.oracle.value
        if report.global_failure is not None:
            return [f"Oracle {name}: 0/{receivers} receivers pass", f"  {report.global_failure}"]
        lines = [f"Oracle {name}: {report.passed_count}/{receivers} receivers pass"]
        lines += [f"  {verdict.describe()}" for verdict in report.verdicts]
        return lines

    @staticmethod
    def infeasible(oracle: str, receivers: int, message: str) -> List[str]:
        return [f"Oracle {oracle}: 0/{receivers} receivers pass", f"  {message}"]

    @staticmethod
    def agreement(overall: Iterable[bool]) -> str:
        verdicts = list(overall)
        agree = len(set(verdicts)) <= 1
        return f"Cross-oracle agreement: {'yes' if agree else 'NO'}"

    def search_result(self, result: SearchResult, n_max: int) -> List[str]:
        lines = [outcome.describe() for outcome in result.lengths]
        if result.code is not None:
            lines.append(f"Minimal length found: N={result.code.length}")
            lines += self.code(result.code)
        elif result.lengths and all(o.exhausted for o in result.lengths):
            lines.append(f"no code exists with N ≤ {n_max} (every length refuted)")
        else:
            lines.append(f"no code found ≤ N_max={n_max} (not a refutation)")
        lines.append(f"Candidates tested: {result.candidates_tested}")
        return lines

    @staticmethod
    def simulation_result(result: SimulationResult) -> List[str]:
        if result.trials == 0:
            return ["No trials run"]
        lines = [f"Trials: {result.trials} (seed {result.seed})"]
        for i in result.receivers:
            lines.append(
                f"  R{i}: {result.successes[i - 1]}/{result.trials} decoded "
                f"(rate {result.success_rate(i):.3f}, delta={result.deltas[i - 1]})"
            )
        return lines

    def contraction_table(self, entries: Sequence[ContractionEntry]) -> List[str]:
        lines = []
        for entry in entries:
            verdict = "in span" if entry.in_span else "NOT in span"
            lines.append(
                f"R{entry.receiver}, pattern {entry.pattern}: contract {sorted(entry.contracted)}, "
                f"demand label {entry.demand_label} {verdict}"
            )
            lines += self.labelled_matrix(entry.matroid.rep.to_lists(), entry.matroid.labels)
        return lines

    @staticmethod
    def equivalence(name: str, outcome: EquivalenceOutcome) -> str:
        def show(value: Optional[bool]) -> str:
            if value is None:
                return "rejected"
            return "pass" if value else "fail"

        status = "agree" if outcome.agree else "DISAGREE"
        return (f"{name}: weight={show(outcome.weight)} rank={show(outcome.rank)} "
                f"matroid={show(outcome.matroid)} -> {status}")
