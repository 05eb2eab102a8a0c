"""
Command Line Interface - ECIC Matroid System
Subcommands wiring the verifiers, the matroid bridge, the search and the simulator

Exit codes: 0 pass, 1 semantic failure, 2 usage or parse error.
Reports go to standard output, diagnostics to standard error.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..bridge import CertificateBuilder, CertificateChecker, EquivalenceHarness
from ..coding import CodeVerifier, OracleKind
from ..config import ConfigManager, EngineConfig
from ..data import load_instance, load_certificate, save_certificate, list_instances, InstanceFile
from ..exceptions import (
    ConfigurationError,
    GroundSetTooLargeError,
    InfeasibleProfileError,
    InstanceParseError,
    InvalidArgumentError,
    MalformedCertificateError,
    PreconditionViolatedError,
    ProblemValidationError,
    SearchSpaceTooLargeError,
    ZeroColumnError,
)
from ..matroid import check_axioms
from ..reporting import ReportFormatter, ReportLogger
from ..search import CodeSearcher, SearchSpec, SearchMode
from ..simulation import DecodeSimulator

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    InstanceParseError,
    MalformedCertificateError,
    ProblemValidationError,
    InvalidArgumentError,
    ConfigurationError,
    GroundSetTooLargeError,
    SearchSpaceTooLargeError,
)
SEMANTIC_ERRORS = (ZeroColumnError, PreconditionViolatedError)

logger = logging.getLogger("CLI")


@dataclass
class CommandOutcome:
    """What a subcommand produced"""
    exit_code: int
    lines: List[str]
    details: Dict[str, Any] = dc_field(default_factory=dict)

    @property
    def summary(self) -> str:
        return self.lines[-1] if self.lines else ""


class CommandRunner:
    """Holds the engine configuration and runs one subcommand"""

    def __init__(self, config: EngineConfig):
        self.config = config
        self.formatter = ReportFormatter()
        self.verifier = CodeVerifier(config)
        self.builder = CertificateBuilder(config)
        self.checker = CertificateChecker(config)

    # ------------------------------------------------------------------
    # verify
    # ------------------------------------------------------------------
    def verify(self, args: argparse.Namespace) -> CommandOutcome:
        instance = self._instance_with_code(args.instance)
        problem, profile, code = instance.problem, instance.profile, instance.code
        oracles = [OracleKind(args.oracle)] if args.oracle != 'all' else list(OracleKind)

        lines = self._header(instance)
        results: Dict[str, bool] = {}
        details: Dict[str, Any] = {}
        for oracle in oracles:
            if oracle == OracleKind.MATROID:
                passed, oracle_lines, report = self._matroid_leg(instance, args.exhaustive_bases,
                                                                 strict=len(oracles) == 1)
            else:
                report = self.verifier.verify(oracle, problem, profile, code)
                passed, oracle_lines = report.overall, self.formatter.verifier_report(report, problem.m)
            results[oracle.value] = passed
            details[oracle.value] = report.to_dict() if report is not None else None
            lines += oracle_lines

        if len(oracles) > 1:
            lines.append(self.formatter.agreement(results.values()))
        exit_code = EXIT_PASS if all(results.values()) else EXIT_FAIL
        lines.append(f"Result: {'pass' if exit_code == EXIT_PASS else 'fail'}")
        return CommandOutcome(exit_code, lines, details)

    def _matroid_leg(self, instance: InstanceFile, exhaustive_bases: bool, strict: bool):
        problem, profile = instance.problem, instance.profile
        try:
            certificate = self.builder.code_to_certificate(problem, instance.code)
        except ZeroColumnError as e:
            if strict:
                raise
            return False, ["Oracle matroid: rejected", f"  {e}"], None
        try:
            report = self.checker.check_matroidal(certificate, problem, profile,
                                                  exhaustive_bases=exhaustive_bases)
        except InfeasibleProfileError as e:
            return False, self.formatter.infeasible('matroid', problem.m, str(e)), None
        return report.overall, self.formatter.verifier_report(report, problem.m), report

    # ------------------------------------------------------------------
    # to-matroid / from-matroid
    # ------------------------------------------------------------------
    def to_matroid(self, args: argparse.Namespace) -> CommandOutcome:
        instance = self._instance_with_code(args.instance)
        certificate = self.builder.code_to_certificate(instance.problem, instance.code)
        path = save_certificate(certificate, args.out)
        rep = certificate.matroid.rep
        lines = [f"Certificate for {instance.name}: {rep.rows}x{rep.cols} over F_{instance.problem.q}"]
        lines += self.formatter.labelled_matrix(rep.to_lists(), certificate.matroid.labels)
        lines.append(f"g(messages) = {list(certificate.ground_map.message_labels)}")
        lines.append(f"g(code) = {list(certificate.ground_map.code_labels)}")
        lines.append(f"Basis = {sorted(certificate.basis)}, tail = {list(certificate.basis_tail)}")
        lines.append(f"Written to {path}")
        return CommandOutcome(EXIT_PASS, lines, certificate.to_dict())

    def from_matroid(self, args: argparse.Namespace) -> CommandOutcome:
        certificate = load_certificate(args.certificate)
        instance = load_instance(args.instance)
        problem, profile = instance.problem, instance.profile

        code = self.builder.certificate_to_code(certificate)
        lines = self.formatter.code(code, title="Extracted L")

        results = []
        for oracle in (OracleKind.WEIGHT, OracleKind.RANK):
            report = self.verifier.verify(oracle, problem, profile, code)
            results.append(report.overall)
            lines += self.formatter.verifier_report(report, problem.m)
        try:
            report = self.checker.check_matroidal(certificate, problem, profile)
            results.append(report.overall)
            lines += self.formatter.verifier_report(report, problem.m)
        except InfeasibleProfileError as e:
            results.append(False)
            lines += self.formatter.infeasible('matroid', problem.m, str(e))

        lines.append(self.formatter.agreement(results))
        exit_code = EXIT_PASS if all(results) else EXIT_FAIL
        lines.append(f"Result: {'pass' if exit_code == EXIT_PASS else 'fail'}")
        return CommandOutcome(exit_code, lines, {'code': code.to_lists()})

    # ------------------------------------------------------------------
    # search / simulate / contractions / equiv-check
    # ------------------------------------------------------------------
    def search(self, args: argparse.Namespace) -> CommandOutcome:
        instance = load_instance(args.instance)
        spec = SearchSpec(
            problem=instance.problem,
            profile=instance.profile,
            n_min=args.nmin,
            n_max=args.nmax,
            mode=SearchMode(args.mode),
            budget=args.budget,
            seed=self.config.default_seed if args.seed is None else args.seed,
        )
        result = CodeSearcher(self.config).search(spec)
        lines = [f"Search for {instance.name}: deltas={list(instance.profile.deltas)}, mode={spec.mode.value}"]
        lines += self.formatter.search_result(result, spec.n_max)
        exit_code = EXIT_PASS if result.code is not None else EXIT_FAIL
        return CommandOutcome(exit_code, lines, result.to_dict())

    def simulate(self, args: argparse.Namespace) -> CommandOutcome:
        instance = self._instance_with_code(args.instance)
        result = DecodeSimulator(self.config).simulate(
            instance.problem, instance.profile, instance.code, trials=args.trials, seed=args.seed
        )
        lines = [f"Simulation for {instance.name}"] + self.formatter.simulation_result(result)
        exit_code = EXIT_PASS if result.all_succeeded else EXIT_FAIL
        outcome = CommandOutcome(exit_code, lines, result.to_dict())
        outcome.details['frame'] = result.to_dataframe()
        return outcome

    def contractions(self, args: argparse.Namespace) -> CommandOutcome:
        instance = self._instance_with_code(args.instance)
        problem = instance.problem
        if args.receiver < 1 or args.receiver > problem.m:
            raise InvalidArgumentError(f"Receiver must lie in 1..{problem.m}, got {args.receiver}")
        certificate = self.builder.code_to_certificate(problem, instance.code)
        entries = self.checker.contraction_table(certificate, problem, instance.profile, args.receiver)
        lines = self.formatter.contraction_table(entries)
        passed = all(entry.in_span for entry in entries)
        lines.append(f"R{args.receiver}: {sum(e.in_span for e in entries)}/{len(entries)} patterns in span")
        if args.check_axioms:
            holding = sum(check_axioms(e.matroid, limit=self.config.axiom_check_limit) for e in entries)
            lines.append(f"Matroid axioms hold on {holding}/{len(entries)} contractions")
            passed = passed and holding == len(entries)
        return CommandOutcome(EXIT_PASS if passed else EXIT_FAIL, lines,
                              {'entries': [e.to_dict() for e in entries]})

    def equiv_check(self, args: argparse.Namespace) -> CommandOutcome:
        directory = Path(args.directory)
        if not directory.is_dir():
            raise InvalidArgumentError(f"{directory} is not a directory")
        harness = EquivalenceHarness(self.config)

        lines: List[str] = []
        checked, disagreements = 0, 0
        for path in list_instances(directory):
            try:
                instance = load_instance(path)
            except (InstanceParseError, ProblemValidationError, InvalidArgumentError) as e:
                lines.append(f"{path.name}: skipped ({e})")
                continue
            if instance.code is None:
                lines.append(f"{path.name}: skipped (no code)")
                continue
            outcome = harness.evaluate(instance.problem, instance.profile, instance.code)
            checked += 1
            disagreements += 0 if outcome.agree else 1
            lines.append(self.formatter.equivalence(path.name, outcome))

        lines.append(f"Equivalence: {checked - disagreements}/{checked} instances agree")
        return CommandOutcome(EXIT_PASS if disagreements == 0 else EXIT_FAIL, lines,
                              {'checked': checked, 'disagreements': disagreements})

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------
    @staticmethod
    def _instance_with_code(path: str) -> InstanceFile:
        instance = load_instance(path)
        if instance.code is None:
            raise InstanceParseError(path, "instance has no code matrix", field='code')
        return instance

    @staticmethod
    def _header(instance: InstanceFile) -> List[str]:
        p = instance.problem
        return [
            f"Instance {instance.name}: q={p.q}, n={p.n}, m={p.m}, N={instance.code.length}, "
            f"deltas={list(instance.profile.deltas)}"
        ]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecic",
        description="Differential error-correcting index codes and their matroid certificates",
    )
    parser.add_argument("--config", help="configuration file name under --config-dir")
    parser.add_argument("--config-dir", default="configs")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    parser.add_argument("--save-report", action="store_true", help="persist the run as JSON and CSV")
    parser.add_argument("--report-dir", metavar="DIR", help="where --save-report writes (default: config report_dir)")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify the code of an instance")
    verify.add_argument("instance")
    verify.add_argument("--oracle", choices=["weight", "rank", "matroid", "all"], default="all")
    verify.add_argument("--exhaustive-bases", action="store_true",
                        help="matroid oracle: try every basis extending g(messages)")

    to_matroid = sub.add_parser("to-matroid", help="write the certificate of an instance's code")
    to_matroid.add_argument("instance")
    to_matroid.add_argument("out")

    from_matroid = sub.add_parser("from-matroid", help="extract and verify the code of a certificate")
    from_matroid.add_argument("certificate")
    from_matroid.add_argument("instance")

    search = sub.add_parser("search", help="search for a shortest code")
    search.add_argument("instance")
    search.add_argument("--mode", choices=[m.value for m in SearchMode], default="exhaustive")
    search.add_argument("--nmin", type=int, default=1)
    search.add_argument("--nmax", type=int, default=8)
    search.add_argument("--budget", type=int)
    search.add_argument("--seed", type=int)

    simulate = sub.add_parser("simulate", help="Monte Carlo decoding of an instance's code")
    simulate.add_argument("instance")
    simulate.add_argument("--trials", type=int)
    simulate.add_argument("--seed", type=int)

    equiv = sub.add_parser("equiv-check", help="cross-check the three oracles on a fixture directory")
    equiv.add_argument("directory")

    contractions = sub.add_parser("contractions", help="contracted matroids for every pattern of a receiver")
    contractions.add_argument("instance")
    contractions.add_argument("--receiver", type=int, required=True)
    contractions.add_argument("--check-axioms", action="store_true",
                              help="also verify the independence axioms of every contracted matroid")

    return parser


COMMANDS: Dict[str, Callable[[CommandRunner, argparse.Namespace], CommandOutcome]] = {
    'verify': CommandRunner.verify,
    'to-matroid': CommandRunner.to_matroid,
    'from-matroid': CommandRunner.from_matroid,
    'search': CommandRunner.search,
    'simulate': CommandRunner.simulate,
    'equiv-check': CommandRunner.equiv_check,
    'contractions': CommandRunner.contractions,
}


def _target(args: argparse.Namespace) -> str:
    for name in ('instance', 'certificate', 'directory'):
        if getattr(args, name, None):
            return str(getattr(args, name))
    return ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code in (0, None) else EXIT_USAGE

    try:
        if args.config:
            config = ConfigManager(args.config_dir).load_config(args.config)
        else:
            config = EngineConfig()
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.getLogger().setLevel(args.log_level or config.log_level)

    runner = CommandRunner(config)
    logger.debug(f"🚀 Running {args.command} with {config.max_workers} workers")
    try:
        outcome = COMMANDS[args.command](runner, args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        outcome = CommandOutcome(EXIT_USAGE, [], {'error': str(e)})
    except SEMANTIC_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        outcome = CommandOutcome(EXIT_FAIL, [], {'error': str(e)})

    for line in outcome.lines:
        print(line)

    if args.save_report:
        _save_report(args, outcome, args.report_dir or config.report_dir)
    return outcome.exit_code


def _save_report(args: argparse.Namespace, outcome: CommandOutcome, report_dir: str) -> None:
    report_logger = ReportLogger(report_dir)
    frame = outcome.details.pop('frame', None)
    report_logger.log_run(args.command, _target(args), outcome.exit_code, outcome.summary, outcome.details)
    if frame is not None and len(frame):
        report_logger.export_table(f"simulation_{Path(_target(args)).stem}", frame)
