import argparse
import sys
import time
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import ValidationError

from configs.constants import DEFAULT_TOY_COUNT, DEFAULT_TOY_LENGTH, PARAM_COUNT_TOLERANCE
from enums.dilation_mode import DilationMode
from enums.exit_code import ExitCode
from enums.grad_check_op import GradCheckOp
from errors import ArgumentError, ConfigurationError, DimensionError, NumericError, UnknownNameError, WorkerError
from helpers.get_config_by_path import get_config_by_path
from helpers.get_duration import get_duration
from helpers.get_run_id import get_run_id
from helpers.parse import parse_int_list, parse_modes
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.optimizer_config import OptimizerConfig
from models.param_report import ParamReport
from models.toy_job import ToyJobModel
from services.analyzer import AnalyzerService
from services.grad_check import GradCheckService
from services.logging import LoggingService
from services.model_builder import ModelBuilderService
from services.report import ReportService
from services.toy import ToyService

Payload = Union[Dict[str, Any], List[Any]]


class Commands:
    """One method per d3kit subcommand; each returns the process exit code."""

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _reports: ReportService
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self) -> None:
        self._reports = ReportService()

        self._log = LoggingService()
        self._log.setup("d3kit")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def run(self, args: argparse.Namespace) -> ExitCode:
        """
        Dispatch a parsed command line.

        Configuration, validation, argument and shape errors map to exit code 2; numeric
        failures and failed checks map to 1.
        """
        handler = getattr(self, args.command.replace("-", "_"))
        started = time.perf_counter()

        try:
            code = handler(args)
        except (ConfigurationError, ValidationError, ArgumentError, DimensionError, UnknownNameError) as exc:
            self._log.error(f"{args.command}: {exc}")
            return ExitCode.CONFIGURATION_ERROR
        except NumericError as exc:
            epoch = f" at epoch {exc.epoch}" if exc.epoch is not None else ""
            self._log.error(f"{args.command}: {exc}{epoch}")
            return ExitCode.CHECK_FAILED
        except WorkerError as exc:
            self._log.error(f"{args.command}: {exc}")
            return ExitCode.CHECK_FAILED

        self._log.info(f"{args.command} finished in {get_duration(time.perf_counter() - started)}")
        return code

    def analyze_rf(self, args: argparse.Namespace) -> ExitCode:
        analyzer = AnalyzerService()
        config = self._load_config(args)
        mode = DilationMode(args.mode) if args.mode else None
        report = analyzer.analyze(config, mode)

        self._emit(args, report.to_dict(), report.to_rows())
        return ExitCode.OK

    def grad_check(self, args: argparse.Namespace) -> ExitCode:
        checker = GradCheckService()
        ops = list(GradCheckOp) if args.op == "all" else [checker.resolve(args.op)]
        seeds = parse_int_list(args.seed)

        if not seeds:
            raise ArgumentError("--seed needs at least one value")

        reports = [
            report.to_dict() for op in ops for seed in seeds for report in checker.check_all(op, seed, args.tol)
        ]
        failed = [report for report in reports if not report["passed"]]

        for report in failed:
            self._log.error(
                f"{report['op']}/{report['block']} seed {report['seed']}: "
                f"relative error {report['max_rel_error']:.3e} >= {report['tolerance']:.1e}"
            )

        self._log.info(f"Gradient checks: {len(reports) - len(failed)}/{len(reports)} passed")
        self._emit(args, {"checks": reports, "passed": not failed}, reports)
        return ExitCode.CHECK_FAILED if failed else ExitCode.OK

    def param_count(self, args: argparse.Namespace) -> ExitCode:
        builder = ModelBuilderService()

        if args.preset:
            report = builder.preset_param_count(args.preset)
        else:
            report = builder.param_count(get_config_by_path(args.config), name=args.config)

        self._emit(args, report.to_dict(), report.to_rows())
        return self._param_exit_code(report)

    def train_toy(self, args: argparse.Namespace) -> ExitCode:
        toy = ToyService()
        base = get_config_by_path(args.config)

        if not isinstance(base, (D2Config, D3Config)):
            raise ConfigurationError("train-toy needs a D2 or D3 block config")

        modes: List[Optional[DilationMode]] = list(parse_modes(args.modes)) if args.modes else [None]
        optimizer = OptimizerConfig(
            lr=args.lr,
            momentum=args.momentum,
            epochs=args.epochs,
            batch_size=args.batch_size,
            weight_decay=args.weight_decay,
            poly_power=args.poly_power,
        )
        jobs = [
            ToyJobModel(
                run_id=self._run_id(base, mode, args),
                config=(base.with_mode(mode) if mode else base).model_dump(mode="json"),
                distance=args.distance,
                length=args.length,
                count=args.count,
                seed=args.seed,
                optimizer=optimizer,
            )
            for mode in modes
        ]

        reports = toy.run_parallel(jobs)

        for report in reports:
            self._log.info(
                f"[{report.run_id}] final loss {report.final_loss:.6f}, "
                f"marker twin loss {report.marker_twin_loss:.6f} (floor {report.marker_twin_floor})"
            )

        payload: Payload = reports[0].to_dict() if len(reports) == 1 else {"runs": [r.to_dict() for r in reports]}
        self._emit(args, payload, [row for report in reports for row in report.to_rows()])
        return ExitCode.OK

    def rf_empirical(self, args: argparse.Namespace) -> ExitCode:
        config = get_config_by_path(args.config)

        if not isinstance(config, (D2Config, D3Config)):
            raise ConfigurationError("rf-empirical needs a D2 or D3 block config")

        result = AnalyzerService().empirical_footprint(config, position=args.position, seed=args.seed)

        self._emit(args, result, [{"offset": offset} for offset in result["empirical"]])
        return ExitCode.OK if result["contained"] else ExitCode.CHECK_FAILED

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _load_config(self, args: argparse.Namespace) -> Any:
        if getattr(args, "preset", None):
            return ModelBuilderService().preset(args.preset)

        return get_config_by_path(args.config)

    def _run_id(self, config: Union[D2Config, D3Config], mode: Optional[DilationMode], args: argparse.Namespace) -> str:
        if mode is None:
            mode = config.mode if isinstance(config, D2Config) else config.inner.mode

        return get_run_id("toy", config.type, mode.value, f"d{args.distance}", f"seed{args.seed}")

    def _param_exit_code(self, report: ParamReport) -> ExitCode:
        if report.within(PARAM_COUNT_TOLERANCE):
            return ExitCode.OK

        self._log.warning(
            f"{report.name}: {report.total:,} parameters deviates {report.deviation:+.1%} "
            f"from the reference {report.reference:,}"
        )
        return ExitCode.CHECK_FAILED

    def _emit(self, args: argparse.Namespace, payload: Payload, rows: List[Dict[str, Any]]) -> None:
        if args.out:
            self._reports.write_json(args.out, payload)
        else:
            sys.stdout.write(self._reports.dumps(payload))

        if args.csv:
            self._reports.write_csv(args.csv, rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="d3kit")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze-rf", help="Symbolic receptive-field and blind-spot report")
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--config")
    source.add_argument("--preset")
    analyze.add_argument("--mode", choices=[mode.value for mode in DilationMode])

    grad = commands.add_parser("grad-check", help="Finite-difference gradient checks")
    grad.add_argument("--op", required=True, help="Operation name or 'all'")
    grad.add_argument("--seed", default="0", help="Seed, list or range such as 0:4")
    grad.add_argument("--tol", type=float, default=None)

    params = commands.add_parser("param-count", help="Parameter count per layer")
    source = params.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset")
    source.add_argument("--config")

    toy = commands.add_parser("train-toy", help="Train on the long-range toy task")
    toy.add_argument("--config", required=True)
    toy.add_argument("--distance", type=int, required=True)
    toy.add_argument("--epochs", type=int, default=200)
    toy.add_argument("--seed", type=int, default=0)
    toy.add_argument("--length", type=int, default=DEFAULT_TOY_LENGTH)
    toy.add_argument("--count", type=int, default=DEFAULT_TOY_COUNT)
    toy.add_argument("--lr", type=float, default=OptimizerConfig().lr)
    toy.add_argument("--momentum", type=float, default=OptimizerConfig().momentum)
    toy.add_argument("--batch-size", type=int, default=OptimizerConfig().batch_size)
    toy.add_argument("--weight-decay", type=float, default=0.0)
    toy.add_argument("--poly-power", type=float, default=None)
    toy.add_argument("--modes", default=None, help="Comma separated dilation modes, one run each")

    empirical = commands.add_parser("rf-empirical", help="Perturbation footprint of a randomly initialised block")
    empirical.add_argument("--config", required=True)
    empirical.add_argument("--position", type=int, default=None)
    empirical.add_argument("--seed", type=int, default=0)

    for command in (analyze, grad, params, toy, empirical):
        command.add_argument("--out", default=None)
        command.add_argument("--csv", default=None)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return Commands().run(args).value


if __name__ == "__main__":
    sys.exit(main())
