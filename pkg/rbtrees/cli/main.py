"""
Command-line front end.

Exit codes: 0 success, 1 verification findings, 2 usage error, 3 resource cap.
"""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from rbtrees import __version__
from rbtrees.checks import model_check
from rbtrees.config import (
    IdentityMode,
    IdentitySource,
    ModelCheckConfig,
    ModelKind,
    OutputFormat,
    Settings,
    SweepConfig,
    get_settings,
)
from rbtrees.core import (
    NormalFormEngine,
    SweepExecutor,
    generic_identity,
    restricted_identity,
    validate,
)
from rbtrees.core.builder import CheckFactory
from rbtrees.errors import CapExceededError
from rbtrees.models import chain_count_formula_report
from rbtrees.terms import Combination, Tree

from .bench import run_bench
from .render import dump_json, render_combination, render_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_CAP = 3

def _settings_for(args: argparse.Namespace) -> Settings:
    """Settings with per-invocation flag overrides applied."""
    update = {}
    if args.max_terms is not None:
        update["max_terms"] = args.max_terms
    if args.jobs is not None:
        update["default_jobs"] = args.jobs
    if args.seed is not None:
        update["default_seed"] = args.seed
    return get_settings().model_copy(update=update)


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def _check_terms(u: Combination, settings: Settings) -> Combination:
    if len(u) > settings.max_terms:
        raise CapExceededError("terms", len(u), settings.max_terms)
    return u


def _frame_records(frame: pd.DataFrame) -> List[Dict]:
    # missing cells become null
    return json.loads(frame.to_json(orient="records"))


# Commands


def cmd_expand(args: argparse.Namespace, settings: Settings) -> int:
    tree = Tree(args.a, args.b, args.c)
    engine = NormalFormEngine.from_settings(settings)
    result = engine.normal_form_naive(tree) if args.naive else engine.normal_form(tree)
    _emit(args, render_combination(_check_terms(result, settings), args.format, lhs=tree))
    return EXIT_OK


def _closed_form(a: int, b: int, c: int, source: IdentitySource) -> Combination:
    if source == IdentitySource.RESTRICTED:
        return restricted_identity(a, b, c)
    return generic_identity(a, b, c, IdentityMode(source.value))


def cmd_closed_form(args: argparse.Namespace, settings: Settings) -> int:
    source = IdentitySource.RESTRICTED if args.restricted else IdentitySource(args.mode)
    result = _closed_form(args.a, args.b, args.c, source)
    lhs = Tree(args.a, args.b, args.c)
    _emit(args, render_combination(_check_terms(result, settings), args.format, lhs=lhs))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    report = validate(
        args.max_a,
        args.max_b,
        mode=IdentityMode(args.mode),
        lambda_zero=args.restricted,
        engine=NormalFormEngine.from_settings(settings),
        jobs=settings.default_jobs,
        max_c=args.max_c,
    )
    if args.format == OutputFormat.JSON:
        _emit(args, report.to_json())
    else:
        records = [
            {
                "a": m.a,
                "b": m.b,
                "tree": str(m.tree),
                "expected": str(m.expected),
                "got": str(m.got),
                "sum": m.source_sum,
            }
            for m in report.mismatches
        ]
        title = (
            f"{report.mode} over {report.grid[0]}x{report.grid[1]}: "
            f"{report.summary.mismatches} mismatches in {report.summary.cells} cells"
        )
        _emit(args, render_table(records, args.format, title=title))
    return EXIT_OK if report.is_empty else EXIT_FINDINGS


def cmd_model_check(args: argparse.Namespace, settings: Settings) -> int:
    if args.restricted:
        source = IdentitySource.RESTRICTED
    elif args.mode:
        source = IdentitySource(args.mode)
    else:
        source = IdentitySource.NORMAL_FORM
    config = ModelCheckConfig(
        model=ModelKind(args.model),
        max_a=args.max_a,
        max_b=args.max_b,
        trials=args.trials,
        seed=settings.default_seed,
        source=source,
    )
    report = model_check(
        config, NormalFormEngine.from_settings(settings), jobs=settings.default_jobs
    )
    if args.format == OutputFormat.JSON:
        _emit(args, dump_json(report.model_dump(mode="json")))
    else:
        records = [
            {"a": f.a, "b": f.b, "trial": f.trial, "f": " ".join(f.f), "g": " ".join(f.g)}
            for f in report.failures
        ]
        title = (
            f"{report.model.value} model, {report.source.value}: "
            f"{len(report.failures)} failures in {report.cells} cells x {report.trials} trials"
        )
        _emit(args, render_table(records, args.format, title=title))
    return EXIT_OK if report.passed else EXIT_FINDINGS


def cmd_count(args: argparse.Namespace, settings: Settings) -> int:
    report = chain_count_formula_report(
        args.max_a, args.max_m, cap=settings.max_chain_enumeration
    )
    records = [row.model_dump(mode="json") for row in report.rows]
    title = f"{len(report.disagreements)} rows disagree with C(a+m,m)-1"
    payload = report.model_dump(mode="json")
    _emit(args, render_table(records, args.format, payload=payload, title=title))
    return EXIT_OK


def cmd_emit_latex(args: argparse.Namespace, settings: Settings) -> int:
    tree = Tree(args.a, args.b, args.c)
    source = IdentitySource(args.source)
    if source == IdentitySource.NORMAL_FORM:
        result = NormalFormEngine.from_settings(settings).normal_form(tree)
    else:
        result = _closed_form(args.a, args.b, args.c, source)
    _emit(
        args,
        render_combination(
            _check_terms(result, settings),
            OutputFormat.LATEX,
            lhs=tree,
            operator_notation=args.operator_notation,
        ),
    )
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, settings: Settings) -> int:
    frame = run_bench(args.max_ab, args.repetitions, settings)
    records = _frame_records(frame)
    title = "Diagonal T(k,k,0), times in ms"
    _emit(args, render_table(records, args.format, title=title, frame=frame))
    return EXIT_OK


def _load_sweep(args: argparse.Namespace, settings: Settings) -> SweepConfig:
    if args.config:
        path = Path(args.config)
    else:
        path = Path(settings.sweep_config_path) / f"{args.sweep_id}.json"
    if not path.exists():
        raise ValueError(f"Sweep file not found: {path}")
    with open(path, encoding="utf-8") as f:
        return SweepConfig(**json.load(f))


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    sweep = _load_sweep(args, settings)
    factory = CheckFactory(NormalFormEngine.from_settings(settings), settings.default_jobs)
    result = asyncio.run(SweepExecutor(factory).execute(sweep, only=args.only))
    if args.format == OutputFormat.JSON:
        _emit(args, dump_json(result.to_dict()))
    else:
        records = [
            {
                "check": r.name or r.check_type,
                "type": r.check_type,
                "passed": r.passed,
                "expected_findings": expected,
                "took_ms": round(r.took_ms or 0.0, 1),
            }
            for r, expected in zip(result.results, result.expectations)
        ]
        title = f"Sweep {sweep.sweep_id}: {'ok' if result.ok else 'FAILED'}"
        _emit(args, render_table(records, args.format, title=title))
    return EXIT_OK if result.ok else EXIT_FINDINGS


def cmd_serve(args: argparse.Namespace, settings: Settings) -> int:
    import uvicorn

    uvicorn.run(
        "rbtrees.api.main:create_app",
        factory=True,
        host=args.host or settings.api_host,
        port=args.port or settings.api_port,
        reload=args.reload or settings.api_reload,
    )
    return EXIT_OK


# Parser


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Flags accepted before and after the subcommand."""

    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=default(OutputFormat.TEXT.value),
        help="Output format (default: text)",
    )
    parser.add_argument("--jobs", type=int, default=default(None), help="Worker threads")
    parser.add_argument(
        "--max-terms", type=int, default=default(None), help="Cap on trees in a result"
    )
    parser.add_argument("--seed", type=int, default=default(None), help="Seed for model inputs")
    parser.add_argument("--output", default=default(None), help="Write output to this path")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=default(None),
        help="Logging level on stderr",
    )


def _add_tree(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=int, required=True, help="Left-leg dots")
    parser.add_argument("--b", type=int, required=True, help="Right-leg dots")
    parser.add_argument("--c", type=int, default=0, help="Neck dots")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbtrees",
        description="Normal forms and closed-form identities for Rota-Baxter trees T(a,b,c)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_common(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = parser.add_subparsers(dest="cmd", required=True)
    modes = [m.value for m in IdentityMode]

    e = sub.add_parser("expand", parents=[common], help="Normal form of T(a,b,c)")
    _add_tree(e)
    e.add_argument("--naive", action="store_true", help="Use the naive oracle")
    e.set_defaults(func=cmd_expand)

    cf = sub.add_parser("closed-form", parents=[common], help="Closed-form identity")
    _add_tree(cf)
    cf.add_argument("--mode", choices=modes, default=IdentityMode.RECONCILED.value)
    cf.add_argument("--restricted", action="store_true", help="Weight-0 identity")
    cf.set_defaults(func=cmd_closed_form)

    v = sub.add_parser("verify", parents=[common], help="Closed form versus oracle")
    v.add_argument("--max-a", type=int, required=True)
    v.add_argument("--max-b", type=int, required=True)
    v.add_argument("--max-c", type=int, default=0)
    v.add_argument("--mode", choices=modes, default=IdentityMode.RECONCILED.value)
    v.add_argument(
        "--restricted", "--lambda-zero", dest="restricted", action="store_true",
        help="Check the weight-0 identity against the oracle at λ = 0",
    )
    v.set_defaults(func=cmd_verify)

    mc = sub.add_parser("model-check", parents=[common], help="Identities in a concrete model")
    mc.add_argument("--model", choices=[k.value for k in ModelKind], required=True)
    mc.add_argument("--max-a", type=int, required=True)
    mc.add_argument("--max-b", type=int, required=True)
    mc.add_argument("--trials", type=int, default=3)
    mc.add_argument("--mode", choices=modes, default=None, help="Check a closed form instead")
    mc.add_argument("--restricted", action="store_true", help="Check the weight-0 identity")
    mc.set_defaults(func=cmd_model_check)

    c = sub.add_parser("count", parents=[common], help="Chain-count formula report")
    c.add_argument("--max-a", type=int, required=True)
    c.add_argument("--max-m", type=int, required=True)
    c.set_defaults(func=cmd_count)

    el = sub.add_parser("emit-latex", parents=[common], help="LaTeX for one identity")
    _add_tree(el)
    el.add_argument(
        "--source",
        choices=[s.value for s in IdentitySource],
        default=IdentitySource.NORMAL_FORM.value,
    )
    el.add_argument("--operator-notation", action="store_true")
    el.set_defaults(func=cmd_emit_latex)

    bn = sub.add_parser("bench", parents=[common], help="Naive vs memoized vs closed form")
    bn.add_argument("--max-ab", type=int, required=True)
    bn.add_argument("--repetitions", type=int, default=1)
    bn.set_defaults(func=cmd_bench)

    sw = sub.add_parser("sweep", parents=[common], help="Run a configured sweep")
    target = sw.add_mutually_exclusive_group(required=True)
    target.add_argument("--config", help="Path to a sweep JSON file")
    target.add_argument("--sweep-id", help="Stored sweep under the sweep config path")
    sw.add_argument("--only", nargs="+", default=None, help="Check names to run")
    sw.set_defaults(func=cmd_sweep)

    s = sub.add_parser("serve", parents=[common], help="Run the HTTP API")
    s.add_argument("--host", default=None)
    s.add_argument("--port", type=int, default=None)
    s.add_argument("--reload", action="store_true")
    s.set_defaults(func=cmd_serve)

    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    settings = _settings_for(args)
    configure_logging(args.log_level or settings.log_level)
    if settings.default_jobs < 1:
        print(f"error: --jobs must be >= 1, got {settings.default_jobs}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args, settings)
    except CapExceededError as e:
        logger.debug("Cap exceeded", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as e:
        logger.debug("Invalid arguments", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
