"""
Crystal toolkit - command-line entry point.

Generates crystal graphs on quiver-variety components and on tableaux,
inspects single representation points, and checks that the two crystal
models agree.

Commands:
    gen-binf     B(infinity) up to a depth, on multisegments
    gen-blambda  B(lambda) on stable components (or on tableaux)
    decompose    multisegment of a left-oriented type A representation
    epsilon      epsilon_i of a representation point
    moment       the moment map of a point of the double quiver
    stable       stability of a framed point or of a component
    biject       tableau <-> multisegment
    verify-iso   component crystal vs tableau crystal, node by node
    selftest     golden and calibration checks

Exit codes: 0 success, 1 domain error (usage errors included), 2 internal error.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from app.core import linalg, rep
from app.core.cartan import partition_of_weight, root_datum_from_label, weight_from_dimvec
from app.crystals import binf, blambda, bridge, tableau
from app.observability import events
from app.policies.genericity import GenericitySampler
from app.qa.selftest import run_checks
from app.types.crystal import CrystalEngine, OutputFormat
from app.types.errors import DomainError, InternalError
from app.types.metrics import METRICS
from app.types.schemas import (FramedPointModel, JobSpec, MatchingReportModel, MultisegmentModel,
                               RepPointModel, TableauModel, parse_model)
from app.types.weights import RootDatum

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INTERNAL = 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as err:
        raise DomainError(f"expected a comma separated list of integers, got {text!r}") from err


def _read_json_arg(value: str) -> str:
    """Inline JSON, or @path to read it from a file."""
    if value.startswith("@"):
        try:
            return Path(value[1:]).read_text(encoding="utf-8")
        except OSError as err:
            raise DomainError(f"cannot read {value[1:]}: {err.strerror}") from err
    return value


def _resolve_seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get("CRYSTAL_SEED", "0")
    try:
        return int(raw)
    except ValueError as err:
        raise DomainError(f"CRYSTAL_SEED must be an integer, got {raw!r}") from err


def _job(args: argparse.Namespace, **extra) -> JobSpec:
    fields = {
        "command": args.command,
        "seed": _resolve_seed(args.seed),
        "paranoid": args.paranoid,
        "jobs": args.jobs,
    }
    fields.update(extra)
    return JobSpec.build(**fields)


def _sampler(job: JobSpec) -> GenericitySampler:
    return GenericitySampler.create(seed=job.seed, paranoid=job.paranoid)


def _datum(args: argparse.Namespace) -> RootDatum:
    return root_datum_from_label(args.type)


def _emit_graph(g, fmt: OutputFormat) -> str:
    return g.to_dot() if fmt is OutputFormat.DOT else g.to_json() + "\n"


def cmd_gen_binf(args: argparse.Namespace) -> str:
    d = _datum(args)
    job = _job(args, n=d.n, depth=args.depth, format=args.format)
    g = binf.generate_binf(d, job.depth, _sampler(job), CrystalEngine(args.engine), jobs=job.jobs)
    return _emit_graph(g, job.format)


def cmd_gen_blambda(args: argparse.Namespace) -> str:
    d = _datum(args)
    job = _job(args, n=d.n, wdims=_int_list(args.hw), format=args.format, node_budget=args.node_budget)
    if args.model == "tableau":
        g = tableau.tableau_graph_for_weight(d, weight_from_dimvec(d, job.wdims), jobs=job.jobs)
    else:
        g = blambda.generate_blambda(d, tuple(job.wdims), _sampler(job), CrystalEngine(args.engine),
                                     jobs=job.jobs, node_budget=job.node_budget)
    return _emit_graph(g, job.format)


def cmd_decompose(args: argparse.Namespace) -> str:
    _job(args)
    p = parse_model(RepPointModel, _read_json_arg(args.rep)).to_point()
    m = rep.decompose_segments(rep.restrict_omega(p))
    return MultisegmentModel.from_multisegment(m).model_dump_json() + "\n"


def cmd_epsilon(args: argparse.Namespace) -> str:
    _job(args)
    p = parse_model(RepPointModel, _read_json_arg(args.rep)).to_point()
    return f"{rep.epsilon_point(p, args.vertex)}\n"


def cmd_moment(args: argparse.Namespace) -> str:
    _job(args)
    p = parse_model(RepPointModel, _read_json_arg(args.rep)).to_point()
    psi = rep.moment_map(p)
    out = {"psi": {str(i): linalg.to_rows(m) for i, m in psi.items()}, "zero": rep.in_zero_set(p)}
    return json.dumps(out, separators=(",", ":")) + "\n"


def cmd_stable(args: argparse.Namespace) -> str:
    if args.framed:
        _job(args)
        fp = parse_model(FramedPointModel, _read_json_arg(args.framed)).to_framed()
        out = {"stable": rep.is_stable(fp), "invariant_dims": list(rep.max_invariant_in_kernel(fp))}
        return json.dumps(out, separators=(",", ":")) + "\n"
    if not (args.multisegment and args.hw and args.type):
        raise DomainError("stable needs --framed, or --multisegment with --type and --hw")
    d = _datum(args)
    job = _job(args, n=d.n, wdims=_int_list(args.hw))
    m = parse_model(MultisegmentModel, _read_json_arg(args.multisegment)).to_multisegment(d.n)
    verdict = blambda.is_stable_component(m, tuple(job.wdims), _sampler(job))
    return json.dumps({"stable": verdict}, separators=(",", ":")) + "\n"


def cmd_biject(args: argparse.Namespace) -> str:
    d = _datum(args)
    _job(args, n=d.n)
    if args.column:
        t = TableauModel(rows=[[x] for x in _int_list(args.column)]).to_tableau(d.n)
    elif args.tableau:
        text = _read_json_arg(args.tableau)
        if text.lstrip().startswith("{"):
            t = parse_model(TableauModel, text).to_tableau(d.n)
        else:
            t = tableau.parse_rows(text, d.n)
    elif args.multisegment:
        if not args.hw:
            raise DomainError("biject --multisegment needs --hw")
        m = parse_model(MultisegmentModel, _read_json_arg(args.multisegment)).to_multisegment(d.n)
        t = bridge.multisegment_to_tableau(d, m, tuple(_int_list(args.hw)))
        return TableauModel(rows=t.to_rows()).model_dump_json() + "\n"
    else:
        raise DomainError("biject needs --column, --tableau or --multisegment")
    m = bridge.tableau_to_multisegment(t)
    return MultisegmentModel.from_multisegment(m, with_rank=False).model_dump_json(exclude_none=True) + "\n"


def cmd_verify_iso(args: argparse.Namespace) -> str:
    d = _datum(args)
    job = _job(args, n=d.n, wdims=_int_list(args.hw), node_budget=args.node_budget)
    geo = blambda.generate_blambda(d, tuple(job.wdims), _sampler(job), CrystalEngine(args.engine),
                                   jobs=job.jobs, node_budget=job.node_budget)
    tab = tableau.generate_tableau_graph(d, partition_of_weight(d, weight_from_dimvec(d, job.wdims)), jobs=job.jobs)
    iso, pairs = bridge.matching_report(geo, tab)
    report = MatchingReportModel(isomorphic=iso.isomorphic, reason=iso.reason, nodes=len(geo), pairs=pairs)
    text = report.model_dump_json() + "\n"
    if not iso.isomorphic or not all(p["agrees"] for p in pairs):
        sys.stdout.write(text)
        raise InternalError(f"component and tableau crystals differ: {iso.reason or 'matching disagrees'}")
    return text


def cmd_selftest(args: argparse.Namespace) -> str:
    job = _job(args)
    results = run_checks(_sampler(job), full=not args.quick)
    text = "".join(json.dumps(r.to_dict(), separators=(",", ":"), default=str) + "\n" for r in results)
    failed = [r.name for r in results if not r.ok]
    if failed:
        sys.stdout.write(text)
        raise InternalError(f"selftest checks failed: {', '.join(failed)}")
    return text


class CrystalArgumentParser(argparse.ArgumentParser):
    """Usage errors surface as DomainError instead of exiting."""

    def error(self, message: str):
        raise DomainError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = CrystalArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Randomness seed (default: $CRYSTAL_SEED or 0)")
    common.add_argument("--paranoid", action="store_true", help="Ten times more samples and a wider entry range")
    common.add_argument("--jobs", type=int, default=1, help="Worker threads for graph expansion")
    common.add_argument("--verbose", action="store_true", help="Write structured events to stderr")
    common.add_argument("--stats", action="store_true", help="Print the metrics snapshot to stderr at exit")
    common.add_argument("-o", "--output", default=None, help="Write the result to a file instead of stdout")

    def typed(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--type", required=required, help="Root system label, e.g. A2")

    def engine(p: argparse.ArgumentParser) -> None:
        p.add_argument("--engine", choices=[e.value for e in CrystalEngine], default=CrystalEngine.GEOMETRIC.value)

    def formats(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)

    parser = CrystalArgumentParser(prog="crystals", description="Crystals on quiver varieties of type A")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-binf", parents=[common], help="B(infinity) on multisegments")
    typed(p)
    p.add_argument("--depth", type=int, required=True, help="Maximum sum of the dimension vector")
    engine(p)
    formats(p)
    p.set_defaults(handler=cmd_gen_binf)

    p = sub.add_parser("gen-blambda", parents=[common], help="B(lambda) on stable components")
    typed(p)
    p.add_argument("--hw", required=True, help="Highest weight as fundamental coordinates, e.g. 1,1")
    p.add_argument("--model", choices=["geometric", "tableau"], default="geometric")
    p.add_argument("--node-budget", type=int, default=blambda.NODE_BUDGET)
    engine(p)
    formats(p)
    p.set_defaults(handler=cmd_gen_blambda)

    p = sub.add_parser("decompose", parents=[common], help="Segments of a left-oriented representation")
    p.add_argument("--rep", required=True, help="RepPoint JSON or @file")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("epsilon", parents=[common], help="epsilon_i of a point")
    p.add_argument("--rep", required=True, help="RepPoint JSON or @file")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(handler=cmd_epsilon)

    p = sub.add_parser("moment", parents=[common], help="Moment map of a point")
    p.add_argument("--rep", required=True, help="RepPoint JSON or @file")
    p.set_defaults(handler=cmd_moment)

    p = sub.add_parser("stable", parents=[common], help="Stability of a framed point or a component")
    typed(p, required=False)
    p.add_argument("--framed", help="FramedPoint JSON or @file")
    p.add_argument("--multisegment", help="Multisegment JSON or @file")
    p.add_argument("--hw", help="Framing dimensions, e.g. 1,1")
    p.set_defaults(handler=cmd_stable)

    p = sub.add_parser("biject", parents=[common], help="Tableau <-> multisegment")
    typed(p)
    p.add_argument("--column", help="Single column entries, e.g. 1,5,8,10")
    p.add_argument("--tableau", help="Row notation such as (11/2), or Tableau JSON")
    p.add_argument("--multisegment", help="Multisegment JSON; needs --hw")
    p.add_argument("--hw", help="Highest weight for --multisegment")
    p.set_defaults(handler=cmd_biject)

    p = sub.add_parser("verify-iso", parents=[common], help="Compare component and tableau crystals")
    typed(p)
    p.add_argument("--hw", required=True)
    p.add_argument("--node-budget", type=int, default=blambda.NODE_BUDGET)
    engine(p)
    p.set_defaults(handler=cmd_verify_iso)

    p = sub.add_parser("selftest", parents=[common], help="Golden and calibration checks")
    p.add_argument("--quick", action="store_true", help="Smaller sweeps and a quick calibration")
    p.set_defaults(handler=cmd_selftest)

    return parser


def run(argv: list[str]) -> int:
    """
    Parse argv, run the command and write its output.

    Returns:
        The process exit code.
    """
    try:
        args = build_parser().parse_args(argv)
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.verbose:
        events.set_enabled(True)
    try:
        text = args.handler(args)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        code = EXIT_OK
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        code = EXIT_DOMAIN
    except InternalError as err:
        print(f"internal error: {err}", file=sys.stderr)
        code = EXIT_INTERNAL
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        code = EXIT_DOMAIN
    if args.stats:
        print(json.dumps(METRICS.snapshot(), sort_keys=True), file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
