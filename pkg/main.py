from __future__ import annotations

import argparse
import logging
import logging.config
import sys
from typing import Callable, Dict, List, Optional, Sequence

from config import settings
from fiedler import __version__
from fiedler.exactalg import ExactAlgebraError, IntPolynomial, eigenvalue_multiplicity, parse_eigenvalue
from fiedler.graphs import GraphError, build, parse_spec
from fiedler.models import CellTag, Family, RunConfig, VerificationResult
from fiedler.numspec import NumericError, eig_sym
from fiedler.services.search import (
    SearchError,
    random_specs,
    run_claims,
    search_chain_neutrals,
    search_remark_mh,
)
from fiedler.theorems import (
    SPEC_CLAIMS,
    PreconditionError,
    worked_claims,
    run_spec_claims,
    verify_chain_localization,
    verify_neutral_localization,
)
from fiedler.vertextypes import ClassificationError, classify_all, resolve_eigenvalue
from io_store import (
    dumps,
    dumps_line,
    findings_to_csv,
    graph_to_dict,
    graph_to_edge_list,
    report_to_dict,
    results_to_csv,
    results_to_lines,
    spectrum_to_dict,
    summary_line,
    tolerance_header,
    write_output,
)

logger = logging.getLogger("main")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SELECTOR = 3


class UsageError(Exception):
    pass


def _check_format(cfg: RunConfig, allowed: Sequence[str]) -> None:
    if cfg.fmt not in allowed:
        raise UsageError(f"{cfg.subcommand} supports --format {' / '.join(allowed)}, not {cfg.fmt}")


def cmd_gen(cfg: RunConfig) -> int:
    _check_format(cfg, ("json", "text"))
    graph = build(parse_spec(cfg.spec))
    if cfg.fmt == "text":
        labels = "".join(f"# {v} {tag}\n" for v, tag in enumerate(graph.labels) if tag is not None)
        write_output(f"# order {graph.order}, {graph.edge_count} edges\n" + labels + graph_to_edge_list(graph), cfg.out)
    else:
        write_output(dumps(graph_to_dict(graph)) + "\n", cfg.out)
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    _check_format(cfg, ("json", "text"))
    graph = build(parse_spec(cfg.spec))
    spectrum = eig_sym(graph, method=cfg.extras.get("method"), cluster_tol=cfg.cluster_tol, main_tol=cfg.main_tol)
    exact: Optional[Dict[str, int]] = None
    if cfg.extras.get("exact"):
        exact = {}
        for token in cfg.extras["exact"].split(","):
            exact[token.strip()] = eigenvalue_multiplicity(graph, parse_eigenvalue(token))
    if cfg.fmt == "text":
        lines = [f"# cluster_tol {spectrum.cluster_tol:g}, main_tol {spectrum.main_tol:g}, method {spectrum.method}"]
        for c in spectrum.clusters:
            kind = "main" if c.main else "non-main"
            lines.append(f"λ_{c.first_index} = {c.value:.{settings.FLOAT_DIGITS}g}  x{c.multiplicity}  {kind}")
        for token, k in (exact or {}).items():
            lines.append(f"mult({token}) = {k}")
        write_output("\n".join(lines) + "\n", cfg.out)
    else:
        write_output(dumps(spectrum_to_dict(spectrum, exact)) + "\n", cfg.out)
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    _check_format(cfg, ("json", "text"))
    if len(cfg.selectors()) != 1:
        raise UsageError("classify needs exactly one of --value, --minpoly, --index")
    graph = build(parse_spec(cfg.spec))
    spectrum = eig_sym(graph, cluster_tol=cfg.cluster_tol, main_tol=cfg.main_tol)
    minpoly = IntPolynomial.from_coeffs(cfg.minpoly) if cfg.minpoly is not None else None
    resolved = resolve_eigenvalue(graph, value=cfg.value, minpoly=minpoly, index=cfg.index, spectrum=spectrum)
    report = classify_all(
        graph,
        resolved.target,
        cluster_tol=cfg.cluster_tol,
        cross_check=bool(cfg.extras.get("cross_check")),
    )
    if cfg.fmt == "text":
        lines = [f"# λ_{resolved.index} = {report.eigenvalue:.{settings.FLOAT_DIGITS}g}, k = {report.k}, route {report.route.value}"]
        for tag, kind in report.per_cell.items():
            lines.append(f"{tag}: {kind.value if kind else 'mixed'}")
        lines.extend(f"! {a}" for a in report.anomalies)
        write_output("\n".join(lines) + "\n", cfg.out)
    else:
        write_output(dumps(report_to_dict(report, resolved.index)) + "\n", cfg.out)
    return EXIT_OK


def _localization(cfg: RunConfig) -> List[VerificationResult]:
    spec = parse_spec(cfg.spec)
    tag = CellTag.parse(cfg.extras["cell"])
    if spec.family == Family.NSG:
        return [verify_neutral_localization(spec, tag.index, cfg.index, side=tag.side)]
    if tag.side != "U":
        raise UsageError("chain localization is stated for U cells")
    return verify_chain_localization(spec, tag.index, cfg.index)


def _emit_results(cfg: RunConfig, results: List[VerificationResult], header: Dict) -> int:
    _check_format(cfg, ("json", "csv"))
    if cfg.fmt == "csv":
        write_output(results_to_csv(results), cfg.out)
    else:
        write_output(dumps_line({"tolerances": header}) + "\n" + results_to_lines(results), cfg.out)
    counts = summary_line(results)
    logger.info("%s: %s", cfg.subcommand, counts)
    print(f"{len(results)} claims: {counts['pass']} pass, {counts['fail']} fail, {counts['skip']} skip", file=sys.stderr)
    return EXIT_FAILED if counts["fail"] else EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    extras = cfg.extras
    claims = extras.get("claims") or None
    workers = extras.get("workers")
    header = tolerance_header(cluster_tol=cfg.cluster_tol, main_tol=cfg.main_tol)
    if extras.get("all_claims"):
        results = worked_claims()
    elif extras.get("random"):
        families = [Family.NSG, Family.DNG] if extras["family"] == "both" else [Family.from_text(extras["family"])]
        specs = []
        for family in families:
            specs.extend(random_specs(family, extras["random"], extras["seed"], extras["max_h"], extras["max_cell"]))
        header.update(seed=extras["seed"], specs=len(specs))
        results = run_claims(specs, claims, workers, cfg.cluster_tol, cfg.main_tol)
    elif cfg.spec is None:
        raise UsageError("verify needs a spec, --all-claims or --random N")
    elif extras.get("cell"):
        if cfg.index is None:
            raise UsageError("--cell needs --index")
        results = _localization(cfg)
    else:
        results = run_spec_claims(parse_spec(cfg.spec), claims, cfg.cluster_tol, cfg.main_tol)
    return _emit_results(cfg, results, header)


def cmd_search(cfg: RunConfig) -> int:
    _check_format(cfg, ("json", "csv"))
    extras = cfg.extras
    harness: Callable = search_chain_neutrals if extras["kind"] == "chain-neutrals" else search_remark_mh
    findings = harness(extras["max_h"], extras["max_cell"], extras.get("workers"))
    if cfg.fmt == "csv":
        write_output(findings_to_csv(findings), cfg.out)
    else:
        header = tolerance_header(kind=extras["kind"], max_h=extras["max_h"], max_cell=extras["max_cell"])
        write_output(dumps_line({"tolerances": header}) + "\n" + results_to_lines(findings), cfg.out)
    specs = len({f.spec for f in findings})
    print(f"{len(findings)} findings in {specs} specs", file=sys.stderr)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "gen": cmd_gen,
    "spectrum": cmd_spectrum,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "search": cmd_search,
}


def _add_common(p: argparse.ArgumentParser, fmt: str = "json") -> None:
    p.add_argument("--format", dest="fmt", choices=settings.OUTPUT_FORMATS, default=fmt)
    p.add_argument("--out", help="write to this path instead of standard output")
    p.add_argument("--cluster-tol", type=float, help=f"relative clustering tolerance (default {settings.CLUSTER_TOL:g})")
    p.add_argument("--main-tol", type=float, help=f"mainness threshold (default {settings.MAIN_TOL:g})")


def _minpoly_arg(text: str) -> List[int]:
    try:
        return list(IntPolynomial.parse(text).coeffs)
    except (ExactAlgebraError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fiedler", description="Vertex types in threshold and chain graphs")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO")
    sub = parser.add_subparsers(dest="cmd")

    gen_p = sub.add_parser("gen", help="build a graph and print it")
    gen_p.add_argument("spec", help="nsg:2,2,2;2,3,2 / dng:1,1;1,1 / half:4")
    _add_common(gen_p)

    spec_p = sub.add_parser("spectrum", help="numeric spectrum, clusters and mainness")
    spec_p.add_argument("spec")
    spec_p.add_argument("--exact", help="comma list of eigenvalues for exact multiplicities, e.g. 0,-1,omega")
    spec_p.add_argument("--method", choices=("eigh", "jacobi"))
    _add_common(spec_p)

    cls_p = sub.add_parser("classify", help="downer / neutral / Parter types for one eigenvalue")
    cls_p.add_argument("spec")
    selector = cls_p.add_mutually_exclusive_group(required=True)
    selector.add_argument("--value", type=float)
    selector.add_argument("--minpoly", type=_minpoly_arg, help='coefficients, constant first: "-1,1,1" is x^2 + x - 1')
    selector.add_argument("--index", type=int, help="i for λ_i, λ_1 the largest")
    cls_p.add_argument("--cross-check", action="store_true", help="repeat an exact classification numerically")
    _add_common(cls_p)

    ver_p = sub.add_parser("verify", help="check theorem statements")
    ver_p.add_argument("spec", nargs="?")
    ver_p.add_argument("--claim", action="append", dest="claims", choices=sorted(SPEC_CLAIMS))
    ver_p.add_argument("--all-claims", action="store_true", help="worked examples, tables and constructions")
    ver_p.add_argument("--random", type=int, metavar="N", help="N random specs per family")
    ver_p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    ver_p.add_argument("--family", choices=("nsg", "dng", "both"), default="nsg")
    ver_p.add_argument("--max-h", type=int, default=5)
    ver_p.add_argument("--max-cell", type=int, default=4)
    ver_p.add_argument("--workers", type=int)
    ver_p.add_argument("--cell", help="neutral cell for localization, e.g. U_2 (with --index)")
    ver_p.add_argument("--index", type=int, help="i for λ_i")
    _add_common(ver_p)

    search_p = sub.add_parser("search", help="exhaustive searches")
    search_p.add_argument("kind", choices=("chain-neutrals", "remark-mh"))
    search_p.add_argument("--max-h", type=int, required=True)
    search_p.add_argument("--max-cell", type=int, required=True)
    search_p.add_argument("--workers", type=int)
    _add_common(search_p)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    known = {"cmd", "spec", "value", "minpoly", "index", "cluster_tol", "main_tol", "fmt", "out", "verbose"}
    return RunConfig(
        subcommand=args.cmd,
        spec=getattr(args, "spec", None),
        value=getattr(args, "value", None),
        minpoly=getattr(args, "minpoly", None),
        index=getattr(args, "index", None),
        cluster_tol=args.cluster_tol,
        main_tol=args.main_tol,
        fmt=args.fmt,
        out=args.out,
        extras={k: v for k, v in vars(args).items() if k not in known},
    )


def _apply_overrides(cfg: RunConfig) -> Dict[str, float]:
    """Push tolerance flags into settings; returns the previous values."""
    previous = {"CLUSTER_TOL": settings.CLUSTER_TOL, "MAIN_TOL": settings.MAIN_TOL}
    if cfg.cluster_tol is not None:
        settings.CLUSTER_TOL = cfg.cluster_tol
    if cfg.main_tol is not None:
        settings.MAIN_TOL = cfg.main_tol
    return previous


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.config.dictConfig(settings.LOGGING)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.verbose:
        for name in ("fiedler", "main", "io_store"):
            logging.getLogger(name).setLevel(logging.INFO)
    if args.cmd is None:
        parser.print_help()
        return EXIT_USAGE

    cfg = _run_config(args)
    previous = _apply_overrides(cfg)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except ClassificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SELECTOR
    except (GraphError, ExactAlgebraError, NumericError, PreconditionError, SearchError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        for name, value in previous.items():
            setattr(settings, name, value)


if __name__ == "__main__":
    sys.exit(main())
