import argparse
import json
import logging
import sys
from typing import List, Optional

from dto.enums.merge_order import MergeOrder
from dto.enums.neighborhood_kind import NeighborhoodKind
from dto.enums.output_format import OutputFormat
from dto.enums.reduction_mode import ReductionMode
from dto.enums.series_kind import SeriesKind
from dto.enums.verify_suite import VerifySuite
from dto.exceptions import SortMismatchError, SpeciesError
from dto.run_config import RunConfig
from dto.type_series import TypeSeries
from service.catalog.count_tabulator import CountTabulator
from service.catalog.edge_polynomial import EdgePolynomial
from service.catalog.fixture_verifier import FixtureVerifier
from service.catalog.species_catalog import SpeciesCatalog
from service.core.cycle_index_ring import CycleIndexRing
from service.expr.species_evaluator import SpeciesEvaluator
from service.graphs.graph_classifier import GraphClassifier
from service.graphs.kernel_reducer import KernelReducer
from service.verification_runner import VerificationRunner
from util.cycle_index_text import cycle_index_to_json, format_cycle_index
from util.graph_file_utils import format_graph, kernel_to_json, read_graph
from util.logging_utils import configure_logging
from util.sequence_file_utils import read_sequence_file, sequence_terms
from util.series_text import format_series, series_to_json

DEFAULT_DEGREE = 8
DEFAULT_N_MAX = 6
DEFAULT_SEED = 42

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

logger = logging.getLogger(__name__)


def _emit(config: RunConfig, text: str, payload) -> None:
    print(json.dumps(payload) if config.output_format == OutputFormat.JSON else text)


def cmd_eval(config: RunConfig) -> int:
    f = SpeciesEvaluator.evaluate_text(config.expression, config.degree)
    if config.series == SeriesKind.CYCLE_INDEX:
        _emit(config, format_cycle_index(f), cycle_index_to_json(f))
    else:
        extract = CycleIndexRing.egf_series if config.series == SeriesKind.EGF else CycleIndexRing.ogf_series
        series = extract(f)
        _emit(config, format_series(series), series_to_json(series))
    return EXIT_OK


def cmd_count(config: RunConfig) -> int:
    if config.name in SpeciesCatalog.ENTRIES:
        table = CountTabulator.counts(config.name, config.labeled, config.n_max, config.degree)
    else:
        f = SpeciesEvaluator.evaluate_text(config.name, config.degree)
        table = CountTabulator.count_table(f, config.labeled, config.n_max)
    rows = [{column: int(value) for column, value in row.items()} for row in table.to_dict(orient='records')]
    text = "\n".join(" ".join(str(v) for v in row.values()) for row in rows)
    _emit(config, text, {'name': config.name, 'labeled': config.labeled, 'rows': rows})
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    report = VerificationRunner.run(config.suite, config.degree, config.n_max, config.seed)
    passed = VerificationRunner.all_passed(report)
    flags = FixtureVerifier.flags() if config.suite in (VerifySuite.FIXTURES, VerifySuite.ALL) else []
    if config.output_format == OutputFormat.JSON:
        print(json.dumps({'passed': passed, 'checks': report.to_dict(orient='records'), 'flags': flags}))
    else:
        for row in report.itertuples(index=False):
            line = f"{'PASS' if row.passed else 'FAIL'} [{row.suite}] {row.tag}: {row.description}"
            print(line + (f" -- {row.detail}" if row.detail else ""))
            if row.source:
                print(f"    source: {row.source}")
        for flag in flags:
            print(f"FLAG {flag}")
        failed = int((~report['passed']).sum())
        print(f"{len(report) - failed} passed, {failed} failed")
    return EXIT_OK if passed else EXIT_FAILURE


def _reduction_problems(config: RunConfig, g, result) -> List[str]:
    problems = []
    if KernelReducer.reconstruct(result) != g:
        problems.append("superimposing the fibers does not give back the input")
    if config.mode == ReductionMode.PD:
        fibers_ok = all(GraphClassifier.is_edgeless(f) for f in result.fiber_graphs)
        kernel_ok = GraphClassifier.is_pd(result.kernel)
    elif config.mode == ReductionMode.COPD:
        fibers_ok = all(GraphClassifier.is_complete(f) for f in result.fiber_graphs)
        kernel_ok = GraphClassifier.is_co_pd(result.kernel)
    else:
        fibers_ok = all(GraphClassifier.is_p4_free(f) for f in result.fiber_graphs)
        kernel_ok = GraphClassifier.is_pd(result.kernel) and GraphClassifier.is_co_pd(result.kernel)
    if not fibers_ok:
        problems.append(f"a fiber is not of the expected class for mode {config.mode.value}")
    if not kernel_ok:
        problems.append(f"the kernel is not reduced for mode {config.mode.value}")
    return problems


def cmd_reduce(config: RunConfig) -> int:
    g = read_graph(config.input_path)
    if config.mode == ReductionMode.PD:
        result = KernelReducer.pd_kernel(g, NeighborhoodKind.OPEN)
    elif config.mode == ReductionMode.COPD:
        result = KernelReducer.pd_kernel(g, NeighborhoodKind.CLOSED)
    else:
        result = KernelReducer.bipd_kernel(g, MergeOrder.DETERMINISTIC)
    if config.output_format == OutputFormat.JSON:
        print(kernel_to_json(result))
    else:
        print("kernel")
        print(format_graph(result.kernel))
        print("fibers")
        for fiber in result.fibers:
            print(" ".join(str(v) for v in fiber))
    if not config.check:
        return EXIT_OK
    problems = _reduction_problems(config, g, result)
    for problem in problems:
        print(f"CHECK FAILED: {problem}", file=sys.stderr)
    return EXIT_FAILURE if problems else EXIT_OK


def cmd_edge_gf(config: RunConfig) -> int:
    coefficients = EdgePolynomial.coefficients(EdgePolynomial.edge_gf(config.m, config.n))
    series = TypeSeries(SeriesKind.OGF, 1, config.m * config.n, {(e,): c for e, c in enumerate(coefficients)})
    _emit(config, format_series(series), {'m': config.m, 'n': config.n, 'coefficients': coefficients})
    return EXIT_OK


def cmd_crosscheck(config: RunConfig) -> int:
    if SpeciesCatalog.entry(config.name).sorts != 1:
        raise SortMismatchError(f"Sequence files hold one-sort counts; {config.name} has two sorts")
    terms = sequence_terms(read_sequence_file(config.input_path))
    compared = sorted(n for n in terms if 0 <= n <= config.n_max)
    table = CountTabulator.counts(config.name, config.labeled, config.n_max, max(config.degree, config.n_max))
    computed = CountTabulator.sequence(table)
    mismatch = next((n for n in compared if computed[n] != terms[n]), None)
    if mismatch is None:
        _emit(config, f"{config.name}: {len(compared)} terms agree",
              {'name': config.name, 'passed': True, 'compared': len(compared)})
        return EXIT_OK
    _emit(config, f"{config.name}: first mismatch at n={mismatch}: file {terms[mismatch]}, computed {computed[mismatch]}",
          {'name': config.name, 'passed': False, 'n': mismatch,
           'expected': str(terms[mismatch]), 'computed': str(computed[mismatch])})
    return EXIT_FAILURE


COMMANDS = {
    'eval': cmd_eval,
    'count': cmd_count,
    'verify': cmd_verify,
    'reduce': cmd_reduce,
    'edge-gf': cmd_edge_gf,
    'crosscheck': cmd_crosscheck,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, default=DEFAULT_DEGREE, help="Truncation degree D")
    common.add_argument("--format", dest="output_format", default=OutputFormat.TEXT.value,
                        choices=[f.value for f in OutputFormat], help="Output format")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO logs, -vv for DEBUG")

    labeled = argparse.ArgumentParser(add_help=False)
    group = labeled.add_mutually_exclusive_group()
    group.add_argument("--labeled", dest="labeled", action="store_true", default=True, help="Labeled counts (default)")
    group.add_argument("--unlabeled", dest="labeled", action="store_false", help="Unlabeled counts")
    labeled.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="Largest size to count")

    parser = argparse.ArgumentParser(description="Exact cycle-index enumeration of graph species.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="Evaluate a species expression")
    p.add_argument("expression", help='Species expression, e.g. "G o (2*L - X)"')
    series = p.add_mutually_exclusive_group()
    series.add_argument("--egf", dest="series", action="store_const", const=SeriesKind.EGF.value,
                        help="Print the exponential generating function")
    series.add_argument("--ogf", dest="series", action="store_const", const=SeriesKind.OGF.value,
                        help="Print the type generating function")

    p = sub.add_parser("count", parents=[common, labeled], help="Tabulate counts of a catalog species or expression")
    p.add_argument("name", help="Catalog name or species expression")

    p = sub.add_parser("verify", parents=[common], help="Run verification suites")
    p.add_argument("--suite", default=VerifySuite.ALL.value, choices=[s.value for s in VerifySuite])
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="Largest graph size for the oracle")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for random graphs and merge orders")

    p = sub.add_parser("reduce", parents=[common], help="Reduce a graph file to its kernel")
    p.add_argument("input_path", help="Graph file: `n` then one `u v` edge per line")
    p.add_argument("--mode", default=ReductionMode.BIPD.value, choices=[m.value for m in ReductionMode])
    p.add_argument("--check", action="store_true", help="Verify reconstruction and fiber classes")

    p = sub.add_parser("edge-gf", parents=[common], help="Edge polynomial of unlabeled bicolored graphs")
    p.add_argument("m", type=int, help="White vertices")
    p.add_argument("n", type=int, help="Black vertices")

    p = sub.add_parser("crosscheck", parents=[common, labeled], help="Compare counts with a b-file")
    p.add_argument("name", help="Catalog name")
    p.add_argument("input_path", help="Sequence file with `n value` lines")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        degree=args.degree,
        output_format=OutputFormat(args.output_format),
        series=SeriesKind(getattr(args, 'series', None) or SeriesKind.CYCLE_INDEX.value),
        labeled=getattr(args, 'labeled', True),
        n_max=getattr(args, 'n_max', DEFAULT_N_MAX),
        seed=getattr(args, 'seed', DEFAULT_SEED),
        suite=VerifySuite(getattr(args, 'suite', VerifySuite.ALL.value)),
        mode=ReductionMode(getattr(args, 'mode', ReductionMode.BIPD.value)),
        check=getattr(args, 'check', False),
        input_path=getattr(args, 'input_path', None),
        expression=getattr(args, 'expression', None),
        name=getattr(args, 'name', None),
        m=getattr(args, 'm', None),
        n=getattr(args, 'n', None),
        verbose=args.verbose,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = config_from_args(args)
        return COMMANDS[config.command](config)
    except (SpeciesError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
