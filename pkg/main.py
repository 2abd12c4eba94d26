import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

from src.kernels.series import SeriesEval, SeriesSettings
from src.sweeps.figures import SweepRunner, summary_frame
from src.utils.config import load_config
from src.utils.errors import DomainError, ManifestError, SeriesConvergenceError
from src.utils.logger import setup_pipeline_logger
from src.verification.report import ReportWriter, VerificationReport, error_row
from src.verification.suites import SUITES, SuiteRunner
from src.wright.registry import describe_functions, lookup

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_NOT_CONVERGED = 3
EXIT_PARTIAL = 4

PARAMETER_FLAGS = ('alpha', 'beta', 'sigma', 't')


def print_evaluation(name: str, result: SeriesEval) -> None:
    print(f"function: {name}")
    print(f"value: {result.value:.17g}")
    print(f"terms_used: {result.terms_used}")
    print(f"converged: {result.converged}")
    print(f"last_term_magnitude: {result.last_term_magnitude:.17g}")


def evaluate_function(name: str, values: Dict[str, float], config: Dict, logger) -> int:
    """
    Evaluate one registered function and print the result.

    Args:
        name (str): Registered function name
        values (Dict[str, float]): Parameters given on the command line
        config (Dict): Loaded configuration
        logger: Pipeline logger

    Returns:
        int: Exit code
    """
    try:
        entry = lookup(name)
        result = entry(values, SeriesSettings.from_config(config))
        print_evaluation(entry.name, result)
        if not result.converged:
            logger.error(f"{entry.name} value is unreliable: cancellation or cross-check mismatch "
                         f"(largest term {result.max_term_magnitude:.3e})")
            return EXIT_NOT_CONVERGED
        return EXIT_OK
    except SeriesConvergenceError as e:
        logger.error(f"Series did not converge: {str(e)}")
        if e.partial is not None:
            print_evaluation(name, e.partial)
        return EXIT_NOT_CONVERGED
    except (DomainError, ManifestError, OverflowError) as e:
        logger.error(f"Domain error: {str(e)}")
        return EXIT_DOMAIN


def run_sweeps(manifest: str, output_dir: Path, config: Dict, workers: Optional[int], logger) -> int:
    """Run a sweep manifest, print the per-curve status table and return the exit code."""
    try:
        results = SweepRunner(config, workers).run_manifest(manifest, output_dir)
    except (ManifestError, FileNotFoundError) as e:
        logger.error(f"Error reading sweep manifest: {str(e)}")
        return EXIT_DOMAIN

    if results:
        print(summary_frame(results).to_string(index=False))
    else:
        logger.info("Sweep manifest is empty, nothing written")

    unfinished = [r for r in results if r.status != 'ok']
    if unfinished:
        logger.warning(f"{len(unfinished)} of {len(results)} sweeps incomplete: "
                       f"{', '.join(r.name for r in unfinished)}")
        return EXIT_PARTIAL
    return EXIT_OK


def run_verification(suite: str, output_dir: Path, config: Dict, workers: Optional[int],
                     progress: bool, logger) -> int:
    """
    Run a verification suite and write verify_<suite>.csv.

    The report is written even when the suite fails or cannot run.

    Returns:
        int: 0 when every row passes, 1 on failures, 2 on execution error
    """
    writer = ReportWriter(str(output_dir))
    try:
        report = SuiteRunner(config, workers, progress).run(suite)
    except Exception as e:
        logger.error(f"Error running verification suite {suite}: {str(e)}")
        report = VerificationReport(suite)
        report.add(error_row(f"suite_{suite}", {}, e))
        writer.write(report)
        return EXIT_DOMAIN

    path = writer.write(report)
    print(report.summary().to_string(index=False))
    status = 'PASS' if report.passed else 'FAIL'
    print(f"{status}: {len(report.rows) - len(report.failures)}/{len(report.rows)} checks passed "
          f"(max rel err {report.max_rel_err:.3g}); report at {path}")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Wright, Mittag-Leffler and Mainardi functions with parameter derivatives',
        epilog='functions:\n' + describe_functions(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        '--config',
        default=None,
        help='Path to a YAML configuration file'
    )
    parser.add_argument(
        '--output-dir',
        default=None,
        help='Directory for CSV output (defaults to paths.output_dir)'
    )
    parser.add_argument(
        '--workers',
        type=int,
        default=None,
        help='Worker processes for sweeps and suites'
    )
    parser.add_argument(
        '--progress',
        action='store_true',
        help='Show progress bars'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    evaluate = commands.add_parser('eval', help='Evaluate one function at one point')
    evaluate.add_argument('function', help='Registered function name, e.g. wright or dW/dalpha')
    for flag in PARAMETER_FLAGS:
        evaluate.add_argument(f'--{flag}', type=float, default=None)

    sweep = commands.add_parser('sweep', help='Run a parameter sweep manifest')
    sweep.add_argument('manifest', help='YAML file with a top-level sweeps list')

    verify = commands.add_parser('verify', help='Run a verification suite')
    verify.add_argument('suite', help=f"One of: {', '.join(SUITES)}")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the command line."""
    args = build_parser().parse_args(argv)

    try:
        config = load_config(args.config)
    except (ManifestError, FileNotFoundError) as e:
        print(f"ERROR - {str(e)}", file=sys.stderr)
        return EXIT_DOMAIN

    paths = config['paths']
    log_settings = config['logging']
    logger = setup_pipeline_logger(paths.get('logs_dir'), log_settings['level'],
                                   log_settings['file'], log_settings['format'])
    output_dir = Path(args.output_dir or paths['output_dir'])

    if args.command == 'eval':
        values = {flag: getattr(args, flag) for flag in PARAMETER_FLAGS
                  if getattr(args, flag) is not None}
        return evaluate_function(args.function, values, config, logger)

    output_dir.mkdir(parents=True, exist_ok=True)
    if args.command == 'sweep':
        return run_sweeps(args.manifest, output_dir, config, args.workers, logger)
    return run_verification(args.suite, output_dir, config, args.workers, args.progress, logger)


if __name__ == '__main__':
    sys.exit(main())
