"""Named verification suites run by `main.py verify`."""
from pathlib import Path
from typing import Any, Dict, Optional

from src.laplace import pairs
from src.laplace.verifier import PairVerifier
from src.limits.targets import LimitVerifier, load_limit_manifest
from src.utils.config import DEFAULT_CONFIG_PATH, DEFAULTS
from src.utils.errors import DomainError
from src.utils.logger import setup_logger
from src.verification.adjudications import AdjudicationSuite
from src.verification.identities import IdentitySuite
from src.verification.report import VerificationReport

SUITES = ('identities', 'laplace', 'limits', 'all')

PAIR_MANIFEST = 'pairs.yaml'
LIMIT_MANIFEST = 'limits.yaml'

SECOND_KIND_CASES = ((0.5, 0.5), (0.5, 1.0), (1.0 / 3.0, 2.0 / 3.0))
SECOND_KIND_GRID = (0.5, 1.0, 2.0)
LINEARITY_GRID = (3.0, 4.0, 5.0)


def manifest_path(config: Dict[str, Any], filename: str) -> Path:
    """Manifest file inside the configured directory; relative directories hang off the repository root."""
    directory = Path(config.get('paths', {}).get('manifests_dir', DEFAULTS['paths']['manifests_dir']))
    if not directory.is_absolute():
        directory = DEFAULT_CONFIG_PATH.parent / directory
    return directory / filename


class SuiteRunner:
    """Builds and runs the identities, laplace and limits suites."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, workers: Optional[int] = None,
                 progress: bool = False):
        """
        Initialize the SuiteRunner.

        Args:
            config (Optional[Dict[str, Any]]): Loaded configuration, defaults when None
            workers (Optional[int]): Process-pool width
            progress (bool): Show progress bars
        """
        self.config = config or DEFAULTS
        self.workers = workers
        self.progress = progress
        self.logger = setup_logger('SuiteRunner')

    def identities(self) -> VerificationReport:
        report = IdentitySuite(self.config, self.workers).run('identities')
        report.extend(AdjudicationSuite(self.config).run().rows)
        return report

    def laplace(self) -> VerificationReport:
        verifier = PairVerifier(self.config, self.workers)
        catalog = pairs.load_pair_manifest(manifest_path(self.config, PAIR_MANIFEST))
        report = verifier.verify_pairs(catalog, suite='laplace', progress=self.progress)
        for sigma, beta in SECOND_KIND_CASES:
            report.extend(verifier.second_kind_transform_check(sigma, beta, SECOND_KIND_GRID).rows)
        report.extend(verifier.linearity_check(pairs.wright_scaling(1.0, 1.0, 1.0, -1),
                                               pairs.bessel_j0_form(1.0), LINEARITY_GRID).rows)
        return report

    def limits(self) -> VerificationReport:
        cases = load_limit_manifest(manifest_path(self.config, LIMIT_MANIFEST))
        return LimitVerifier(self.config, self.workers).verify(cases, suite='limits',
                                                               progress=self.progress)

    def run(self, name: str) -> VerificationReport:
        """
        Run one suite by name.

        Args:
            name (str): identities, laplace, limits or all

        Returns:
            VerificationReport: Rows of the suite
        """
        if name not in SUITES:
            raise DomainError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")
        self.logger.info(f"Running verification suite: {name}")
        if name != 'all':
            return getattr(self, name)()

        report = VerificationReport('all')
        for part in SUITES[:-1]:
            report.extend(getattr(self, part)().rows)
        return report
