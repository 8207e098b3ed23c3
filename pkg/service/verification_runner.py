import logging
from dataclasses import asdict
from typing import List

import pandas as pd
from pandas import DataFrame

from dto.check_result import CheckResult
from dto.enums.verify_suite import VerifySuite
from service.catalog.fixture_verifier import FixtureVerifier
from service.catalog.identity_battery import IdentityBattery
from service.graphs.confluence_checker import ConfluenceChecker
from service.graphs.oracle_agreement import OracleAgreement

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ['suite', 'tag', 'description', 'passed', 'detail', 'source']


class VerificationRunner:
    """Runs the verification suites and collects one report row per check."""

    SUITE_ORDER = [VerifySuite.IDENTITIES, VerifySuite.FIXTURES, VerifySuite.ORACLE, VerifySuite.CONFLUENCE]

    @staticmethod
    def run_suite(suite: VerifySuite, degree: int, n_max: int, seed: int) -> List[CheckResult]:
        if suite == VerifySuite.IDENTITIES:
            results = IdentityBattery.run(degree)
        elif suite == VerifySuite.FIXTURES:
            results = FixtureVerifier.run()
        elif suite == VerifySuite.ORACLE:
            results = OracleAgreement.run(n_max)
        elif suite == VerifySuite.CONFLUENCE:
            results = ConfluenceChecker.run(seed, min(n_max, ConfluenceChecker.EXHAUSTIVE_MAX_N))
        else:
            raise ValueError(f"Not a single suite: {suite}")
        failed = sum(not r.passed for r in results)
        logger.info("suite %s: %d passed, %d failed", suite.value, len(results) - failed, failed)
        return results

    @classmethod
    def run(cls, suite: VerifySuite, degree: int, n_max: int, seed: int) -> DataFrame:
        """Report with columns suite, tag, description, passed, detail, source.

        Args:
            suite: A single suite, or VerifySuite.ALL for every suite in order.
            degree: Truncation degree of the identity battery.
            n_max: Largest graph size for the oracle suites.
            seed: Seed of the random graphs and merge orders.

        Returns:
            One row per check, in the order the checks ran.
        """
        suites = cls.SUITE_ORDER if suite == VerifySuite.ALL else [suite]
        results = [r for s in suites for r in cls.run_suite(s, degree, n_max, seed)]
        return pd.DataFrame([asdict(r) for r in results], columns=REPORT_COLUMNS)

    @staticmethod
    def all_passed(report: DataFrame) -> bool:
        return bool(report['passed'].all())
