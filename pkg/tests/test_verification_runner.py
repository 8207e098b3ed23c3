import logging

import pytest

from dto.enums.verify_suite import VerifySuite
from service.verification_runner import REPORT_COLUMNS, VerificationRunner


def test_fixture_report():
    report = VerificationRunner.run(VerifySuite.FIXTURES, 8, 6, 42)
    assert list(report.columns) == REPORT_COLUMNS
    assert set(report['suite']) == {VerifySuite.FIXTURES.value}
    assert report['tag'].is_unique
    assert VerificationRunner.all_passed(report)


def test_suite_summary_is_logged(caplog):
    with caplog.at_level(logging.INFO, logger='service.verification_runner'):
        VerificationRunner.run_suite(VerifySuite.IDENTITIES, 3, 3, 0)
    assert any("suite identities:" in message for message in caplog.messages)


def test_all_is_not_a_single_suite():
    with pytest.raises(ValueError):
        VerificationRunner.run_suite(VerifySuite.ALL, 4, 4, 0)


@pytest.mark.slow
def test_every_suite_passes():
    report = VerificationRunner.run(VerifySuite.ALL, 8, 6, 42)
    assert report['suite'].unique().tolist() == [s.value for s in VerificationRunner.SUITE_ORDER]
    assert VerificationRunner.all_passed(report), report[~report['passed']].to_dict(orient='records')
