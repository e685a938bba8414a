import os

from coinduce.conventions import calibrate, render_ledger
from coinduce.graph import CALIBRATED


def test_calibration_is_unique_and_matches_shipped():
    survivors = calibrate(full=True)
    assert survivors == [CALIBRATED]


def test_ledger_matches_live_constants():
    text = render_ledger()
    assert "b_1 = -1/2" in text
    assert "K(p) = +c(k(p), length(p))" in text
    assert "first-minus-entry" in text
    assert CALIBRATED.k_rule in text


def test_uncalibrated_banner():
    assert "UNCALIBRATED" in render_ledger(calibrated=False)


def test_repo_ledger_file_is_current():
    """docs/CONVENTIONS.md is generated, never hand-maintained."""
    here = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    path = os.path.join(here, "docs", "CONVENTIONS.md")
    with open(path) as fh:
        assert fh.read() == render_ledger()
