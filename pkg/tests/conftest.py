"""Shared fixtures and the acceptance summary.

Tests tagged ``@pytest.mark.criterion(n)`` feed the per-criterion PASS/FAIL
lines printed at the end of the run.  Criterion 10 is the wall-clock budget
of the whole session and is decided here.
"""
import time
from collections import defaultdict

import pytest

from exppoly import ScalarContext

CRITERIA = {
    1: "alpha = -m^2 family reproduction, recursion equals closed form, under 1 s",
    2: "no solutions for alpha = -2, -3, -5, -7, under 5 s",
    3: "full corpus green with exact residuals, under 30 s",
    4: "growth leading coefficients 2/pi, 4/pi, 3/pi, 1/pi within 1e-9",
    5: "duality classification and canonical common factor 2i",
    6: "structure report holds on every eligible corpus case",
    7: "lemma identities for q = 1..4 and hand table values",
    8: "search recovers exactly the known one-dimensional spans",
    9: "property suites, 200 instances each",
    10: "whole suite under 60 s",
}
WALL_BUDGET = 60.0

_outcomes = defaultdict(list)
_session = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")
    _session["start"] = time.perf_counter()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        for m in item.iter_markers("criterion"):
            _outcomes[m.args[0]].append(rep.outcome)


def pytest_sessionfinish(session, exitstatus):
    _session["elapsed"] = time.perf_counter() - _session["start"]
    full_run = not session.config.option.keyword and not session.config.option.markexpr
    if full_run and _session["elapsed"] > WALL_BUDGET and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    elapsed = _session.get("elapsed", time.perf_counter() - _session["start"])
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, text in CRITERIA.items():
        if n == 10:
            ok = elapsed < WALL_BUDGET
            tr.write_line("criterion %2d %s: %s (%.1f s)" % (n, "PASS" if ok else "FAIL", text, elapsed))
            continue
        results = _outcomes.get(n)
        if not results:
            tr.write_line("criterion %2d NOT RUN: %s" % (n, text))
            continue
        ok = all(r == "passed" for r in results)
        tr.write_line("criterion %2d %s: %s (%d tests)" % (n, "PASS" if ok else "FAIL", text, len(results)))


@pytest.fixture(scope="session")
def ctx6():
    return ScalarContext(6)


@pytest.fixture(scope="session")
def corpus_cases():
    from exppoly.corpus import load_corpus
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_report(corpus_cases):
    """Full corpus run, shared so the suite pays for it once."""
    from exppoly.corpus import CorpusReport, run_case
    cases, excluded = corpus_cases
    start = time.perf_counter()
    results = [r for case in cases for r in run_case(case)]
    return CorpusReport(results, excluded), time.perf_counter() - start
