import os
from pathlib import Path

import pytest

from docsent.lexicon import default_seed
from docsent.tagger import default_tag_lexicon
from docsent.wordnet import load_wordnet

ROOT = Path(__file__).resolve().parents[1]
DESK = ROOT / "src" / "docsent" / "data" / "desk"


def wordnet_dir() -> Path:
    env = os.environ.get("WORDNET_DIR")
    return Path(env) if env else ROOT / "third_party" / "wordnet-3.0" / "dict"


@pytest.fixture(scope="session")
def wn_dir():
    d = wordnet_dir()
    if not (d / "index.adj").exists():
        pytest.skip(f"WordNet 3.0 not found at {d} (set WORDNET_DIR)")
    return d


@pytest.fixture(scope="session")
def db(wn_dir):
    return load_wordnet(wn_dir)


@pytest.fixture
def seed():
    return default_seed()


@pytest.fixture(scope="session")
def tag_lexicon():
    return default_tag_lexicon()


# one summary line per acceptance criterion, printed after the run
_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.rsplit("::", 1)[1]
        number = int(name.split("_")[2])
        outcome = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _criteria[number] = (outcome, name.split("_", 3)[3].replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcome, title = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {outcome}  {title}")
