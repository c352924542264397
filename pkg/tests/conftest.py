import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ineqcert.cli import default_corpus_path, run_command  # noqa: E402
from ineqcert.lang import parse_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus_specs():
    with open(default_corpus_path(), "r", encoding="utf-8") as fh:
        return parse_corpus(fh.read())


@pytest.fixture(scope="session")
def corpus_report(tmp_path_factory):
    """One full CLI run over the shipped corpus (exit code, raw bytes, JSON)."""
    out = tmp_path_factory.mktemp("report") / "corpus.json"
    code = run_command(["prove", "--out", str(out)])
    raw = out.read_bytes()
    return code, raw, json.loads(raw)
