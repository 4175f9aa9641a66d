from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from goalcert import chain3, decoy, serialize_problem, twogoal

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def chain3_path(tmp_path):
    p = tmp_path / "chain3.json"
    p.write_text(serialize_problem(*chain3(3.0)), encoding="utf-8")
    return p


@pytest.fixture
def decoy_path(tmp_path):
    p = tmp_path / "decoy.json"
    p.write_text(serialize_problem(*decoy(3.0)), encoding="utf-8")
    return p


@pytest.fixture
def twogoal_path(tmp_path):
    p = tmp_path / "twogoal.json"
    p.write_text(serialize_problem(*twogoal(2.5, 1.0)), encoding="utf-8")
    return p
