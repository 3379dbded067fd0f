import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from swingcompare.cli import main as cli_main


@pytest.fixture(scope="session")
def synth_session(tmp_path_factory):
    """One synthetic session on disk, shared across test modules."""
    out = tmp_path_factory.mktemp("session")
    rc = cli_main(["synth", "--seed", "7", "--preset", "default",
                   "--out-dir", str(out)])
    assert rc == 0
    return out


@pytest.fixture(scope="session")
def analyzed_session(synth_session, tmp_path_factory):
    """The shared session analyzed to a report file."""
    report_path = synth_session / "report.json"
    rc = cli_main([
        "analyze",
        "--user-pose", str(synth_session / "user_pose.json"),
        "--expert-pose", str(synth_session / "expert_pose.json"),
        "--user-emb", str(synth_session / "user_emb.json"),
        "--expert-emb", str(synth_session / "expert_emb.json"),
        "--out", str(report_path),
    ])
    assert rc == 0
    return synth_session, report_path
