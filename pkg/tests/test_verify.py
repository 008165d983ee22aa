import io
import json

from g2contractions.cli import main
from g2contractions.verify import VerificationReport, VerifyOptions, cmd_verify_paper


def test_sections_pass():
    rep = cmd_verify_paper(VerifyOptions(random_triples=10, random_pairs=10, spectral_samples=10),
                           sections=["octonion", "g2", "contractions"])
    assert rep.ok, [c.check_id for c in rep.checks if not c.passed]


def test_report_records_failures_without_aborting():
    rep = VerificationReport()
    rep.add("a", "here", 1, 1)
    rep.add("b", "there", 1, 2)
    assert rep.summary()["passed"] == 1 and rep.summary()["failed"] == 1
    assert not rep.ok
    js = rep.to_json()
    assert [c["check_id"] for c in js["checks"]] == ["a", "b"]


def test_crashing_section_becomes_a_failed_check(monkeypatch):
    from g2contractions import verify

    def boom(rep, opt):
        raise RuntimeError("broken")

    monkeypatch.setattr(verify, "SECTIONS", [("boom", boom)] + verify.SECTIONS[:1])
    rep = verify.cmd_verify_paper(VerifyOptions(random_triples=2, random_pairs=2))
    assert rep.checks[0].check_id == "boom_completed" and not rep.checks[0].passed
    assert len(rep.checks) > 1


def test_verify_paper_cli_deterministic():
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        code = main(["verify-paper", "--format", "json"], out=buf)
        assert code == 0
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["summary"]["failed"] == 0
