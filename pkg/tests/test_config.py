from dataclasses import replace

from lapinterp.acceptance import Outcome, run
from lapinterp.config import AcceptanceConfig, VerifyConfig


def test_limits_cover_every_criterion():
    cfg = AcceptanceConfig()
    assert sorted(cfg.limits) == list(range(1, 10))
    assert cfg.as_dict()["arithmetic_pairs"] == 10_000


def test_configs_are_frozen_values():
    assert replace(VerifyConfig(), n=3) == VerifyConfig(n=3)


def test_outcome_lines():
    assert "PASS" in Outcome(6, [], 0.1, 1.0).line()
    slow = Outcome(6, [], 2.0, 1.0)
    assert not slow.ok and "over the time limit" in slow.line()
    broken = Outcome(9, ["no witness"], 0.1, 10.0)
    assert "FAIL" in broken.line() and "no witness" in broken.line()


def test_smaller_configuration_runs():
    cfg = AcceptanceConfig(arithmetic_pairs=50, parity_pairs=20)
    assert run(2, cfg).ok and run(6, cfg).ok
