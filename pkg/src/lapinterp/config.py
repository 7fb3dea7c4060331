"""Run configurations shared by the command line, the scripts and the acceptance suite."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class VerifyConfig:
    """Parameters of one randomized verification suite."""

    ring: str = "z"
    n: int = 4
    trials: int = 200
    seed: int = 0


@dataclass(frozen=True)
class AcceptanceConfig:
    """Sizes and time limits (seconds) of the acceptance criteria."""

    encoding_pairs_max: int = 64
    encoding_shape_max: int = 5
    arithmetic_pairs: int = 10_000
    powering_instances: int = 200
    axiom_trials: int = 500
    axiom_size_bound: int = 4
    difftest_trials: int = 500
    difftest_depth: int = 4
    parity_pairs: int = 1_000
    cayley_hamilton_trials: int = 1_000
    linalg_n_max: int = 5
    hard_identity_pairs: int = 200
    seed: int = 0
    limits: dict = field(
        default_factory=lambda: {1: 1.0, 2: 5.0, 3: 10.0, 4: 60.0, 5: 120.0, 6: 1.0, 7: 60.0, 8: 1.0, 9: 10.0}
    )

    def as_dict(self) -> dict:
        return asdict(self)
