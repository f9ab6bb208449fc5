"""Runtime settings: exhaustive bounds, worker count and progress output."""

import os
from dataclasses import dataclass

from annular_nc.errors import BoundExceededError, ConfigurationError

BOUND_ENV_VAR = "ANNULAR_NC_BOUND"

# |B_7| = 645120; anything larger is not enumerable on a desk machine.
ENUMERATION_CAP = 7
# p+q = 6 means |B_6| = 46080 elements, the largest opt-in scan.
OPT_IN_BOUND = 6


@dataclass(frozen=True)
class Settings:
    """
    Bounds and execution options shared by the builders and verifiers.

    Args:
        bound: Largest p+q (or n) scanned exhaustively by default (default 5)
        oracle_bound: Largest rank for the breadth-first length oracles (default 4)
        disc_bound: Largest rank accepted by the disc poset NC^B(n) builder (default 6)
        orbit_family_bound: Largest p+q for listing the whole orbit family (default 4)
        jobs: Worker processes used when filtering B_n (default 1, in-process)
        progress: Show tqdm progress bars on long scans (default False)
    """

    bound: int = 5
    oracle_bound: int = 4
    disc_bound: int = 6
    orbit_family_bound: int = 4
    jobs: int = 1
    progress: bool = False

    def __post_init__(self):
        if not 1 <= self.bound <= OPT_IN_BOUND:
            raise ConfigurationError(
                f"bound must lie in 1..{OPT_IN_BOUND}, got {self.bound}"
            )
        if self.oracle_bound < 1 or self.jobs < 1:
            raise ConfigurationError("oracle_bound and jobs must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "Settings":
        """
        Build settings from the environment, then apply keyword overrides.

        ANNULAR_NC_BOUND replaces the default exhaustive bound.
        """
        raw = os.environ.get(BOUND_ENV_VAR)
        values = {}
        if raw:
            try:
                values["bound"] = int(raw)
            except ValueError as exc:
                raise ConfigurationError(
                    f"{BOUND_ENV_VAR} must be an integer, got {raw!r}"
                ) from exc
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def require(self, value: int, limit: int, what: str) -> None:
        """Raise BoundExceededError unless value <= limit."""
        if value > limit:
            raise BoundExceededError(f"{what} = {value} exceeds the bound {limit}")


def resolve(settings: Settings | None) -> Settings:
    """Return the given settings, or the environment defaults."""
    return settings if settings is not None else Settings.from_env()
