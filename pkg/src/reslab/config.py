"""Engine limits and execution settings.

A single EngineConfig travels through every potentially expensive call so
that resource failures are predictable: a degree guard on Buchberger
intermediates, an iteration cap on saturation, a size ceiling that decides
when the graded linear-algebra membership path is attractive, and an
optional wall-clock deadline checked cooperatively inside the hot loops.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field, replace

from .errors import ResourceLimitError

ENV_JOBS = "RESLAB_JOBS"
ENV_DEGREE_GUARD = "RESLAB_DEGREE_GUARD"


@dataclass(frozen=True)
class EngineConfig:
    degree_guard: int = 40
    saturation_cap: int = 50
    # Auto method selection: use the Macaulay-matrix membership path when
    # the estimated matrix has at most this many entries and no Groebner
    # basis of the target ideal is cached yet.
    macaulay_entry_limit: int = 60_000_000
    jobs: int = 1
    timeout_s: float | None = None
    deadline: float | None = field(default=None, compare=False)

    def with_deadline(self) -> "EngineConfig":
        """Start the per-command clock; no-op when timeout_s is unset."""
        if self.timeout_s is None:
            return self
        return replace(self, deadline=time.monotonic() + self.timeout_s)

    def check_deadline(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitError(
                "command exceeded the %.3g s timeout" % self.timeout_s
            )

    def check_degree(self, degree: int) -> None:
        if degree > self.degree_guard:
            raise ResourceLimitError(
                "intermediate degree %d exceeds the degree guard %d"
                % (degree, self.degree_guard)
            )

    @staticmethod
    def from_env(**overrides) -> "EngineConfig":
        """Build a config from RESLAB_* variables; explicit overrides win."""
        values = {}
        if ENV_JOBS in os.environ:
            values["jobs"] = int(os.environ[ENV_JOBS])
        if ENV_DEGREE_GUARD in os.environ:
            values["degree_guard"] = int(os.environ[ENV_DEGREE_GUARD])
        values.update({k: v for k, v in overrides.items() if v is not None})
        return EngineConfig(**values)


DEFAULT_CONFIG = EngineConfig()
