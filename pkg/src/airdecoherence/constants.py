"""Physical constants (CODATA 2018) and the JSON override file."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import DomainError

AIR_MASS_AMU = 28.97


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.054571817e-34  # J s
    k_B: float = 1.380649e-23  # J / K
    amu: float = 1.66053906660e-27  # kg

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{f.name} must be a positive finite number, got {v!r}")


CODATA2018 = PhysicalConstants()


def load_constants(path=None) -> PhysicalConstants:
    """Read ``{"hbar": ..., "k_B": ..., "amu": ...}`` from ``path``.

    Missing keys keep their CODATA 2018 values; ``path=None`` returns the
    defaults unchanged. Unknown keys are rejected.
    """
    if path is None:
        return CODATA2018
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise DomainError("constants file must contain a JSON object")
    known = {f.name for f in fields(PhysicalConstants)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise DomainError(f"unknown constants in {path}: {', '.join(unknown)}")
    return replace(CODATA2018, **{k: float(v) for k, v in data.items()})
