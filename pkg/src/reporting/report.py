import json
import platform
from dataclasses import dataclass, field
from importlib.metadata import PackageNotFoundError, version

import numpy as np

from ..config import Config

STATUSES = ("pass", "fail", "value", "skipped")


@dataclass
class Check:
    """One verification item: expected vs observed under a tolerance"""

    name: str
    status: str
    expected: object = None
    observed: object = None
    tolerance: object = None
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown check status {self.status!r}")

    @classmethod
    def compare(cls, name, expected, observed, tolerance=None, note=""):
        if tolerance is None:
            ok = expected == observed
        else:
            ok = abs(expected - observed) <= tolerance
        return cls(name, "pass" if ok else "fail", expected, observed, tolerance, note)

    @classmethod
    def truth(cls, name, observed, note=""):
        return cls(name, "pass" if observed else "fail", True, bool(observed), None, note)

    @classmethod
    def value(cls, name, observed, expected=None, note=""):
        return cls(name, "value", expected, observed, None, note)

    @classmethod
    def skipped(cls, name, reason):
        return cls(name, "skipped", note=reason)

    @property
    def failed(self):
        return self.status == "fail"

    def as_dict(self):
        return {
            "name": self.name,
            "status": self.status,
            "expected": self.expected,
            "observed": self.observed,
            "tolerance": self.tolerance,
            "note": self.note,
        }


def versions():
    out = {"python": platform.python_version()}
    for package in ("hcode-verify", "numpy", "scipy", "galois"):
        try:
            out[package] = version(package)
        except PackageNotFoundError:
            out[package] = None
    if out["hcode-verify"] is None:
        from .. import __version__

        out["hcode-verify"] = __version__
    return out


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    config: dict = field(default_factory=Config.snapshot)
    versions: dict = field(default_factory=versions)
    wall_time: float = 0.0

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def failed(self):
        return [c for c in self.checks if c.failed]

    @property
    def ok(self):
        return not self.failed

    def summary(self):
        counts = {status: 0 for status in STATUSES}
        for check in self.checks:
            counts[check.status] += 1
        return counts

    def as_dict(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [c.as_dict() for c in self.checks],
            "summary": self.summary(),
            "config": self.config,
            "versions": self.versions,
            "wall_time": self.wall_time,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    raise TypeError(f"{type(value).__name__} is not JSON serializable")
