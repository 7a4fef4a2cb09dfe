"""JSON report envelope shared by every CLI subcommand."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Any

from . import __version__


@dataclass
class ReportEnvelope:
    command: str
    parameters: dict[str, Any]
    results: dict[str, Any]
    version: str = __version__
    timing: dict[str, float] = field(default_factory=lambda: {"wall_time": 0.0})

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportEnvelope":
        return cls(d["command"], d["parameters"], d["results"], d["version"], d["timing"])

    @classmethod
    def from_json(cls, text: str) -> "ReportEnvelope":
        return cls.from_dict(json.loads(text))


def schema() -> dict:
    """The envelope's JSON schema, shipped as package data."""
    return json.loads(resources.files("aeskit").joinpath("schema/report.json").read_text())
