"""Machine-readable verification results."""

from __future__ import annotations

from dataclasses import dataclass, field

SCHEMA = "resograph.report/1"


@dataclass
class Check:
    """One named identity: ``holds`` is True/False, or None when skipped."""
    name: str
    holds: bool | None
    lhs: object = None
    rhs: object = None
    witness: object = None
    reason: str | None = None

    @property
    def verdict(self):
        if self.holds is None:
            return "skipped"
        return "pass" if self.holds else "fail"

    def to_dict(self):
        d = {"verdict": self.verdict, "lhs": _plain(self.lhs), "rhs": _plain(self.rhs)}
        if self.witness is not None:
            d["witness"] = _plain(self.witness)
        if self.reason:
            d["reason"] = self.reason
        return d


@dataclass
class GraphReport:
    graph: str
    checks: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def add(self, check):
        self.checks.append(check)
        return check

    @property
    def ok(self):
        return all(c.holds is not False for c in self.checks)

    def to_dict(self):
        return {"summary": _plain(self.summary), "checks": self.checks_dict()}

    def checks_dict(self):
        out = {}
        for c in self.checks:
            name = c.name
            k = 2
            while name in out:
                name = f"{c.name}#{k}"
                k += 1
            out[name] = c.to_dict()
        return out


def to_document(reports):
    return {
        "schema": SCHEMA,
        "ok": all(r.ok for r in reports),
        "graphs": {r.graph: r.to_dict() for r in reports},
    }


def _plain(x):
    if isinstance(x, (frozenset, set)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    if isinstance(x, list):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x
