"""Structured pass/fail records for every identity the suites check.

A claim either holds exactly (``verified``), holds in a corrected or
sign-adjusted form that is spelled out in its note (``derived-with-note``),
is out of computational reach and explicitly recorded as such
(``asserted-not-verified``), or fails with a witness (``failed``).
Reports serialize deterministically: identical configurations produce
byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

VERIFIED = "verified"
DERIVED_WITH_NOTE = "derived-with-note"
ASSERTED_NOT_VERIFIED = "asserted-not-verified"
FAILED = "failed"

_PASSING = {VERIFIED, DERIVED_WITH_NOTE, ASSERTED_NOT_VERIFIED}


@dataclass
class Claim:
    claim_id: str
    statement: str
    status: str
    residual: Optional[str] = None
    witness: Optional[str] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status in _PASSING

    def to_dict(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "statement": self.statement,
            "status": self.status,
        }
        if self.residual is not None:
            out["residual"] = self.residual
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Claim":
        return cls(
            claim_id=data["claim_id"],
            statement=data["statement"],
            status=data["status"],
            residual=data.get("residual"),
            witness=data.get("witness"),
            note=data.get("note"),
        )


def verified(claim_id: str, statement: str, note: str = None) -> Claim:
    return Claim(claim_id, statement, VERIFIED, note=note)


def noted(claim_id: str, statement: str, note: str) -> Claim:
    return Claim(claim_id, statement, DERIVED_WITH_NOTE, note=note)


def asserted(claim_id: str, statement: str, note: str = None) -> Claim:
    return Claim(claim_id, statement, ASSERTED_NOT_VERIFIED, note=note)


def failed(claim_id: str, statement: str, residual: str = None, witness: str = None) -> Claim:
    return Claim(claim_id, statement, FAILED, residual=residual, witness=witness)


def check(claim_id: str, statement: str, ok: bool, residual: str = None, witness: str = None, note: str = None) -> Claim:
    """A verified claim when ok, otherwise a failed claim carrying evidence."""
    if ok:
        return Claim(claim_id, statement, VERIFIED, note=note)
    return Claim(claim_id, statement, FAILED, residual=residual, witness=witness, note=note)


@dataclass
class SuiteResult:
    name: str
    claims: list[Claim] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def counts(self) -> dict:
        out = {VERIFIED: 0, DERIVED_WITH_NOTE: 0, ASSERTED_NOT_VERIFIED: 0, FAILED: 0}
        for c in self.claims:
            out[c.status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "counts": self.counts(),
            "claims": [c.to_dict() for c in self.claims],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteResult":
        return cls(data["name"], [Claim.from_dict(c) for c in data["claims"]])


@dataclass
class VerificationReport:
    config: dict
    suites: list[SuiteResult] = field(default_factory=list)
    corrections_sha256: Optional[str] = None

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def summary(self) -> dict:
        total = {VERIFIED: 0, DERIVED_WITH_NOTE: 0, ASSERTED_NOT_VERIFIED: 0, FAILED: 0}
        for s in self.suites:
            for k, v in s.counts().items():
                total[k] += v
        total["suites"] = len(self.suites)
        return total

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "corrections_sha256": self.corrections_sha256,
            "summary": self.summary(),
            "suites": [s.to_dict() for s in self.suites],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            config=data["config"],
            suites=[SuiteResult.from_dict(s) for s in data["suites"]],
            corrections_sha256=data.get("corrections_sha256"),
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def to_markdown(self) -> str:
        lines = ["# Verification report", ""]
        lines.append("## Configuration")
        for key in sorted(self.config):
            lines.append(f"- `{key}`: `{self.config[key]}`")
        if self.corrections_sha256:
            lines.append(f"- corrections overlay sha256: `{self.corrections_sha256}`")
        lines.append("")
        summary = self.summary()
        lines.append("## Summary")
        lines.append(
            f"- suites: {summary['suites']}, verified: {summary[VERIFIED]}, "
            f"derived-with-note: {summary[DERIVED_WITH_NOTE]}, "
            f"asserted-not-verified: {summary[ASSERTED_NOT_VERIFIED]}, "
            f"failed: {summary[FAILED]}"
        )
        lines.append("")
        for suite in self.suites:
            lines.append(f"## Suite `{suite.name}` — {'PASS' if suite.ok else 'FAIL'}")
            lines.append("")
            lines.append("| claim | statement | status | detail |")
            lines.append("|---|---|---|---|")
            for c in suite.claims:
                detail = []
                if c.note:
                    detail.append(f"note: {c.note}")
                if c.residual:
                    detail.append(f"residual: `{c.residual}`")
                if c.witness:
                    detail.append(f"witness: `{c.witness}`")
                lines.append(
                    f"| `{c.claim_id}` | {c.statement} | {c.status} | {'; '.join(detail)} |"
                )
            lines.append("")
        return "\n".join(lines)
