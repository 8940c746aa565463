"""Named identity checks and the report that collects them."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    expected: bool = True
    lhs: str | None = None
    rhs: str | None = None
    detail: str | None = None

    @property
    def ok(self):
        return self.passed == self.expected

    @property
    def status(self):
        if self.expected:
            return "pass" if self.passed else "fail"
        return "xfail" if not self.passed else "xpass"


@dataclass
class IdentityReport:
    """Ordered list of checks for one suite on one preset.

    ``elapsed`` is recorded but never rendered, so output stays byte-stable.
    """

    suite: str
    preset: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    def equal(self, name, lhs, rhs, expected=True, detail=None):
        """Record the check ``lhs == rhs``; operands are rendered only on a mismatch."""
        passed = lhs == rhs
        show = passed != expected or not expected
        self.checks.append(Check(name, passed, expected,
                                 str(lhs) if show else None,
                                 str(rhs) if show else None, detail))
        return passed

    def truth(self, name, value, expected=True, detail=None):
        self.checks.append(Check(name, bool(value), expected, detail=detail))
        return bool(value)

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render_text(self):
        lines = [f"suite {self.suite} on {self.preset}"]
        for c in self.checks:
            lines.append(f"  {c.status.upper():5} {c.name}")
            if c.detail and (not c.ok or not c.expected):
                lines.append(f"        {c.detail}")
            if c.lhs is not None:
                lines.append(f"        lhs: {c.lhs}")
                lines.append(f"        rhs: {c.rhs}")
        passed = sum(c.ok for c in self.checks)
        lines.append(f"{passed}/{len(self.checks)} checks as expected: {'OK' if self.ok else 'FAILED'}")
        return "\n".join(lines)

    def to_json(self):
        return {
            "suite": self.suite,
            "preset": self.preset,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "status": c.status,
                 "detail": {k: v for k, v in (("lhs", c.lhs), ("rhs", c.rhs), ("note", c.detail)) if v is not None}}
                for c in self.checks
            ],
        }

    def __str__(self):
        return self.render_text()
