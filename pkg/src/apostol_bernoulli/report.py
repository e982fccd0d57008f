"""Check records produced by identity verifications."""

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOTED = "noted"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check.

    ``status`` is ``"pass"``, ``"fail"`` or ``"noted"``; noted results are
    documented caveats that do not count as failures.  ``witnesses`` holds
    rendered sides of the identity, filled in on failure or when noted.
    """

    tag: str
    params: dict = field(default_factory=dict)
    status: str = PASS
    detail: str = ""
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status != FAIL

    def as_dict(self):
        return {
            "tag": self.tag,
            "params": {k: str(v) for k, v in self.params.items()},
            "status": self.status,
            "detail": self.detail,
            "witnesses": {k: str(v) for k, v in self.witnesses.items()},
        }


def check(tag, ok, params=None, detail="", **witnesses):
    """Build a pass/fail record; witnesses are kept only on failure."""
    return CheckResult(
        tag,
        dict(params or {}),
        PASS if ok else FAIL,
        detail,
        {} if ok else witnesses,
    )
