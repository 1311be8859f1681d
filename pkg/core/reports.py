"""Verification report returned by every checker."""
from dataclasses import dataclass
from typing import Any, Optional, Tuple


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive check.

    ``witness`` is the first counterexample in deterministic order (a tuple of
    basis indices or group elements) and is None when the check passed.
    """

    check: str
    passed: bool
    witness: Optional[Tuple[Any, ...]] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def ok(cls, check: str, detail: str = "") -> "VerificationReport":
        return cls(check=check, passed=True, detail=detail)

    @classmethod
    def failure(cls, check: str, witness: Tuple[Any, ...], detail: str) -> "VerificationReport":
        return cls(check=check, passed=False, witness=witness, detail=detail)

    def summary(self) -> str:
        """One line, e.g. ``grading: FAIL (1, 2, 3) degree mismatch``."""
        if self.passed:
            return f"{self.check}: PASS" + (f" {self.detail}" if self.detail else "")
        witness = "(" + ", ".join(str(w) for w in self.witness or ()) + ")"
        return f"{self.check}: FAIL {witness} {self.detail}".rstrip()
