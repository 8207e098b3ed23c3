from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    suite: str
    tag: str
    description: str
    passed: bool
    detail: str = ""
    # where the checked statement or table comes from; empty for derived checks
    source: str = ""
