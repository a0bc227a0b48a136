"""Law-check reports: one entry per diagram instance."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .vbase import MonoidalBase


@dataclass(frozen=True)
class DiagramResult:
    diagram: str
    indices: tuple
    ok: bool
    left: Any = None
    right: Any = None
    note: str = ""


@dataclass
class Report:
    subject: str
    base: MonoidalBase
    results: list = field(default_factory=list)
    fast_path: bool = False

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __bool__(self):
        return self.ok

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.ok]

    def verdicts(self) -> dict:
        return {(r.diagram, r.indices): r.ok for r in self.results}

    def extend(self, other: "Report"):
        self.results.extend(other.results)
        self.fast_path = self.fast_path or other.fast_path
        return self

    def _dump(self, m):
        if m is None:
            return None
        try:
            return self.base.dump_morphism(m)
        except NotImplementedError:
            return repr(m)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "base": self.base.describe(),
            "ok": self.ok,
            "fast_path": self.fast_path,
            "checked": len(self.results),
            "failures": [
                {
                    "diagram": r.diagram,
                    "indices": list(r.indices),
                    "left": self._dump(r.left),
                    "right": self._dump(r.right),
                    "note": r.note,
                }
                for r in self.failures
            ],
        }

    def text(self) -> str:
        head = f"{self.subject}: {'PASS' if self.ok else 'FAIL'} ({len(self.results)} diagrams checked"
        head += ", thin fast path)" if self.fast_path else ")"
        lines = [head]
        for r in self.failures:
            where = ", ".join(map(str, r.indices))
            lines.append(f"  {r.diagram} at ({where}) does not commute")
            if r.note:
                lines.append(f"    {r.note}")
            if r.left is not None or r.right is not None:
                lines.append(f"    left path:  {r.left!r}")
                lines.append(f"    right path: {r.right!r}")
        return "\n".join(lines)


def collect(subject: str, base: MonoidalBase, results: Iterable[DiagramResult], *,
            fail_fast: bool = False, fast_path: bool = False) -> Report:
    report = Report(subject, base, fast_path=fast_path)
    for r in results:
        report.results.append(r)
        if fail_fast and not r.ok:
            break
    return report


def compare(base: MonoidalBase, diagram: str, indices: tuple, left, right) -> DiagramResult:
    """Compare two composed paths; payloads are kept only on failure."""
    if base.commutes(left, right):
        return DiagramResult(diagram, indices, True)
    return DiagramResult(diagram, indices, False, left, right)


def existence(diagram: str, indices: tuple, constituents, base: MonoidalBase) -> DiagramResult:
    """Thin-base verdict: a diagram commutes iff every arrow on it exists."""
    missing = [m for m in constituents if not base.exists(m)]
    if not missing:
        return DiagramResult(diagram, indices, True, note="fast path")
    return DiagramResult(diagram, indices, False, note="missing arrows: " + ", ".join(map(repr, missing)))
