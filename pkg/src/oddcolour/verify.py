"""Certificate checking for odd colourings, plus the JSON certificate format."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Colouring, Graph


@dataclass
class VerificationReport:
    """``violations`` holds ``(class index, vertex, in-class degree)`` for every even-degree vertex."""

    violations: list[tuple[int, int, int]] = field(default_factory=list)
    partition_errors: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations and not self.partition_errors

    def __bool__(self):
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        lines = list(self.partition_errors)
        lines += [f"class {i}: vertex {v} has even degree {d}" for i, v, d in self.violations]
        return "\n".join(lines)


def verify_colouring(g: Graph, c: Colouring | list) -> VerificationReport:
    """Check that ``c`` partitions V(g) and every class induces an odd graph. Never raises."""
    report = VerificationReport()
    classes = c.classes if isinstance(c, Colouring) else [frozenset(x) for x in c]
    if isinstance(c, Colouring) and c.n != g.n:
        report.partition_errors.append(f"colouring is for {c.n} vertices, graph has {g.n}")
    owner: dict[int, int] = {}
    masks = []
    for i, cls in enumerate(classes):
        mask = 0
        for v in sorted(cls):
            if not isinstance(v, int) or not 0 <= v < g.n:
                report.partition_errors.append(f"class {i}: vertex {v!r} out of range")
                continue
            if v in owner:
                report.partition_errors.append(f"vertex {v} in classes {owner[v]} and {i}")
                continue
            owner[v] = i
            mask |= 1 << v
        masks.append(mask)
    missing = [v for v in range(g.n) if v not in owner]
    if missing:
        report.partition_errors.append(f"uncoloured vertices: {missing}")
    for i, cls in enumerate(classes):
        for v in sorted(cls):
            if owner.get(v) != i:
                continue
            d = (g.adj[v] & masks[i]).bit_count()
            if d % 2 == 0:
                report.violations.append((i, v, d))
    return report


def check_parity(g: Graph, part, odd: bool) -> list[int]:
    """Vertices of ``part`` whose degree inside ``G[part]`` has the wrong parity."""
    mask = sum(1 << v for v in part)
    want = 1 if odd else 0
    return [v for v in sorted(part) if (g.adj[v] & mask).bit_count() % 2 != want]


# certificates ----------------------------------------------------------------

def certificate(c: Colouring, algorithm: str, bound: int | None) -> dict:
    return {"n": c.n, "classes": c.as_lists(), "algorithm": algorithm, "bound": bound}


def dumps_certificate(c: Colouring, algorithm: str, bound: int | None) -> str:
    return json.dumps(certificate(c, algorithm, bound), sort_keys=True) + "\n"


def loads_certificate(text: str) -> tuple[Colouring, dict]:
    """Parse a certificate; raises ``ValueError`` on malformed input."""
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "classes" not in data:
        raise ValueError("certificate must be an object with 'n' and 'classes'")
    n = data["n"]
    classes = data["classes"]
    if not isinstance(n, int) or not isinstance(classes, list):
        raise ValueError("bad certificate field types")
    for cls in classes:
        if not isinstance(cls, list) or not all(isinstance(v, int) for v in cls):
            raise ValueError("every class must be a list of integer ids")
    return Colouring.from_lists(n, classes), data
