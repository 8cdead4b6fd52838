"""IRX certificate files.

Line 1::

    IRX1 kind=<s|t|r> m=<m> n=<n> claim=<witness|exhaustion> order=<N>

A witness file then holds one graph line (``n=<N> <hex>``, the red graph).
An exhaustion file holds ``count <k> <canonical-count>`` for k = 1..N,
the last one being zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph, GraphError, decode_graph, encode_graph
from .search import Problem, count_good, violation

MAGIC = "IRX1"
CLAIMS = ("witness", "exhaustion")


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Certificate:
    problem: Problem
    claim: str
    order: int
    witness: Graph | None = None
    counts: list[tuple[int, int]] = field(default_factory=list)

    def header(self) -> str:
        p = self.problem
        return f"{MAGIC} kind={p.kind} m={p.m} n={p.n} claim={self.claim} order={self.order}"

    def to_text(self) -> str:
        lines = [self.header()]
        if self.claim == "witness":
            lines.append(encode_graph(self.witness))
        else:
            lines.extend(f"count {k} {c}" for k, c in self.counts)
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path) -> Path:
        path = Path(path)
        path.write_text(self.to_text(), encoding="ascii")
        return path

    def filename(self) -> str:
        p = self.problem
        return f"{p.kind}_{p.m}_{p.n}_{self.claim}_{self.order}.irx"


def _field(tok: str, name: str, lineno: int) -> str:
    key, sep, val = tok.partition("=")
    if key != name or not sep:
        raise ParseError(f"expected {name}=..., got {tok!r}", lineno)
    return val


def _int(s: str, what: str, lineno: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {s!r}", lineno) from None


def parse_certificate(text: str) -> Certificate:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty certificate", 1)
    toks = lines[0].split()
    if len(toks) != 6 or toks[0] != MAGIC:
        raise ParseError(f"header must be '{MAGIC} kind= m= n= claim= order='", 1)
    kind = _field(toks[1], "kind", 1)
    m = _int(_field(toks[2], "m", 1), "m", 1)
    n = _int(_field(toks[3], "n", 1), "n", 1)
    claim = _field(toks[4], "claim", 1)
    order = _int(_field(toks[5], "order", 1), "order", 1)
    try:
        problem = Problem(kind, m, n)
    except ValueError as e:
        raise ParseError(str(e), 1) from None
    if claim not in CLAIMS:
        raise ParseError(f"claim must be one of {CLAIMS}", 1)
    if order < 0:
        raise ParseError("order must be nonnegative", 1)
    if claim == "witness":
        if len(lines) != 2:
            raise ParseError("witness certificate needs exactly one graph line", min(len(lines) + 1, 3))
        try:
            g = decode_graph(lines[1])
        except GraphError as e:
            raise ParseError(str(e), 2) from None
        return Certificate(problem, claim, order, witness=g)
    counts = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3 or parts[0] != "count":
            raise ParseError("expected 'count <k> <canonical-count>'", i)
        counts.append((_int(parts[1], "order", i), _int(parts[2], "count", i)))
    if not counts:
        raise ParseError("exhaustion certificate has no count lines", 2)
    return Certificate(problem, claim, order, counts=counts)


def read_certificate(path: str | Path) -> Certificate:
    return parse_certificate(Path(path).read_text(encoding="ascii"))


def certificate_failure(cert: Certificate, fast: bool = False) -> str | None:
    """Why ``cert`` does not verify, or None when it does.

    Witnesses are re-evaluated with the good-coloring predicate.
    Exhaustions are recounted by re-running the enumeration unless ``fast``,
    in which case only the structure of the count trace is checked.
    """
    if cert.claim == "witness":
        g = cert.witness
        if g is None:
            return "missing witness graph"
        if g.order != cert.order:
            return f"header order {cert.order} does not match graph order {g.order}"
        why = violation(cert.problem, g)
        return why
    counts = cert.counts
    if [k for k, _ in counts] != list(range(1, cert.order + 1)):
        return f"count lines must cover orders 1..{cert.order} in sequence"
    if any(c < 0 for _, c in counts):
        return "negative count"
    if counts[-1][1] != 0:
        return f"terminal count at order {cert.order} is nonzero"
    if any(c == 0 for _, c in counts[:-1]):
        return "zero count before the claimed order"
    if fast:
        return None
    recount = count_good(cert.problem, cert.order)
    for (k, c), r in zip(counts, recount):
        if c != r:
            return f"count at order {k} is {c}, enumeration gives {r}"
    return None


def verify_certificate(cert: Certificate, fast: bool = False) -> bool:
    return certificate_failure(cert, fast) is None


def stored_certificates() -> dict[str, Certificate]:
    """Certificates bundled with the package, keyed by file name."""
    from importlib.resources import files

    out = {}
    for entry in sorted(files("irramsey").joinpath("data").iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".irx"):
            out[entry.name] = parse_certificate(entry.read_text(encoding="ascii"))
    return out
