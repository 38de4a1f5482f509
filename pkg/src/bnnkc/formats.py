"""Parsing and canonical serialization for the toolkit's text formats.

All formats are line oriented and accept ``#`` comment lines (the CNF format
additionally accepts DIMACS ``c`` comments).  Parsing enforces every
structural invariant of the target type and reports positions as 1-based
(line, column); serialization is canonical: sorted content, LF endings, no
trailing whitespace, so equal values produce byte-identical text.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compilers import Bdd, BddNode, T0, T1, Terminal
from .core import BnnRep, BoolVec, FunctionTable
from .errors import InvariantViolation, ParseError
from .families import Cnf3, Graph
from .queries import Clause, Term

KINDS = ("bnn", "mods", "bdd", "graph", "cnf", "term", "clause")

_PAYLOAD_TYPES = {
    "bnn": BnnRep,
    "mods": FunctionTable,
    "bdd": Bdd,
    "graph": Graph,
    "cnf": Cnf3,
    "term": Term,
    "clause": Clause,
}


@dataclass(frozen=True)
class Document:
    """A parsed value tagged with its format kind."""

    kind: str
    payload: object

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvariantViolation(f"unknown document kind {self.kind!r}")
        expected = _PAYLOAD_TYPES[self.kind]
        if not isinstance(self.payload, expected):
            raise InvariantViolation(
                f"{self.kind} document needs a {expected.__name__} payload, "
                f"got {type(self.payload).__name__}"
            )


def _lines(text: str, *, dimacs: bool = False):
    """Yield (line_no, tokens, raw) for content lines, skipping comments."""
    for ln, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if dimacs and tokens[0] == "c":
            continue
        yield ln, tokens, raw


def _col(raw: str, token: str) -> int:
    found = raw.find(token)
    return found + 1 if found >= 0 else 1


def _int(token: str, ln: int, raw: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(ln, _col(raw, token), f"expected {what}, got {token!r}") from None


def _vector(token: str, n: int, ln: int, raw: str) -> BoolVec:
    if len(token) != n or any(c not in "01" for c in token):
        raise ParseError(ln, _col(raw, token), f"expected a bitstring of {n} characters over 0/1, got {token!r}")
    return BoolVec(n, int(token, 2))


def _header(lines, keyword: str, argc: int):
    for ln, tokens, raw in lines:
        if tokens[0] != keyword or len(tokens) != 1 + argc:
            raise ParseError(ln, 1, f"expected header '{keyword}" + " <int>" * argc + "'")
        return ln, tokens, raw
    raise ParseError(1, 1, f"empty document: expected '{keyword}' header")


def _parse_bnn(text: str) -> BnnRep:
    lines = _lines(text)
    ln, tokens, raw = _header(lines, "bnn", 1)
    n = _int(tokens[1], ln, raw, "a dimension")
    pos: list[BoolVec] = []
    neg: list[BoolVec] = []
    for ln, tokens, raw in lines:
        if tokens[0] not in ("+", "-") or len(tokens) != 2:
            raise ParseError(ln, 1, "expected '+ <bits>' or '- <bits>'")
        vec = _vector(tokens[1], n, ln, raw)
        (pos if tokens[0] == "+" else neg).append(vec)
    return BnnRep(n, pos, neg)


def _parse_mods(text: str) -> FunctionTable:
    lines = _lines(text)
    ln, tokens, raw = _header(lines, "mods", 1)
    n = _int(tokens[1], ln, raw, "a dimension")
    models = []
    for ln, tokens, raw in lines:
        if len(tokens) != 1:
            raise ParseError(ln, 1, "expected one bitstring per line")
        models.append(_vector(tokens[0], n, ln, raw))
    return FunctionTable(n, frozenset(models))


def _child(token: str, ln: int, raw: str) -> int | Terminal:
    if token == "T0":
        return T0
    if token == "T1":
        return T1
    return _int(token, ln, raw, "a node id or T0/T1")


def _parse_bdd(text: str) -> Bdd:
    lines = _lines(text)
    ln, tokens, raw = _header(lines, "bdd", 3)
    n = _int(tokens[1], ln, raw, "a dimension")
    count = _int(tokens[2], ln, raw, "a node count")
    root = _child(tokens[3], ln, raw)
    table: dict[int, BddNode] = {}
    for ln, tokens, raw in lines:
        if len(tokens) != 4:
            raise ParseError(ln, 1, "expected node line '<id> <var> <lo> <hi>'")
        node_id = _int(tokens[0], ln, raw, "a node id")
        if not 0 <= node_id < count:
            raise ParseError(ln, _col(raw, tokens[0]), f"node id {node_id} outside 0..{count - 1}")
        if node_id in table:
            raise ParseError(ln, _col(raw, tokens[0]), f"duplicate node id {node_id}")
        var = _int(tokens[1], ln, raw, "a variable index")
        lo = _child(tokens[2], ln, raw)
        hi = _child(tokens[3], ln, raw)
        table[node_id] = BddNode(var, lo, hi)
    if len(table) != count:
        missing = sorted(set(range(count)) - set(table))
        raise ParseError(ln if table else 1, 1, f"missing node id(s) {missing}")
    return Bdd(n, tuple(table[i] for i in range(count)), root)


def _parse_graph(text: str) -> Graph:
    lines = _lines(text)
    ln, tokens, raw = _header(lines, "graph", 1)
    n = _int(tokens[1], ln, raw, "a vertex count")
    edges = set()
    for ln, tokens, raw in lines:
        if len(tokens) != 2:
            raise ParseError(ln, 1, "expected edge line '<u> <v>'")
        u = _int(tokens[0], ln, raw, "a vertex")
        v = _int(tokens[1], ln, raw, "a vertex")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def _parse_cnf(text: str) -> Cnf3:
    num_vars = declared = None
    clauses: list[tuple[int, ...]] = []
    for ln, tokens, raw in _lines(text, dimacs=True):
        if num_vars is None:
            if tokens[:2] != ["p", "cnf"] or len(tokens) != 4:
                raise ParseError(ln, 1, "expected header 'p cnf <vars> <clauses>'")
            num_vars = _int(tokens[2], ln, raw, "a variable count")
            declared = _int(tokens[3], ln, raw, "a clause count")
            continue
        lits = [_int(t, ln, raw, "a literal") for t in tokens]
        if lits and lits[-1] == 0:
            lits.pop()
        if 0 in lits:
            raise ParseError(ln, _col(raw, "0"), "literal 0 only terminates a clause")
        if not lits:
            raise ParseError(ln, 1, "empty clause")
        clauses.append(tuple(lits))
    if num_vars is None:
        raise ParseError(1, 1, "empty document: expected 'p cnf' header")
    if declared != len(clauses):
        raise ParseError(1, 1, f"header declares {declared} clause(s), found {len(clauses)}")
    return Cnf3(num_vars, tuple(clauses))


def _parse_literals(text: str) -> tuple[int, ...]:
    lits: list[int] = []
    for ln, tokens, raw in _lines(text):
        for t in tokens:
            lits.append(_int(t, ln, raw, "a signed literal"))
    if lits and lits[-1] == 0:
        lits.pop()
    if 0 in lits:
        raise ParseError(1, 1, "literal 0 only terminates the list")
    return tuple(lits)


def _parse_term(text: str) -> Term:
    return Term(frozenset(_parse_literals(text)))


def _parse_clause(text: str) -> Clause:
    return Clause(frozenset(_parse_literals(text)))


_PARSERS = {
    "bnn": _parse_bnn,
    "mods": _parse_mods,
    "bdd": _parse_bdd,
    "graph": _parse_graph,
    "cnf": _parse_cnf,
    "term": _parse_term,
    "clause": _parse_clause,
}


def parse(kind: str, text: str) -> Document:
    """Parse ``text`` as the given kind into a validated domain value."""
    if kind not in KINDS:
        raise InvariantViolation(f"unknown document kind {kind!r}")
    return Document(kind, _PARSERS[kind](text))


def detect_kind(text: str) -> str:
    """Guess the kind of a document from its header keyword."""
    for _, tokens, _ in _lines(text, dimacs=True):
        head = tokens[0]
        if head in ("bnn", "mods", "bdd", "graph"):
            return head
        if head == "p":
            return "cnf"
        break
    raise ParseError(1, 1, "unrecognized document header")


def _serialize_bnn(rep: BnnRep) -> str:
    lines = [f"bnn {rep.n}"]
    lines += [f"+ {v}" for v in rep.pos]
    lines += [f"- {v}" for v in rep.neg]
    return "\n".join(lines) + "\n"


def _serialize_mods(table: FunctionTable) -> str:
    lines = [f"mods {table.n}"] + [str(v) for v in table.sorted_models]
    return "\n".join(lines) + "\n"


def _child_token(child: int | Terminal) -> str:
    return repr(child) if isinstance(child, Terminal) else str(child)


def _serialize_bdd(b: Bdd) -> str:
    lines = [f"bdd {b.n} {len(b.nodes)} {_child_token(b.root)}"]
    for i, node in enumerate(b.nodes):
        lines.append(f"{i} {node.var} {_child_token(node.lo)} {_child_token(node.hi)}")
    return "\n".join(lines) + "\n"


def _serialize_graph(g: Graph) -> str:
    lines = [f"graph {g.vertices}"] + [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def _serialize_cnf(phi: Cnf3) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines += [" ".join(str(l) for l in clause) + " 0" for clause in phi.clauses]
    return "\n".join(lines) + "\n"


def _serialize_literals(lits: tuple[int, ...]) -> str:
    return " ".join(str(l) for l in lits) + "\n"


_SERIALIZERS = {
    "bnn": _serialize_bnn,
    "mods": _serialize_mods,
    "bdd": _serialize_bdd,
    "graph": _serialize_graph,
    "cnf": _serialize_cnf,
    "term": lambda t: _serialize_literals(t.sorted_literals),
    "clause": lambda c: _serialize_literals(c.sorted_literals),
}


def serialize(doc: Document) -> str:
    """Canonical text form of a document; ``parse`` inverts it exactly."""
    return _SERIALIZERS[doc.kind](doc.payload)
