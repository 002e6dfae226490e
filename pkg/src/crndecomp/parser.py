"""Reader and writer for the plain-text ``.crn`` network format.

Grammar (one statement per line, ``#`` starts a comment)::

    species: A, B, C            # optional; fixes species order and vocabulary
    R1: A + 2B -> C             # irreversible
    R2: C <-> 0                 # reversible pair: R2 (forward) and R2_rev
    kinetics:                   # optional block, one row per directed reaction
    R1: 1 2 0                   # optional "id:" prefix must match the order
    0.5 0 0                     # decimals and a/b fractions are exact

``kinetics: mass-action`` instead of a block selects the transposed reactant
columns of the molecularity matrix.  A reversible statement needs two rows,
forward first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .linalg import RationalMatrix
from .model import Complex, Network, NetworkError, build_network

REVERSE_SUFFIX = "_rev"

_ID = r"[A-Za-z_][A-Za-z0-9_.\-]*"
_SPECIES = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TERM = re.compile(r"\s*(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)\s*\Z")
_STATEMENT = re.compile(rf"\s*(?:({_ID})\s*:)?\s*(.*?)\s*(<->|->)\s*(.*?)\s*\Z")
_LABEL = re.compile(rf"\s*({_ID})\s*:\s*(.*)\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class SourceDocument:
    species: tuple[str, ...] | None
    statements: tuple[tuple[int, str, str, str, bool], ...]  # (line, id, lhs, rhs, reversible)
    kinetics: tuple[tuple[int, str | None, tuple[str, ...]], ...] | None
    mass_action: bool = False


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def read_document(text: str) -> SourceDocument:
    species: tuple[str, ...] | None = None
    statements = []
    kinetics: list | None = None
    mass_action = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw.rstrip("\r"))
        if not line:
            continue
        head, _, rest = line.partition(":")
        key = head.strip().lower()
        if key == "species" and "->" not in line:
            if species is not None:
                raise ParseError("species header given twice", lineno)
            names = tuple(s for s in re.split(r"[,\s]+", rest.strip()) if s)
            for s in names:
                if not _SPECIES.match(s) or s == "0":
                    raise ParseError(f"invalid species name {s!r}", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate species in header", lineno)
            species = names
            continue
        if key == "kinetics" and "->" not in line:
            if kinetics is not None or mass_action:
                raise ParseError("kinetics given twice", lineno)
            directive = rest.strip().lower()
            if directive in ("mass-action", "mass_action", "massaction"):
                mass_action = True
            elif directive:
                raise ParseError(f"unknown kinetics directive {rest.strip()!r}", lineno)
            else:
                kinetics = []
            continue
        if kinetics is not None:
            m = _LABEL.match(line)
            label, values = (m.group(1), m.group(2)) if m else (None, line)
            kinetics.append((lineno, label, tuple(values.split())))
            continue
        m = _STATEMENT.match(line)
        if m is None:
            raise ParseError(f"cannot read statement {line!r}", lineno)
        rid, lhs, arrow, rhs = m.groups()
        if rid is None:
            rid = f"R{len(statements) + 1}"
        statements.append((lineno, rid, lhs, rhs, arrow == "<->"))
    return SourceDocument(species,
                          tuple(statements),
                          tuple(kinetics) if kinetics is not None else None,
                          mass_action)


def _parse_side(side: str, lineno: int) -> dict[str, int]:
    side = side.strip()
    if side == "0":
        return {}
    if not side:
        raise ParseError("empty side of a reaction (write 0 for the zero complex)", lineno)
    out: dict[str, int] = {}
    for term in side.split("+"):
        m = _TERM.match(term)
        if m is None:
            raise ParseError(f"malformed term {term.strip()!r}", lineno)
        coef = int(m.group(1)) if m.group(1) else 1
        if coef <= 0:
            raise ParseError(f"coefficient must be positive in {term.strip()!r}", lineno)
        out[m.group(2)] = out.get(m.group(2), 0) + coef
    return out


def _network_from(doc: SourceDocument) -> Network:
    if not doc.statements:
        raise ParseError("no reactions found")
    declared = doc.species
    order: list[str] = list(declared) if declared else []
    sides = []
    for lineno, rid, lhs, rhs, rev in doc.statements:
        a, b = _parse_side(lhs, lineno), _parse_side(rhs, lineno)
        for s in (*a, *b):
            if s not in order:
                if declared is not None:
                    raise ParseError(f"unknown species {s!r}", lineno)
                order.append(s)
        sides.append((lineno, rid, a, b, rev))
    pos = {s: i for i, s in enumerate(order)}

    directed: list[tuple[str, Complex, Complex]] = []
    seen_ids: set[str] = set()
    seen_edges: dict[tuple[Complex, Complex], int] = {}
    for lineno, rid, a, b, rev in sides:
        y = Complex.from_mapping({pos[s]: c for s, c in a.items()})
        yp = Complex.from_mapping({pos[s]: c for s, c in b.items()})
        if y == yp:
            raise ParseError(f"reaction {rid!r} is a loop", lineno)
        pairs = [(rid, y, yp)]
        if rev:
            pairs.append((rid + REVERSE_SUFFIX, yp, y))
        for pid, u, v in pairs:
            if pid in seen_ids:
                raise ParseError(f"duplicate reaction id {pid!r}", lineno)
            if (u, v) in seen_edges:
                raise ParseError(
                    f"reaction {pid!r} repeats the reaction on line {seen_edges[(u, v)]}", lineno)
            seen_ids.add(pid)
            seen_edges[(u, v)] = lineno
            directed.append((pid, u, v))
    try:
        return build_network(order, directed)
    except NetworkError as exc:  # pragma: no cover - guarded above
        raise ParseError(str(exc)) from exc


def parse_network(text: str) -> Network:
    return _network_from(read_document(text))


def parse_kinetic_system(text: str):
    """Network plus kinetic order matrix; requires a kinetics block or directive."""
    from .kinetics import KineticSystem, mass_action

    doc = read_document(text)
    net = _network_from(doc)
    if doc.mass_action:
        return mass_action(net)
    if doc.kinetics is None:
        raise ParseError("no kinetics block")
    if len(doc.kinetics) != net.r:
        raise ParseError(
            f"kinetics block has {len(doc.kinetics)} rows, expected {net.r} (one per directed reaction)")
    rows = []
    for j, (lineno, label, values) in enumerate(doc.kinetics):
        if label is not None and label != net.reactions[j].id:
            raise ParseError(
                f"kinetic row labelled {label!r} but reaction {j + 1} is {net.reactions[j].id!r}",
                lineno)
        if len(values) != net.m:
            raise ParseError(f"kinetic row has {len(values)} entries, expected {net.m}", lineno)
        try:
            rows.append([Fraction(v) for v in values])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"unparsable kinetic order in {' '.join(values)!r}", lineno) from None
    return KineticSystem(net, RationalMatrix.from_rows(rows, cols=net.m))


def has_kinetics(text: str) -> bool:
    doc = read_document(text)
    return doc.mass_action or doc.kinetics is not None


def _format_number(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d == 1:
        # terminating decimal: print exactly
        s = f"{x.numerator / x.denominator!r}"
        if Fraction(s) == x:
            return s
    return str(x)


def format_network(net: Network, kinetics: RationalMatrix | None = None) -> str:
    """Canonical text: species header, statements, optional kinetics rows.

    A reversible pair ``X`` / ``X_rev`` stored adjacently prints as one ``<->``
    statement; any other pairing prints as two ``->`` statements, which parse
    back to the same linked pair.
    """
    lines = ["species: " + ", ".join(net.species)]
    j = 0
    while j < net.r:
        rx = net.reactions[j]
        lhs = net.reactant(j).format(net.species)
        rhs = net.product(j).format(net.species)
        if (rx.reverse_of == j + 1
                and net.reactions[j + 1].id == rx.id + REVERSE_SUFFIX):
            lines.append(f"{rx.id}: {lhs} <-> {rhs}")
            j += 2
        else:
            lines.append(f"{rx.id}: {lhs} -> {rhs}")
            j += 1
    if kinetics is not None:
        lines.append("kinetics:")
        for j in range(net.r):
            vals = " ".join(_format_number(x) for x in kinetics.row(j))
            lines.append(f"{net.reactions[j].id}: {vals}")
    return "\n".join(lines) + "\n"
