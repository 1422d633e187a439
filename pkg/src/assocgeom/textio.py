"""Plain-text formats for subspaces, quintuples, relations, algebras and pairs.

Subspace block::

    field p=2
    ambient 3
    1 0 1
    0 1 0

Quintuple files hold labelled blocks (``[x]``, ``[a]``, ...).  Lines starting
with ``#`` are comments everywhere.  Parse failures raise :class:`ParseError`
carrying the 1-based line number.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .grassmannian import AmbientMismatch, Subspace
from .linalg import Field
from .pairs import Algebra, AssocPair
from .relations import LinearRelation

QUINTUPLE_LABELS = ("x", "a", "y", "b", "z")
_SECTION = re.compile(r"^\[(\w+)\]$")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _scalar(field: Field, token: str, no: int):
    try:
        if field.p is not None and "/" not in token:
            return field(int(token))
        return field(Fraction(token))
    except (ValueError, ZeroDivisionError):
        raise ParseError(no, f"bad scalar {token!r}") from None


def _field(text: str, no: int) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise ParseError(no, str(exc)) from None


def _keyvals(tokens: Sequence[str], no: int) -> dict:
    out = {}
    for t in tokens:
        if "=" not in t:
            raise ParseError(no, f"expected key=value, got {t!r}")
        k, v = t.split("=", 1)
        out[k] = v
    return out


# -- subspaces ------------------------------------------------------------------


def _parse_block(lines: list[tuple[int, str]], end_line: int) -> Subspace:
    if not lines:
        raise ParseError(end_line, "empty subspace block")
    no, head = lines[0]
    if not head.startswith("field "):
        raise ParseError(no, "expected 'field p=<prime>' or 'field q'")
    field = _field(head[6:], no)
    if len(lines) < 2:
        raise ParseError(no, "missing 'ambient <n>' line")
    no, amb = lines[1]
    parts = amb.split()
    if len(parts) != 2 or parts[0] != "ambient" or not parts[1].isdigit():
        raise ParseError(no, "expected 'ambient <n>'")
    n = int(parts[1])
    rows = []
    for no, line in lines[2:]:
        row = [_scalar(field, t, no) for t in line.split()]
        if len(row) != n:
            raise ParseError(no, f"row has {len(row)} entries, ambient is {n}")
        rows.append(row)
    return Subspace.span(field, n, rows)


def parse_subspace(text: str) -> Subspace:
    lines = _lines(text)
    return _parse_block(lines, len(text.splitlines()) + 1)


def format_subspace(s: Subspace) -> str:
    out = [f"field {s.field.spec()}", f"ambient {s.n}"]
    out.extend(" ".join(s.field.format(v) for v in row) for row in s.basis)
    return "\n".join(out) + "\n"


# -- labelled sections ----------------------------------------------------------


def _split_sections(text: str) -> list[tuple[str, int, list[tuple[int, str]]]]:
    sections: list = []
    for no, line in _lines(text):
        m = _SECTION.match(line)
        if m:
            sections.append((m.group(1), no, []))
        elif not sections:
            raise ParseError(no, "content before the first [section]")
        else:
            sections[-1][2].append((no, line))
    return sections


def parse_sections(text: str) -> dict[str, Subspace]:
    out = {}
    for name, no, body in _split_sections(text):
        if name in out:
            raise ParseError(no, f"duplicate section [{name}]")
        out[name] = _parse_block(body, no + 1)
    return out


def parse_quintuple(text: str) -> tuple[Subspace, ...]:
    sections = parse_sections(text)
    missing = [k for k in QUINTUPLE_LABELS if k not in sections]
    if missing:
        raise ParseError(len(text.splitlines()) + 1, f"missing section(s) {', '.join(missing)}")
    spaces = tuple(sections[k] for k in QUINTUPLE_LABELS)
    if len({(s.field, s.n) for s in spaces}) != 1:
        raise AmbientMismatch("quintuple blocks live in different spaces")
    return spaces


def format_sections(named: Iterable[tuple[str, Subspace]], comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    for name, s in named:
        out.append(f"[{name}]")
        out.append(format_subspace(s).rstrip("\n"))
    return "\n".join(out) + "\n"


def format_quintuple(spaces: Sequence[Subspace], comment: str | None = None) -> str:
    return format_sections(zip(QUINTUPLE_LABELS, spaces), comment)


# -- relations ------------------------------------------------------------------


def parse_relation(text: str) -> LinearRelation:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty relation file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "relation" or not (parts[1].isdigit() and parts[2].isdigit()):
        raise ParseError(no, "expected 'relation <n> <m>'")
    graph = _parse_block(lines[1:], no + 1)
    try:
        return LinearRelation(int(parts[1]), int(parts[2]), graph)
    except ValueError as exc:
        raise ParseError(no, str(exc)) from None


def format_relation(r: LinearRelation) -> str:
    return f"relation {r.src} {r.dst}\n" + format_subspace(r.graph)


# -- structure constants ----------------------------------------------------------


def _nest(flat: list, shape: Sequence[int]):
    if len(shape) == 1:
        return tuple(flat)
    step = len(flat) // shape[0]
    return tuple(_nest(flat[i * step : (i + 1) * step], shape[1:]) for i in range(shape[0]))


def _flat(nested) -> list:
    if isinstance(nested, tuple):
        return [v for part in nested for v in _flat(part)]
    return [nested]


def _read_constants(field: Field, lines, count: int, end_line: int) -> list:
    vals = [_scalar(field, t, no) for no, line in lines for t in line.split()]
    if len(vals) != count:
        where = lines[-1][0] if lines else end_line
        raise ParseError(where, f"expected {count} constants, got {len(vals)}")
    return vals


def parse_algebra(text: str) -> Algebra:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty algebra file")
    no, head = lines[0]
    parts = head.split()
    if not parts or parts[0] != "algebra":
        raise ParseError(no, "expected 'algebra dim=<d> field p=<p>'")
    kv = _keyvals([t for t in parts[1:] if t not in ("field", "q")], no)
    if "dim" not in kv or not kv["dim"].isdigit():
        raise ParseError(no, "missing dim=<d>")
    d = int(kv["dim"])
    field = _field("q" if "q" in parts[1:] else f"p={kv.get('p', '')}", no)
    vals = _read_constants(field, lines[1:], d**3, no + 1)
    return Algebra(field, d, _nest(vals, (d, d, d)))


def format_algebra(alg: Algebra) -> str:
    f = alg.field
    out = [f"algebra dim={alg.dim} field {f.spec()}"]
    for i, j in itertools.product(range(alg.dim), repeat=2):
        out.append(" ".join(f.format(v) for v in alg.consts[i][j]))
    return "\n".join(out) + "\n"


def parse_pair(text: str) -> AssocPair:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty pair file")
    no, head = lines[0]
    parts = head.split()
    if not parts or parts[0] != "pair":
        raise ParseError(no, "expected 'pair plus=<d> minus=<e> field p=<p>'")
    kv = _keyvals([t for t in parts[1:] if t not in ("field", "q")], no)
    try:
        dp, dm = int(kv["plus"]), int(kv["minus"])
    except (KeyError, ValueError):
        raise ParseError(no, "missing plus=<d> or minus=<e>") from None
    field = _field("q" if "q" in parts[1:] else f"p={kv.get('p', '')}", no)
    blocks: dict = {}
    current = None
    for lno, line in lines[1:]:
        m = _SECTION.match(line)
        if m:
            current = m.group(1)
            if current not in ("plus", "minus") or current in blocks:
                raise ParseError(lno, f"unexpected section [{current}]")
            blocks[current] = (lno, [])
        elif current is None:
            raise ParseError(lno, "constants before [plus]")
        else:
            blocks[current][1].append((lno, line))
    for name in ("plus", "minus"):
        if name not in blocks:
            raise ParseError(lines[-1][0], f"missing [{name}] block")
    sp, sm = (dp, dm, dp, dp), (dm, dp, dm, dm)
    plus = _read_constants(field, blocks["plus"][1], dp * dm * dp * dp, blocks["plus"][0])
    minus = _read_constants(field, blocks["minus"][1], dm * dp * dm * dm, blocks["minus"][0])
    return AssocPair(field, dp, dm, _nest(plus, sp), _nest(minus, sm))


def format_pair(pair: AssocPair) -> str:
    f = pair.field
    out = [f"pair plus={pair.dplus} minus={pair.dminus} field {f.spec()}"]
    for name, consts in (("plus", pair.plus), ("minus", pair.minus)):
        out.append(f"[{name}]")
        for block in consts:
            for row in block:
                out.append(" ".join(f.format(v) for v in _flat(row)))
    return "\n".join(out) + "\n"


__all__ = [
    "ParseError",
    "QUINTUPLE_LABELS",
    "format_algebra",
    "format_pair",
    "format_quintuple",
    "format_relation",
    "format_sections",
    "format_subspace",
    "parse_algebra",
    "parse_pair",
    "parse_quintuple",
    "parse_relation",
    "parse_sections",
    "parse_subspace",
]
