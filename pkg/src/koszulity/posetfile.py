"""Text formats: the poset file grammar and the facet-list grammar.

Poset files are line oriented.  Blank lines and lines starting with '#' are
skipped.  Sections:

    elements: a b c            (identifiers, whitespace separated)
    covers: a<b b<c            (may repeat; accumulates)
    equiv: trivial | semigroup | classes
    class: [a,b] [c,d]         (one merged class per line, classes mode)
    coords: a = 1,0,2          (one element per line, semigroup mode)
    ideal: [a,b] [a,c]         (monomial right ideal generators)

Identifiers may use letters, digits and ``_ . + -``; everything else would
collide with the grammar.  Unlisted intervals under "classes" are singleton
classes.  All parse errors carry (line, column).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .builders import named_fixture, fixture_names
from .complexes import SimplicialComplex, ComplexError
from .posets import Poset, PosetError
from .relations import trivial_relation, semigroup_relation, from_class_list

_ID = re.compile(r"[A-Za-z0-9_.+-]+\Z")
_INTERVAL = re.compile(r"\[([A-Za-z0-9_.+-]+),([A-Za-z0-9_.+-]+)\]\Z")


class ParseError(ValueError):
    def __init__(self, msg, line, col=1):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class PosetFileData:
    elements: list = dc_field(default_factory=list)
    covers: list = dc_field(default_factory=list)
    equiv: str = "trivial"
    class_groups: list = dc_field(default_factory=list)
    coords: dict = dc_field(default_factory=dict)
    ideal: list = dc_field(default_factory=list)


def _col_of(raw, token, fallback=1):
    at = raw.find(token)
    return at + 1 if at >= 0 else fallback


def _split_intervals(value, raw, ln):
    out = []
    for tok in value.split():
        m = _INTERVAL.match(tok)
        if not m:
            raise ParseError(f"bad interval {tok!r}, expected [a,b]",
                             ln, _col_of(raw, tok))
        out.append((m.group(1), m.group(2)))
    return out


def parse_posetfile(text):
    data = PosetFileData()
    seen_equiv = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ParseError("expected 'section: value'", ln, 1)
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if key == "elements":
            for tok in value.split():
                if not _ID.match(tok):
                    raise ParseError(f"bad identifier {tok!r}",
                                     ln, _col_of(raw, tok))
                data.elements.append(tok)
        elif key == "covers":
            for tok in value.split():
                lo, sep, hi = tok.partition("<")
                if not sep or not _ID.match(lo) or not _ID.match(hi):
                    raise ParseError(f"bad cover {tok!r}, expected a<b",
                                     ln, _col_of(raw, tok))
                data.covers.append((lo, hi))
        elif key == "equiv":
            if seen_equiv:
                raise ParseError("duplicate equiv section", ln)
            if value not in ("trivial", "semigroup", "classes"):
                raise ParseError(
                    f"equiv must be trivial, semigroup or classes, "
                    f"got {value!r}", ln, _col_of(raw, value))
            data.equiv = value
            seen_equiv = True
        elif key == "class":
            group = _split_intervals(value, raw, ln)
            if not group:
                raise ParseError("empty class line", ln)
            data.class_groups.append(group)
        elif key == "coords":
            name, sep, nums = value.partition("=")
            name = name.strip()
            if not sep or not _ID.match(name):
                raise ParseError("expected 'coords: element = c1,c2,...'", ln)
            if name in data.coords:
                raise ParseError(f"duplicate coords for {name!r}",
                                 ln, _col_of(raw, name))
            try:
                vec = tuple(int(c.strip()) for c in nums.split(","))
            except ValueError:
                raise ParseError(f"bad coordinate vector {nums.strip()!r}",
                                 ln, _col_of(raw, nums.strip())) from None
            data.coords[name] = vec
        elif key == "ideal":
            if data.ideal:
                raise ParseError("duplicate ideal section", ln)
            data.ideal = _split_intervals(value, raw, ln)
            if not data.ideal:
                raise ParseError("empty ideal section", ln)
        else:
            raise ParseError(f"unknown section {key!r}", ln, 1)
    if not data.elements:
        raise ParseError("no elements section", 1)
    if data.class_groups and data.equiv != "classes":
        raise ParseError("class lines require 'equiv: classes'", 1)
    if data.equiv == "classes" and not data.class_groups:
        raise ParseError("'equiv: classes' needs at least one class line", 1)
    return data


@dataclass
class BuiltInput:
    poset: Poset
    relation: object
    ideal_pairs: list


def build_input(data):
    """Poset + relation from parsed file data.  Axioms are not validated
    here; callers decide what a violation should do."""
    coords = data.coords or None
    poset = Poset.from_covers(data.elements, data.covers, coords)
    if data.equiv == "trivial":
        relation = trivial_relation(poset)
    elif data.equiv == "semigroup":
        missing = [e for e in data.elements if e not in data.coords]
        if missing:
            raise PosetError(
                f"semigroup equiv needs coords for every element; "
                f"missing {missing[0]!r}")
        relation = semigroup_relation(poset)
    else:
        relation = from_class_list(poset, data.class_groups)
    return BuiltInput(poset, relation, list(data.ideal))


def print_posetfile(poset, equiv="trivial", class_groups=(), ideal=()):
    """Canonical text for a poset (the round-trip inverse of the parser)."""
    lines = ["elements: " + " ".join(poset.elements)]
    if poset.covers:
        lines.append("covers: " + " ".join(f"{a}<{b}" for a, b in poset.covers))
    if equiv != "trivial":
        lines.append(f"equiv: {equiv}")
    if equiv == "semigroup":
        for e in poset.elements:
            vec = ",".join(str(c) for c in poset.coords[e])
            lines.append(f"coords: {e} = {vec}")
    if equiv == "classes":
        for group in class_groups:
            lines.append(
                "class: " + " ".join(f"[{a},{b}]" for a, b in group))
    if ideal:
        lines.append("ideal: " + " ".join(f"[{a},{b}]" for a, b in ideal))
    return "\n".join(lines) + "\n"


def fixture_text(name):
    name = name.upper()
    if name not in fixture_names():
        raise ParseError(
            f"unknown fixture {name!r}; known: {', '.join(fixture_names())}",
            1)
    return print_posetfile(named_fixture(name))


def parse_facets(text, universe=None):
    """Facet list: semicolon-separated faces, whitespace-separated vertices.

    The single tokens VOID and EMPTY denote the void complex and the
    empty-face complex.  Without an explicit universe the vertex set is the
    tokens seen, ordered numerically when all are integers, else textually.
    """
    stripped = text.strip()
    if stripped == "VOID":
        return SimplicialComplex.void_complex(
            tuple(universe) if universe else ())
    if stripped == "EMPTY":
        return SimplicialComplex.empty_face_complex(
            tuple(universe) if universe else ())
    faces = []
    for chunk in stripped.split(";"):
        toks = chunk.split()
        if not toks:
            raise ParseError("empty face in facet list", 1,
                             _col_of(text, ";"))
        faces.append(toks)
    if universe is not None:
        universe = tuple(universe)
        lookup = {str(u): u for u in universe}
        try:
            faces = [[lookup[t] for t in f] for f in faces]
        except KeyError as e:
            raise ParseError(f"vertex {e.args[0]!r} outside universe", 1,
                             _col_of(text, e.args[0])) from None
    else:
        seen = {t for f in faces for t in f}
        if all(t.isdigit() for t in seen):
            universe = tuple(sorted(seen, key=int))
        else:
            universe = tuple(sorted(seen))
    try:
        return SimplicialComplex.from_faces(universe, map(frozenset, faces))
    except ComplexError as e:
        raise ParseError(str(e), 1) from None


def facet_text(cx):
    """Inverse of parse_facets (canonical facet order)."""
    if cx.void:
        return "VOID"
    if cx.facets == (frozenset(),):
        return "EMPTY"
    return "; ".join(
        " ".join(str(v) for v in sorted(f, key=cx.vertex_key))
        for f in cx.facets)
