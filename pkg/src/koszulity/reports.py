"""Command implementations: each returns (exit_code, lines).

Exit codes: 0 = ran (verdicts are printed, not encoded); 1 = internal
consistency failure (backend mismatch, cross-check disagreement); 2 = parse
or file-content error; 3 = axiom violation blocking an algebraic command;
4 = precondition violation.

Human mode renders rows as "KEY: field field ..."; TSV mode joins the same
fields with tabs.
"""

from __future__ import annotations

from .complexes import ComplexError
from .engine import (PreconditionError, augmentation_ideal,
                     ideal_from_generators, is_koszul_ideal, is_koszul_ring,
                     is_quadratic, tor_bar_oracle, tor_topological)
from .homology import is_seq_cm
from .linalg import Field
from .numerology import (hilbert_matrix, poincare_matrix, poly_str,
                         verify_koszul_identity)
from .posetfile import (ParseError, build_input, fixture_text,
                        parse_facets, parse_posetfile)
from .posets import PosetError
from .relations import InternalCheckError, RelationError, validate_axioms
from .sr import ehhrw_crosscheck

OK, MISMATCH, PARSE, AXIOM, PRECONDITION = 0, 1, 2, 3, 4


class ReportError(Exception):
    """Carries an exit code and report rows."""

    def __init__(self, code, rows):
        super().__init__(str(rows))
        self.code = code
        self.rows = rows


def _render(rows, tsv):
    out = []
    for row in rows:
        fields = [str(f) for f in row]
        if tsv:
            out.append("\t".join(fields))
        else:
            out.append(fields[0] + ": " + " ".join(fields[1:])
                       if len(fields) > 1 else fields[0] + ":")
    return out


def _fmt_face(face):
    return "{" + ",".join(str(v) for v in sorted(face, key=str)) + "}"


def _pc_name(relation, pc):
    return str(relation.poset.elements[relation.classes[pc].rep[0]])


def _load(text):
    try:
        return build_input(parse_posetfile(text))
    except ParseError as e:
        raise ReportError(PARSE, [("ERROR", "parse", str(e))]) from None
    except (PosetError, RelationError) as e:
        raise ReportError(PARSE, [("ERROR", "input", str(e))]) from None


def _validated(built):
    reports = validate_axioms(built.relation)
    failed = [r for r in reports if r.verdict == "fail"]
    if failed:
        rows = [("AXIOM-" + r.axiom, r.verdict.upper()) for r in reports]
        rows += [("ERROR", "axiom", failed[0].axiom, "violation blocks",
                  "this command")]
        raise ReportError(AXIOM, rows)
    return built.relation


def _field(spec):
    try:
        return Field.parse(spec)
    except ValueError as e:
        raise ReportError(PARSE, [("ERROR", "field", str(e))]) from None


def _built_ideal(built, relation):
    if not built.ideal_pairs:
        raise ReportError(
            PRECONDITION, [("ERROR", "precondition",
                            "the file has no ideal section")])
    try:
        gens = [relation.cid_of(a, b) for a, b in built.ideal_pairs]
        return ideal_from_generators(relation, gens)
    except (PosetError, RelationError) as e:
        raise ReportError(PARSE, [("ERROR", "input", str(e))]) from None
    except PreconditionError as e:
        raise ReportError(PRECONDITION,
                          [("ERROR", "precondition", str(e))]) from None


# -- commands ---------------------------------------------------------------


def run_check(text, tsv=False):
    try:
        data = parse_posetfile(text)
    except ParseError as e:
        return PARSE, _render([("ERROR", "parse", str(e))], tsv)
    try:
        built = build_input(data)
    except (PosetError, RelationError) as e:
        return OK, _render([("VERDICT", "INVALID"),
                            ("ERROR", "input", str(e))], tsv)
    poset = built.poset
    rows = [("ELEMENTS", len(poset)),
            ("COVERS", len(poset.covers)),
            ("CLASSES", len(built.relation.classes)),
            ("VERDICT", "VALID")]
    graded, witness = poset.is_graded()
    rows.append(("GRADED", "TRUE" if graded else "FALSE"))
    if not graded:
        rows.append(("GRADED-WITNESS", f"[{witness[0]},{witness[1]}]"))
    return OK, _render(rows, tsv)


def run_axioms(text, tsv=False):
    try:
        built = _load(text)
    except ReportError as e:
        return e.code, _render(e.rows, tsv)
    reports = validate_axioms(built.relation)
    rows = []
    ok = True
    for r in reports:
        rows.append((r.axiom, r.verdict.upper()))
        if r.witness:
            rows.append((r.axiom + "-WITNESS", *r.witness))
        if r.note:
            rows.append((r.axiom + "-NOTE", r.note))
        ok = ok and r.verdict == "pass"
    rows.append(("AXIOMS", "PASS" if ok else "FAIL"))
    return OK, _render(rows, tsv)


def run_koszul(text, field_spec="q", ideal_flag=False, tsv=False):
    try:
        built = _load(text)
        field = _field(field_spec)
        relation = _validated(built)
        rows = [("FIELD", repr(field)),
                ("MODULE", "ideal" if ideal_flag else "ring")]
        if ideal_flag:
            ideal = _built_ideal(built, relation)
            rows.append(("IDEAL-CLASSES", len(ideal.cids)))
            report = is_koszul_ideal(ideal, field)
        else:
            report = is_koszul_ring(relation, field)
    except ReportError as e:
        return e.code, _render(e.rows, tsv)
    except InternalCheckError as e:
        return MISMATCH, _render([("INTERNAL-ERROR", str(e))], tsv)
    rows.append(("VERDICT", "KOSZUL" if report.verdict else "NOT-KOSZUL"))
    if report.witness is not None:
        name, detail = report.witness
        if len(detail) == 3:
            face, i, j = detail
            rows.append(("WITNESS", name, f"face={_fmt_face(face)}",
                         f"i={i}", f"j={j}"))
        else:
            i, j = detail
            rows.append(("WITNESS", name, f"i={i}", f"j={j}"))
    return OK, _render(rows, tsv)


def _tor_rows(relation, table, label):
    rows = []
    for (s, t, i, j), dim in table.sorted_items():
        rows.append((label, _pc_name(relation, s), _pc_name(relation, t),
                     f"i={i}", f"j={j}", f"dim={dim}"))
    return rows


def _diagnostic_rows(relation, table):
    return [("DIAGNOSTIC", "action-grading-disagreement",
             relation.class_name(a), relation.class_name(b),
             relation.class_name(c))
            for a, b, c in table.diagnostics]


def run_tor(text, field_spec="q", module="ring", backend="topo", tsv=False):
    if module not in ("ring", "ideal"):
        return PARSE, _render(
            [("ERROR", "flag", f"unknown module {module!r}")], tsv)
    if backend not in ("topo", "bar", "both"):
        return PARSE, _render(
            [("ERROR", "flag", f"unknown backend {backend!r}")], tsv)
    try:
        built = _load(text)
        field = _field(field_spec)
        relation = _validated(built)
        ideal = None
        if module == "ideal":
            ideal = _built_ideal(built, relation)
        rows = [("FIELD", repr(field)), ("MODULE", module),
                ("BACKEND", backend)]
        tables = {}
        if backend in ("topo", "both"):
            tables["topo"] = tor_topological(relation, field, module, ideal)
        if backend in ("bar", "both"):
            tables["bar"] = tor_bar_oracle(relation, field, module, ideal)
    except ReportError as e:
        return e.code, _render(e.rows, tsv)
    except PreconditionError as e:
        return PRECONDITION, _render(
            [("ERROR", "precondition", str(e))], tsv)
    code = OK
    if backend == "both":
        topo, bar = tables["topo"], tables["bar"]
        if topo.entries == bar.entries:
            rows.append(("BACKENDS", "AGREE"))
            rows.extend(_tor_rows(relation, topo, "TOR"))
        else:
            code = MISMATCH
            rows.append(("BACKENDS", "MISMATCH"))
            keys = sorted(set(topo.entries) | set(bar.entries))
            for k in keys:
                a, b = topo.entries.get(k, 0), bar.entries.get(k, 0)
                if a != b:
                    s, t, i, j = k
                    rows.append(("MISMATCH", _pc_name(relation, s),
                                 _pc_name(relation, t), f"i={i}", f"j={j}",
                                 f"topo={a}", f"bar={b}"))
        rows.extend(_diagnostic_rows(relation, bar))
    else:
        table = tables[backend]
        rows.extend(_tor_rows(relation, table, "TOR"))
        rows.extend(_diagnostic_rows(relation, table))
    return code, _render(rows, tsv)


def run_matrices(text, field_spec="q", tsv=False):
    try:
        built = _load(text)
        field = _field(field_spec)
        relation = _validated(built)
        P = hilbert_matrix(relation)
        Q = poincare_matrix(relation, field)
        koszul = is_koszul_ring(relation, field)
        holds, residual = verify_koszul_identity(relation, field)
    except ReportError as e:
        return e.code, _render(e.rows, tsv)
    except InternalCheckError as e:
        return MISMATCH, _render([("INTERNAL-ERROR", str(e))], tsv)
    rows = [("FIELD", repr(field)),
            ("POINT-CLASSES", " ".join(P.labels))]
    if tsv:
        for name, M in (("P", P), ("Q", Q)):
            for i in range(M.size):
                for j in range(M.size):
                    coeffs = ",".join(str(c) for c in M.entries[i][j]) or "0"
                    rows.append((name, M.labels[i], M.labels[j], coeffs))
    else:
        for name, M in (("P", P), ("Q", Q)):
            for i in range(M.size):
                rows.append((f"{name}[{M.labels[i]}]",
                             *(M.entry_str(i, j) for j in range(M.size))))
    rows.append(("KOSZUL", "TRUE" if koszul.verdict else "FALSE"))
    rows.append(("IDENTITY", "PASS" if holds else "FAIL"))
    if not holds:
        for i in range(residual.size):
            rows.append((f"RESIDUAL[{residual.labels[i]}]",
                         *(poly_str(residual.entries[i][j])
                           for j in range(residual.size))))
        if koszul.verdict:
            return MISMATCH, _render(
                rows + [("INTERNAL-ERROR",
                         "identity fails on a Koszul ring")], tsv)
    return OK, _render(rows, tsv)


def run_quadratic(text, tsv=False):
    try:
        built = _load(text)
        relation = _validated(built)
        report = is_quadratic(relation)
    except ReportError as e:
        return e.code, _render(e.rows, tsv)
    except InternalCheckError as e:
        return MISMATCH, _render([("INTERNAL-ERROR", str(e))], tsv)
    rows = [("VERDICT",
             "QUADRATIC" if report.verdict else "NOT-QUADRATIC")]
    if report.witness is not None:
        rows.append(("WITNESS", report.witness))
    for (s, t, j), dim in sorted(report.tor2_mass.items()):
        rows.append(("TOR2-MASS", _pc_name(relation, s),
                     _pc_name(relation, t), f"j={j}", f"dim={dim}"))
    return OK, _render(rows, tsv)


def run_seqcm(facets=None, file_text=None, field_spec="q", tsv=False):
    try:
        field = _field(field_spec)
        if (facets is None) == (file_text is None):
            raise ReportError(PARSE, [
                ("ERROR", "flag",
                 "exactly one of --facets and FILE is required")])
        if facets is not None:
            try:
                cx = parse_facets(facets)
            except ParseError as e:
                raise ReportError(PARSE,
                                  [("ERROR", "parse", str(e))]) from None
        else:
            built = _load(file_text)
            cx = built.poset.order_complex()
    except ReportError as e:
        return e.code, _render(e.rows, tsv)
    rows = [("FIELD", repr(field))]
    if cx.void:
        rows.append(("COMPLEX", "VOID"))
    else:
        rows.append(("DIM", cx.dim))
        rows.append(("FACETS", len(cx.facets)))
    ok, witness = is_seq_cm(cx, field)
    rows.append(("VERDICT", "SEQCM" if ok else "NOT-SEQCM"))
    if witness is not None:
        face, i, j = witness
        rows.append(("WITNESS", f"face={_fmt_face(face)}", f"i={i}",
                     f"j={j}"))
    return OK, _render(rows, tsv)


def run_sr(facets, vertices, field_spec="q", dual=False, tsv=False):
    try:
        field = _field(field_spec)
        try:
            n = int(vertices)
        except (TypeError, ValueError):
            raise ReportError(PARSE, [
                ("ERROR", "flag", "--vertices must be an integer")])
        if n < 1:
            raise ReportError(PARSE, [
                ("ERROR", "flag", "--vertices must be positive")])
        try:
            cx = parse_facets(facets, universe=range(1, n + 1))
        except ParseError as e:
            raise ReportError(PARSE, [("ERROR", "parse", str(e))]) from None
        # default: the given facets describe the Alexander dual
        primal = cx if dual else cx.alexander_dual()
        try:
            report = ehhrw_crosscheck(primal, field, n)
        except PreconditionError as e:
            raise ReportError(PRECONDITION,
                              [("ERROR", "precondition", str(e))]) from None
    except ReportError as e:
        return e.code, _render(e.rows, tsv)
    except ComplexError as e:
        return PARSE, _render([("ERROR", "input", str(e))], tsv)
    rows = [("FIELD", repr(field)),
            ("GENERATORS", *report.generators),
            ("DUAL-FACETS", "; ".join(report.dual_facets)),
            ("VERDICT", "COMPONENTWISE-LINEAR" if report.componentwise_linear
             else "NOT-COMPONENTWISE-LINEAR")]
    if report.cwl_witness is not None:
        monomial, (i, j) = report.cwl_witness
        rows.append(("WITNESS", monomial, f"i={i}", f"j={j}"))
    rows.append(("SEQCM", "TRUE" if report.dual_seq_cm else "FALSE"))
    rows.append(("PURE", "TRUE" if report.dual_pure else "FALSE"))
    if report.dual_cm is not None:
        rows.append(("CM", "TRUE" if report.dual_cm else "FALSE"))
    rows.append(("AGREEMENT", "PASS" if report.agreement else "FAIL"))
    rows.append(("NOTE", report.note))
    if not report.agreement:
        return MISMATCH, _render(rows, tsv)
    return OK, _render(rows, tsv)


def run_fixture(name, tsv=False):
    try:
        text = fixture_text(name)
    except ParseError as e:
        return PARSE, _render([("ERROR", "parse", str(e))], tsv)
    return OK, text.splitlines()
