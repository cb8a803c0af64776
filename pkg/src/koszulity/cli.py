"""Command line front end.

A thin client: every command is a POST to the service layer.  By default the
service runs in-process (no socket); --server URL targets a remote instance
started with, say, `uvicorn koszulity.service:app`.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx


def _read_file(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        print(f"ERROR: cannot read {path}: {e.strerror}", file=sys.stderr)
        sys.exit(2)


def _call(server, path, payload):
    if server:
        try:
            with httpx.Client(base_url=server, timeout=600.0) as client:
                resp = client.post(path, json=payload)
        except httpx.HTTPError as e:
            print(f"ERROR: cannot reach {server}: {e}", file=sys.stderr)
            sys.exit(2)
    else:
        from .service import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                    transport=transport,
                    base_url="http://koszulity.internal") as client:
                return await client.post(path, json=payload)

        resp = asyncio.run(go())
    if resp.status_code != 200:
        print(f"ERROR: service returned {resp.status_code}: {resp.text}",
              file=sys.stderr)
        sys.exit(2)
    data = resp.json()
    return data["exit_code"], data["lines"]


def _add_common(sub, field=True):
    sub.add_argument("--tsv", action="store_true",
                     help="tab-separated output")
    sub.add_argument("--server", metavar="URL", default=None,
                     help="POST to a running service instead of in-process")
    if field:
        sub.add_argument("--field", default="q", metavar="q|PRIME",
                         help="coefficient field (default: rationals)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="koszulity",
        description="Koszulness, quadraticity and sequential "
                    "Cohen-Macaulayness for reduced incidence algebras "
                    "of finite posets.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="poset validity and gradedness")
    p.add_argument("file")
    _add_common(p, field=False)

    p = subs.add_parser("axioms", help="interval relation axiom reports")
    p.add_argument("file")
    _add_common(p, field=False)

    p = subs.add_parser("koszul", help="Koszulness verdict")
    p.add_argument("file")
    p.add_argument("--ideal", action="store_true",
                   help="judge the file's monomial right ideal instead "
                        "of the ring")
    _add_common(p)

    p = subs.add_parser("tor", help="Tor table")
    p.add_argument("file")
    p.add_argument("--module", default="ring", choices=["ring", "ideal"])
    p.add_argument("--backend", default="topo",
                   choices=["topo", "bar", "both"])
    _add_common(p)

    p = subs.add_parser("matrices",
                        help="Hilbert and Poincare matrices, identity check")
    p.add_argument("file")
    _add_common(p)

    p = subs.add_parser("quadratic", help="quadraticity verdict")
    p.add_argument("file")
    _add_common(p, field=False)

    p = subs.add_parser("seqcm",
                        help="sequential Cohen-Macaulayness of a complex "
                             "(or of a poset file's order complex)")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--facets", default=None,
                   help='facet list like "1 2; 1 3; 2 3", or VOID / EMPTY')
    _add_common(p)

    p = subs.add_parser("sr",
                        help="componentwise linearity against the dual")
    p.add_argument("--facets", required=True,
                   help="facets of the Alexander dual (of the primal "
                        "complex with --dual)")
    p.add_argument("--vertices", required=True, type=int, metavar="N")
    p.add_argument("--dual", action="store_true",
                   help="interpret --facets as the primal complex")
    _add_common(p)

    p = subs.add_parser("fixture", help="print a named poset file")
    p.add_argument("name")
    _add_common(p, field=False)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "check":
        payload = {"text": _read_file(args.file), "tsv": args.tsv}
    elif cmd == "axioms":
        payload = {"text": _read_file(args.file), "tsv": args.tsv}
    elif cmd == "koszul":
        payload = {"text": _read_file(args.file), "field": args.field,
                   "ideal": args.ideal, "tsv": args.tsv}
    elif cmd == "tor":
        payload = {"text": _read_file(args.file), "field": args.field,
                   "module": args.module, "backend": args.backend,
                   "tsv": args.tsv}
    elif cmd == "matrices":
        payload = {"text": _read_file(args.file), "field": args.field,
                   "tsv": args.tsv}
    elif cmd == "quadratic":
        payload = {"text": _read_file(args.file), "tsv": args.tsv}
    elif cmd == "seqcm":
        payload = {"facets": args.facets,
                   "file_text": _read_file(args.file)
                   if args.file is not None else None,
                   "field": args.field, "tsv": args.tsv}
    elif cmd == "sr":
        payload = {"facets": args.facets, "vertices": args.vertices,
                   "field": args.field, "dual": args.dual, "tsv": args.tsv}
    else:
        payload = {"name": args.name, "tsv": args.tsv}

    code, lines = _call(args.server, f"/{cmd}", payload)
    for line in lines:
        print(line)
    sys.exit(code)


if __name__ == "__main__":
    main()
