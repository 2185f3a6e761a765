"""Command-line front end.

The CLI is a client of the HTTP service.  By default it mounts the
service in-process, so no daemon is needed; ``--server URL`` points it at
a running instance instead, and ``serve`` starts one.

Exit codes: 0 ok, 1 input error (unknown grapheme, bad encoding, empty
word; a diagnostic with the offending position goes to stderr), 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys


def _make_client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server.rstrip("/"), timeout=60.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app())


def _fail(payload) -> int:
    detail = payload.get("detail", payload)
    if isinstance(detail, dict):
        msg = detail.get("message", "")
        err = detail.get("error", "error")
        pos = detail.get("position")
        where = f" at position {pos}" if pos is not None and str(pos) not in msg else ""
        print(f"{err}{where}: {msg}", file=sys.stderr)
    else:
        print(detail, file=sys.stderr)
    return 1


def _call(client, method: str, path: str, payload=None):
    if method == "get":
        return client.get(path)
    return client.post(path, json=payload)


def _cmd_join(client, args) -> int:
    resp = _call(client, "post", "/join",
                 {"first": args.first, "second": args.second, "script": args.script})
    if resp.status_code != 200:
        return _fail(resp.json())
    alternatives = resp.json()["alternatives"]
    for alt in alternatives:
        if args.output == "records":
            print(json.dumps(alt, ensure_ascii=False))
        else:
            print(alt["text"])
    return 0


def _cmd_forms(client, args) -> int:
    resp = _call(client, "post", "/forms", {"word": args.word, "script": args.script})
    if resp.status_code != 200:
        return _fail(resp.json())
    for form in resp.json()["forms"]:
        if args.output == "records":
            print(json.dumps(form, ensure_ascii=False))
        else:
            rules = ",".join(str(r) for r in form["rules"])
            print(f"{form['surface']}\t{form['kind']}\t{form['context']}\t{rules}")
    return 0


def _cmd_search(client, args) -> int:
    try:
        if args.file == "-":
            text = sys.stdin.buffer.read().decode("utf-8")
        else:
            with open(args.file, "rb") as fh:
                text = fh.read().decode("utf-8")
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return 1
    except UnicodeDecodeError as exc:
        print(f"DecodeError: {exc}", file=sys.stderr)
        return 1
    resp = _call(client, "post", "/search",
                 {"word": args.word, "text": text, "script": args.script,
                  "strict_boundaries": args.strict_boundaries})
    if resp.status_code != 200:
        return _fail(resp.json())
    for m in resp.json()["matches"]:
        if args.output == "records":
            print(json.dumps(m, ensure_ascii=False))
        else:
            print(f"{m['offset']}\t{m['length']}\t{m['line']}\t{m['surface']}\t{m['kind']}")
    return 0


def _cmd_rules(client, args) -> int:
    resp = _call(client, "get", "/rules")
    if resp.status_code != 200:
        return _fail(resp.json())
    for r in resp.json():
        if args.output == "records":
            print(json.dumps(r, ensure_ascii=False))
        else:
            name = r["name"] or "-"
            kind = "optional" if r["optional"] else "obligatory"
            print(f"{r['id']}  {r['sutra']}  {name}  {kind}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sandhisearch",
        description="Sanskrit sandhi: join word pairs, list word forms, search E-text.")
    parser.add_argument("--server", metavar="URL",
                        help="use a running service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--script", choices=["iast", "devanagari"], default="iast")
    common.add_argument("--output", choices=["text", "records"], default="text")

    p = sub.add_parser("join", parents=[common], help="apply sandhi to a word pair")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("forms", parents=[common], help="all sandhi shapes of a word")
    p.add_argument("word")

    p = sub.add_parser("search", parents=[common], help="find a word in a text file")
    p.add_argument("word")
    p.add_argument("file", help="UTF-8 text file, or - for stdin")
    p.add_argument("--strict-boundaries", action="store_true",
                   help="only match at whitespace/punctuation boundaries")

    p = sub.add_parser("rules", help="print the rule catalogue")
    p.add_argument("--output", choices=["text", "records"], default="text")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return _cmd_serve(args)
    client = _make_client(args.server)
    try:
        if args.command == "join":
            return _cmd_join(client, args)
        if args.command == "forms":
            return _cmd_forms(client, args)
        if args.command == "search":
            return _cmd_search(client, args)
        if args.command == "rules":
            return _cmd_rules(client, args)
    finally:
        client.close()
    return 2


if __name__ == "__main__":
    sys.exit(main())
