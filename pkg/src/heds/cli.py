"""Command-line interface.

Exit codes: 0 success (and validation clean), 1 validation errors present,
2 usage or I/O error, 3 parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional

from . import compare as _compare
from .document import new_empty, add_criterion, parse_canonical, serialize_canonical
from .errors import (
    HedsError,
    ParseError,
    UnsupportedSchemaVersionError,
    VersionMismatchError,
)
from .render import (
    RenderFormat,
    RenderTarget,
    parse_markdown,
    render,
)
from .schema import builtin_schema
from .validate import rule_catalogue, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _fail(code: int, message: str) -> int:
    print(f"heds: {message}", file=sys.stderr)
    return code


def _read(path: Path) -> bytes:
    return path.read_bytes()


def _load_sheet(path: Path):
    """Load a datasheet from canonical JSON or a Markdown template."""
    name = path.name
    if name.endswith(".tex") or name.endswith(".heds.tex"):
        raise HedsError("LaTeX is export-only and cannot be read back")
    data = _read(path)
    if name.endswith(".md"):
        return parse_markdown(data.decode("utf-8"))
    if name.endswith(".json"):
        return parse_canonical(data)
    text = data.decode("utf-8", errors="replace").lstrip()
    if text.startswith("{"):
        return parse_canonical(data)
    return parse_markdown(data.decode("utf-8"))


def cmd_new(args: argparse.Namespace) -> int:
    if not 1 <= args.criteria <= 10:
        return _fail(EXIT_USAGE, "--criteria must be between 1 and 10")
    d = new_empty(builtin_schema())
    for _ in range(args.criteria - 1):
        d = add_criterion(d)
    try:
        Path(args.output).write_bytes(serialize_canonical(d))
    except OSError as exc:
        return _fail(EXIT_USAGE, f"cannot write {args.output}: {exc}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        d = _load_sheet(Path(args.input))
    except OSError as exc:
        return _fail(EXIT_USAGE, f"cannot read {args.input}: {exc}")
    except HedsError as exc:
        return _fail(EXIT_PARSE, f"cannot parse {args.input}: {exc}")
    report = validate(d)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.error_count == 0 else EXIT_INVALID


def cmd_convert(args: argparse.Namespace) -> int:
    in_path = Path(args.input)
    try:
        d = _load_sheet(in_path)
    except OSError as exc:
        return _fail(EXIT_USAGE, f"cannot read {args.input}: {exc}")
    except ParseError as exc:
        return _fail(EXIT_PARSE, f"cannot parse {args.input}: {exc}")
    except HedsError as exc:
        if "export-only" in str(exc):
            return _fail(EXIT_USAGE, str(exc))
        return _fail(EXIT_PARSE, f"cannot parse {args.input}: {exc}")
    if args.to == "canonical":
        out_bytes = serialize_canonical(d)
    elif args.to == "markdown":
        out_bytes = render(d, target=RenderTarget(RenderFormat.MARKDOWN)).encode("utf-8")
    else:
        out_bytes = render(d, target=RenderTarget(RenderFormat.LATEX)).encode("utf-8")
    try:
        Path(args.output).write_bytes(out_bytes)
    except OSError as exc:
        return _fail(EXIT_USAGE, f"cannot write {args.output}: {exc}")
    return EXIT_OK


def _load_two(a: str, b: str):
    sheets = []
    for path in (a, b):
        try:
            sheets.append(_load_sheet(Path(path)))
        except OSError as exc:
            raise SystemExit(_fail(EXIT_USAGE, f"cannot read {path}: {exc}"))
        except UnsupportedSchemaVersionError as exc:
            # an incomparable pair is a usage problem, not a syntax problem
            raise SystemExit(_fail(EXIT_USAGE, str(exc)))
        except HedsError as exc:
            raise SystemExit(_fail(EXIT_PARSE, f"cannot parse {path}: {exc}"))
    return sheets


def cmd_diff(args: argparse.Namespace) -> int:
    a, b = _load_two(args.a, args.b)
    try:
        entries = _compare.diff(a, b)
    except VersionMismatchError as exc:
        return _fail(EXIT_USAGE, str(exc))
    if args.format == "json":
        import json

        sys.stdout.write(
            json.dumps(_compare.diff_to_json_dict(entries), ensure_ascii=False, indent=2) + "\n"
        )
    else:
        sys.stdout.write(_compare.diff_to_text(entries))
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    a, b = _load_two(args.a, args.b)
    try:
        report = _compare.comparability(a, b)
    except HedsError as exc:
        return _fail(EXIT_USAGE, str(exc))
    if args.format == "json":
        import json

        sys.stdout.write(json.dumps(report.to_json_dict(), ensure_ascii=False, indent=2) + "\n")
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_index(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        return _fail(EXIT_USAGE, f"not a directory: {args.directory}")
    index = _compare.build_index(directory)
    if args.format == "markdown":
        sys.stdout.write(index.to_markdown())
    else:
        import json

        sys.stdout.write(json.dumps(index.to_json_dict(), ensure_ascii=False, indent=2) + "\n")
    return EXIT_OK


def cmd_rules(args: argparse.Namespace) -> int:
    for rule, description, severity in rule_catalogue():
        print(f"{rule} ({severity.value}): {description}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .server import make_server

    registry = Path(args.registry or os.environ.get("HEDS_REGISTRY", "registry"))
    try:
        server = make_server(args.host, args.port, registry)
    except OSError as exc:
        return _fail(EXIT_USAGE, f"cannot bind {args.host}:{args.port}: {exc}")
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (registry: {registry})", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heds",
        description="Create, validate, convert and compare Human Evaluation Datasheets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("new", help="write an empty datasheet")
    p.add_argument("output", help="output file (.heds.json)")
    p.add_argument("--criteria", type=int, default=1, help="number of criterion blocks (1-10)")
    p.set_defaults(func=cmd_new)

    p = sub.add_parser("validate", help="check a datasheet against all rules")
    p.add_argument("input")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="convert between canonical, Markdown and LaTeX")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--to", choices=("canonical", "markdown", "latex"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("diff", help="list answers that differ between two sheets")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("compare", help="classify criterion comparability across two sheets")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("index", help="index a directory of stored datasheets")
    p.add_argument("directory")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("rules", help="print the validation rule catalogue")
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("serve", help="serve the local HTTP API for the wizard")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8399)
    p.add_argument("--registry", default=None, help="registry directory (or $HEDS_REGISTRY)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    except BrokenPipeError:
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
