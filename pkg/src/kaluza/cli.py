"""Command-line client for the certification service.

Each subcommand posts one request to the HTTP service and prints the
raw JSON response.  By default the service app runs in-process, so no
server is needed; point --url at a running `uvicorn kaluza.service:app`
to talk to a remote one instead.

Exit codes: 0 success (and check passed / verdict not negative /
oracle agreed), 1 failed check, not_cnp verdict, or oracle mismatch,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import logging
import os
import sys
from typing import Any, Optional

import httpx

log = logging.getLogger("kaluza")


class CliError(Exception):
    """Input or transport problem; maps to exit code 2."""


def _load_json(path: str) -> Any:
    try:
        with open(path, "rb") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from None


async def _post_inprocess(path: str, payload: dict) -> httpx.Response:
    from .service import app

    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(
        transport=transport, base_url="http://kaluza.local", timeout=None
    ) as client:
        return await client.post(path, json=payload)


def _post(url: Optional[str], path: str, payload: dict) -> httpx.Response:
    log.debug("POST %s", path)
    if url is None:
        return asyncio.run(_post_inprocess(path, payload))
    with httpx.Client(base_url=url.rstrip("/"), timeout=None) as client:
        return client.post(path, json=payload)


def _emit(content: bytes, out: Optional[str]) -> None:
    if not content.endswith(b"\n"):
        content += b"\n"
    if out:
        with open(out, "wb") as fh:
            fh.write(content)
    else:
        sys.stdout.buffer.write(content)
        sys.stdout.buffer.flush()


def _fail_from_response(resp: httpx.Response) -> CliError:
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    return CliError(f"service returned {resp.status_code}: {detail}")


def _run_request(args: argparse.Namespace, path: str, payload: dict) -> dict:
    """Post, print the response verbatim, and hand back the parsed body."""
    resp = _post(args.url, path, payload)
    if resp.status_code != 200:
        raise _fail_from_response(resp)
    _emit(resp.content, getattr(args, "out", None))
    return resp.json()


def cmd_solve(args: argparse.Namespace) -> int:
    payload: dict = {"table": _load_json(args.infile)}
    if args.degree is not None:
        payload["degree"] = args.degree
    _run_request(args, "/solve", payload)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    doc = _load_json(args.infile)
    payload: dict = {"thm": args.thm}
    if isinstance(doc, dict) and "sequence" in doc:
        payload["sequence"] = doc["sequence"]
    else:
        payload["table"] = doc
    body = _run_request(args, "/check", payload)
    return 0 if body.get("passed") else 1


def cmd_certify(args: argparse.Namespace) -> int:
    if args.norms:
        payload = {"norms": _load_json(args.norms)}
    else:
        payload = {"table": _load_json(args.infile)}
    body = _run_request(args, "/certify", payload)
    return 1 if body.get("verdict") == "not_cnp" else 0


def cmd_gen(args: argparse.Namespace) -> int:
    payload: dict = {"family": args.family}
    if args.degree is not None:
        payload["degree"] = args.degree
    if args.dim is not None:
        payload["dim"] = args.dim
    if args.params:
        payload["params"] = _load_json(args.params)
    _run_request(args, "/gen", payload)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    point = [p.strip() for p in args.point.split(",")]
    payload = {"table": _load_json(args.infile), "point": point}
    _run_request(args, "/eval", payload)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    payload: dict = {"table": _load_json(args.infile)}
    if args.guard is not None:
        payload["guard"] = args.guard
    body = _run_request(args, "/oracle", payload)
    return 0 if body.get("equal") else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kaluza",
        description="Renewal-equation solving and kernel certification on exact tables.",
    )
    parser.add_argument(
        "--url",
        default=None,
        help="base URL of a running service (default: run the app in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve c = delta + c*q for q")
    p.add_argument("--in", dest="infile", required=True, help="coefficient table JSON")
    p.add_argument("--degree", type=int, default=None, help="truncate to this degree first")
    p.add_argument("--out", default=None, help="write the q table here instead of stdout")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("check", help="run one sufficient condition")
    p.add_argument("--thm", required=True, choices=["1", "2", "1d", "word"])
    p.add_argument("--in", dest="infile", required=True, help="table or sequence JSON")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("certify", help="full certification with witness search")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="infile", help="coefficient table JSON")
    src.add_argument("--norms", help="squared-norm document JSON")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("gen", help="generate a coefficient table")
    p.add_argument(
        "--family",
        required=True,
        choices=[
            "multinomial",
            "geometric",
            "from-r",
            "from-b",
            "product-measure",
            "atomic-measure",
        ],
    )
    p.add_argument("--params", default=None, help="family parameters JSON")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("eval", help="evaluate the truncated series at a point")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--point", required=True, help='comma-separated coordinates, e.g. "0.25,0.25"')
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("oracle", help="cross-check the solver against the word-level path")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--guard", type=int, default=None, help="word-table entry limit")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_oracle)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(level=os.environ.get("KALUZA_LOG_LEVEL", "WARNING"))
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"kaluza: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"kaluza: transport error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
