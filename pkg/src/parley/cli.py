"""Command line entry points.

``chat`` talks to the engine directly in a terminal loop, ``serve``
exposes the HTTP API, ``eval`` summarizes saved conversation logs, and
``datagen`` writes the synthetic mention datasets used to measure the
entity linker.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analytics import (
    ab_topic_distribution,
    attribute_ratings,
    load_logs,
    render_report,
    turn_length_stats,
)
from .config import load_config
from .engine import Engine
from .gazetteer import default_gazetteer
from .service import ConversationService, ServiceError
from .synthdata import generate_synthetic_data, load_openers, load_templates, save_dataset


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parley", description="knowledge-grounded open-domain dialogue engine"
    )
    parser.add_argument(
        "--config", help="YAML file of engine config overrides", default=None
    )
    sub = parser.add_subparsers(dest="command", required=True)

    chat = sub.add_parser("chat", help="talk to the engine in the terminal")
    chat.add_argument("--seed", type=int, default=None, help="session seed")
    chat.add_argument("--user", default=None, help="user id for the persistent profile")
    chat.add_argument("--data-dir", default=None, help="where logs and users persist")
    chat.add_argument("--variant", default=None, help="experiment tag for the log")
    chat.add_argument(
        "--debug", action="store_true", help="print the full turn log after each reply"
    )

    serve = sub.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--data-dir", default=None)
    serve.add_argument("--static-dir", default=None, help="browser client build to serve")

    evalp = sub.add_parser("eval", help="summarize saved conversation logs")
    evalp.add_argument("--logs", required=True, help="conversations.jsonl path")
    evalp.add_argument(
        "--report", choices=("ratings", "turns", "ab"), default="ratings"
    )

    datagen = sub.add_parser("datagen", help="write synthetic mention datasets")
    datagen.add_argument("--types", default=None, help="comma-separated entity types")
    datagen.add_argument("--n-per-type", type=int, default=1000)
    datagen.add_argument("--seed", type=int, default=0)
    datagen.add_argument("--popularity-cutoff", type=int, default=100)
    datagen.add_argument("--out", required=True, help="directory for the two splits")
    return parser


def _run_chat(args: argparse.Namespace) -> int:
    engine = Engine(load_config(args.config))
    service = ConversationService(engine, data_dir=args.data_dir)
    try:
        info = service.create_session(
            user_id=args.user, seed=args.seed, variant=args.variant
        )
    except ServiceError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    session_id = info["session_id"]
    print(f"session {session_id} (seed {info['seed']}); say 'stop' or ^D to finish")
    try:
        while True:
            try:
                utterance = input("you> ")
            except EOFError:
                print()
                break
            payload = service.post_turn(session_id, utterance)
            print(f"bot> {payload['response']}")
            if args.debug:
                print(json.dumps(payload["turn"], indent=2, sort_keys=True))
            if payload["turn"]["action"] == "conv_closing":
                break
    except KeyboardInterrupt:
        print()
    rating = None
    try:
        raw = input("rating 1-5 (enter to skip)> ").strip()
        if raw:
            rating = max(1, min(5, int(raw)))
    except (EOFError, ValueError, KeyboardInterrupt):
        pass
    summary = service.end_session(session_id, rating)
    print(f"ended after {summary['turns']} turns")
    return 0


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    engine = Engine(load_config(args.config))
    service = ConversationService(engine, data_dir=args.data_dir)
    app = create_app(service, static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _run_eval(args: argparse.Namespace) -> int:
    logs = load_logs(args.logs)
    if args.report == "ratings":
        report = attribute_ratings(logs)
    elif args.report == "turns":
        report = turn_length_stats(logs)
    else:
        report = ab_topic_distribution(logs)
    print(render_report(report))
    return 0


def _run_datagen(args: argparse.Namespace) -> int:
    types = args.types.split(",") if args.types else None
    dataset = generate_synthetic_data(
        load_templates(),
        default_gazetteer(),
        n_per_type=args.n_per_type,
        popularity_cutoff=args.popularity_cutoff,
        seed=args.seed,
        types=types,
        openers=load_openers(),
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    save_dataset(out / "train.jsonl", dataset.train)
    save_dataset(out / "test.jsonl", dataset.test)
    print(f"wrote {len(dataset.train)} train and {len(dataset.test)} test rows to {out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "chat":
        return _run_chat(args)
    if args.command == "serve":
        return _run_serve(args)
    if args.command == "eval":
        return _run_eval(args)
    return _run_datagen(args)


if __name__ == "__main__":
    raise SystemExit(main())
