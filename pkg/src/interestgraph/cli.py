"""Command-line front end for the staged pipeline.

Subcommands mirror the stages (ingest, extract, link, graph, sentiment,
match) plus run-all and export. Settings come from a flat TOML config file
(--config, or the INTERESTGRAPH_CONFIG environment variable), and every
config key has a CLI flag of the same name that overrides it.
"""

import argparse
import os
import sys
from pathlib import Path

from .errors import InterestGraphError
from .pipeline import (
    PipelineConfig,
    STAGES,
    export_stage_graph,
    load_config,
    run_all,
    run_stage,
)

CONFIG_ENV_VAR = "INTERESTGRAPH_CONFIG"

_PATH_FLAGS = ("corpus", "stopwords", "kb", "lexicon", "products", "output_dir")


def _add_common_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="FILE",
                     help=f"TOML config file (default: ${CONFIG_ENV_VAR})")
    for name in _PATH_FLAGS:
        sub.add_argument(f"--{name.replace('_', '-')}", metavar="PATH", dest=name)
    sub.add_argument("--corpus-format", choices=["jsonl", "plain_lines"], dest="corpus_format")
    sub.add_argument("--beta", type=float, help="phrase-length bonus weight")
    sub.add_argument("--gamma", type=float, help="early-position bonus weight")
    sub.add_argument("--max-phrase-len", type=int, dest="max_phrase_len")
    sub.add_argument("--top-k", type=int, dest="top_k")
    sub.add_argument("--alpha", type=float, help="link overlap vs co-occurrence mix")
    sub.add_argument("--tau", type=float, help="edge threshold")
    sub.add_argument("--epsilon", type=float, help="neutral sentiment band")
    sub.add_argument("--export-formats", dest="export_formats",
                     help="comma-separated subset of dot,graphml,json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interestgraph",
        description="Build a semantic interest graph from posts and rank products against it.")
    subs = parser.add_subparsers(dest="command", required=True)
    for stage in STAGES:
        _add_common_options(subs.add_parser(stage, help=f"run the {stage} stage"))
    _add_common_options(subs.add_parser("run-all", help="run all six stages in order"))
    export = subs.add_parser("export", help="re-export the interest graph")
    export.add_argument("--format", choices=["dot", "graphml", "json"], default="json")
    _add_common_options(export)
    return parser


def _config_from_args(args: argparse.Namespace) -> PipelineConfig:
    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    cfg = load_config(config_path) if config_path else PipelineConfig()

    for name in _PATH_FLAGS:
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, Path(value))
    for name in ("corpus_format", "beta", "gamma", "max_phrase_len",
                 "top_k", "alpha", "tau", "epsilon"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    if getattr(args, "export_formats", None) is not None:
        cfg.export_formats = tuple(f.strip() for f in args.export_formats.split(",") if f.strip())
    cfg.validate()
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if args.command == "run-all":
            run_all(cfg)
        elif args.command == "export":
            export_stage_graph(cfg, args.format)
        else:
            run_stage(args.command, cfg)
    except (InterestGraphError, OSError) as exc:
        print(f"error [{args.command}]: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
