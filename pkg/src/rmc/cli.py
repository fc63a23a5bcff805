"""Command line front end: ``rmc closure``, ``rmc reach``, ``rmc examples``."""

from __future__ import annotations

import logging
import os
import sys
from pathlib import Path

import click

from .automata import Automaton
from .builders import affine_relation, initial_token_ring, token_ring
from .dot import to_dot
from .engine import EngineResult, GaveUp, RunConfig, run
from .errors import ParseError
from .textio import emit_text, parse_model
from .transducer import SamplingStrategy, Transducer

LOG_LEVELS = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging() -> None:
    level = os.environ.get("RMC_LOG", "error").strip().lower() or "error"
    if level not in LOG_LEVELS:
        raise click.UsageError(f"RMC_LOG must be one of {', '.join(LOG_LEVELS)}, got {level!r}")
    logging.basicConfig(level=LOG_LEVELS[level], format="rmc %(levelname)s %(message)s", stream=sys.stderr)
    logging.getLogger("rmc").setLevel(LOG_LEVELS[level])


def _sampling(ctx, param, value: str) -> SamplingStrategy:
    try:
        return SamplingStrategy.parse(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _load(path: str, want: type, what: str):
    try:
        m = parse_model(path)
    except ParseError as exc:
        raise click.UsageError(f"{path}: {exc}") from None
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc.strerror}") from None
    if not isinstance(m, want):
        raise click.UsageError(f"{path}: expected {what}")
    return m


def _engine_options(f):
    opts = [
        click.option("--sampling", default="linear:1", show_default=True, callback=_sampling,
                     help="linear:A (A, 2A, 3A, ...), exp:B (B, B^2, ...) or explicit:N1,N2,..."),
        click.option("--max-samples", type=click.IntRange(min=1), default=12, show_default=True),
        click.option("--max-states", type=click.IntRange(min=1), default=5000, show_default=True),
        click.option("--max-seconds", type=click.FloatRange(min=0, min_open=True), default=300.0, show_default=True),
        click.option("--sync-mult", type=click.IntRange(min=1), default=2, show_default=True,
                     help="Synchronisation bound M = K x max(diameter, largest increment)."),
        click.option("--no-heuristics", is_flag=True, help="Plain squaring only: no doubling through powers of T."),
        click.option("--dominance", is_flag=True, help="Prune composition subsets by simulation (slow on big powers)."),
        click.option("--emit-dot", type=click.Path(file_okay=False), help="Write samples, decomposition and result here."),
        click.option("--out", type=click.Path(dir_okay=False), help="Write the resulting automaton (text format)."),
    ]
    for o in reversed(opts):
        f = o(f)
    return f


def _config(mode: str, o: dict) -> RunConfig:
    return RunConfig(
        mode=mode,
        sampling=o["sampling"],
        max_samples=o["max_samples"],
        max_states=o["max_states"],
        max_seconds=o["max_seconds"],
        sync_mult=o["sync_mult"],
        dominance=o["dominance"] and not o["no_heuristics"],
        nonreflexive=not o["no_heuristics"],
    )


def _final_attempt(res: EngineResult):
    for it in reversed(res.trace):
        if it.attempts:
            return it.attempts[-1]
    return None


def _report(res: EngineResult, o: dict) -> int:
    click.echo(res.summary(), nl=False)
    att = _final_attempt(res)
    if att is not None and not isinstance(res.outcome, GaveUp):
        for rep in att.reports:
            click.echo(rep.to_text(), nl=False)
    aut = res.automaton
    if o["out"] and aut is not None:
        Path(o["out"]).write_text(emit_text(aut, f"{type(res.outcome).__name__} after {len(res.trace)} samples"))
    if o["emit_dot"]:
        d = Path(o["emit_dot"])
        d.mkdir(parents=True, exist_ok=True)
        if aut is not None:
            (d / "result.dot").write_text(to_dot(aut, "result"))
        if res.extrapolation is not None:
            g = res.extrapolation.grow
            (d / "decomposition.dot").write_text(to_dot(g.automaton, "decomposition", g))
            (d / "decomposition.txt").write_text(g.dump())
            (d / "added_edges.txt").write_text(res.extrapolation.provenance_text())
    return res.outcome.code


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli() -> None:
    """Regular model checking by sampling and extrapolating transducer powers."""
    _setup_logging()


@cli.command()
@click.option("--transducer", "tpath", required=True, type=click.Path(dir_okay=False))
@_engine_options
def closure(tpath: str, **o) -> int:
    """Reflexive transitive closure of a transducer."""
    t = _load(tpath, Transducer, "a transducer (arity 2)")
    return _report(_run(t, None, _config("closure", o), o), o)


@cli.command()
@click.option("--transducer", "tpath", required=True, type=click.Path(dir_okay=False))
@click.option("--initial", "apath", required=True, type=click.Path(dir_okay=False))
@_engine_options
def reach(tpath: str, apath: str, **o) -> int:
    """States reachable from an initial set."""
    t = _load(tpath, Transducer, "a transducer (arity 2)")
    a = _load(apath, Automaton, "an automaton (arity 1)")
    if a.alphabet != t.base or a.kind is not t.kind:
        raise click.UsageError("initial automaton and transducer disagree on alphabet or kind")
    return _report(_run(t, a, _config("reach", o), o), o)


def _run(t: Transducer, a, cfg: RunConfig, o: dict) -> EngineResult:
    if o["emit_dot"]:
        d = Path(o["emit_dot"])
        d.mkdir(parents=True, exist_ok=True)

        def hook(e: int, aut) -> bool:
            (d / f"sample_{e}.dot").write_text(to_dot(aut, f"sample {e}"))
            return True

        cfg.on_sample = hook
    return run(t, a, cfg)


@cli.command()
@click.argument("name")
@click.option("--out", "outdir", default=".", show_default=True, type=click.Path(file_okay=False))
@click.option("--msb-first", is_flag=True, help="Affine relations: most significant bit first.")
def examples(name: str, outdir: str, msb_first: bool) -> int:
    """Write a built-in model: token-ring or affine:C (the relation y = x + C)."""
    d = Path(outdir)
    d.mkdir(parents=True, exist_ok=True)
    if name == "token-ring":
        files = {"token_ring.txt": (token_ring(), "token passing step"),
                 "token_ring_initial.txt": (initial_token_ring(), "exactly one token")}
    elif name.startswith("affine:"):
        try:
            c = int(name.split(":", 1)[1])
        except ValueError:
            raise click.BadParameter(f"{name!r}: expected affine:C with an integer C", param_hint="NAME") from None
        order = "msb" if msb_first else "lsb"
        files = {f"affine_{c}_{order}.txt": (affine_relation(c, msb_first), f"y = x + {c}, two's complement, {order} first")}
    else:
        raise click.BadParameter(f"unknown example {name!r}", param_hint="NAME")
    for fname, (model, comment) in files.items():
        (d / fname).write_text(emit_text(model, comment))
        click.echo(str(d / fname))
    return 0


def main(argv: list[str] | None = None) -> None:
    try:
        code = cli.main(args=argv, prog_name="rmc", standalone_mode=False)
    except click.exceptions.Exit as exc:  # --help
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        sys.exit(1)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":  # pragma: no cover
    main()
