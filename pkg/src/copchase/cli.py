"""Command line surface.

Every subcommand prints exactly one JSON document on stdout (except
serve, which runs a server).  Exit codes: 0 success, 2 domain error,
3 budget exceeded.  Internal invariant failures are deliberately not
caught; they should crash loudly.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from .errors import BudgetExceededError, DomainError
from .families import DEFAULT_MAX_TRIES, FAMILY_NAMES, FamilySpec, gen_random_member, make_family
from .graphs import Graph, parse_graph, serialize_graph
from .holes import hole_profile, holes_in_arena
from .levels import decompose, decomposition_to_json
from .oracle import solve
from .pursuit import simulate
from .recognition import is_member


def _emit(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=True))


def _fail(exc: Exception, kind: str, code: int) -> None:
    _emit({"error": str(exc), "kind": kind})
    sys.exit(code)


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _guarded(fn):
    try:
        fn()
    except BudgetExceededError as e:
        _fail(e, "budget", 3)
    except DomainError as e:
        _fail(e, "domain", 2)


@click.group()
def main() -> None:
    """Pursuit engine and structural toolkit for claw-free, even-hole-free graphs."""


@main.command()
@click.argument("file")
def check(file: str) -> None:
    """Test class membership, reporting witnesses."""

    def run():
        g = _read_graph(file)
        _emit({"n": g.n, "m": g.m, **is_member(g).to_json()})

    _guarded(run)


@main.command(name="decompose")
@click.argument("file")
@click.option("--u0", type=int, required=True, help="start vertex")
@click.option("--u1", type=int, required=True, help="neighbor pinning the arena")
def decompose_cmd(file: str, u0: int, u1: int) -> None:
    """Level decomposition of the arena seen from (u0, u1)."""

    def run():
        g = _read_graph(file)
        _emit(decomposition_to_json(decompose(g, u0, u1)))

    _guarded(run)


@main.command()
@click.argument("file")
@click.option("--u0", type=int, required=True)
@click.option("--u1", type=int, required=True)
@click.option("--budget", type=int, default=None, help="hole enumeration cap")
def holes(file: str, u0: int, u1: int, budget: int | None) -> None:
    """Profile every hole inside the arena."""

    def run():
        g = _read_graph(file)
        d = decompose(g, u0, u1)
        found = holes_in_arena(d) if budget is None else holes_in_arena(d, budget)
        _emit({"holes": [hole_profile(d, h).to_json() for h in found]})

    _guarded(run)


@main.command()
@click.argument("file")
@click.option("--cops", type=int, required=True, help="cop count, 1..4")
@click.option("--budget", type=int, default=None, help="state space cap")
@click.option("--dump-policy", is_flag=True, help="include the full move table")
def oracle(file: str, cops: int, budget: int | None, dump_policy: bool) -> None:
    """Exact game values by retrograde analysis."""

    def run():
        g = _read_graph(file)
        res = solve(g, cops) if budget is None else solve(g, cops, budget)
        out = res.to_json()
        if dump_policy:
            out["policy"] = res.policy_json()
        _emit(out)

    _guarded(run)


@main.command(name="simulate")
@click.argument("file")
@click.option("--cops", type=click.Choice(["2", "3"]), required=True)
@click.option("--robber", type=click.Choice(["random", "greedy", "optimal"]), required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--limit", type=int, default=None, help="round cap, default 4n+4")
@click.option("--u0", type=int, default=0, show_default=True, help="cop start vertex")
@click.option("--skip-member-check", is_flag=True, help="run outside the class, unguaranteed")
def simulate_cmd(file, cops, robber, seed, limit, u0, skip_member_check) -> None:
    """Play the cop strategy against a scripted robber, print the transcript."""

    def run():
        g = _read_graph(file)
        cap = limit if limit is not None else 4 * g.n + 4
        t = simulate(
            g,
            int(cops),
            u0,
            robber,
            cap,
            seed=seed,
            skip_member_check=skip_member_check,
        )
        _emit(t.to_json())

    _guarded(run)


@main.command()
@click.option("--family", "family_name", type=click.Choice(FAMILY_NAMES), default=None)
@click.option("--n", type=int, default=None, help="size parameter (family or random)")
@click.option("--p", default=None, help="edge probability, e.g. 0.25 or 2/7")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tries", type=int, default=DEFAULT_MAX_TRIES, show_default=True)
@click.option("--out", "out_dir", required=True, help="directory for graph + manifest")
def gen(family_name, n, p, seed, tries, out_dir) -> None:
    """Emit one graph as an edge-list file plus a JSON manifest."""

    def run():
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        if family_name is not None:
            builder_arity = {"odd_cycle", "clique", "path", "random_tree", "c5_gluing"}
            if family_name in builder_arity:
                if n is None:
                    raise DomainError(f"family {family_name} needs --n")
                spec = FamilySpec(family_name, (n,), seed if family_name == "random_tree" else None)
            else:
                spec = FamilySpec(family_name)
            g = make_family(spec)
            manifest = {"spec": spec.to_json(), "label": spec.label()}
        else:
            if n is None or p is None:
                raise DomainError("random generation needs --n and --p")
            frac = Fraction(p)
            g = gen_random_member(n, frac, seed, tries)
            label = f"random_n{n}_p{frac.numerator}-{frac.denominator}_s{seed}"
            manifest = {
                "spec": {"n": n, "p": [frac.numerator, frac.denominator],
                         "seed": seed, "max_tries": tries},
                "label": label,
            }
            if g is None:
                manifest.update({"file": None, "member": None})
                _emit(manifest)
                return
        path = out / f"{manifest['label']}.edges"
        path.write_text(serialize_graph(g))
        manifest.update({"file": str(path), "member": is_member(g).member})
        json_path = out / f"{manifest['label']}.json"
        json_path.write_text(json.dumps(manifest, sort_keys=True) + "\n")
        _emit(manifest)

    _guarded(run)


@main.command()
@click.option("--port", type=int, default=8008, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--hints", is_flag=True, help="default sessions to oracle hints")
@click.option("--record", "record_dir", default=None, help="append finished transcripts here")
@click.option("--ttl", type=float, default=3600.0, show_default=True, help="idle session lifetime, seconds")
def serve(port, host, hints, record_dir, ttl) -> None:
    """Run the JSON-over-HTTP session service."""
    import uvicorn

    from .server import create_app

    app = create_app(hints_default=hints, record_dir=record_dir, ttl=ttl)
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command()
@click.option("--out", "out_dir", required=True, help="directory for CSV and figures")
@click.option("--sample", type=int, default=None, help="only the first N corpus graphs")
def report(out_dir, sample) -> None:
    """Survey the corpus: CSV table plus rendered figures."""

    def run():
        from .report import corpus_report

        _emit(corpus_report(out_dir, sample))

    _guarded(run)


if __name__ == "__main__":
    main()
