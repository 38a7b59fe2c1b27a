"""Rebuild the standard corpus manifest shipped in copchase/data/.

Assembles curated family specs plus a seeded random schedule, verifies
every entry (membership, 5 <= n <= 25, reproducibility) and the
structural coverage the invariant suites rely on, then writes the
manifest JSON.  Rerunning is idempotent: the schedule is fixed, so the
output is byte-stable.
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from copchase.families import FamilySpec, gen_random_member, make_family
from copchase.graphs import Graph
from copchase.holes import hole_profile, holes_in_arena
from copchase.levels import decompose

OUT = Path(__file__).resolve().parent.parent / "src" / "copchase" / "data" / "corpus_manifest.json"
MAX_TRIES = 20_000

CURATED: list[FamilySpec] = (
    [FamilySpec("odd_cycle", (k,)) for k in range(5, 26, 2)]
    + [FamilySpec("clique", (n,)) for n in range(5, 26)]
    + [FamilySpec("path", (n,)) for n in range(5, 26)]
    + [
        FamilySpec("wheel5"),
        FamilySpec("c5hat7"),
        FamilySpec("twoclique7"),
        FamilySpec("hung_wheel5"),
        FamilySpec("c5_gluing", (2,)),
        FamilySpec("c5_gluing", (3,)),
        FamilySpec("c5_gluing", (4,)),
    ]
)

# (n, p, seeds): sparse band while acceptance lasts, then near-cliques
# whose few missing edges must pairwise intersect to dodge a C4.
RANDOM_SCHEDULE: list[tuple[int, Fraction, range]] = (
    [(n, Fraction(2, n), range(10)) for n in (5, 6, 7, 8)]
    + [(n, Fraction(3, n), range(10)) for n in (5, 6, 7, 8, 9, 10)]
    + [(n, 1 - Fraction(2, n * (n - 1) // 2), range(4)) for n in range(11, 20)]
    + [(n, 1 - Fraction(2, n * (n - 1) // 2), range(2)) for n in range(20, 26)]
)


def coverage(graphs: list[tuple[str, Graph]]) -> dict[str, str]:
    """First corpus witness for each structural feature the tests need."""
    found: dict[str, str] = {}
    want = {"two_clique", "mate_pair", "trace_l_minus_2", "dominated_c5"}
    for label, g in graphs:
        if want <= found.keys():
            break
        u1 = min(g.neighbors(0), default=None)
        if u1 is None:
            continue
        d = decompose(g, 0, u1)
        for comp in d.by_id.values():
            if comp.kind == "two_clique":
                found.setdefault("two_clique", label)
            if comp.mate_id is not None:
                found.setdefault("mate_pair", label)
        for hole in holes_in_arena(d):
            profile = hole_profile(d, hole)
            if len(profile.trace) == profile.last_level - 2:
                found.setdefault("trace_l_minus_2", label)
            if profile.dominated_by is not None:
                found.setdefault("dominated_c5", label)
    missing = want - found.keys()
    if missing:
        raise SystemExit(f"corpus lacks coverage for: {sorted(missing)}")
    return found


def main() -> None:
    entries: list[dict] = []
    graphs: list[tuple[str, Graph]] = []

    for spec in CURATED:
        g = make_family(spec)
        assert 5 <= g.n <= 25, (spec.label(), g.n)
        entries.append({"label": spec.label(), "family": spec.to_json()})
        graphs.append((spec.label(), g))

    t0 = time.time()
    rates: list[str] = []
    for n, p, seeds in RANDOM_SCHEDULE:
        kept = 0
        for seed in seeds:
            g = gen_random_member(n, p, seed, MAX_TRIES)
            if g is None:
                print(f"  skip n={n} p={p} seed={seed}: no member in {MAX_TRIES} tries")
                continue
            assert 5 <= g.n <= 25
            label = f"random_n{n}_p{p.numerator}-{p.denominator}_s{seed}"
            entries.append({
                "label": label,
                "random": {
                    "n": n,
                    "p": [p.numerator, p.denominator],
                    "seed": seed,
                    "max_tries": MAX_TRIES,
                },
            })
            graphs.append((label, g))
            kept += 1
        rates.append(f"n={n} p={p}: kept {kept}/{len(seeds)}")
    gen_seconds = time.time() - t0

    if len(entries) < 200:
        raise SystemExit(f"only {len(entries)} corpus entries, need >= 200")

    witnesses = coverage(graphs)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"entries": entries}, indent=1) + "\n")

    print(f"wrote {OUT} with {len(entries)} entries "
          f"({len(CURATED)} curated) in {gen_seconds:.1f}s of sampling")
    for line in rates:
        print(" ", line)
    print("coverage witnesses:")
    for need, label in sorted(witnesses.items()):
        print(f"  {need}: {label}")


if __name__ == "__main__":
    sys.exit(main())
