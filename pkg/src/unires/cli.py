"""Command-line entry point.

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from . import bott, complexes, hilbert, partitions
from .terms import GradedComplex


def _parse_nu(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"--nu must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="unires",
        description="Equivariant terms of the resolutions of A/I and the universal ring C.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, fmts=("text", "json")):
        sp.add_argument("--e", type=int, required=True)
        sp.add_argument("--g", type=int, required=True)
        sp.add_argument("--format", choices=fmts, default="text")

    sp = sub.add_parser("terms", help="terms of F (or G with --ring B)")
    common(sp)
    sp.add_argument("--ring", choices=("A", "B"), default="A")

    sp = sub.add_parser("tnu", help="terms of the complex t_nu")
    common(sp)
    sp.add_argument("--nu", type=_parse_nu, required=True, help="comma-separated, e.g. 2,1 or --nu=-1,0")

    sp = sub.add_parser("en", help="Eagon-Northcott complex C^i")
    common(sp)
    sp.add_argument("--i", type=int, required=True)

    sp = sub.add_parser("betti", help="total and bigraded ranks of F")
    common(sp)
    sp.add_argument("--ring", choices=("A", "B"), default="A")

    sp = sub.add_parser("hilbert", help="Hilbert series of A/I or C")
    common(sp)
    sp.add_argument("--ring", choices=("A", "C"), default="A")
    sp.add_argument("--D", "--degree", dest="D", type=int, default=8)

    sp = sub.add_parser("check", help="run the verification sweep")
    sp.add_argument("--max-sum", type=int, default=8, help="sweep all e >= 1, g >= 2 with e + g <= this")
    sp.add_argument("--D", "--degree", dest="D", type=int, default=8)
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("diff-graph", help="support of the differential of F")
    common(sp, ("dot", "json", "text"))
    return p


def _emit_complex(c: GradedComplex, fmt: str) -> None:
    if fmt == "json":
        print(c.dumps())
    else:
        for line in c.text_lines():
            print(line)


def _betti(c: GradedComplex, fmt: str) -> None:
    totals = c.total_ranks()
    bigraded: dict[tuple[int, tuple[int, int]], int] = {}
    for t in c:
        key = (t.hom_degree, t.twist)
        bigraded[key] = bigraded.get(key, 0) + t.rank
    if fmt == "json":
        print(
            json.dumps(
                {
                    "e": c.e,
                    "g": c.g,
                    "base_ring": c.base_ring,
                    "total": {str(d): str(r) for d, r in totals.items()},
                    "bigraded": [
                        {"hom_degree": d, "twist": list(tw), "rank": str(r)} for (d, tw), r in sorted(bigraded.items())
                    ],
                },
                indent=2,
            )
        )
        return
    print("degree\ttotal")
    for d, r in totals.items():
        print(f"{d}\t{r}")
    print()
    print("degree\ttwist\trank")
    for (d, tw), r in sorted(bigraded.items()):
        print(f"{d}\t({tw[0]},{tw[1]})\t{r}")


def _sweep(max_sum: int):
    for e in range(1, max_sum):
        for g in range(2, max_sum - e + 1):
            yield e, g


def run_checks(max_sum: int, D: int) -> list[tuple[str, bool, str]]:
    """The full verification sweep; one (name, passed, detail) row per check."""
    rows: list[tuple[str, bool, str]] = []

    def record(name: str, fn: Callable[[], tuple[bool, str]]) -> None:
        try:
            ok, detail = fn()
        except Exception as exc:  # a violation inside a check is a failure, not a crash
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rows.append((name, ok, detail))

    def partitions_basics():
        ok = all(
            partitions.conjugate(partitions.conjugate(p)) == partitions.strip(p)
            for p in partitions.enumerate_in_box(4, 4)
        )
        ok &= partitions.weyl_dim((1, 0, 0, -1), 4) == 15
        ok &= partitions.nu_prime((2, 2, 1), 2) == 2
        ok &= partitions.complement_in_box((1, 0), 2) == (2, 1)
        return ok, "conjugate, weyl_dim, nu_prime, complement_in_box"

    def bott_examples():
        ok = bott.bott((-2,), (2, 2, 2), 4, 3) == bott.Cohomology(3, (1, 1, 1, 1))
        ok &= bott.bott((0,), (1, 0, 0), 4, 3) is None
        return ok, "Bott outcomes"

    record("partitions", partitions_basics)
    record("bott", bott_examples)

    for e, g in _sweep(max_sum):
        tag = f"e={e} g={g}"
        closed = complexes.f_terms_closed(e, g)

        record(f"oracle {tag}", lambda: (bott.f_terms_via_bott(e, g).same_terms(closed), f"{len(closed)} terms"))

        def structural():
            rep = complexes.structural_checks(closed)
            return rep.passed, "; ".join(rep.failures) or f"length {closed.length()}"

        record(f"structural {tag}", structural)
        record(f"self-duality {tag}", lambda: (complexes.self_duality_check(e, g), ""))

        def strand():
            s = complexes.strand(e, g)
            expected = sorted(partitions.size(nu) for nu in partitions.enumerate_in_box(g - 1, e))
            return sorted(t.hom_degree for t in s) == expected and all(t.k == 0 for t in s), f"{len(s)} terms"

        record(f"strand {tag}", strand)

        def diff():
            arrows = complexes.diff_support(closed)
            ok = all(a.map_degree[0] >= 0 and a.map_degree[1] >= 0 and a.map_degree != (0, 0) for a in arrows)
            extra = complexes.uncovered_pairs(closed, arrows)
            return ok, f"{len(arrows)} arrows, {len(extra)} degree-compatible pairs without a documented component"

        record(f"diff-support {tag}", diff)
        record(f"ring-B {tag}", lambda: (complexes.g_complex(e, g).same_terms(closed), "G has the terms of F"))

        def tnu():
            for nu in partitions.enumerate_in_box(g - 1, e):
                if not bott.t_terms_via_bott(nu, e, g).same_terms(complexes.t_terms_closed(nu, e, g)):
                    return False, f"t_nu mismatch at nu={nu}"
            for nu in complexes.weights_in_box(g - 1, -1, e + 1):
                if not complexes.dual_check_t(nu, e, g):
                    return False, f"duality fails at nu={nu}"
            if not complexes.positions_in_range(e, g):
                return False, "t_nu term outside positions 0..e+1"
            en = complexes.eagon_northcott_terms(0, e, g)
            if [t.n_ext for t in en] != [0] + [g + k - 1 for k in range(1, e + 2)]:
                return False, "Eagon-Northcott C^0 exponents"
            return True, "t_nu oracle, duality, positions, Eagon-Northcott"

        record(f"t_nu {tag}", tnu)

        def euler():
            rep = hilbert.check_euler(e, g, D)
            return rep.passed, " | ".join(rep.lines())

        record(f"euler {tag}", euler)

        def freeness():
            ok = hilbert.hilbert_C(e, g, D) == hilbert.hilbert_C_via_freeness(e, g, D)
            return ok, "H_C = H_{A/I} * sum a^t"

        record(f"freeness {tag}", freeness)
    return rows


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.cmd == "check":
        if args.max_sum < 3 or args.D < 0:
            parser.error("--max-sum must be >= 3 and --D >= 0")
        start = time.perf_counter()
        rows = run_checks(args.max_sum, args.D)
        ok = all(r[1] for r in rows)
        if args.format == "json":
            print(json.dumps({"passed": ok, "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in rows]}, indent=2))
        else:
            for name, passed, detail in rows:
                print(f"{'PASS' if passed else 'FAIL'}\t{name}\t{detail}")
            print(f"{sum(r[1] for r in rows)}/{len(rows)} checks passed in {time.perf_counter() - start:.2f}s")
        return 0 if ok else 1

    e, g = args.e, args.g
    if e < 1:
        parser.error(f"--e must be >= 1, got {e}")
    if g < 2:
        parser.error(f"--g must be >= 2, got {g}")

    if args.cmd == "terms":
        c = complexes.g_complex(e, g) if args.ring == "B" else complexes.f_terms_closed(e, g)
        _emit_complex(c, args.format)
    elif args.cmd == "tnu":
        if len(args.nu) != g - 1:
            parser.error(f"--nu must have g-1 = {g - 1} entries, got {len(args.nu)}")
        if not partitions.is_dominant(args.nu):
            parser.error(f"--nu must be non-increasing, got {args.nu}")
        _emit_complex(complexes.t_terms_closed(args.nu, e, g), args.format)
    elif args.cmd == "en":
        if not -1 <= args.i <= e + 1:
            parser.error(f"--i must lie in [-1, {e + 1}], got {args.i}")
        _emit_complex(complexes.eagon_northcott_terms(args.i, e, g), args.format)
    elif args.cmd == "betti":
        c = complexes.g_complex(e, g) if args.ring == "B" else complexes.f_terms_closed(e, g)
        _betti(c, args.format)
    elif args.cmd == "hilbert":
        if args.D < 0:
            parser.error("--D must be >= 0")
        s = hilbert.hilbert_C(e, g, args.D) if args.ring == "C" else hilbert.hilbert_AI(e, g, args.D)
        print(s.dumps() if args.format == "json" else s.grid())
    elif args.cmd == "diff-graph":
        c = complexes.f_terms_closed(e, g)
        arrows = complexes.diff_support(c)
        if args.format == "dot":
            print(complexes.arrows_to_dot(arrows, c))
        elif args.format == "json":
            print(json.dumps(complexes.arrows_to_json(arrows), indent=2))
        else:
            for a in arrows:
                print(f"{a.kind}\t{a.source[0]};{a.source[1]}\t{a.target[0]};{a.target[1]}\t{a.map_degree}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
