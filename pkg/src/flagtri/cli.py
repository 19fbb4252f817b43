"""Command-line interface.

Subcommands:

* ``verify``    check invariants of facet files (and any expectations
                embedded in JSON inputs)
* ``construct`` build a named complex and write it out
* ``search``    run the blow-up / contract-down search from a seed file
* ``report``    tabulate invariants and write CSV plus PNG figures

Exit codes: 0 success, 1 usage error, 2 unreadable or unparsable input,
3 domain failure (violated expectation, invalid operation, failed check).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complexes import as_flag, as_simplicial
from .constructors import (FIXTURES, barycentric_subdivision, cycle, delta4,
                           delta16, fixture, gamma_tight, octahedral_sphere,
                           simplex, staircase_product, surface_min)
from .errors import FlagtriError, InvalidInput, ParseError
from .io import read_complex, write_complex
from .report import build_report, render_table, report_row
from .search import Objective, SearchConfig, run_search
from .topology import (Field, betti, classify_surface, gamma_numbers,
                       is_closed_3_manifold, is_closed_surface, orientable)


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _computed_invariants(sc) -> dict:
    out = {}
    fv = sc.f_vector()[1:]
    for i, fi in enumerate(fv):
        out[f"f{i}"] = fi
    out["dim"] = sc.dim
    out["euler"] = sc.euler_characteristic()
    flag = sc.is_flag()
    out["flag"] = bool(flag)
    out["flag_witness"] = None if flag else list(flag.witness)
    out["betti"] = list(betti(sc, Field.RATIONAL).ranks)
    out["betti_gf2"] = list(betti(sc, Field.GF2).ranks)
    if sc.is_pure():
        g = gamma_numbers(sc)
        out.update(gamma1=g.gamma1, gamma2=g.gamma2, g2=g.g2, gbar2=g.gbar2)
    surface = is_closed_surface(sc) if sc.dim == 2 else None
    three = is_closed_3_manifold(sc) if sc.dim == 3 else None
    out["closed_surface"] = bool(surface) if surface is not None else False
    out["closed_3_manifold"] = bool(three) if three is not None else False
    if surface:
        out["surface"] = classify_surface(sc).label()
        out["orientable"] = orientable(sc)
    if three:
        out["orientable"] = orientable(sc)
        if flag:
            out["beta1"] = out["betti"][1]
            out["slack"] = out["gamma2"] - 16 * out["beta1"]
            out["conjecture"] = out["slack"] >= 0
    return out


def _describe(name: str, inv: dict, out=None) -> None:
    out = out if out is not None else sys.stdout
    f = tuple(inv[k] for k in sorted(inv) if k.startswith("f") and k[1:].isdigit())
    print(f"{name}: dim={inv['dim']} f={f} euler={inv['euler']} "
          f"flag={'yes' if inv['flag'] else 'no'}", file=out)
    if not inv["flag"]:
        print(f"  minimal non-face: {tuple(inv['flag_witness'])}", file=out)
    print(f"  betti(Q)={tuple(inv['betti'])} "
          f"betti(GF2)={tuple(inv['betti_gf2'])}", file=out)
    if "gamma2" in inv:
        print(f"  gamma1={inv['gamma1']} gamma2={inv['gamma2']} "
              f"g2={inv['g2']} gbar2={inv['gbar2']}", file=out)
    if inv.get("closed_surface"):
        print(f"  closed surface: {inv['surface']}"
              f" ({'orientable' if inv['orientable'] else 'non-orientable'})",
              file=out)
    if inv.get("closed_3_manifold"):
        line = "  closed 3-manifold"
        line += " (orientable)" if inv["orientable"] else " (non-orientable)"
        print(line, file=out)
        if "conjecture" in inv:
            verdict = "holds" if inv["conjecture"] else "FAILS"
            print(f"  gamma2 >= 16 beta1: {verdict} "
                  f"(gamma2={inv['gamma2']}, beta1={inv['beta1']}, "
                  f"slack={inv['slack']})", file=out)


def _check_expected(expected: dict, inv: dict) -> list:
    problems = []
    for key, want in expected.items():
        if key not in inv:
            problems.append(f"unsupported or inapplicable expectation {key!r}")
            continue
        have = inv[key]
        if isinstance(have, list) and isinstance(want, list):
            same = have == want
        else:
            same = have == want
        if not same:
            problems.append(f"{key}: have {have!r}, expected {want!r}")
    return problems


def _cmd_verify(args) -> int:
    status = 0
    for path in args.files:
        loaded = read_complex(path)
        inv = _computed_invariants(loaded.complex)
        _describe(loaded.name, inv)
        if loaded.expected:
            problems = _check_expected(loaded.expected, inv)
            if problems:
                status = 3
                for p in problems:
                    print(f"  MISMATCH {p}", file=sys.stdout)
            else:
                print(f"  expected: all {len(loaded.expected)} checks match",
                      file=sys.stdout)
    return status


_ZERO_ARG = {"delta4": delta4, "delta16": delta16}


def _build(name: str, params: list):
    name = name.replace("-", "_")
    if name in _ZERO_ARG:
        _require(params, 0, name)
        return _ZERO_ARG[name]().complex
    if name in ("octahedral_sphere", "cycle", "simplex", "gamma_tight"):
        _require(params, 1, name)
        fn = {"octahedral_sphere": octahedral_sphere, "cycle": cycle,
              "simplex": simplex, "gamma_tight": gamma_tight}[name]
        return fn(_int(params[0], name))
    if name == "surface_min":
        if len(params) not in (1, 2):
            raise InvalidInput(f"{name} takes k and optionally 'nonorientable'")
        orientable_ = True
        if len(params) == 2:
            if params[1] not in ("orientable", "nonorientable"):
                raise InvalidInput(
                    f"second {name} argument must be 'orientable' or "
                    f"'nonorientable', got {params[1]!r}")
            orientable_ = params[1] == "orientable"
        return surface_min(_int(params[0], name), orientable_)
    if name == "fixture":
        _require(params, 1, name)
        return fixture(params[0])
    if name == "barycentric":
        _require(params, 1, name)
        return barycentric_subdivision(read_complex(params[0]).complex)
    if name == "product":
        _require(params, 2, name)
        return staircase_product(read_complex(params[0]).complex,
                                 read_complex(params[1]).complex)
    raise InvalidInput(
        f"unknown construction {name!r}; choose from octahedral_sphere, "
        f"cycle, simplex, fixture, surface_min, delta4, delta16, gamma_tight, "
        f"barycentric, product")


def _require(params, n, name):
    if len(params) != n:
        raise InvalidInput(f"{name} takes {n} argument(s), got {len(params)}")


def _int(s, name) -> int:
    try:
        return int(s)
    except ValueError:
        raise InvalidInput(f"{name}: expected an integer, got {s!r}")


def _cmd_construct(args) -> int:
    c = _build(args.name, args.params)
    label = " ".join([args.name] + args.params)
    if args.output:
        write_complex(args.output, c, name=label)
        print(f"wrote {args.output}")
    else:
        from .io import facet_lines
        sys.stdout.write(facet_lines(c, comment=label))
    return 0


def _cmd_search(args) -> int:
    loaded = read_complex(args.file)
    seed = as_flag(loaded.complex)
    config = SearchConfig(target_f0=args.target_f0,
                          objective=Objective(args.objective),
                          archive_cap=args.cap)
    result = run_search(seed, args.rounds, args.seed, config,
                        workers=args.workers, progress=args.progress)
    archive = result.archive
    print(f"{loaded.name}: {result.rounds} rounds from f0={seed.vertex_count}, "
          f"{len(archive)} distinct local minima")
    if result.aborted:
        print(f"  aborted rounds: {len(result.aborted)}")
    for value, tier in archive.tiers().items():
        names = ", ".join(m.digest[:12] for m in tier[:6])
        more = "" if len(tier) <= 6 else f", +{len(tier) - 6} more"
        print(f"  {config.objective.value}={value}: {len(tier)} "
              f"({names}{more})")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for m in archive.minima():
            stem = f"min_{config.objective.value}{m.value}_{m.digest[:12]}"
            write_complex(out / f"{stem}.json", m.complex, name=stem)
            (out / f"{stem}_trace.json").write_text(
                json.dumps(m.trace.as_json_obj()) + "\n")
        print(f"  wrote {2 * len(archive)} files to {out}")
    return 0


def _report_inputs(paths) -> list:
    """Expand directory arguments to the minima files inside them.

    A directory contributes its sorted .txt/.json entries minus the
    _trace.json companions; explicit file arguments pass through untouched.
    """
    out = []
    for path in paths:
        p = Path(path)
        if not p.is_dir():
            out.append(path)
            continue
        for child in sorted(p.iterdir()):
            if child.suffix not in (".txt", ".json"):
                continue
            if child.name.endswith("_trace.json"):
                continue
            out.append(str(child))
    return out


def _cmd_report(args) -> int:
    named = []
    files = _report_inputs(args.files)
    if not files:
        print("flagtri: no complexes to report on", file=sys.stderr)
        return 1
    for path in files:
        loaded = read_complex(path)
        named.append((loaded.name, loaded.complex))
    bundle = build_report(named, args.out, args.stem)
    print(render_table(bundle.rows))
    print(f"\nwrote {bundle.csv_path}")
    for p in bundle.figure_paths:
        print(f"wrote {p}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagtri",
                     description="flag triangulations: verify, construct, "
                                 "search, report")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("verify", help="check invariants of facet files")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("construct", help="build a named complex")
    p.add_argument("name")
    p.add_argument("params", nargs="*", metavar="PARAM")
    p.add_argument("-o", "--output", metavar="FILE",
                   help="write here instead of stdout (.json switches format)")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("search", help="randomised minimisation from a seed")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--seed", type=int, required=True,
                   help="master RNG seed; rounds derive sub-seeds from it")
    p.add_argument("--target-f0", type=int, default=None,
                   help="blow-up target vertex count (default seed + 4)")
    p.add_argument("--objective", choices=[o.value for o in Objective],
                   default=Objective.VERTICES.value)
    p.add_argument("--cap", type=int, default=100,
                   help="archive entries kept per objective tier")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: FLAGTRI_WORKERS or 1)")
    p.add_argument("--out", metavar="DIR",
                   help="write archived minima and their traces here")
    p.add_argument("--progress", action="store_true",
                   help="print progress to stderr")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("report", help="tabulate invariants, write CSV and PNGs")
    p.add_argument("files", nargs="+", metavar="FILE_OR_DIR",
                   help="facet files, or archive directories whose minima "
                        "files are reported (trace companions are skipped)")
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--stem", default="report")
    p.set_defaults(fn=_cmd_report)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"flagtri: parse error: {exc}", file=sys.stderr)
        return 2
    except FlagtriError as exc:
        print(f"flagtri: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
