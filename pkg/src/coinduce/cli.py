"""Command-line front end.

    coinduce run --algebra A:1 --decomp triangular --module coinduced \\
                 --weights symbolic --engine both --format tex --out ops.tex

A job is a single structured JSON config file and/or flag overrides (flags
win).  Exit codes: 0 success, 2 config/parse error, 3 validation failure,
4 truncation overflow, 1 anything else.

`coinduce ledger` prints the calibration/convention ledger; `coinduce run
--format stats-only --report-dir DIR` writes the delimited statistics table
and the matplotlib figures next to it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Optional

from . import algfile
from .conventions import calibrate, render_ledger
from .decomp import DecompositionError, triangular, custom
from .graph import build_action_graph, path_integral
from .liealg import (AlgebraError, LieSuperAlgebra, build_gl, build_gl11,
                     build_simply_laced)
from .realize import (Realization, RepresentationError, TruncationOverflow,
                      make_adjoint, make_character, make_custom)
from .series import PhiH, SeriesEngine
from .verify import (EXPECTED_STATS, check_degree_bound, check_duality,
                     check_engine_equivalence, check_general_engine,
                     check_homomorphism, check_sl2_golden, check_statistics,
                     compute_statistics, render_json, render_text)

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_CONFIG = 2
EXIT_VALIDATION = 3
EXIT_TRUNCATION = 4


@dataclass
class JobConfig:
    algebra: str = "A:1"
    decomp: str = "triangular"
    module: str = "coinduced"
    weights: str = "symbolic"
    engine: str = "series"
    truncation: Optional[int] = None
    format: str = "tex"
    out: Optional[str] = None
    cache_dir: Optional[str] = None
    verify: bool = False
    stats: bool = False
    workers: int = 1
    report_dir: Optional[str] = None

    @classmethod
    def load(cls, path: Optional[str], overrides: dict) -> "JobConfig":
        data: dict = {}
        if path:
            with open(path) as fh:
                raw = json.load(fh)
            if not isinstance(raw, dict):
                raise ValueError("config file must hold a JSON object")
            known = {f.name for f in fields(cls)}
            unknown = set(raw) - known
            if unknown:
                raise ValueError(f"unknown config keys: {sorted(unknown)}")
            data.update(raw)
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)


# -- algebra / decomposition / representation resolution -------------------------


ALGFILE_SUFFIX = f".v{algfile.FORMAT_VERSION}.alg"


def cache_key(spec: str) -> Optional[str]:
    fam, _, rank = spec.partition(":")
    if fam in ("A", "D", "E") and rank.isdigit():
        return f"{fam}{rank}"
    if fam == "gl" and rank.isdigit():
        return f"gl{rank}"
    if spec == "gl11":
        return "gl1_1"
    return None


def build_algebra(spec: str) -> LieSuperAlgebra:
    fam, _, rank = spec.partition(":")
    if fam in ("A", "D", "E") and rank.isdigit():
        return build_simply_laced(fam, int(rank))
    if fam == "gl" and rank.isdigit():
        return build_gl(int(rank))
    if spec == "gl11":
        return build_gl11()
    raise ValueError(f"unknown algebra spec {spec!r}")


def cache_structure_constants(alg: LieSuperAlgebra, key: str, cache_dir: str) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, key + ALGFILE_SUFFIX)
    algfile.dump(alg, path)
    return path


def load_cached(key: str, cache_dir: Optional[str]) -> Optional[LieSuperAlgebra]:
    if not cache_dir:
        return None
    path = os.path.join(cache_dir, key + ALGFILE_SUFFIX)
    if not os.path.exists(path):
        return None
    try:
        return algfile.load(path)
    except (AlgebraError, ValueError) as ex:
        print(f"warning: corrupt cache entry {path} ({ex}); rebuilding", file=sys.stderr)
        return None


def resolve_algebra(cfg: JobConfig) -> LieSuperAlgebra:
    spec = cfg.algebra
    if spec.startswith("custom:"):
        return algfile.load(spec[len("custom:") :])
    key = cache_key(spec)
    if key and cfg.cache_dir:
        cached = load_cached(key, cfg.cache_dir)
        if cached is not None:
            return cached
    alg = build_algebra(spec)
    if key and cfg.cache_dir:
        cache_structure_constants(alg, key, cfg.cache_dir)
    return alg


def resolve_decomp(alg: LieSuperAlgebra, spec: str):
    if spec == "triangular":
        return triangular(alg)
    if spec.startswith("custom:"):
        with open(spec[len("custom:") :]) as fh:
            raw = json.load(fh)
        return custom(alg, raw["minus"], raw["h"])
    raise ValueError(f"unknown decomposition spec {spec!r}")


def resolve_rep(decomp, spec: str):
    if spec == "symbolic":
        return make_character(decomp, "symbolic")
    if spec == "adjoint":
        return make_adjoint(decomp)
    if spec.startswith("matrix:"):
        with open(spec[len("matrix:") :]) as fh:
            raw = json.load(fh)
        mats = {}
        from .realize import Matrix

        alg = decomp.alg
        for label, rows in raw["mats"].items():
            b = alg.index_of(label)
            mats[b] = Matrix(
                [[Fraction(x) for x in r] for r in rows], parity=alg.parity(b)
            )
        return make_custom(decomp, raw["vparities"], mats)
    try:
        values = [Fraction(x) for x in spec.split(",")]
    except ValueError:
        raise ValueError(f"unknown weight spec {spec!r}") from None
    return make_character(decomp, values)


# -- the run command ------------------------------------------------------------------


def run_job(cfg: JobConfig) -> int:
    from . import emit as emit_mod

    alg = resolve_algebra(cfg)
    decomp = resolve_decomp(alg, cfg.decomp)

    outputs: list[str] = []
    reports = []

    stats_block = None
    if cfg.format == "stats-only" or cfg.stats:
        stats_block = compute_statistics(decomp, workers=cfg.workers)
        rep_stats, stats_block = check_statistics(decomp, block=stats_block)
        if rep_stats.details or rep_stats.status != "pass":
            reports.append(rep_stats)

    if cfg.format == "stats-only":
        text = stats_block.tsv()
        _write(cfg.out, text)
        if cfg.report_dir:
            from .report import write_stats

            outputs += write_stats(stats_block, cfg.report_dir)
    else:
        engine = SeriesEngine(decomp, cfg.truncation)
        solver = None
        if cfg.engine == "graph":
            if not decomp.is_subalgebra:
                raise DecompositionError(
                    "the path-sum engine needs g_minus closed under the bracket;"
                    " use --engine series"
                )
            gr = build_action_graph(decomp)

            def solver(i: int) -> PhiH:
                pm = path_integral(gr, i, truncation=engine.truncation, workers=cfg.workers)
                from .liealg import Vec

                return PhiH(Vec.basis(i), pm.a_part, pm.b_part, engine.truncation,
                            pm.stats.truncated)

        if cfg.engine == "both":
            reports.append(check_engine_equivalence(decomp, engine.truncation))

        if cfg.weights == "none":
            solve = solver or (
                engine.phi_h_subalgebra if decomp.is_subalgebra else engine.phi_h_general
            )
            results = {i: solve(i) for i in range(alg.dim)}
            if cfg.format == "tex":
                text = emit_mod.emit_phi_h_tex(results, decomp)
            else:
                text = emit_mod.emit_phi_h_structured(results, decomp)
        else:
            rep = resolve_rep(decomp, cfg.weights)
            real = Realization(
                decomp, rep, cfg.module, cfg.truncation, engine, solver=solver
            )
            ops = {i: real.operator(i) for i in range(alg.dim)}
            if cfg.format == "tex":
                text = emit_mod.emit_tex(ops, decomp, cfg.module, rep.kind)
            else:
                text = emit_mod.emit_structured(ops, decomp, cfg.module, rep)
            if cfg.verify:
                reports.append(check_homomorphism(real))
        _write(cfg.out, text)

        if cfg.verify:
            reports.append(check_general_engine(decomp, engine.truncation))
            if alg.graded:
                reports.append(check_degree_bound(decomp, truncation=engine.truncation))

    if reports:
        print(render_text(reports), file=sys.stderr)
        if cfg.out:
            with open(cfg.out + ".verify.json", "w") as fh:
                fh.write(render_json(reports))
        if any(not r.ok for r in reports):
            return EXIT_VALIDATION
    return EXIT_OK


def _write(out: Optional[str], text: str) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- entry point -------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coinduce",
        description="Exact differential-operator realizations of (co)induced modules",
    )
    sub = p.add_subparsers(dest="command")
    runp = sub.add_parser("run", help="build operators / statistics for one job")
    runp.add_argument("--config", help="JSON job config; flags override its keys")
    runp.add_argument("--algebra", help="A:n | D:n | E:n | gl:n | gl11 | custom:FILE")
    runp.add_argument("--decomp", help="triangular | custom:FILE")
    runp.add_argument("--module", choices=["coinduced", "induced"])
    runp.add_argument(
        "--weights",
        help="symbolic | adjoint | w1,w2,... | matrix:FILE | none (phi/h series only)",
    )
    runp.add_argument("--engine", choices=["series", "graph", "both"])
    runp.add_argument("--truncation", type=int)
    runp.add_argument("--format", choices=["tex", "structured", "stats-only"])
    runp.add_argument("--out", help="output file (default: stdout)")
    runp.add_argument("--cache-dir", dest="cache_dir")
    runp.add_argument("--verify", action="store_const", const=True, default=None)
    runp.add_argument("--stats", action="store_const", const=True, default=None)
    runp.add_argument("--workers", type=int)
    runp.add_argument("--report-dir", dest="report_dir",
                      help="write stats.tsv and figures here")
    ledp = sub.add_parser("ledger", help="print the convention ledger")
    ledp.add_argument("--check", action="store_true",
                      help="re-run the calibration search first")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "ledger":
        if args.check:
            survivors = calibrate(full=True)
            if len(survivors) != 1:
                print(f"calibration is not unique: {survivors}", file=sys.stderr)
                return EXIT_VALIDATION
        sys.stdout.write(render_ledger())
        return EXIT_OK
    if args.command != "run":
        make_parser().print_help()
        return EXIT_CONFIG

    overrides = {
        k: getattr(args, k)
        for k in (
            "algebra", "decomp", "module", "weights", "engine", "truncation",
            "format", "out", "cache_dir", "verify", "stats", "workers", "report_dir",
        )
    }
    try:
        cfg = JobConfig.load(args.config, overrides)
    except (OSError, ValueError, TypeError) as ex:
        print(f"config error: {ex}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        return run_job(cfg)
    except TruncationOverflow as ex:
        print(f"truncation overflow: {ex}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (AlgebraError, DecompositionError, RepresentationError) as ex:
        print(f"validation failure: {ex}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as ex:
        print(f"config error: {ex}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as ex:
        print(f"i/o error: {ex}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
