"""Command-line front end: dimension tables, the verification suite, and the HH^{4*}(A_0) presentation."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

from . import bar, explicit, gsz, hochschild, resolution, yoneda
from .report import Report
from .scalars import divides_two_t_plus_one, is_prime

HARD_CAP = 12
CHECKS = ("complex", "minimality", "right-resolution", "koszul", "induced", "formulas",
          "image-maps", "bases", "center", "sigma", "ring", "nilpotent", "oracle")


@dataclass(frozen=True)
class RunConfig:
    Ts: tuple[int, ...]
    chars: tuple[int, ...]
    max_n: int
    emit: str = "csv"
    only: tuple[str, ...] = CHECKS
    wmax: int = 4


@dataclass(frozen=True)
class DimRecord:
    T: int
    char: int
    n: int
    dim_hh: int
    dim_ker: int
    dim_im: int
    formula_hh: int
    divides: bool
    match: bool


FIELDS = tuple(DimRecord.__dataclass_fields__)


# --- argument parsing ------------------------------------------------------------------------

def parse_int_set(text: str) -> tuple[int, ...]:
    """``"0..3"``, ``"0,2,5"`` or a mix such as ``"0..1,4"``; inclusive and sorted."""
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            a, b = part.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.update(range(lo, hi + 1))
        else:
            out.add(int(part))
    if not out or min(out) < 0:
        raise argparse.ArgumentTypeError(f"expected non-negative integers, got {text!r}")
    return tuple(sorted(out))


def _ints(text: str) -> tuple[int, ...]:
    try:
        return parse_int_set(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quiverhh", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, T, chars, max_n):
        sp.add_argument("--T", type=_ints, default=_ints(T), help=f"values of T, e.g. 0..3 or 0,2 (default {T})")
        sp.add_argument("--char", type=_ints, default=_ints(chars), help=f"characteristics, 0 = Q (default {chars})")
        sp.add_argument("--max-n", type=int, default=max_n, help=f"largest degree, inclusive (default {max_n})")
        sp.add_argument("--hard-cap", type=int, default=HARD_CAP, help=argparse.SUPPRESS)

    d = sub.add_parser("dims", help="HH^n dimensions against the closed formulas")
    common(d, "0..3", "0", 11)
    d.add_argument("--emit", choices=("csv", "json"), default="csv")

    v = sub.add_parser("verify", help="run the verification suite and print a JSON report")
    common(v, "0..1", "0,3", 10)
    v.add_argument("--only", type=lambda s: tuple(x.strip() for x in s.split(",") if x.strip()), default=CHECKS,
                   help="comma-separated subset of: " + ", ".join(CHECKS))
    v.add_argument("--wmax", type=int, default=4)

    r = sub.add_parser("ring", help="presentation of HH^{4*}(A_0)")
    r.add_argument("--wmax", type=int, default=4)
    r.add_argument("--emit", choices=("text", "json"), default="text")
    return p


def config_from_args(parser: argparse.ArgumentParser, args) -> RunConfig:
    bad = [c for c in args.char if c != 0 and not is_prime(c)]
    if bad:
        parser.error(f"characteristic must be 0 or prime: {bad}")
    if args.max_n < 0 or args.max_n > args.hard_cap:
        parser.error(f"--max-n must lie in 0..{args.hard_cap}")
    only = getattr(args, "only", CHECKS)
    unknown = [c for c in only if c not in CHECKS]
    if unknown:
        parser.error(f"unknown check(s) {unknown}; choose from {', '.join(CHECKS)}")
    return RunConfig(args.T, args.char, args.max_n, getattr(args, "emit", "json"), only, getattr(args, "wmax", 4))


# --- commands --------------------------------------------------------------------------------

def cmd_dims(config: RunConfig) -> list[DimRecord]:
    out = []
    for T in config.Ts:
        for p in config.chars:
            div = divides_two_t_plus_one(p, T)
            for n in range(config.max_n + 1):
                got = hochschild.cohomology_dimensions(T, n, p)
                formula = hochschild.formula_for_degree(T, n, p)
                out.append(DimRecord(T, p, n, got.hh, got.ker, got.im, formula.hh, div, got.hh == formula.hh))
    return out


def format_records(records: list[DimRecord], emit: str) -> str:
    if emit == "json":
        return json.dumps([asdict(r) for r in records], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in records:
        w.writerow([str(getattr(r, k)).lower() if isinstance(getattr(r, k), bool) else getattr(r, k) for k in FIELDS])
    return buf.getvalue()


def _formula_report(T: int, p: int, N: int) -> Report:
    rep = Report("formulas", "closed formulas for dim Im, dim Ker, dim HH^n", data={"T": T, "char": p, "N": N})
    for n in range(N + 1):
        got = hochschild.cohomology_dimensions(T, n, p)
        want = hochschild.formula_for_degree(T, n, p)
        rep.check(got == want, f"n={n}: computed {tuple(got)} vs formula {tuple(want)}")
    return rep


def _per_field(T: int, p: int, cfg: RunConfig) -> list[Report]:
    N = cfg.max_n
    reps: list[Report] = []
    want = set(cfg.only)
    if "complex" in want:
        reps.append(_anchored(resolution.verify_complex(T, max(N, 1), p), "(Q, ∂) is a complex"))
    if "minimality" in want:
        reps.append(_anchored(resolution.verify_minimality(T, max(N, 1), p), "∂ lands in rad Q + Q rad"))
    if "right-resolution" in want:
        reps.append(_anchored(gsz.verify_right_resolution(T, max(N, 2), p), "GSZ conditions (a)-(c)"))
    if "induced" in want:
        rep = Report("induced_right_complex", "A/rad ⊗ (Q, ∂) = (P, d)", data={"T": T, "char": p})
        for n in range(1, N + 1):
            rep.check(resolution.induced_right_complex(T, n, p)[1], f"n={n}: A/rad ⊗ ∂^n differs from d^n")
        reps.append(rep)
    if "formulas" in want:
        reps.append(_formula_report(T, p, N))
    if "image-maps" in want:
        rep = Report("image_maps", "tabulated images ψ∘∂", data={"T": T, "char": p})
        for n in range(N):
            rep.merge(explicit.verify_image_maps(T, n, p))
        reps.append(rep)
    if "bases" in want:
        rep = Report("explicit_bases", "explicit bases of Im, Ker and HH^n", data={"T": T, "char": p})
        for n in range(N + 1):
            rep.merge(explicit.verify_explicit_bases(T, n, p))
        reps.append(rep)
    if "center" in want:
        reps.append(_anchored(hochschild.verify_center(T, p), "HH^0(A_T) = Z(A_T) = K[X,Y]/(X^(T+1), XY, Y^(T+1))"))
    if "oracle" in want and T in bar.SUPPORTED:
        rep = Report("bar_oracle", "HH via the reduced bar complex", data={"T": T, "char": p, "dims": {}})
        for n in range(min(N, bar.SUPPORTED[T]) + 1):
            got = bar.bar_hh_dimension(T, n, p)
            res = hochschild.cohomology_dimensions(T, n, p).hh
            rep.data["dims"][n] = got
            rep.check(got == res, f"n={n}: bar {got} vs resolution {res}")
        reps.append(rep)
    if T == 0:
        if "sigma" in want:
            reps.append(_anchored(yoneda.verify_sigma_liftings(7, p), "liftings σ^k_j"))
        if "ring" in want:
            reps.append(_anchored(yoneda.verify_ring_presentation(cfg.wmax, p), "HH^{4*}(A_0) = K[z0..z4]/(6 quadrics)"))
        if "nilpotent" in want and p != 2:
            reps.append(_anchored(yoneda.verify_nilpotent_part(2, p), "nilpotence of HH^1, HH^2"))
    for r in reps:
        r.data.setdefault("T", T)
        r.data.setdefault("char", p)
    return reps


def _anchored(rep: Report, anchor: str) -> Report:
    rep.anchor = rep.anchor or anchor
    return rep


def cmd_verify(config: RunConfig) -> dict:
    reports: list[Report] = []
    if "koszul" in config.only and 0 in config.Ts:
        ok = gsz.check_koszul_linearity(max(config.max_n, 1))
        reports.append(Report("koszul_linearity", "A_0 is Koszul: g^n linear", ok, [] if ok else ["non-linear g^n"],
                              {"n_max": max(config.max_n, 1)}))
    for T in config.Ts:
        for p in config.chars:
            reports.extend(_per_field(T, p, config))
    return {
        "config": {"T": list(config.Ts), "char": list(config.chars), "max_n": config.max_n,
                   "only": list(config.only), "wmax": config.wmax},
        "passed": all(r.passed for r in reports),
        "checks": [r.as_dict() for r in reports],
    }


def cmd_ring(wmax: int = 4) -> dict:
    pres = yoneda.PRESENTATION
    rep = yoneda.verify_ring_presentation(wmax, solver_pairs=False)
    hilbert = {w: pres.hilbert(w) for w in range(wmax + 1)}
    dims = {w: hochschild.cohomology_dimensions(0, 4 * w).hh for w in range(wmax + 1)}
    return {
        "generators": [f"{g} = sum_i beta^(4,0)_(i,{k})" for k, g in enumerate(pres.generators)],
        "degree": 4,
        "relations": pres.relation_strings(),
        "hilbert": hilbert,
        "dim_HH4w": dims,
        "passed": rep.passed and hilbert == dims,
        "failures": rep.failures,
    }


def _ring_text(d: dict) -> str:
    lines = ["HH^{4*}(A_0) = K[z0..z4]/I, generators in degree 4:"]
    lines += [f"  {g}" for g in d["generators"]]
    lines.append(f"relations ({len(d['relations'])}):")
    lines += [f"  {r}" for r in d["relations"]]
    lines.append("w  hilbert  dim HH^{4w}")
    lines += [f"{w:<2} {d['hilbert'][w]:<8} {d['dim_HH4w'][w]}" for w in sorted(d["hilbert"])]
    lines.append("verified" if d["passed"] else "FAILED: " + "; ".join(d["failures"]))
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "ring":
        if args.wmax < 1:
            parser.error("--wmax must be >= 1")
        d = cmd_ring(args.wmax)
        sys.stdout.write(json.dumps(d, indent=2) + "\n" if args.emit == "json" else _ring_text(d))
        return 0 if d["passed"] else 1
    cfg = config_from_args(parser, args)
    if args.command == "dims":
        records = cmd_dims(cfg)
        sys.stdout.write(format_records(records, cfg.emit))
        return 0 if all(r.match for r in records) else 1
    if cfg.wmax < 1:
        parser.error("--wmax must be >= 1")
    report = cmd_verify(cfg)
    sys.stdout.write(json.dumps(report, indent=2, default=str) + "\n")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
