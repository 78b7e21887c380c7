"""Command-line interface.

    mhs-verify all [--json PATH] [--seed N] [--trials N] ...
    mhs-verify lemma {cartan|jet|extremal|gbc|theorem} [flags]
    mhs-verify spectrum --values "l1,l2,l3,l4" [--json PATH]
    mhs-verify curvature --values "l1,l2,l3,l4" [--check]

Exit codes: 0 when every check passes, 1 when any check fails (or the run
is inconclusive because an axiom was disabled), 2 for invalid input or
configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from .curvature import (
    closed_form_check,
    gbc_integrand_detail,
    riemann_from_spectrum,
    special_structure_predicates,
)
from .errors import ExactError, IdentityCheckError, PreconditionError
from .exact import parse_scalar
from .pipeline import (
    VerifierConfig,
    run_all,
    run_cartan,
    run_extremal,
    run_gbc,
    run_jet,
    run_theorem_proof,
)
from .report import VerificationReport
from .spectrum import Spectrum, invariants

__all__ = ["main", "build_parser"]


def _parse_injections(pairs: Optional[Sequence[str]]) -> Dict[str, str]:
    overrides: Dict[str, str] = {}
    for pair in pairs or ():
        name, sep, value = pair.partition("=")
        if not sep or not name or not value:
            raise PreconditionError(f"--inject expects NAME=VALUE, got {pair!r}")
        overrides[name.strip()] = value.strip()
    return overrides


def _config_from_args(args: argparse.Namespace) -> VerifierConfig:
    config = VerifierConfig()
    if getattr(args, "seed", None) is not None:
        config.seed = args.seed
    if getattr(args, "trials", None) is not None:
        if args.trials < 1:
            raise PreconditionError("--trials must be positive")
        config.trials = args.trials
    if getattr(args, "resolution", None) is not None:
        config.scan_resolution = args.resolution
    if getattr(args, "no_cheng_yang", False):
        config.use_cheng_yang = False
    if getattr(args, "no_munzner", False):
        config.use_munzner = False
    config.coefficient_overrides = _parse_injections(getattr(args, "inject", None))
    return config


def _deliver(payload: bytes, json_path: Optional[str], report_text: Optional[bytes]) -> None:
    """Write the JSON payload to a path (or stdout for '-'); otherwise print text."""
    if json_path is not None:
        if json_path == "-":
            sys.stdout.buffer.write(payload)
        else:
            with open(json_path, "wb") as fh:
                fh.write(payload)
    if report_text is not None and json_path != "-":
        sys.stdout.buffer.write(report_text)


def _finish_report(report: VerificationReport, args: argparse.Namespace) -> int:
    _deliver(report.emit("json"), getattr(args, "json", None), report.emit("text"))
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mhs-verify",
        description=(
            "Exact verification of the curvature identities, case analyses and "
            "pinching argument behind the rigidity of minimal hypersurfaces in the "
            "5-sphere with constant scalar curvature and zero Gauss curvature."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_report_flags(p: argparse.ArgumentParser, seeded: bool = True) -> None:
        p.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
        if seeded:
            p.add_argument("--seed", type=int, help="seed for the deterministic PRNG")
            p.add_argument("--trials", type=int, help="random trials per battery")

    p_all = sub.add_parser("all", help="run the complete verification battery")
    add_report_flags(p_all)
    p_all.add_argument("--no-cheng-yang", action="store_true", help="skip the Cheng-Yang axiom")
    p_all.add_argument("--no-munzner", action="store_true", help="skip the Muenzner axiom")
    p_all.add_argument("--resolution", type=int, help="oracle scan resolution")
    p_all.add_argument(
        "--inject",
        action="append",
        metavar="NAME=VALUE",
        help="fault-inject a closed-form coefficient (repeatable)",
    )

    p_lemma = sub.add_parser("lemma", help="verify a single lemma")
    lemma_sub = p_lemma.add_subparsers(dest="lemma", required=True)

    p_cartan = lemma_sub.add_parser("cartan", help="the isoparametric case analysis")
    add_report_flags(p_cartan, seeded=False)
    p_cartan.add_argument("--no-munzner", action="store_true")

    p_jet = lemma_sub.add_parser("jet", help="the multiplicity-two jet contradiction")
    add_report_flags(p_jet, seeded=False)
    p_jet.add_argument(
        "--lambda",
        dest="lambda_value",
        metavar="P/Q",
        help="positive rational eigenvalue parameter (default: 1, 1/2, 3)",
    )
    p_jet.add_argument("--inject", action="append", metavar="NAME=VALUE")

    p_ext = lemma_sub.add_parser("extremal", help="the constrained cubic bound")
    add_report_flags(p_ext)
    p_ext.add_argument("--s2", metavar="P/Q", help="squared norm on the scan circle")
    p_ext.add_argument("--resolution", type=int, help="oracle scan resolution")

    p_gbc = lemma_sub.add_parser("gbc", help="curvature closed forms and GBC identities")
    add_report_flags(p_gbc)
    p_gbc.add_argument("--inject", action="append", metavar="NAME=VALUE")

    p_thm = lemma_sub.add_parser("theorem", help="the six-step theorem chain")
    add_report_flags(p_thm)
    p_thm.add_argument("--no-cheng-yang", action="store_true")
    p_thm.add_argument("--inject", action="append", metavar="NAME=VALUE")

    p_spec = sub.add_parser("spectrum", help="invariants of a principal-curvature spectrum")
    p_spec.add_argument("--values", required=True, metavar="L1,L2,L3,L4")
    p_spec.add_argument("--json", metavar="PATH")

    p_curv = sub.add_parser("curvature", help="curvature tensors of a spectrum")
    p_curv.add_argument("--values", required=True, metavar="L1,L2,L3,L4")
    p_curv.add_argument("--check", action="store_true", help="emit only the identity residuals")
    p_curv.add_argument("--json", metavar="PATH")
    return parser


def _cmd_spectrum(args: argparse.Namespace) -> int:
    s = Spectrum.from_text(args.values)
    inv = invariants(s)
    payload = {
        "schema": 1,
        "values": [str(v) for v in s.values],
        "invariants": inv.as_dict(),
        "minimal": s.is_minimal,
    }
    text_lines = [f"spectrum: {s}"] + [
        f"  {name} = {value}" for name, value in inv.as_dict().items()
    ]
    text = ("\n".join(text_lines) + "\n").encode()
    _deliver(
        (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode(),
        args.json,
        text,
    )
    return 0


def _fmt_components(name: str, table, rank: int) -> List[str]:
    lines = []
    if rank == 4:
        indices = (
            (i, j, k, l)
            for i in range(4)
            for j in range(4)
            for k in range(4)
            for l in range(4)
        )
        for idx in indices:
            value = table[idx[0]][idx[1]][idx[2]][idx[3]]
            if value.sign() != 0:
                human = "".join(str(i + 1) for i in idx)
                lines.append(f"  {name}_{human} = {value}")
    else:
        for i in range(4):
            for j in range(4):
                value = table[i][j]
                if value.sign() != 0:
                    lines.append(f"  {name}_{i + 1}{j + 1} = {value}")
    return lines or [f"  {name}: all components zero"]


def _cmd_curvature(args: argparse.Namespace) -> int:
    s = Spectrum.from_text(args.values)
    point = riemann_from_spectrum(s)
    point.check_invariants()
    if args.check:
        residuals = closed_form_check(s)
        detail = gbc_integrand_detail(s)
        payload = {
            "schema": 1,
            "values": [str(v) for v in s.values],
            "residuals": {
                "scalar_curvature": str(residuals[0]),
                "ricci_norm": str(residuals[1]),
                "weyl_norm": str(residuals[2]),
                "gbc_two_route": str(detail.residual),
            },
        }
        lines = ["closed-form residuals (componentwise minus closed form):"] + [
            f"  {k} = {v}" for k, v in payload["residuals"].items()
        ]
        failed = any(r.sign() != 0 for r in residuals) or detail.residual.sign() != 0
        _deliver(
            (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode(),
            args.json,
            ("\n".join(lines) + "\n").encode(),
        )
        return 1 if failed else 0
    predicates = special_structure_predicates(s) if s.is_minimal else None
    lines = [f"spectrum: {s}", "nonzero Riemann components:"]
    lines += _fmt_components("R", point.riemann, 4)
    lines.append("Ricci tensor:")
    lines += _fmt_components("Ric", point.ricci, 2)
    lines.append("nonzero Weyl components:")
    lines += _fmt_components("W", point.weyl, 4)
    lines += [
        f"R_M = {point.r_m}",
        f"|Ric|^2 = {point.ric2}",
        f"|W|^2 = {point.w2}",
        f"|Ric_0|^2 = {point.ring2}",
    ]
    if predicates is not None:
        lines.append(
            "predicates: "
            f"locally_conformally_flat={predicates.locally_conformally_flat} "
            f"einstein={predicates.einstein} willmore={predicates.willmore}"
        )
    payload = {
        "schema": 1,
        "values": [str(v) for v in s.values],
        "scalars": {
            "R_M": str(point.r_m),
            "ric2": str(point.ric2),
            "w2": str(point.w2),
            "ring2": str(point.ring2),
        },
    }
    _deliver(
        (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode(),
        args.json,
        ("\n".join(lines) + "\n").encode(),
    )
    return 0


def _join_value_flags(argv: Sequence[str]) -> List[str]:
    """Rewrite ["--flag", "-1,..."] into ["--flag=-1,..."] so argparse does
    not mistake leading-minus values for options."""
    joined: List[str] = []
    skip = False
    for i, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if (
            arg in ("--values", "--lambda", "--s2", "--inject")
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
        ):
            joined.append(f"{arg}={argv[i + 1]}")
            skip = True
        else:
            joined.append(arg)
    return joined


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_value_flags(list(argv if argv is not None else sys.argv[1:])))
    try:
        if args.command == "all":
            return _finish_report(run_all(_config_from_args(args)), args)
        if args.command == "lemma":
            config = _config_from_args(args)
            if args.lemma == "cartan":
                return _finish_report(run_cartan(config), args)
            if args.lemma == "jet":
                lambdas = None
                if args.lambda_value is not None:
                    lam = parse_scalar(args.lambda_value)
                    if not lam.is_rational or lam.sign() <= 0:
                        raise PreconditionError("--lambda must be a positive rational")
                    lambdas = [args.lambda_value]
                return _finish_report(run_jet(config, lambdas), args)
            if args.lemma == "extremal":
                s2_values = (1, 6) if args.s2 is None else (parse_scalar(args.s2),)
                return _finish_report(run_extremal(config, s2_values), args)
            if args.lemma == "gbc":
                return _finish_report(run_gbc(config), args)
            if args.lemma == "theorem":
                return _finish_report(run_theorem_proof(config), args)
        if args.command == "spectrum":
            return _cmd_spectrum(args)
        if args.command == "curvature":
            return _cmd_curvature(args)
        raise PreconditionError(f"unknown command {args.command!r}")
    except IdentityCheckError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ExactError, PreconditionError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
