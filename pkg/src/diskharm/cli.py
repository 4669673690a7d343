"""Command-line front end.

Subcommands: construct, combine, verify, render, cohn.  Artifacts,
scenarios and reports are JSON; curve samples are CSV; figures are
SVG 1.1.  Exit codes: 0 pass, 2 usage error, 3 failed check,
4 inconclusive.  The HS_GRID_SCALE environment variable (integer >= 1)
multiplies all default grid densities.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from importlib import resources

from .maps import AnalyticFunction, FamilyParams, MonomialDilatation
from .poly import Polynomial, count_zeros_unit_disk
from .render import RenderSpec, boundary_csv, render_svg
from .shear import (
    HarmonicMap,
    LinCombSpec,
    combined_dilatation_eq5,
    lincomb,
    shear_construct,
)
from .verify import (
    GridSpec,
    UnknownScenario,
    VerificationReport,
    check_direction_convexity,
    check_hs_criterion,
    check_sense_preserving,
    check_wang_condition,
    find_dilatation_violation,
    theorem_gate,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILED = 3
EXIT_INCONCLUSIVE = 4

KNOWN_CHECKS = ("sense", "hs", "cvdir-imag", "cvdir-real", "wang", "gate", "witness")


class UsageError(ValueError):
    pass


def grid_scale() -> int:
    raw = os.environ.get("HS_GRID_SCALE", "1")
    try:
        scale = int(raw)
    except ValueError:
        raise UsageError(f"HS_GRID_SCALE must be an integer >= 1, got {raw!r}")
    if scale < 1:
        raise UsageError(f"HS_GRID_SCALE must be >= 1, got {scale}")
    return scale


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}")


def parse_dilatation(text: str) -> MonomialDilatation:
    """Parse '[-]z^n' or 'c*z^n' with complex c written as a+bi."""
    t = text.strip().replace(" ", "")
    m = re.fullmatch(r"(-?)z(?:\^(\d+))?", t)
    if m:
        coeff = -1.0 if m.group(1) else 1.0
        return MonomialDilatation(coeff, int(m.group(2) or 1))
    m = re.fullmatch(r"(.+?)\*z(?:\^(\d+))?", t)
    if m:
        coeff = parse_complex(m.group(1))
        if abs(coeff) > 1.0:
            raise UsageError(f"|coefficient| must be <= 1 in {text!r}")
        return MonomialDilatation(coeff, int(m.group(2) or 1))
    raise UsageError(f"cannot parse dilatation {text!r} (expected [-]z^n or c*z^n)")


def _part_params(part: dict) -> FamilyParams:
    family = part.get("family")
    try:
        if family == "alpha":
            return FamilyParams(family="alpha", alpha=float(part["alpha"]))
        if family == "theta":
            return FamilyParams(family="theta", theta=float(part["theta"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid part parameters: {exc}")
    raise UsageError(f"unknown family {family!r} (expected alpha or theta)")


def _build_part(part: dict):
    """(FamilyParams, MonomialDilatation, prevertex F, sheared map)."""
    params = _part_params(part)
    omega = parse_dilatation(part["omega"])
    F = params.prevertex()
    return params, omega, F, shear_construct(F, omega)


def build_map(artifact: dict):
    """Reconstruct (HarmonicMap, combined prevertex F, parts) from an
    artifact dict."""
    parts = [_build_part(p) for p in artifact["parts"]]
    if artifact["kind"] == "single":
        params, omega, F, f = parts[0]
        return f, F, parts
    t = float(artifact["t"])
    if not 0.0 <= t <= 1.0:
        raise UsageError(f"t must lie in [0, 1], got {t}")
    (_, _, F1, f1), (_, _, F2, f2) = parts
    f = lincomb(LinCombSpec(f1=f1, f2=f2, t=t))

    def F_value(z):
        return t * F1.value_at(z) + (1.0 - t) * F2.value_at(z)

    def F_deriv(z):
        return t * F1.derivative_at(z) + (1.0 - t) * F2.derivative_at(z)

    F = AnalyticFunction(F_value, F_deriv, f"lincomb(t={t:g})")
    return f, F, parts


def _normalization_block(f: HarmonicMap) -> dict:
    f0 = complex(f(0.0))
    hp0 = complex(f.h.derivative_at(0.0))
    gp0 = complex(f.g.derivative_at(0.0))
    return {
        "f0": [f0.real, f0.imag],
        "hprime0": [hp0.real, hp0.imag],
        "gprime0": [gp0.real, gp0.imag],
    }


def _poly_json(p: Polynomial):
    return [[c.real, c.imag] for c in p.coeffs]


def make_single_artifact(part: dict) -> dict:
    _, _, _, f = _build_part(part)
    return {
        "version": 1,
        "kind": "single",
        "parts": [part],
        "normalization": _normalization_block(f),
    }


def make_combination_artifact(part1: dict, part2: dict, t: float) -> dict:
    if not 0.0 <= t <= 1.0:
        raise UsageError(f"t must lie in [0, 1], got {t}")
    art = {
        "version": 1,
        "kind": "combination",
        "parts": [part1, part2],
        "t": t,
    }
    f, _, parts = build_map(art)
    art["normalization"] = _normalization_block(f)
    (p1, w1, _, _), (p2, w2, _, _) = parts
    if p1.family == "alpha" and p2.family == "alpha":
        rat = combined_dilatation_eq5(w1, w2, p1.alpha, p2.alpha, t)
        art["rational_dilatation"] = {
            "numerator": _poly_json(rat.numerator),
            "denominator": _poly_json(rat.denominator),
        }
    return art


def _write_json(path: str, payload: dict):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _load_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# check runner


def run_checks(
    artifact: dict,
    checks: list[str],
    scale: int = 1,
    cvdir_radii=(0.5, 0.9),
) -> list[VerificationReport]:
    f, F, parts = build_map(artifact)
    grid = GridSpec(radii=40 * scale, angles=144 * scale, r_max=0.95)
    n_samples = 512 * scale

    prediction = None
    if any(c in ("gate", "witness") for c in checks):
        prediction = _gate_prediction(artifact, parts)

    reports = []
    for name in checks:
        if name == "sense":
            reports.append(check_sense_preserving(f, grid))
        elif name == "hs":
            reports.append(check_hs_criterion(F, grid))
        elif name in ("cvdir-imag", "cvdir-real"):
            direction = "imaginary_axis" if name == "cvdir-imag" else "real_axis"
            for r in cvdir_radii:
                reports.append(
                    check_direction_convexity(
                        f, r=r, n_samples=n_samples, direction=direction
                    )
                )
        elif name == "wang":
            f1 = parts[0][3]
            f2 = parts[-1][3]
            reports.append(check_wang_condition(f1, f2, grid))
        elif name == "gate":
            reports.append(_gate_report(prediction))
        elif name == "witness":
            reports.append(_witness_report(f, prediction))
        else:
            raise UsageError(
                f"unknown check {name!r} (known: {', '.join(KNOWN_CHECKS)})"
            )
    return reports


def _gate_prediction(artifact: dict, parts):
    if artifact["kind"] != "combination":
        return None
    (p1, w1, _, _), (p2, w2, _, _) = parts
    triple1 = (p1.family, p1.param, w1)
    triple2 = (p2.family, p2.param, w2)
    try:
        return theorem_gate(triple1, triple2, float(artifact["t"]))
    except UnknownScenario as exc:
        return str(exc)


def _gate_report(prediction) -> VerificationReport:
    if prediction is None or isinstance(prediction, str):
        note = prediction or "gate applies to combinations only"
        return VerificationReport(
            check_name="gate", verdict="inconclusive", extremal_value=0.0, notes=note
        )
    verdict = "holds" if prediction.prediction in ("holds", "violation") else "inconclusive"
    return VerificationReport(
        check_name="gate",
        verdict=verdict,
        extremal_value=0.0,
        notes=f"{prediction.theorem}: predicts {prediction.prediction} "
        f"({prediction.rationale})",
    )


def _witness_report(f: HarmonicMap, prediction) -> VerificationReport:
    witness = find_dilatation_violation(f.omega)
    found = witness is not None
    value = float(abs(f.omega(witness))) if found else 0.0
    predicted = prediction.prediction if hasattr(prediction, "prediction") else None
    if predicted == "violation":
        verdict = "holds" if found else "inconclusive"
    elif predicted == "holds":
        verdict = "fails" if found else "holds"
    else:
        verdict = "holds" if found else "inconclusive"
    return VerificationReport(
        check_name="witness",
        verdict=verdict,
        extremal_value=value,
        witness=witness,
        notes=f"gate prediction: {predicted}; witness {'found' if found else 'not found'}",
    )


def _exit_code(reports) -> int:
    if any(r.verdict == "fails" for r in reports):
        return EXIT_FAILED
    if any(r.verdict == "inconclusive" for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# scenarios


def scenario_dir_files(scenario_dir: str | None):
    if scenario_dir is not None:
        names = sorted(os.listdir(scenario_dir))
        return [
            (n, os.path.join(scenario_dir, n)) for n in names if n.endswith(".json")
        ]
    pkg = resources.files("diskharm").joinpath("scenarios")
    return sorted((p.name, p) for p in pkg.iterdir() if p.name.endswith(".json"))


def _scenario_artifacts(scenario: dict):
    """Expand a scenario into (label, artifact) pairs."""
    kind = scenario["kind"]
    if kind == "single":
        return [(scenario["name"], make_single_artifact(scenario["parts"][0]))]
    if kind == "combination":
        p1, p2 = scenario["parts"]
        return [
            (
                scenario["name"],
                make_combination_artifact(p1, p2, float(scenario["t"])),
            )
        ]
    if kind == "sweep":
        out = []
        for a1, a2, t in scenario["tuples"]:
            p1 = {"family": "alpha", "alpha": a1, "omega": scenario["omega1"]}
            p2 = {"family": "alpha", "alpha": a2, "omega": scenario["omega2"]}
            label = f"{scenario['name']}[a1={a1:g},a2={a2:g},t={t:g}]"
            out.append((label, make_combination_artifact(p1, p2, float(t))))
        return out
    raise UsageError(f"unknown scenario kind {kind!r}")


def run_scenario(scenario: dict, scale: int):
    results = []
    radii = tuple(scenario.get("cvdir_radii", (0.5, 0.9)))
    for label, artifact in _scenario_artifacts(scenario):
        reports = run_checks(artifact, scenario["checks"], scale, radii)
        results.append((label, reports))
    return results


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    part = {"family": args.family, "omega": args.omega}
    if args.family == "alpha":
        if args.alpha is None:
            raise UsageError("--alpha is required for the alpha family")
        part["alpha"] = args.alpha
    else:
        if args.theta is None:
            raise UsageError("--theta is required for the theta family")
        part["theta"] = args.theta
    artifact = make_single_artifact(part)
    _write_json(args.out, artifact)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_combine(args) -> int:
    a1 = _load_json(args.in1)
    a2 = _load_json(args.in2)
    for a, src in ((a1, args.in1), (a2, args.in2)):
        if a.get("kind") != "single":
            raise UsageError(f"{src} is not a single-map artifact")
    artifact = make_combination_artifact(a1["parts"][0], a2["parts"][0], args.t)
    _write_json(args.out, artifact)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    scale = grid_scale()
    if args.all:
        all_reports = []
        payload = {"scenarios": []}
        for name, path in scenario_dir_files(args.scenario_dir):
            scenario = json.loads(
                path.read_text() if hasattr(path, "read_text") else open(path).read()
            )
            for label, reports in run_scenario(scenario, scale):
                verdicts = {r.check_name: r.verdict for r in reports}
                ok = _exit_code(reports) == EXIT_OK
                print(f"{'PASS' if ok else 'FAIL'} {label}: {verdicts}")
                payload["scenarios"].append(
                    {"name": label, "reports": [r.to_dict() for r in reports]}
                )
                all_reports.extend(reports)
        code = _exit_code(all_reports)
        payload["exit_code"] = code
        if args.report:
            _write_json(args.report, payload)
        return code

    if not args.artifact:
        raise UsageError("either --artifact or --all is required")
    artifact = _load_json(args.artifact)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    for c in checks:
        if c not in KNOWN_CHECKS:
            raise UsageError(f"unknown check {c!r} (known: {', '.join(KNOWN_CHECKS)})")
    reports = run_checks(artifact, checks, scale)
    for r in reports:
        print(f"{r.check_name}: {r.verdict} (extremal={r.extremal_value:.6g})")
    code = _exit_code(reports)
    if args.report:
        _write_json(
            args.report,
            {
                "artifact": args.artifact,
                "reports": [r.to_dict() for r in reports],
                "exit_code": code,
            },
        )
    return code


def cmd_render(args) -> int:
    artifact = _load_json(args.artifact)
    f, _, _ = build_map(artifact)
    spec = RenderSpec(
        rings=args.rings,
        rays=args.rays,
        r_max=args.r_max,
        samples_per_curve=args.samples_per_curve,
    )
    svg = render_svg(f, spec)
    csv = boundary_csv(f, spec)
    csv_path = os.path.splitext(args.out)[0] + ".csv"
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv)
    except OSError as exc:
        raise UsageError(f"cannot write output: {exc}")
    print(f"wrote {args.out} and {csv_path}")
    return EXIT_OK


def cmd_cohn(args) -> int:
    coeffs = [parse_complex(c) for c in args.coeffs.split(",")]
    p = Polynomial(coeffs)
    if p.degree < 1:
        raise UsageError("need a polynomial of degree >= 1")
    zc = count_zeros_unit_disk(p)
    print(
        json.dumps(
            {
                "degree": p.degree,
                "inside": zc.inside,
                "on_circle": zc.on_circle,
                "outside": zc.outside,
                "method": zc.method,
            },
            sort_keys=True,
        )
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diskharm",
        description="Construct, combine, verify and render planar harmonic "
        "mappings of the unit disk.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="shear a prevertex map by a dilatation")
    c.add_argument("--family", choices=("alpha", "theta"), required=True)
    c.add_argument("--alpha", type=float)
    c.add_argument("--theta", type=float)
    c.add_argument("--omega", required=True, help="[-]z^n or c*z^n")
    c.add_argument("--out", default="artifact.json")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("combine", help="linear combination of two artifacts")
    c.add_argument("--in1", required=True)
    c.add_argument("--in2", required=True)
    c.add_argument("--t", type=float, required=True)
    c.add_argument("--out", default="combination.json")
    c.set_defaults(func=cmd_combine)

    c = sub.add_parser("verify", help="run verification checks")
    c.add_argument("--artifact")
    c.add_argument("--checks", default="sense,hs,cvdir-imag")
    c.add_argument("--all", action="store_true", help="run the bundled corpus")
    c.add_argument("--scenario-dir")
    c.add_argument("--report")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("render", help="render the mesh image as SVG + CSV")
    c.add_argument("--artifact", required=True)
    c.add_argument("--rings", type=int, default=10)
    c.add_argument("--rays", type=int, default=24)
    c.add_argument("--r-max", type=float, default=0.95)
    c.add_argument("--samples-per-curve", type=int, default=256)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_render)

    c = sub.add_parser("cohn", help="count zeros of a polynomial in |z| < 1")
    c.add_argument(
        "--coeffs",
        required=True,
        help="comma-separated ascending coefficients, complex as a+bi",
    )
    c.set_defaults(func=cmd_cohn)
    return ap


def _fuse_dash_values(argv):
    # argparse would read leading-dash values ('--omega -z',
    # '--coeffs -0.25,0,1') as options; fuse them with their flag.
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--omega", "--coeffs") and i + 1 < len(argv):
            out.append(argv[i] + "=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(
        _fuse_dash_values(sys.argv[1:] if argv is None else list(argv))
    )
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
