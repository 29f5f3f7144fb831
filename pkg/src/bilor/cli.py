"""Command line front end.

Every subcommand reads a form (``--form`` / ``--form-file``) unless it takes a
raw matrix, and prints one canonical JSON object (``--format table`` renders
the same data as indented text).  Exit status: 0 for data commands and passing
verdicts, 1 for failing verdicts, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import algebra, hessians, linalg, lorentzian, paths, stability, toeplitz
from .errors import BilorError, FormatError
from .forms import LinearForm, format_form, parse_form
from .verdict import fmt_rat, parse_rational

PUBLIC_COMMANDS = (
    "classify,toeplitz,hessian,hrr,sl,mixed-hrr,hilbert,sperner,annihilator,"
    "primitive,stable,normally-stable,pf,approximate,straighten"
)


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise FormatError(f"{name} must be an integer, got {raw!r}") from exc


def _minor_cap() -> int | None:
    return _env_int("BILOR_MINOR_CAP")


def _budget() -> int:
    return _env_int("BILOR_HALVING_BUDGET") or lorentzian.DEFAULT_BUDGET


def _parse_point(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise FormatError(f"expected a,b point, got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def _parse_points(text: str) -> list[tuple[Fraction, Fraction]]:
    chunks = [c for c in text.split(";") if c.strip()]
    return [_parse_point(c) for c in chunks]


def _parse_linear(text: str) -> LinearForm:
    a, b = _parse_point(text)
    return LinearForm(a, b)


def _parse_pointsets(text: str) -> dict[int, list[tuple[Fraction, Fraction]]]:
    """`0=1,1;2,1|1=1,1` maps degree 0 to [(1,1),(2,1)] and degree 1 to [(1,1)]."""
    out: dict[int, list[tuple[Fraction, Fraction]]] = {}
    for group in text.split("|"):
        group = group.strip()
        if not group:
            continue
        head, _, body = group.partition("=")
        try:
            j = int(head.strip())
        except ValueError as exc:
            raise FormatError(f"bad degree {head!r} in point sets") from exc
        if j in out:
            raise FormatError(f"degree {j} given twice in point sets")
        out[j] = _parse_points(body)
    if not out:
        raise FormatError("empty point sets")
    return out


def _load_text(inline: str | None, path: str | None, what: str) -> str:
    if (inline is None) == (path is None):
        raise FormatError(f"give exactly one of --{what} / --{what}-file")
    if inline is not None:
        return inline
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_form(args):
    return parse_form(_load_text(args.form, args.form_file, "form"))


def _matrix_json(rows) -> list[list[str]]:
    return [[fmt_rat(x) for x in row] for row in rows]


def _render_table(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}-")
                lines.extend(_render_table(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(v) -> str:
    if v is None:
        return "null"
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, list):
        return "[]" if not v else json.dumps(v)
    if isinstance(v, dict):
        return "{}"
    return str(v)


def _emit(args, payload: dict) -> None:
    if args.format == "table":
        sys.stdout.write("\n".join(_render_table(payload)) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def cmd_classify(args) -> int:
    form, conv = _load_form(args)
    lc = lorentzian.classify(form, args.max_order, _minor_cap())
    payload = {
        "command": "classify",
        "convention": conv,
        "form": format_form(form),
        "degree": form.degree,
        "order": lc.order,
        "order_strict": lc.order_strict,
        "per_order": [
            {
                "order": i,
                "strict": strict.to_json(),
                "lorentzian": loose.to_json(),
            }
            for i, (strict, loose) in enumerate(lc.per_order)
        ],
    }
    _emit(args, payload)
    return 0


def cmd_toeplitz(args) -> int:
    cap = _minor_cap()
    payload: dict = {"command": "toeplitz"}
    if args.matrix is not None or args.matrix_file is not None:
        if args.form is not None or args.form_file is not None:
            raise FormatError("give a form or a matrix, not both")
        dense = toeplitz.parse_matrix(
            _load_text(args.matrix, args.matrix_file, "matrix")
        )
        window = dense
    else:
        form, conv = _load_form(args)
        if args.order is None:
            raise FormatError("--order is required with a form input")
        window = toeplitz.from_form(form, args.order)
        payload["convention"] = conv
        payload["form"] = format_form(form)
        payload["order"] = args.order
        dense = window.to_dense()
    payload["matrix"] = _matrix_json(dense)
    payload["rank"] = toeplitz.rank(dense)
    payload["totally_positive"] = toeplitz.is_totally_positive(window).to_json()
    payload["totally_nonnegative"] = toeplitz.is_totally_nonnegative(window, cap).to_json()
    _emit(args, payload)
    return 0


def cmd_hessian(args) -> int:
    form, conv = _load_form(args)
    family = hessians.hessian_family(form, args.order)
    if (args.at is None) == (args.points is None):
        raise FormatError("give exactly one of --at / --points")
    if args.at is not None:
        a, b = _parse_point(args.at)
        matrix = hessians.evaluate_hessian(family, a, b)
        mode = "ordinary"
        points_json = [[fmt_rat(a), fmt_rat(b)]]
    else:
        pts = _parse_points(args.points)
        matrix = hessians.evaluate_mixed_hessian(family, pts)
        mode = "mixed"
        points_json = [[fmt_rat(x), fmt_rat(y)] for x, y in pts]
    payload = {
        "command": "hessian",
        "convention": conv,
        "form": format_form(form),
        "order": args.order,
        "mode": mode,
        "points": points_json,
        "matrix": _matrix_json(matrix),
        "det": fmt_rat(linalg.det(matrix)),
        "reversal_det": fmt_rat(hessians.reversal_det(matrix)),
        "signature": hessians.signature(matrix).to_json(),
    }
    _emit(args, payload)
    return 0


def _verdict_exit(args, payload: dict, verdict) -> int:
    _emit(args, payload)
    return 0 if verdict.passed else 1


def cmd_hrr(args) -> int:
    form, conv = _load_form(args)
    up_to = form.degree // 2 if args.up_to is None else args.up_to
    v = algebra.check_hrr(form, up_to, _parse_linear(args.ell))
    payload = {
        "command": "hrr",
        "convention": conv,
        "form": format_form(form),
        "ell": list(map(fmt_rat, _parse_linear(args.ell).point())),
        "verdict": v.to_json(),
    }
    return _verdict_exit(args, payload, v)


def cmd_sl(args) -> int:
    form, conv = _load_form(args)
    up_to = form.degree // 2 if args.up_to is None else args.up_to
    v = algebra.check_sl(form, up_to, _parse_linear(args.ell))
    payload = {
        "command": "sl",
        "convention": conv,
        "form": format_form(form),
        "ell": list(map(fmt_rat, _parse_linear(args.ell).point())),
        "verdict": v.to_json(),
    }
    return _verdict_exit(args, payload, v)


def cmd_mixed_hrr(args) -> int:
    form, conv = _load_form(args)
    up_to = form.degree // 2 if args.up_to is None else args.up_to
    if (args.cone is None) == (args.at_points is None):
        raise FormatError("give exactly one of --cone / --at-points")
    if args.cone is not None:
        generators = None
        if args.generators is not None:
            pts = _parse_points(args.generators)
            if len(pts) != 2:
                raise FormatError("--generators needs exactly two a,b pairs")
            generators = (LinearForm(*pts[0]), LinearForm(*pts[1]))
        v = algebra.check_mixed_hrr_cone(
            form, up_to, args.cone, generators, _minor_cap()
        )
        mode = {"cone": args.cone}
    else:
        sets = _parse_pointsets(args.at_points)
        v = algebra.check_mixed_hrr_at(form, up_to, sets)
        mode = {
            "points": {
                str(j): [[fmt_rat(a), fmt_rat(b)] for a, b in pts]
                for j, pts in sets.items()
            }
        }
    payload = {
        "command": "mixed-hrr",
        "convention": conv,
        "form": format_form(form),
        "mode": mode,
        "verdict": v.to_json(),
    }
    return _verdict_exit(args, payload, v)


def cmd_hilbert(args) -> int:
    form, conv = _load_form(args)
    prof = algebra.profile(form)
    payload = {
        "command": "hilbert",
        "convention": conv,
        "form": format_form(form),
        "hilbert": list(prof.hilbert),
        "sperner": prof.sperner,
        "socle_degree": prof.socle_degree,
    }
    _emit(args, payload)
    return 0


def cmd_sperner(args) -> int:
    form, conv = _load_form(args)
    payload = {
        "command": "sperner",
        "convention": conv,
        "form": format_form(form),
        "sperner": algebra.profile(form).sperner,
    }
    _emit(args, payload)
    return 0


def cmd_annihilator(args) -> int:
    form, conv = _load_form(args)
    f1, f2 = algebra.annihilator_generators(form)
    payload = {
        "command": "annihilator",
        "convention": conv,
        "form": format_form(form),
        "generators": [
            {"degree": g.degree, "text": g.text(), "coeffs": [fmt_rat(c) for c in g.coeffs]}
            for g in (f1, f2)
        ],
    }
    _emit(args, payload)
    return 0


def cmd_primitive(args) -> int:
    form, conv = _load_form(args)
    ells = _parse_points(args.ells) if args.ells else []
    basis = algebra.primitive_subspace(
        form,
        args.degree,
        _parse_linear(args.ell0),
        [LinearForm(a, b) for a, b in ells],
    )
    payload = {
        "command": "primitive",
        "convention": conv,
        "form": format_form(form),
        "degree": basis.degree,
        "basis": [[fmt_rat(x) for x in vec] for vec in basis.vectors],
        "expected_dim": basis.expected_dim,
        "matches": basis.matches,
    }
    _emit(args, payload)
    return 0


def cmd_stable(args) -> int:
    form, conv = _load_form(args)
    v = stability.is_stable(form)
    roots = None
    if not form.is_zero and all(x >= 0 for x in form.monomial_coeffs()):
        rc = stability.count_roots(stability.dehomogenize(form), form.degree)
        roots = rc.to_json()
    payload = {
        "command": "stable",
        "convention": conv,
        "form": format_form(form),
        "verdict": v.to_json(),
        "roots": roots,
    }
    return _verdict_exit(args, payload, v)


def cmd_normally_stable(args) -> int:
    from .forms import from_monomial_coeffs

    form, conv = _load_form(args)
    v = stability.is_normally_stable(form)
    tilde = from_monomial_coeffs(form.coeffs)
    roots = None
    if not form.is_zero and all(x >= 0 for x in form.coeffs):
        rc = stability.count_roots(stability.dehomogenize(tilde), form.degree)
        roots = rc.to_json()
    payload = {
        "command": "normally-stable",
        "convention": conv,
        "form": format_form(form),
        "verdict": v.to_json(),
        "roots": roots,
    }
    return _verdict_exit(args, payload, v)


def cmd_pf(args) -> int:
    form, conv = _load_form(args)
    v = stability.pf_window_check(form, args.window, _minor_cap())
    payload = {
        "command": "pf",
        "convention": conv,
        "form": format_form(form),
        "window": args.window,
        "verdict": v.to_json(),
    }
    return _verdict_exit(args, payload, v)


def cmd_approximate(args) -> int:
    form, conv = _load_form(args)
    epsilon = parse_rational(args.epsilon) if args.epsilon else None
    steps = lorentzian.approximate_tp(
        form,
        args.order,
        steps=args.steps,
        epsilon=epsilon,
        budget=_budget(),
        cap=_minor_cap(),
    )
    payload = {
        "command": "approximate",
        "convention": conv,
        "form": format_form(form),
        "order": args.order,
        "certified": True,
        "steps": [
            {
                "form": format_form(st.form),
                "distance": fmt_rat(st.distance),
                "rank_steps": [[fmt_rat(t), fmt_rat(u)] for t, u in st.rank_steps],
                "final_mix": None if st.final_mix is None else fmt_rat(st.final_mix),
            }
            for st in steps
        ],
    }
    _emit(args, payload)
    return 0


def cmd_straighten(args) -> int:
    from .forms import substitute

    form, conv = _load_form(args)
    change = lorentzian.straighten_from_hrr(
        form, _parse_linear(args.ell), args.order, _budget()
    )
    payload = {
        "command": "straighten",
        "convention": conv,
        "form": format_form(form),
        "order": args.order,
        "change": {
            "p": fmt_rat(change.p),
            "q": fmt_rat(change.q),
            "r": fmt_rat(change.r),
            "s": fmt_rat(change.s),
        },
        "image": format_form(substitute(form, change)),
        "certified": True,
    }
    _emit(args, payload)
    return 0


def cmd_verify_factorization(args) -> int:
    form, conv = _load_form(args)
    pts = _parse_points(args.points) if args.points else []
    v = paths.verify_factorization(form, args.order, pts)
    payload = {
        "command": "verify-factorization",
        "convention": conv,
        "form": format_form(form),
        "order": args.order,
        "points": [[fmt_rat(a), fmt_rat(b)] for a, b in pts],
        "verdict": v.to_json(),
    }
    return _verdict_exit(args, payload, v)


def _add_form_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--form", help="form text (see README for accepted shapes)")
    p.add_argument("--form-file", help="file holding the form text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bilor",
        description="Exact positivity and Lorentzian-order tests for bivariate forms.",
    )
    parser.add_argument(
        "--format", choices=("json", "table"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar=f"{{{PUBLIC_COMMANDS}}}")

    p = sub.add_parser("classify", help="strict/non-strict Lorentzian order")
    _add_form_args(p)
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("toeplitz", help="coefficient window, rank, TP/TN verdicts")
    _add_form_args(p)
    p.add_argument("--order", "--i", "-i", dest="order", type=int, default=None)
    p.add_argument("--matrix", help="raw matrix text `a,b;c,d` instead of a form")
    p.add_argument("--matrix-file")
    p.set_defaults(handler=cmd_toeplitz)

    p = sub.add_parser("hessian", help="Hessian matrix, determinants, signature")
    _add_form_args(p)
    p.add_argument("--order", "--i", "-i", dest="order", type=int, required=True)
    p.add_argument("--at", help="single evaluation point a,b")
    p.add_argument("--points", help="mixed evaluation points a,b;a,b;...")
    p.set_defaults(handler=cmd_hessian)

    p = sub.add_parser("hrr", help="ordinary Hodge-Riemann check at a linear form")
    _add_form_args(p)
    p.add_argument("--ell", required=True, help="linear form a,b")
    p.add_argument("--up-to", type=int, default=None)
    p.set_defaults(handler=cmd_hrr)

    p = sub.add_parser("sl", help="strong Lefschetz check at a linear form")
    _add_form_args(p)
    p.add_argument("--ell", required=True, help="linear form a,b")
    p.add_argument("--up-to", type=int, default=None)
    p.set_defaults(handler=cmd_sl)

    p = sub.add_parser("mixed-hrr", help="mixed Hodge-Riemann: cone-backed or point sets")
    _add_form_args(p)
    p.add_argument("--up-to", type=int, default=None)
    p.add_argument("--cone", choices=("open", "closed"))
    p.add_argument("--generators", help="cone generators a,b;a,b (defaults to standard)")
    p.add_argument("--at-points", help="per-degree points: 0=a,b;a,b|1=a,b")
    p.set_defaults(handler=cmd_mixed_hrr)

    p = sub.add_parser("hilbert", help="Hilbert function of the quotient algebra")
    _add_form_args(p)
    p.set_defaults(handler=cmd_hilbert)

    p = sub.add_parser("sperner", help="largest value of the Hilbert function")
    _add_form_args(p)
    p.set_defaults(handler=cmd_sperner)

    p = sub.add_parser("annihilator", help="the two annihilator generators")
    _add_form_args(p)
    p.set_defaults(handler=cmd_annihilator)

    p = sub.add_parser("primitive", help="primitive subspace for given linear data")
    _add_form_args(p)
    p.add_argument("--degree", "--j", "-j", dest="degree", type=int, required=True)
    p.add_argument("--ell0", required=True, help="distinguished linear form a,b")
    p.add_argument("--ells", default="", help="remaining linear forms a,b;a,b;...")
    p.set_defaults(handler=cmd_primitive)

    p = sub.add_parser("stable", help="homogeneous stability")
    _add_form_args(p)
    p.set_defaults(handler=cmd_stable)

    p = sub.add_parser("normally-stable", help="stability of the normalized companion")
    _add_form_args(p)
    p.set_defaults(handler=cmd_normally_stable)

    p = sub.add_parser("pf", help="total nonnegativity of all windows up to an order")
    _add_form_args(p)
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(handler=cmd_pf)

    p = sub.add_parser("approximate", help="certified strictly-Lorentzian approximants")
    _add_form_args(p)
    p.add_argument("--order", "--i", "-i", dest="order", type=int, required=True)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--epsilon", default=None, help="target sup-norm distance (rational)")
    p.set_defaults(handler=cmd_approximate)

    p = sub.add_parser("straighten", help="coordinate change from a Hodge-Riemann witness")
    _add_form_args(p)
    p.add_argument("--ell", required=True, help="linear form a,b")
    p.add_argument("--order", "--i", "-i", dest="order", type=int, required=True)
    p.set_defaults(handler=cmd_straighten)

    # developer command: entrywise band factorization of the mixed Hessian
    p = sub.add_parser("verify-factorization")
    _add_form_args(p)
    p.add_argument("--order", "--i", "-i", dest="order", type=int, required=True)
    p.add_argument("--points", default="", help="points a,b;a,b;... (d-2i of them)")
    p.set_defaults(handler=cmd_verify_factorization)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BilorError as exc:
        sys.stdout.write(
            json.dumps(
                {"error": {"code": exc.code, "message": str(exc)}},
                sort_keys=True,
                separators=(",", ":"),
            )
            + "\n"
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
