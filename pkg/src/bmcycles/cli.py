"""Command line driver: ``bmcycles cycle | verify | nabla``.

Exit codes: 0 ok, 1 malformed input, 2 bound violation without override,
3 a checked identity or condition fails, 4 undecidable at the given precision.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from .asymptotics import (
    N_CAP,
    antisym_difference,
    degree_estimate,
    difference_norm_sequence,
)
from .coefficients import (
    BoundViolation,
    CycleCoefficients,
    HodgeType,
    NoTwistingElement,
    bm_coefficients,
    check_bounds,
    cycle_report,
    parse_weight,
)
from .grlattice import (
    EConfig,
    in_nabla,
    matrix_from_json,
    psi_of_frobenius,
    relative_position,
    wedge_condition,
)
from .rootdata import WeylCapExceeded, build_root_datum
from .series import PrecisionError

OK, MALFORMED, BOUND, IDENTITY, UNDECIDABLE = 0, 1, 2, 3, 4


class Malformed(Exception):
    pass


def _dump(obj, out):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(w):
    return ",".join(str(x) for x in w)


def _load_config(path):
    if not path:
        return {}
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise Malformed(f"cannot read config {path}: {exc}") from exc


def _parse_group(value):
    if isinstance(value, dict):
        return value
    v = str(value).strip()
    if v.startswith("{"):
        return json.loads(v)
    if v.endswith(".json"):
        return json.loads(Path(v).read_text())
    if "," in v:
        t, n = v.split(",", 1)
        return (t.strip(), int(n))
    return v


def _parse_mus(value):
    if value is None:
        return None
    if isinstance(value, str):
        value = [value]
    items = []
    for v in value:
        if isinstance(v, str):
            items.extend(p for p in v.replace(";", " ").split() if p)
        else:
            items.append(v)
    return tuple(parse_weight(v) for v in items)


def _setting(args, cfg, name, key=None, default=None):
    v = getattr(args, name, None)
    if v is not None and v is not False:
        return v
    return cfg.get(key or name, default)


def _hodge_inputs(args, cfg):
    group = _setting(args, cfg, "group")
    if group is None:
        raise Malformed("missing group")
    rd = build_root_datum(_parse_group(group))
    mus = _parse_mus(_setting(args, cfg, "mu"))
    if not mus:
        raise Malformed("missing --mu")
    e = int(_setting(args, cfg, "e", default=len(mus)))
    h = HodgeType(e, mus, int(_setting(args, cfg, "char", default=0)), int(_setting(args, cfg, "nu", default=1)))
    for m in h.mus:
        if len(m) != rd.dim:
            raise Malformed(f"cocharacter {_fmt(m)} should have {rd.dim} entries")
    return rd, h


# -- cycle ----------------------------------------------------------------------

def cmd_cycle(args) -> int:
    cfg = _load_config(args.config)
    rd, h = _hodge_inputs(args, cfg)
    override = bool(args.override_bounds or cfg.get("override_bounds", False))
    gate = _setting(args, cfg, "gate", default="all")
    bounds = check_bounds(h, rd)
    passed = bounds.gate(gate)
    cc = None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cc = bm_coefficients(h, rd, override=True, oracle=bool(args.oracle or cfg.get("oracle", False)))
    report = cycle_report(h, rd, cc, bounds)
    report["group"] = _group_echo(rd)
    report["gate_checked"] = gate
    if not passed and not override:
        report["status"] = "error"
        report["reason"] = f"bound violation: gate {gate} fails"
        report.pop("coefficients", None)
        report.pop("leading_term", None)
        _dump(report, args.output)
        return BOUND
    report["status"] = "ok" if passed else "ok (bounds overridden)"
    _dump(report, args.output)
    return OK


def _group_echo(rd):
    return {"name": rd.name, **rd.describe()} if rd.name else rd.describe()


# -- verify ---------------------------------------------------------------------

def _load_coeffs(path, h, rd):
    try:
        d = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise Malformed(f"cannot read coefficients file {path}: {exc}") from exc
    if isinstance(d.get("coefficients"), list):
        coeffs = {parse_weight(r["lambda"]): int(r["m"]) for r in d["coefficients"]}
    else:
        coeffs = {parse_weight(k): int(v) for k, v in d["coefficients"].items()}
    if "rho" in d:
        rho = parse_weight(d["rho"])
    else:
        from .rootdata import twisting_element
        rho = twisting_element(rd)
        if rho is None:
            raise NoTwistingElement()
    return CycleCoefficients(dict(sorted(coeffs.items(), reverse=True)), h, tuple(rho))


def cmd_verify(args) -> int:
    cfg = _load_config(args.config)
    rd, h = _hodge_inputs(args, cfg)
    n_max = _setting(args, cfg, "n_max")
    if n_max is None:
        n_max = 8 if rd.dim <= 2 else 4
    n_max = int(n_max)
    if not 1 <= n_max <= N_CAP:
        raise Malformed(f"n_max must lie in 1..{N_CAP}")
    coeffs_file = _setting(args, cfg, "coeffs_file")
    if coeffs_file:
        cc = _load_coeffs(coeffs_file, h, rd)
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            cc = bm_coefficients(h, rd, override=True)
    report = {"hodge_type": h.to_json(), "rho": _fmt(cc.rho),
              "coefficients": {_fmt(k): v for k, v in cc.coeffs.items()}, "identity": []}
    for n in range(1, min(3, n_max) + 1):
        diff = antisym_difference(h, cc, n, rd)
        if diff:
            w, c = diff.sorted_terms()[-1]
            report["identity"].append({"n": n, "holds": False, "differing_monomial": _fmt(w), "difference": c})
            report["status"] = "error"
            report["reason"] = f"antisymmetrized identity fails at n={n}"
            _dump(report, args.output)
            sys.stderr.write(f"identity fails at n={n}: coefficient {c} at e({_fmt(w)})\n")
            return IDENTITY
        report["identity"].append({"n": n, "holds": True})
    seq = difference_norm_sequence(h, cc, n_max, rd)
    d = h.e * len(rd.positive_roots)
    report["norms"] = seq
    if len(seq) < d + 2:
        report["degree"] = {"verdict": "insufficient data", "d": d, "consistent": None}
        report["status"] = "ok"
        _dump(report, args.output)
        return OK
    verdict = degree_estimate(seq, d)
    report["degree"] = verdict.to_json()
    if not verdict.consistent:
        report["status"] = "error"
        report["reason"] = "difference norms not consistent with the degree bound"
        _dump(report, args.output)
        return IDENTITY
    report["status"] = "ok"
    _dump(report, args.output)
    return OK


# -- nabla ----------------------------------------------------------------------

def cmd_nabla(args) -> int:
    cfg = _load_config(args.config)
    path = _setting(args, cfg, "matrix")
    if not path:
        raise Malformed("missing --matrix")
    try:
        X = matrix_from_json(json.loads(Path(path).read_text()))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise Malformed(f"cannot read matrix file {path}: {exc}") from exc
    e = _setting(args, cfg, "e")
    special = bool(args.special or cfg.get("special", False))
    pis = _setting(args, cfg, "pis")
    if special and pis:
        raise Malformed("--special and --pis are exclusive")
    if pis is not None and not special:
        if isinstance(pis, str):
            pis = [p for p in pis.replace(";", ",").split(",") if p.strip()]
        pis = [Fraction(str(p).strip()) for p in pis]
        ec = EConfig.generic(pis, X.field)
        if e is not None and int(e) != ec.e:
            raise Malformed("--e disagrees with the number of points")
    else:
        if e is None:
            raise Malformed("missing --e")
        ec = EConfig.special_fibre(int(e), X.field)
    mus = _parse_mus(_setting(args, cfg, "mu"))
    report = {"field": repr(X.field), "size": X.n, "precision": X.precision, "e": ec.e,
              "special": ec.special, "checks": {}}
    checks = report["checks"]
    ok = True
    try:
        L = psi_of_frobenius(X, ec)
        checks["determinant_on_E"] = True
    except ValueError as exc:
        checks["determinant_on_E"] = False
        report["reason"] = str(exc)
        ok = False
        L = None
    checks["nabla"] = in_nabla(X, ec)
    ok &= checks["nabla"]
    if L is not None:
        if ec.special:
            report["position"] = _fmt(relative_position(L))
        else:
            report["position"] = {_fmt_scalar(p): _fmt(relative_position(L, p)) for p in ec.pis}
    if mus:
        if len(mus) != ec.e:
            raise Malformed("--mu needs one cocharacter per point")
        checks["wedge"] = wedge_condition(X, mus, ec)
        ok &= checks["wedge"]
    report["status"] = "ok" if ok else "fail"
    _dump(report, args.output)
    return OK if ok else IDENTITY


def _fmt_scalar(p):
    from .fields import format_scalar
    return str(format_scalar(p))


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bmcycles", description="Cycle coefficients and lattice checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config file; flags override its keys")
        p.add_argument("--output", help="write the JSON report here instead of stdout")

    def hodge(p):
        p.add_argument("--group", help="e.g. GL2, 'GL,3', a JSON group spec or a .json file")
        p.add_argument("--e", type=int)
        p.add_argument("--mu", nargs="+", help="cocharacters as comma-separated integers")
        p.add_argument("--char", type=int, help="residue characteristic p (0 = no bound)")
        p.add_argument("--nu", type=int)

    c = sub.add_parser("cycle", help="cycle coefficients with bound gates")
    common(c)
    hodge(c)
    c.add_argument("--override-bounds", action="store_true")
    c.add_argument("--gate", choices=["A1", "A2", "nu", "all"])
    c.add_argument("--oracle", action="store_true", help="use character products instead of Brauer-Klimyk")
    c.set_defaults(func=cmd_cycle)

    v = sub.add_parser("verify", help="check the antisymmetrized identity and growth")
    common(v)
    hodge(v)
    v.add_argument("--n-max", dest="n_max", type=int)
    v.add_argument("--coeffs-file", dest="coeffs_file")
    v.set_defaults(func=cmd_verify)

    nb = sub.add_parser("nabla", help="lattice checks for a matrix file")
    common(nb)
    nb.add_argument("--matrix")
    nb.add_argument("--e", type=int)
    nb.add_argument("--special", action="store_true")
    nb.add_argument("--pis", help="comma-separated distinct points")
    nb.add_argument("--mu", nargs="+")
    nb.set_defaults(func=cmd_nabla)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrecisionError as exc:
        _dump({"status": "error", "reason": f"undecidable at this precision: {exc}"}, None)
        return UNDECIDABLE
    except NoTwistingElement:
        _dump({"status": "error", "reason": "no twisting element"}, None)
        return MALFORMED
    except BoundViolation as exc:
        _dump({"status": "error", "reason": str(exc)}, None)
        return BOUND
    except (Malformed, ValueError, KeyError, WeylCapExceeded, json.JSONDecodeError) as exc:
        _dump({"status": "error", "reason": f"malformed input: {exc}"}, None)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
