"""Command-line interface: ``alexcoh h3 | h2 | verify | sweep``.

Exit codes: 0 success, 1 verification negative, 2 input error,
3 cross-check disagreement.
"""
from __future__ import annotations

import json
import sys
import time
from typing import Any

import click

from . import _kernels
from .cocycles import enumerate_I, enumerate_J2, parse_spec, realize
from .complex import ComplexCtx, delta
from .errors import AlexcohError
from .gf import CATALOG, GF, Omega, catalog_field, catalog_orders, format_element, make_field, prime_field
from .oracle import cross_check
from .polyring import in_Cn_q

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3
DEFAULT_SWEEP_MAX_Q = 16


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def _parse_modulus(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad modulus {text!r}: expected comma separated integers") from exc


def build_field(p: int | None, modulus: str | None, prime: bool, q: int | None) -> GF:
    if q is not None:
        if p is not None or modulus is not None or prime:
            raise InputError("--q cannot be combined with --p/--modulus/--prime")
        if q in CATALOG:
            return catalog_field(q)
        return prime_field(q)
    if p is None:
        raise InputError("give --q, or --p with --modulus or --prime")
    if prime:
        if modulus is not None:
            raise InputError("--prime and --modulus are exclusive")
        return prime_field(p)
    if modulus is None:
        raise InputError("--p needs --modulus or --prime")
    return make_field(p, _parse_modulus(modulus))


def field_report(field: GF) -> dict:
    return {"p": field.p, "q": field.q, "modulus": list(field.modulus)}


def omega_report(omega: Omega) -> dict:
    return {"value": str(omega), "order": omega.order}


def _ctx(field: GF, omega_text: str) -> ComplexCtx:
    return ComplexCtx.create(field, omega_text)


def _emit(report: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2)
    else:
        text = _as_text(report)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    click.echo(text)


def _fmt_value(v: Any) -> str:
    if isinstance(v, list):
        return ", ".join(str(x) for x in v) if v else "-"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_fmt_value(x)}" for k, x in sorted(v.items()))
    if v is None:
        return "-"
    return str(v)


def _as_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if report.get("field"):
        lines.append(f"field: {_fmt_value(report['field'])}")
    if report.get("omega"):
        lines.append(f"omega: {_fmt_value(report['omega'])}")
    result = report["result"]
    if report["command"] == "sweep":
        header = ("q", "omega", "order", "H2", "|J2|", "H3", "|I|", "agree")
        rows = [header] + [
            (r["q"], r["omega"], r["order"], r["h2"], r["j2_size"], r["h3"], r["i_size"], r["agree"])
            for r in result["rows"]
        ]
        widths = [max(len(str(r[k])) for r in rows) for k in range(len(header))]
        for r in rows:
            lines.append("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())
    else:
        for k in sorted(result):
            if k == "expanded":
                lines.append("expanded:")
                for spec, poly in result[k].items():
                    lines.append(f"  {spec} = {poly}")
            else:
                lines.append(f"{k}: {_fmt_value(result[k])}")
    if report.get("oracle") is not None:
        lines.append(f"oracle: {_fmt_value(report['oracle'])}")
    if report.get("agree") is not None:
        lines.append(f"agree: {report['agree']}")
    lines.append(f"timing_ms: {report['timing_ms']}")
    return "\n".join(lines)


def _report(command: str, field: GF | None, omega: Omega | None, result: dict, oracle: dict | None,
            agree: bool | None, start: float) -> dict:
    return {
        "command": command,
        "field": field_report(field) if field else None,
        "omega": omega_report(omega) if omega else None,
        "result": result,
        "oracle": oracle,
        "agree": agree,
        "timing_ms": round((time.perf_counter() - start) * 1000, 3),
    }


field_options = [
    click.option("--p", "p", type=int, default=None, help="Characteristic."),
    click.option("--modulus", default=None, help="Monic modulus coefficients, constant term first, e.g. 1,1,1."),
    click.option("--prime", is_flag=True, help="Use the prime field F_p."),
    click.option("--q", "q", type=int, default=None, help="Catalog field of this order."),
]
output_options = [
    click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True),
    click.option("--out", default=None, type=click.Path(dir_okay=False), help="Also write the report here."),
]


def _apply(options):
    def deco(fn):
        for opt in reversed(options):
            fn = opt(fn)
        return fn

    return deco


def _guard(fn):
    """Turn library input errors into exit code 2."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except AlexcohError as exc:
            raise InputError(str(exc)) from exc

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Cohomology of Alexander quandles over finite fields."""


@main.command()
@_apply(field_options)
@click.option("--omega", required=True, help="Quandle parameter in the element grammar (g, g+1, 2, ...).")
@click.option("--basis", is_flag=True, help="List the cocycle specs.")
@click.option("--expand", is_flag=True, help="Print each cocycle as a polynomial.")
@click.option("--oracle", is_flag=True, help="Compare with the brute-force function complex.")
@click.option("--method", type=click.Choice(["auto", "full", "graded"]), default="auto", show_default=True)
@_apply(output_options)
@_guard
def h3(p, modulus, prime, q, omega, basis, expand, oracle, method, fmt, out):
    """Explicit generating set of H^3 and its size."""
    start = time.perf_counter()
    field = build_field(p, modulus, prime, q)
    ctx = _ctx(field, omega)
    specs = enumerate_I(ctx)
    result: dict = {"dim": len(specs)}
    if basis:
        result["basis"] = [str(s) for s in specs]
    if expand:
        result["expanded"] = {str(s): realize(ctx, s).to_text() for s in specs}
    orc = agree = None
    if oracle:
        cc = cross_check(ctx, 3, specs, method)
        orc, agree = cc.as_dict(), cc.agree
    _emit(_report("h3", field, ctx.omega, result, orc, agree, start), fmt, out)
    if agree is False:
        sys.exit(EXIT_DISAGREE)


@main.command()
@_apply(field_options)
@click.option("--omega", required=True, help="Quandle parameter in the element grammar.")
@click.option("--basis", is_flag=True, help="List the cocycle specs.")
@click.option("--oracle", is_flag=True, help="Compare with the brute-force function complex.")
@click.option("--method", type=click.Choice(["auto", "full", "graded"]), default="auto", show_default=True)
@_apply(output_options)
@_guard
def h2(p, modulus, prime, q, omega, basis, oracle, method, fmt, out):
    """Explicit basis of H^2 and its size."""
    start = time.perf_counter()
    field = build_field(p, modulus, prime, q)
    ctx = _ctx(field, omega)
    specs = enumerate_J2(ctx)
    result: dict = {"dim": len(specs)}
    if basis:
        result["basis"] = [str(s) for s in specs]
    orc = agree = None
    if oracle:
        cc = cross_check(ctx, 2, specs, method)
        orc, agree = cc.as_dict(), cc.agree
    _emit(_report("h2", field, ctx.omega, result, orc, agree, start), fmt, out)
    if agree is False:
        sys.exit(EXIT_DISAGREE)


@main.command()
@_apply(field_options)
@click.option("--omega", required=True, help="Quandle parameter in the element grammar.")
@click.argument("spec")
@_apply(output_options)
@_guard
def verify(p, modulus, prime, q, omega, spec, fmt, out):
    """Realize SPEC (e.g. "Gamma(1,1,3,3)") and test whether it is a cocycle."""
    start = time.perf_counter()
    field = build_field(p, modulus, prime, q)
    ctx = _ctx(field, omega)
    cs = parse_spec(spec)
    poly = realize(ctx, cs)
    d = delta(ctx, poly)
    result = {
        "spec": str(cs),
        "arity": poly.arity,
        "polynomial": poly.to_text(),
        "in_Cn_q": in_Cn_q(poly, ctx.q),
        "cocycle": d.is_zero(),
        "delta": d.to_text(),
    }
    _emit(_report("verify", field, ctx.omega, result, None, None, start), fmt, out)
    if not d.is_zero():
        sys.exit(EXIT_NEGATIVE)


def sweep_rows(orders: list[int], method: str = "auto") -> list[dict]:
    """One row per (catalog field, omega), omega running over F_q minus {0, 1} in element order."""
    rows = []
    for q in orders:
        field = catalog_field(q) if q in CATALOG else prime_field(q)
        for code in field.ordered_codes:
            if code in (0, 1):
                continue
            ctx = ComplexCtx.create(field, field.element(code))
            c3 = cross_check(ctx, 3, method=method)
            c2 = cross_check(ctx, 2, method=method)
            rows.append(
                {
                    "q": q,
                    "omega": format_element(ctx.omega.value),
                    "order": ctx.omega.order,
                    "h2": c2.oracle_dim,
                    "j2_size": len(c2.members),
                    "h3": c3.oracle_dim,
                    "i_size": len(c3.members),
                    "i_rank": c3.rank_mod_coboundaries,
                    "coboundary_members": [str(s) for s in c3.coboundary_members],
                    "agree": c2.agree and c3.agree,
                }
            )
    return rows


@main.command()
@click.option("--q", "qs", type=int, multiple=True, help="Field order to include (repeatable).")
@click.option("--max-q", type=int, default=None, help=f"All catalog orders up to this bound (default {DEFAULT_SWEEP_MAX_Q}).")
@click.option("--method", type=click.Choice(["auto", "full", "graded"]), default="auto", show_default=True)
@_apply(output_options)
@_guard
def sweep(qs, max_q, method, fmt, out):
    """Cross-check H^2 and H^3 for every catalog field and every omega."""
    start = time.perf_counter()
    if qs and max_q is not None:
        raise InputError("--q and --max-q are exclusive")
    if qs:
        available = set(catalog_orders(max(qs)))
        bad = [x for x in qs if x not in available]
        if bad:
            raise InputError(f"no catalog field of order {bad[0]}")
        orders = sorted(set(qs))
    else:
        orders = catalog_orders(DEFAULT_SWEEP_MAX_Q if max_q is None else max_q)
    _kernels.warmup()
    rows = sweep_rows(orders, method)
    agree = all(r["agree"] for r in rows)
    result = {"orders": orders, "rows": rows}
    _emit(_report("sweep", None, None, result, None, agree, start), fmt, out)
    if not agree:
        sys.exit(EXIT_DISAGREE)


if __name__ == "__main__":  # pragma: no cover
    main()
