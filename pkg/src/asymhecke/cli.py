"""Command-line interface.

Subcommands: hecke (kl / hconst / afn), rep (tensor), steinberg (pairing),
j0 (mult / check-gamma / phi0), verify-all.  All reports are JSON with a
top-level "schema": 1 field.  Exit codes: 0 success, 1 verification failure,
2 usage error.

Affine elements are written "t[c1,..,cn]*w[word]" (e.g. "t[2]*w[1]"); J0
basis indices are "(uword;c1,..,cn;vword)" (e.g. "(12;1,0;1)", with "e" or
the empty string for the identity).
"""

from __future__ import annotations

import json
import re
import sys

import click

from . import hecke as hecke_mod
from . import j0 as j0_mod
from . import repring
from . import steinberg as steinberg_mod
from .hecke import hecke_algebra
from .laurent import KERNEL_IMPLEMENTATION
from .rootdata import root_system

SCHEMA = 1

TYPE_CHOICES = ["A1", "A2", "A3", "A1~", "A2~", "A3~"]


def _finite_tag(type_tag):
    return type_tag.rstrip("~")


def _emit(data, out=None):
    text = json.dumps({"schema": SCHEMA, **data}, sort_keys=True, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _parse_weight(text, rs):
    try:
        coords = [int(x) for x in text.split(",")]
    except ValueError:
        raise click.UsageError(f"cannot parse weight {text!r}")
    if len(coords) != rs.rank:
        raise click.UsageError(
            f"weight {text!r} has wrong rank for {rs.type_tag}"
        )
    return rs.weight(coords)


def _parse_elt(text, W):
    try:
        return W.from_string(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _parse_c0_index(text, rs):
    m = re.fullmatch(r"\s*\(([\de]*);([-\d,\s]*);([\de]*)\)\s*", text)
    if not m:
        raise click.UsageError(f"cannot parse J0 index {text!r}")

    def word(part):
        if part in ("", "e"):
            return rs.identity
        return rs.from_word([int(ch) for ch in part])

    chi = _parse_weight(m.group(2), rs)
    if not chi.is_dominant():
        raise click.UsageError(f"chi in {text!r} is not dominant")
    return j0_mod.C0Index(word(m.group(1)), chi, word(m.group(3)))


@click.group()
@click.option("--cache-dir", type=click.Path(), default=None,
              envvar=hecke_mod.CACHE_ENV,
              help="Directory for persisted KL tables.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker processes for parallel scans (1 = serial).")
@click.pass_context
def main(ctx, cache_dir, jobs):
    """Exact computations in affine Hecke algebras, R(G), and the ring J0."""
    ctx.ensure_object(dict)
    ctx.obj["cache_dir"] = cache_dir
    ctx.obj["jobs"] = jobs


# -- hecke ------------------------------------------------------------------


@main.group()
def hecke():
    """Kazhdan-Lusztig polynomials, h-constants and the a-function."""


@hecke.command("kl")
@click.option("--type", "type_tag", type=click.Choice(TYPE_CHOICES),
              required=True)
@click.option("--y", "y_text", required=True)
@click.option("--w", "w_text", required=True)
@click.option("--out", type=click.Path(), default=None)
def hecke_kl(type_tag, y_text, w_text, out):
    """P_{y,w} as a polynomial in q."""
    H = hecke_algebra(type_tag, affine=type_tag.endswith("~"))
    y = _parse_elt(y_text, H.W)
    w = _parse_elt(w_text, H.W)
    p = H.kl_polynomial(y, w)
    _emit(
        {
            "type": type_tag,
            "y": H.W.to_string(y),
            "w": H.W.to_string(w),
            "P": p.to_string(),
            "mu": H.mu(y, w),
        },
        out,
    )


@hecke.command("hconst")
@click.option("--type", "type_tag", type=click.Choice(TYPE_CHOICES),
              required=True)
@click.option("--x", "x_text", required=True)
@click.option("--y", "y_text", required=True)
@click.option("--out", type=click.Path(), default=None)
def hecke_hconst(type_tag, x_text, y_text, out):
    """The full family h_{x,y,z} of C-basis structure constants."""
    H = hecke_algebra(type_tag, affine=type_tag.endswith("~"))
    x = _parse_elt(x_text, H.W)
    y = _parse_elt(y_text, H.W)
    fam = H.h_constants(x, y)
    _emit(
        {
            "type": type_tag,
            "x": H.W.to_string(x),
            "y": H.W.to_string(y),
            "h": {
                H.W.to_string(z): p.to_string()
                for z, p in sorted(
                    fam.items(), key=lambda kv: H.W.to_string(kv[0])
                )
            },
        },
        out,
    )


@hecke.command("afn")
@click.option("--type", "type_tag", type=click.Choice(TYPE_CHOICES),
              required=True)
@click.option("--w", "w_text", required=True)
@click.option("--ball", type=int, default=4, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def hecke_afn(type_tag, w_text, ball, out):
    """a(w) searched over a ball (reported with the ball used)."""
    H = hecke_algebra(type_tag, affine=type_tag.endswith("~"))
    w = _parse_elt(w_text, H.W)
    _emit(
        {
            "type": type_tag,
            "w": H.W.to_string(w),
            "ball": ball,
            "a": H.a_function(w, ball),
        },
        out,
    )


# -- rep -----------------------------------------------------------------------


@main.group()
def rep():
    """Representation ring computations."""


@rep.command("tensor")
@click.option("--type", "type_tag",
              type=click.Choice(["A1", "A2", "A3"]), required=True)
@click.option("--lhs", required=True)
@click.option("--rhs", required=True)
@click.option("--out", type=click.Path(), default=None)
def rep_tensor(type_tag, lhs, rhs, out):
    """Decompose V(lhs) (x) V(rhs) into irreducibles."""
    rs = root_system(type_tag)
    lam = _parse_weight(lhs, rs)
    nu = _parse_weight(rhs, rs)
    if not (lam.is_dominant() and nu.is_dominant()):
        raise click.UsageError("tensor factors must be dominant weights")
    dec = repring.tensor_decompose(rs, lam, nu)
    _emit({"type": type_tag, "lhs": lhs, "rhs": rhs,
           "decomposition": dec.to_dict()}, out)


# -- steinberg --------------------------------------------------------------------


@main.group(name="steinberg")
def steinberg_group():
    """Steinberg basis and dual-basis pairing."""


@steinberg_group.command("pairing")
@click.option("--type", "type_tag",
              type=click.Choice(["A1", "A2", "A3"]), required=True)
@click.option("--out", type=click.Path(), default=None)
def steinberg_pairing(type_tag, out):
    """The |W| x |W| pairing matrix <F_w, G_v> over R(G)."""
    rs = root_system(type_tag)
    matrix = steinberg_mod.PairingMatrix(rs)
    data = {
        "type": type_tag,
        "order": ["".join(map(str, w.word)) or "e" for w in matrix.order],
        "matrix": matrix.to_lists(),
        "identity": matrix.is_identity(),
    }
    if type_tag == "A3":
        data["dual_correction"] = steinberg_mod.verify_dual_correction(
            rs, matrix
        )
    _emit(data, out)


# -- j0 ----------------------------------------------------------------------------


@main.group(name="j0")
def j0_group():
    """The asymptotic ring J0 on the lowest cell."""


@j0_group.command("mult")
@click.option("--type", "type_tag",
              type=click.Choice(["A1", "A2", "A3"]), required=True)
@click.option("--lhs", required=True)
@click.option("--rhs", required=True)
@click.option("--out", type=click.Path(), default=None)
def j0_mult(type_tag, lhs, rhs, out):
    """Product of two t-basis elements, e.g. --lhs "(e;1;1)" --rhs "(1;0;e)"."""
    rs = root_system(type_tag)
    a = _parse_c0_index(lhs, rs)
    b = _parse_c0_index(rhs, rs)
    prod = j0_mod.j0_multiply(rs, j0_mod.J0Elt({a: 1}), j0_mod.J0Elt({b: 1}))
    _emit(
        {
            "type": type_tag,
            "lhs": repr(a),
            "rhs": repr(b),
            "product": {repr(k): c for k, c in sorted(
                prod.terms.items(), key=lambda kv: repr(kv[0]))},
        },
        out,
    )


@j0_group.command("check-gamma")
@click.option("--type", "type_tag", type=click.Choice(["A1~", "A2~"]),
              required=True)
@click.option("--ball", type=int, required=True)
@click.option("--chi-bound", type=int, default=None)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def j0_check_gamma(ctx, type_tag, ball, chi_bound, out):
    """Cross-check Hecke gamma-constants against the J0 product."""
    report = j0_mod.gamma_oracle_check(type_tag, ball, chi_bound)
    _emit(report, out)
    if not report["ok"]:
        sys.exit(1)


@j0_group.command("phi0")
@click.option("--type", "type_tag", type=click.Choice(["A1~", "A2~"]),
              required=True)
@click.option("--w", "w_text", required=True)
@click.option("--out", type=click.Path(), default=None)
def j0_phi0(type_tag, w_text, out):
    """phi0(C_w) as an element of J0 (x) A."""
    H = hecke_algebra(type_tag)
    w = _parse_elt(w_text, H.W)
    img = j0_mod.phi0(H, w)
    _emit(
        {
            "type": type_tag,
            "w": H.W.to_string(w),
            "phi0": {repr(k): p.to_string() for k, p in sorted(
                img.terms.items(), key=lambda kv: repr(kv[0]))},
        },
        out,
    )


# -- verify-all ---------------------------------------------------------------------


@main.command("verify-all")
@click.option("--type", "type_tag", type=click.Choice(["A1~", "A2~"]),
              default="A1~", show_default=True)
@click.option("--ball", type=int, default=8, show_default=True)
@click.option("--chi-bound", type=int, default=3, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def verify_all(type_tag, ball, chi_bound, out):
    """Run every invariant suite and report one flag per suite."""
    from . import checks

    suites = checks.run_all(type_tag, ball, chi_bound)
    ok = all(s["ok"] for s in suites.values())
    _emit(
        {
            "type": type_tag,
            "ball": ball,
            "kernel": KERNEL_IMPLEMENTATION,
            "suites": suites,
            "ok": ok,
        },
        out,
    )
    if not ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
