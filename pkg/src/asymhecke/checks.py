"""Invariant suites aggregated by the verify-all command.

Each suite returns {"ok": bool, ...details}; they are deterministic for a
fixed configuration (random checks use a fixed seed).
"""

from __future__ import annotations

import random

from . import j0 as j0_mod
from . import repring
from . import steinberg as steinberg_mod
from .hecke import hecke_algebra
from .laurent import LaurentPoly, ONE, V, VINV
from .rootdata import root_system

SEED = 20240817


def laurent_suite(trials: int = 200) -> dict:
    rng = random.Random(SEED)

    def rand_poly():
        return LaurentPoly(
            {rng.randint(-6, 6): rng.randint(-9, 9) for _ in range(4)}
        )

    failures = 0
    for _ in range(trials):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        if a * (b + c) != a * b + a * c:
            failures += 1
        if (a * b) * c != a * (b * c):
            failures += 1
        if (a * b).bar() != a.bar() * b.bar():
            failures += 1
        if LaurentPoly.from_string(a.to_string()) != a:
            failures += 1
    return {"ok": failures == 0, "trials": trials, "failures": failures}


def kl_suite(type_tag: str, radius: int = 6) -> dict:
    H = hecke_algebra(type_tag)
    W = H.W
    elements = H.elements_up_to(radius)
    problems = []
    for w in elements:
        if H.kl_polynomial(w, w) != ONE:
            problems.append(f"P_ww != 1 at {W.to_string(w)}")
        for y in elements:
            p = H.kl_polynomial(y, w)
            if p.is_zero():
                continue
            ly, lw = W.length(y), W.length(w)
            if ly > lw or not W.bruhat_leq(y, w):
                problems.append(
                    f"support violation ({W.to_string(y)}, {W.to_string(w)})"
                )
            elif y != w and p.max_exp() > lw - ly - 1:
                problems.append(
                    f"degree bound ({W.to_string(y)}, {W.to_string(w)})"
                )
            if p != H.kl_polynomial(W.inv(y), W.inv(w)):
                problems.append(
                    f"inverse symmetry ({W.to_string(y)}, {W.to_string(w)})"
                )
    return {"ok": not problems, "radius": radius, "problems": problems[:10]}


def pairing_suite() -> dict:
    details = {}
    ok = True
    for tag in ("A1", "A2"):
        rs = root_system(tag)
        ident = steinberg_mod.PairingMatrix(rs).is_identity()
        details[tag] = {"identity": ident}
        ok = ok and ident
    rep = steinberg_mod.verify_dual_correction(root_system("A3"))
    details["A3"] = {
        "dual_correction": rep["ok"],
        "sigma": list(rep.get("sigma_one_line", ())),
    }
    ok = ok and rep["ok"]
    return {"ok": ok, **details}


def gamma_suite(type_tag: str, radius: int, chi_bound) -> dict:
    rep = j0_mod.gamma_oracle_check(type_tag, radius, chi_bound)
    return {
        "ok": rep["ok"],
        "cell_size": rep["cell_size"],
        "triples": rep["triples_checked"],
        "mismatches": rep["mismatches"][:10],
    }


def j0_ring_suite(type_tag: str, trials: int = 60) -> dict:
    rs = root_system(type_tag.rstrip("~"))
    rng = random.Random(SEED)
    els = rs.weyl_elements
    bound = 4 if rs.rank <= 2 else 2

    def rand_t():
        chi = rs.weight([rng.randint(0, bound) for _ in range(rs.rank)])
        return j0_mod.J0Elt(
            {j0_mod.C0Index(rng.choice(els), chi, rng.choice(els)): 1}
        )

    problems = []
    for _ in range(trials):
        a, b, c = rand_t(), rand_t(), rand_t()
        lhs = j0_mod.j0_multiply(rs, j0_mod.j0_multiply(rs, a, b), c)
        rhs = j0_mod.j0_multiply(rs, a, j0_mod.j0_multiply(rs, b, c))
        if lhs != rhs:
            problems.append("associativity failure")
    unit = j0_mod.j0_unit(rs)
    for _ in range(10):
        a = rand_t()
        if j0_mod.j0_multiply(rs, unit, a) != a or \
           j0_mod.j0_multiply(rs, a, unit) != a:
            problems.append("unit failure")
    for d in j0_mod.distinguished_involutions(rs):
        td = j0_mod.J0Elt({d: 1})
        if j0_mod.j0_multiply(rs, td, td) != td:
            problems.append(f"idempotency failure at {d!r}")
    return {"ok": not problems, "trials": trials, "problems": problems[:10]}


def phi0_sl2_suite() -> dict:
    from .affine import AffineElt
    from .hecke import HeckeElt
    from .laurent import ONE, Q, QINV

    H = hecke_algebra("A1~")
    W = H.W
    rs = W.rs
    s1 = W.simple_reflection(1)
    problems = []

    # unit
    if j0_mod.phi0(H, W.identity).terms != {
        d: ONE for d in j0_mod.distinguished_involutions(rs)
    }:
        problems.append("phi0(C_e) is not the unit")

    # quadratic relation in the image
    for j in (0, 1):
        p = j0_mod.phi0(H, W.simple_reflection(j))
        if j0_mod.j0_multiply(rs, p, p) != p.scale(-(V + VINV)):
            problems.append(f"quadratic relation fails for s_{j}")

    # Coxeter generator image: -v O(0,-2) + v^-1 O(0,0) in the F/G basis
    lhs = j0_mod.psi(rs, j0_mod.phi0(H, s1))
    target = j0_mod.rga_add(
        rs,
        j0_mod.rga_matrix_from_virtual(
            rs, j0_mod.expand_in_steinberg_basis(rs, (0,), (-2,)), -V
        ),
        j0_mod.rga_matrix_from_virtual(
            rs, j0_mod.expand_in_steinberg_basis(rs, (0,), (0,)), VINV
        ),
    )
    if not j0_mod.rga_equal(lhs, target):
        problems.append("Coxeter generator image mismatch")

    # theta image is the diagonal class: q^-n T_{t_{n alpha}} maps to
    # -(O(0,-2n) - O(-1,-2n-1)) twisted by conjugation with diag(q^{-l(u)})
    for n in (1, 2):
        theta = HeckeElt("T", {W.translation((2 * n,)): QINV ** n})
        img = j0_mod.psi(rs, j0_mod.phi0_on_hecke_elt(H, H.t_to_c(theta)))
        diag = j0_mod.rga_add(
            rs,
            j0_mod.rga_matrix_from_virtual(
                rs,
                j0_mod.expand_in_steinberg_basis(rs, (0,), (-2 * n,)),
                -ONE,
            ),
            j0_mod.rga_matrix_from_virtual(
                rs,
                j0_mod.expand_in_steinberg_basis(rs, (-1,), (-2 * n - 1,)),
                ONE,
            ),
        )
        if not j0_mod.rga_equal(
            img, j0_mod.rga_conjugate_by_q_length(rs, diag, -1)
        ):
            problems.append(f"theta diagonal image mismatch (n={n})")

    # Bernstein relation in the extended T-basis and in the phi0 image:
    # theta_{alpha/2} T_s - T_s theta_{-alpha/2} = (q-1) theta_{alpha/2}
    omega = W.omega_elements()[1]
    t_varpi = W.translation((1,))
    Tw = H.t_basis(t_varpi)
    Tw_inv = H.t_multiply(H.t_inverse_generator(1), H.t_basis(W.inv(omega)))
    th_plus = Tw.scale(VINV)
    th_minus = Tw_inv.scale(V)
    Ts = H.t_basis(s1)
    lhs_h = H.t_multiply(th_plus, Ts) - H.t_multiply(Ts, th_minus)
    rhs_h = th_plus.scale(Q - ONE)
    if lhs_h != rhs_h:
        problems.append("Bernstein relation fails in the T-basis")
    img_l = j0_mod.phi0_on_hecke_elt(H, H.t_to_c(lhs_h))
    img_r = j0_mod.phi0_on_hecke_elt(H, H.t_to_c(rhs_h))
    if img_l != img_r:
        problems.append("Bernstein relation fails in the phi0 image")

    return {"ok": not problems, "problems": problems}


def run_all(type_tag: str, ball: int, chi_bound) -> dict:
    return {
        "laurent": laurent_suite(),
        "kl": kl_suite(type_tag, min(ball, 6)),
        "pairing": pairing_suite(),
        "gamma": gamma_suite(type_tag, ball, chi_bound),
        "j0_ring": j0_ring_suite(type_tag),
        "phi0_sl2": phi0_sl2_suite(),
    }
