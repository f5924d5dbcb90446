"""The based ring J0 on the lowest two-sided cell of an affine Weyl group.

Elements of the lowest cell are parameterized by triples (u, chi, v) with
u, v in the finite Weyl group and chi a dominant weight:

    w(u, chi, v) = sigma(u)^{-1} * w0 * t_chi * sigma(v),
    sigma(w) = w * t_{x_w}   (x_w = Steinberg's weight),

and J0 multiplies by Littlewood-Richardson numbers:

    t_(u,lam,v) t_(v',nu,v'') = delta_{v,v'} sum_mu m_{lam,nu}^mu t_(u,mu,v'').

This matches the matrix-ring model J0 = Mat_{|W|}(R(G)) by
t_(u,chi,v) -> [V(chi)] E_{u,v}.

The module also provides:
  * gamma_oracle_check - the Hecke-side gamma constants (leading h-terms)
    against the representation-theoretic product above, up to one global
    sign epsilon = (-1)^{l(w0)};
  * phi0 - Lusztig's homomorphism H -> J0 (x) A restricted to the lowest
    cell: phi0(C_w) = sum_{d in D cap c0, z in c0} h_{w,d,z} t_z;
  * expand_in_steinberg_basis - coordinates of O(a) (x) O(b) on the flag
    variety square in the basis {F_u (x) G_v} (types with identity pairing);
  * psi - the comparison map from J0 (x) A to matrices over R(G) (x) A used
    by the SL2 checks of phi0 against geometric expansions.
"""

from __future__ import annotations

from functools import lru_cache

from .affine import AffineElt, AffineWeylGroup, affine_weyl_group
from .hecke import HeckeAlgebra, hecke_algebra
from .laurent import LaurentPoly, ONE, ZERO, v_power
from .repring import VirtualCharacter, tensor_decompose
from .rootdata import RootSystem, Weight, WeylElt, root_system
from .steinberg import dual_weight, steinberg_weight


class C0Index(tuple):
    """Index (u, chi, v) of a lowest-cell basis element t_(u,chi,v)."""

    def __new__(cls, u: WeylElt, chi: Weight, v: WeylElt):
        return super().__new__(cls, (u, chi, v))

    @property
    def u(self):
        return self[0]

    @property
    def chi(self):
        return self[1]

    @property
    def v(self):
        return self[2]

    def __repr__(self):
        return f"({''.join(map(str, self.u.word)) or 'e'};" \
               f"{','.join(map(str, self.chi))};" \
               f"{''.join(map(str, self.v.word)) or 'e'})"


class J0Elt:
    """Finitely-supported combination of t-basis elements.

    Coefficients are integers for ring elements proper, or Laurent
    polynomials for elements of J0 (x) A (images of phi0).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for idx, c in (terms or {}).items():
            if c:
                self.terms[idx] = c

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k, 0) + c
            if cur:
                out[k] = cur
            else:
                out.pop(k, None)
        return J0Elt(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return J0Elt({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        return J0Elt({k: v * c for k, v in self.terms.items()})

    def coefficient(self, idx):
        return self.terms.get(idx, 0)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, J0Elt) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})t{k!r}" for k, c in self.terms.items())


def t_elt(u, chi, v, rs: RootSystem = None) -> J0Elt:
    if rs is not None:
        chi = rs.weight(chi)
    return J0Elt({C0Index(u, chi, v): 1})


# -- the cell parameterization ---------------------------------------------


def sigma_elt(W: AffineWeylGroup, w: WeylElt) -> AffineElt:
    """sigma(w) = w * t_{x_w} in the extended affine Weyl group."""
    rs = W.rs
    xw = steinberg_weight(rs, w)
    return W.mult(W.from_finite(w), W.translation(xw))


def c0_element(W: AffineWeylGroup, idx: C0Index) -> AffineElt:
    """The affine element sigma(u)^{-1} * w0 * t_chi * sigma(v)."""
    rs = W.rs
    chi = rs.weight(idx.chi)
    if not chi.is_dominant():
        raise ValueError(f"chi = {tuple(chi)} is not dominant")
    out = W.inv(sigma_elt(W, idx.u))
    out = W.mult(out, W.from_finite(rs.w0))
    out = W.mult(out, W.translation(chi))
    return W.mult(out, sigma_elt(W, idx.v))


def c0_parameterize(W: AffineWeylGroup, w: AffineElt):
    """The unique C0Index mapping to w, or None if w is not in the cell.

    Solves sigma(u) * w * sigma(v)^{-1} = w0 * t_chi directly over all
    (u, v) pairs; chi is then forced, and dominance decides membership.
    """
    rs = W.rs
    w0 = rs.w0
    for u in rs.weyl_elements:
        left = W.mult(sigma_elt(W, u), w)
        for v in rs.weyl_elements:
            x = W.mult(left, W.inv(sigma_elt(W, v)))
            if x.finite == w0:
                # x = w0 t_chi = t_{w0(chi)} w0
                chi = rs.act(w0, x.translation)
                if chi.is_dominant():
                    return C0Index(u, chi, v)
    return None


def c0_elements_in_ball(hecke: HeckeAlgebra, radius: int) -> dict:
    """{AffineElt: C0Index} for all lowest-cell elements of length <= radius."""
    W = hecke.W
    out = {}
    for w in hecke.elements_up_to(radius):
        idx = c0_parameterize(W, w)
        if idx is not None:
            out[w] = idx
    return out


# -- the ring ------------------------------------------------------------------


def j0_multiply(rs: RootSystem, a: J0Elt, b: J0Elt) -> J0Elt:
    """Bilinear extension of the Littlewood-Richardson product rule."""
    out = {}
    for (u, lam, v), ca in a.terms.items():
        for (vp, nu, w), cb in b.terms.items():
            if v != vp:
                continue
            c = ca * cb
            for mu, m in tensor_decompose(rs, lam, nu).terms.items():
                key = C0Index(u, mu, w)
                cur = out.get(key, 0) + c * m
                if cur:
                    out[key] = cur
                else:
                    out.pop(key, None)
    return J0Elt(out)


def distinguished_involutions(rs: RootSystem) -> list:
    """D cap c0 as indices: {(u, 0, u) : u in W}."""
    zero = rs.weight([0] * rs.rank)
    return [C0Index(u, zero, u) for u in rs.weyl_elements]


def j0_unit(rs: RootSystem) -> J0Elt:
    out = J0Elt()
    for d in distinguished_involutions(rs):
        out = out + J0Elt({d: 1})
    return out


def matrix_realization(rs: RootSystem, a: J0Elt):
    """t_(u,chi,v) -> [V(chi)] E_{u,v}: a |W| x |W| matrix over R(G)."""
    n = len(rs.weyl_elements)
    zero = VirtualCharacter.zero(rs)
    mat = [[zero for _ in range(n)] for _ in range(n)]
    for (u, chi, v), c in a.terms.items():
        mat[u.index][v.index] = mat[u.index][v.index] + \
            VirtualCharacter.irreducible(rs, chi, c)
    return mat


def matrix_multiply(rs: RootSystem, a, b):
    n = len(rs.weyl_elements)
    zero = VirtualCharacter.zero(rs)
    out = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k].is_zero():
                continue
            for j in range(n):
                if b[k][j].is_zero():
                    continue
                out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


# -- gamma cross-oracle -----------------------------------------------------------


def gamma_oracle_check(type_tag: str, radius: int, chi_bound=None) -> dict:
    """Compare Hecke gamma-constants with the J0 product on all cell triples.

    gamma_{x,y,z} (coefficient of v^{-l(w0)} in h_{x,y,z^{-1}}) must equal
    epsilon * (coefficient of t_z in t_x t_y), with the single global sign
    epsilon = (-1)^{l(w0)}.
    """
    H = hecke_algebra(type_tag)
    W = H.W
    rs = W.rs
    a0 = rs.w0.length
    eps = (-1) ** a0
    cells = c0_elements_in_ball(H, radius)
    if chi_bound is not None:
        cells = {
            w: idx
            for w, idx in cells.items()
            if max(idx.chi, default=0) <= chi_bound
        }
    elements = list(cells)
    mismatches = []
    checked = 0
    for x in elements:
        ix = cells[x]
        fams = H.h_family(x, elements)
        for y in elements:
            iy = cells[y]
            fam = fams[y]
            if ix.v == iy.u:
                lr = tensor_decompose(rs, ix.chi, iy.chi).terms
            else:
                lr = {}
            for z in elements:
                iz = cells[z]
                # coefficient of t_z in t_x t_y is gamma_{x,y,z^{-1}}; the
                # inverse in the gamma definition composes with the inverse
                # in the product formula, leaving h_{x,y,z} itself
                h = fam.get(z)
                hecke_side = 0 if h is None else h.coefficient_of(-a0)
                if iz.u == ix.u and iz.v == iy.v and ix.v == iy.u:
                    rep_side = lr.get(iz.chi, 0)
                else:
                    rep_side = 0
                checked += 1
                if hecke_side != eps * rep_side:
                    mismatches.append(
                        {
                            "x": W.to_string(x),
                            "y": W.to_string(y),
                            "z": W.to_string(z),
                            "hecke": hecke_side,
                            "xi": rep_side,
                        }
                    )
    return {
        "type": type_tag,
        "radius": radius,
        "chi_bound": chi_bound,
        "cell_size": len(elements),
        "epsilon": eps,
        "triples_checked": checked,
        "mismatches": mismatches,
        "ok": not mismatches,
    }


# -- Lusztig's phi0 -----------------------------------------------------------------


def phi0(H: HeckeAlgebra, w: AffineElt) -> J0Elt:
    """phi0(C_w) = sum over d in D cap c0 and z in c0 of h_{w,d,z} t_z.

    Returns a J0Elt with LaurentPoly coefficients (an element of J0 (x) A).
    """
    W = H.W
    rs = W.rs
    omega = None
    if not W.in_affine_group(w):
        # C_{omega x} = T_omega C_x gives h_{omega x, d, omega z} = h_{x,d,z}
        omega = W.omega_component(w)
        w = W.mult(W.inv(omega), w)
    d_elements = {
        c0_element(W, d): d for d in distinguished_involutions(rs)
    }
    fams = H.h_family(w, list(d_elements))
    out = {}
    for d_elt, fam in fams.items():
        for z, h in fam.items():
            if omega is not None:
                z = W.mult(omega, z)
            idx = c0_parameterize(W, z)
            if idx is None:
                continue
            cur = out.get(idx, ZERO) + h
            if cur.is_zero():
                out.pop(idx, None)
            else:
                out[idx] = cur
    return J0Elt(out)


def phi0_on_hecke_elt(H: HeckeAlgebra, a) -> J0Elt:
    """A-linear extension of phi0 to a C-basis HeckeElt."""
    out = J0Elt()
    for w, p in a.terms.items():
        out = out + phi0(H, w).scale(p)
    return out


def j0_multiply_poly(rs: RootSystem, a: J0Elt, b: J0Elt) -> J0Elt:
    """Product in J0 (x) A (LaurentPoly coefficients)."""
    return j0_multiply(rs, a, b)


# -- matrices over R(G) (x) A and the comparison map psi -----------------------------

# An "RgA matrix" is a |W| x |W| nested list whose entries are dicts
# {dominant Weight: LaurentPoly}.


def rga_zero_matrix(rs: RootSystem):
    n = len(rs.weyl_elements)
    return [[{} for _ in range(n)] for _ in range(n)]


def rga_entry_add(entry: dict, chi: Weight, p: LaurentPoly):
    cur = entry.get(chi, ZERO) + p
    if cur.is_zero():
        entry.pop(chi, None)
    else:
        entry[chi] = cur


def rga_matrix_from_virtual(rs: RootSystem, mat, scale: LaurentPoly = ONE):
    """Lift a VirtualCharacter matrix to an RgA matrix, scaled by a poly."""
    out = rga_zero_matrix(rs)
    for i, row in enumerate(mat):
        for j, vc in enumerate(row):
            for chi, m in vc.terms.items():
                rga_entry_add(out[i][j], chi, scale.scale_shift(m, 0))
    return out


def rga_add(rs: RootSystem, a, b):
    out = rga_zero_matrix(rs)
    n = len(rs.weyl_elements)
    for i in range(n):
        for j in range(n):
            for chi, p in a[i][j].items():
                rga_entry_add(out[i][j], chi, p)
            for chi, p in b[i][j].items():
                rga_entry_add(out[i][j], chi, p)
    return out


def rga_equal(a, b) -> bool:
    for ra, rb in zip(a, b):
        for ea, eb in zip(ra, rb):
            if ea != eb:
                return False
    return True


def rga_multiply(rs: RootSystem, a, b):
    n = len(rs.weyl_elements)
    out = rga_zero_matrix(rs)
    for i in range(n):
        for k in range(n):
            if not a[i][k]:
                continue
            for j in range(n):
                if not b[k][j]:
                    continue
                for lam, p in a[i][k].items():
                    for nu, q in b[k][j].items():
                        pq = p * q
                        for mu, m in tensor_decompose(rs, lam, nu).terms.items():
                            rga_entry_add(out[i][j], mu, pq.scale_shift(m, 0))
    return out


def rga_conjugate_by_q_length(rs: RootSystem, a, sign: int = 1):
    """Conjugation by diag(q^{sign * l(u)}): entry (u,v) scaled by
    q^{sign * (l(u) - l(v))}."""
    out = rga_zero_matrix(rs)
    els = rs.weyl_elements
    for i, u in enumerate(els):
        for j, v in enumerate(els):
            shift = 2 * sign * (u.length - v.length)
            for chi, p in a[i][j].items():
                rga_entry_add(out[i][j], chi, p.scale_shift(1, shift))
    return out


PSI_EPSILON = -1  # global sign of the comparison map
PSI_ZETA_SIGN = -1  # zeta = -v^{-1}: t_(u,chi,v) carries zeta^{l(u)-l(v)}
PSI_ZETA_VPOW = -1


def psi(rs: RootSystem, a: J0Elt):
    """Comparison map J0 (x) A -> Mat_{|W|}(R(G) (x) A).

    t_(u,chi,v) -> epsilon * zeta^{l(u)-l(v)} [V(chi)] E_{u,v} with
    epsilon = -1 and zeta = -v^{-1}.  Any choice of (epsilon, zeta) gives a
    ring map (a sign character composed with a diagonal conjugation); this
    particular one matches the geometric expansions of the SL2 checks.
    """
    out = rga_zero_matrix(rs)
    for (u, chi, v), c in a.terms.items():
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.from_int(c)
        k = u.length - v.length
        coeff = c.scale_shift(
            PSI_EPSILON * PSI_ZETA_SIGN ** (k & 1),
            PSI_ZETA_VPOW * k,
        )
        rga_entry_add(out[u.index][v.index], chi, coeff)
    return out


# -- expansion of line-bundle classes in the Steinberg basis ---------------------------


def expand_in_steinberg_basis(rs: RootSystem, a, b):
    """[O(a) boxtimes O(b)] = sum c_{u,v} [F_u boxtimes G_v] on B x B.

    Requires the pairing matrix to be the identity (types A1, A2): then
    c_{u,v} = <O(a), G_u> * <F_v, O(b)> with the shift sign on the G side.
    Returns a VirtualCharacter matrix.
    """
    from .repring import euler_characteristic

    if rs.type_tag not in ("A1", "A2"):
        raise ValueError("expansion implemented for identity-pairing types")
    a, b = rs.weight(a), rs.weight(b)
    n = len(rs.weyl_elements)
    lefts, rights = [], []
    for w in rs.weyl_elements:
        yw, shift = dual_weight(rs, w)
        lefts.append(euler_characteristic(rs, a + yw).scale((-1) ** shift))
        rights.append(euler_characteristic(rs, steinberg_weight(rs, w) + b))
    out = [[lefts[i] * rights[j] for j in range(n)] for i in range(n)]
    return out
