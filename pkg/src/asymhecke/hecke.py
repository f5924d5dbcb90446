"""Affine Hecke algebras over A = Z[q^{+-1/2}] in the T- and C-bases.

Provides Kazhdan-Lusztig polynomials P_{y,w} with their mu-coefficients,
the signed canonical basis

    C_w = sum_{y<=w} (-1)^{l(w)-l(y)} q^{l(w)/2 - l(y)} P_{y,w}(q^{-1}) T_y,

structure constants h_{x,y,z} (C_x C_y = sum_z h_{x,y,z} C_z), the a-function
as a finite-ball search, and gamma-constants as leading h-coefficients.

Polynomials live in v = q^{1/2}; KL polynomials are polynomials in q, stored
as Laurent polynomials with even nonnegative v-exponents.

Everything is driven by one HeckeAlgebra object per (group, generator set);
restricting the generator set to the finite reflections gives the finite
Hecke algebra of the underlying Weyl group (used for finite-type KL tables).
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .affine import AffineElt, AffineWeylGroup, affine_weyl_group
from .laurent import LaurentPoly, ONE, Q, QINV, V, VINV, ZERO

QMINUS1 = Q - ONE

CACHE_ENV = "ASYMHECKE_CACHE_DIR"
CACHE_VERSION = 1

V_PLUS_VINV = V + VINV


class HeckeElt:
    """Finitely-supported element in the T- or C-basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        assert basis in ("T", "C")
        self.basis = basis
        self.terms = {w: p for w, p in (terms or {}).items() if not p.is_zero()}

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, ZERO) + p
        return HeckeElt(self.basis, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, ZERO) - p
        return HeckeElt(self.basis, out)

    def scale(self, p: LaurentPoly):
        return HeckeElt(self.basis, {w: c * p for w, c in self.terms.items()})

    def __neg__(self):
        return HeckeElt(self.basis, {w: -c for w, c in self.terms.items()})

    def coefficient(self, w) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.basis != other.basis:
            raise ValueError(
                f"basis mismatch: {self.basis} vs {other.basis}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElt)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"0[{self.basis}]"
        bits = [f"({p}){self.basis}_{w!r}" for w, p in self.terms.items()]
        return " + ".join(bits)


class HeckeAlgebra:
    """Hecke algebra of an (extended) affine Weyl group, with KL machinery."""

    def __init__(self, group: AffineWeylGroup, affine: bool = True):
        self.W = group
        self.affine = affine
        self.gens = tuple(range(0 if affine else 1, group.rank + 1))
        self._simple = {j: group.simple_reflection(j) for j in self.gens}
        self._kl = {}
        self._mu = {}
        self._elements = [group.identity]
        self._elt_radius = 0
        self._elt_prefix = {0: 1}
        self._h_family_cache = {}

    # -- element universe ---------------------------------------------------

    def elements_up_to(self, radius: int):
        """All elements of length <= radius over the configured generators."""
        while self._elt_radius < radius:
            self._elt_radius += 1
            known = set(self._elements)
            new = []
            for a in self._elements:
                if self.W.length(a) == self._elt_radius - 1:
                    for j in self.gens:
                        b = self.W.mult(a, self._simple[j])
                        if b not in known:
                            known.add(b)
                            new.append(b)
            new.sort(key=lambda a: (tuple(a.translation), a.finite.index))
            self._elements.extend(new)
            self._elt_prefix[self._elt_radius] = len(self._elements)
        return self._elements[: self._elt_prefix[radius]]

    def t_basis(self, w: AffineElt) -> HeckeElt:
        return HeckeElt("T", {w: ONE})

    # -- T-basis multiplication ------------------------------------------------

    def _mult_by_ts(self, terms: dict, j: int) -> dict:
        """Right multiplication of a T-basis term map by T_{s_j}."""
        s = self._simple[j]
        W = self.W
        out = {}
        for u, p in terms.items():
            us = W.mult(u, s)
            if W.length(us) > W.length(u):
                out[us] = out.get(us, ZERO) + p
            else:
                out[us] = out.get(us, ZERO) + p * Q
                out[u] = out.get(u, ZERO) + p * QMINUS1
        return {w: c for w, c in out.items() if not c.is_zero()}

    def t_multiply(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        """Exact product of two T-basis elements."""
        if a.basis != "T" or b.basis != "T":
            raise ValueError("t_multiply requires T-basis operands")
        W = self.W
        out = {}
        for wb, pb in b.terms.items():
            if W.in_affine_group(wb):
                omega, word = None, W.reduced_word(wb)
            else:
                omega = W.omega_component(wb)
                word = W.reduced_word(W.mult(W.inv(omega), wb))
            cur = {}
            for wa, pa in a.terms.items():
                # lengths add when appending a length-zero element
                key = W.mult(wa, omega) if omega is not None else wa
                cur[key] = cur.get(key, ZERO) + pa * pb
            for j in word:
                cur = self._mult_by_ts(cur, j)
            for w, p in cur.items():
                out[w] = out.get(w, ZERO) + p
        return HeckeElt("T", out)

    def t_inverse_generator(self, j: int) -> HeckeElt:
        """T_{s_j}^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e."""
        s = self._simple[j]
        return HeckeElt(
            "T",
            {s: Q.bar(), self.W.identity: Q.bar() - ONE},
        )

    def bar(self, a: HeckeElt) -> HeckeElt:
        """Bar involution: v -> v^{-1}, T_w -> (T_{w^{-1}})^{-1}."""
        if a.basis != "T":
            raise ValueError("bar is implemented on the T-basis")
        W = self.W
        out = HeckeElt("T")
        for w, p in a.terms.items():
            if not W.in_affine_group(w):
                raise ValueError("bar only supported on the Coxeter part")
            inv_elt = self.t_basis(W.identity)
            for j in reversed(W.reduced_word(w)):
                inv_elt = self.t_multiply(self.t_inverse_generator(j), inv_elt)
            out = out + inv_elt.scale(p.bar())
        return out

    # -- Kazhdan-Lusztig polynomials -----------------------------------------

    def kl_polynomial(self, y: AffineElt, w: AffineElt) -> LaurentPoly:
        """P_{y,w} as a polynomial in q (even v-exponents)."""
        key = (y, w)
        hit = self._kl.get(key)
        if hit is not None:
            return hit
        W = self.W
        ly, lw = W.length(y), W.length(w)
        if y == w:
            val = ONE
        elif ly >= lw or not W.bruhat_leq(y, w):
            val = ZERO
        else:
            # left recursion at a descent s of w
            j = next(k for k in self.gens if W.descends(w, k, "left"))
            s = self._simple[j]
            sw = W.mult(s, w)
            sy = W.mult(s, y)
            c = 1 if W.length(sy) < ly else 0
            val = (
                self.kl_polynomial(sy, sw).scale_shift(1, 2 * (1 - c))
                + self.kl_polynomial(y, sw).scale_shift(1, 2 * c)
            )
            for z in self.elements_up_to(W.length(sw)):
                if not W.descends(z, j, "left"):
                    continue
                m = self.mu(z, sw)
                if m == 0 or not W.bruhat_leq(y, z):
                    continue
                val = val - self.kl_polynomial(y, z).scale_shift(
                    m, lw - W.length(z)
                )
        self._kl[key] = val
        return val

    def mu(self, z: AffineElt, w: AffineElt) -> int:
        """Coefficient of q^{(l(w)-l(z)-1)/2} in P_{z,w} (0 if not integral)."""
        key = (z, w)
        hit = self._mu.get(key)
        if hit is not None:
            return hit
        d = self.W.length(w) - self.W.length(z)
        m = 0 if d <= 0 else self.kl_polynomial(z, w).coefficient_of(d - 1)
        self._mu[key] = m
        return m

    # -- canonical basis ------------------------------------------------------

    def c_basis(self, w: AffineElt) -> HeckeElt:
        """C_w expanded in the T-basis (signed convention).

        For an extended element w = omega * x (omega of length zero),
        C_w = T_omega C_x, so the expansion is that of C_x with omega
        multiplied onto each index.
        """
        W = self.W
        if not W.in_affine_group(w):
            omega = W.omega_component(w)
            inner = self.c_basis(W.mult(W.inv(omega), w))
            return HeckeElt(
                "T", {W.mult(omega, y): p for y, p in inner.terms.items()}
            )
        lw = W.length(w)
        terms = {}
        for y in self.elements_up_to(lw):
            if not W.bruhat_leq(y, w):
                continue
            p = self.kl_polynomial(y, w)
            if p.is_zero():
                continue
            ly = W.length(y)
            # (-1)^{lw-ly} v^{lw-2ly} P(q^{-1})
            terms[y] = p.bar().scale_shift((-1) ** (lw - ly), lw - 2 * ly)
        return HeckeElt("T", terms)

    def c_to_t(self, a: HeckeElt) -> HeckeElt:
        if a.basis != "C":
            raise ValueError("c_to_t requires a C-basis element")
        out = HeckeElt("T")
        for w, p in a.terms.items():
            out = out + self.c_basis(w).scale(p)
        return out

    def t_to_c(self, a: HeckeElt) -> HeckeElt:
        """Triangular change of basis: peel maximal-length T-terms."""
        if a.basis != "T":
            raise ValueError("t_to_c requires a T-basis element")
        W = self.W
        rest = dict(a.terms)
        out = {}
        while rest:
            w = max(rest, key=lambda u: (W.length(u), tuple(u.translation),
                                         u.finite.index))
            # T_w coefficient of C_w is v^{-l(w)}
            coeff = rest[w].scale_shift(1, W.length(w))
            out[w] = coeff
            for u, p in self.c_basis(w).terms.items():
                nv = rest.get(u, ZERO) - coeff * p
                if nv.is_zero():
                    rest.pop(u, None)
                else:
                    rest[u] = nv
        return HeckeElt("C", out)

    # -- structure constants ----------------------------------------------------

    def h_constants(self, x: AffineElt, y: AffineElt) -> dict:
        """The family {h_{x,y,z}}_z via T-multiplication + change of basis."""
        prod = self.t_multiply(self.c_basis(x), self.c_basis(y))
        return dict(self.t_to_c(prod).terms)

    def _c_mult_by_cs(self, fam: dict, j: int) -> dict:
        """Right multiplication by C_{s_j} of a C-basis term map.

        C_w C_s = C_{ws} + sum_{z<w, zs<z} mu(z,w) C_z   if ws > w,
        C_w C_s = -(v + v^{-1}) C_w                      if ws < w.
        """
        W = self.W
        s = self._simple[j]
        out = {}

        def bump(w, p):
            if p.is_zero():
                return
            cur = out.get(w, ZERO) + p
            if cur.is_zero():
                out.pop(w, None)
            else:
                out[w] = cur

        for w, p in fam.items():
            ws = W.mult(w, s)
            if W.length(ws) > W.length(w):
                bump(ws, p)
                for z in self.elements_up_to(W.length(w)):
                    if W.descends(z, j):
                        m = self.mu(z, w)
                        if m:
                            bump(z, p.scale_shift(m, 0))
            else:
                bump(w, -(p * V_PLUS_VINV))
        return out

    def h_family(self, x: AffineElt, targets) -> dict:
        """h-constant families {y: {z: h_{x,y,z}}} for all y in targets.

        Dynamic program over y by increasing length using the canonical-basis
        right multiplication rule; much faster than h_constants per pair.
        """
        W = self.W
        needed = sorted(set(targets), key=W.length)
        fam = self._h_family_cache.setdefault(x, {W.identity: {x: ONE}})
        for y in needed:
            self._h_family_fill(x, y, fam)
        return {y: dict(fam[y]) for y in needed}

    def _h_family_fill(self, x, y, fam):
        if y in fam:
            return fam[y]
        W = self.W
        j = next(k for k in self.gens if W.descends(y, k))
        yp = W.mult(y, self._simple[j])
        prev = self._h_family_fill(x, yp, fam)
        cur = self._c_mult_by_cs(prev, j)
        # C_x C_{y'} C_s = C_x C_y + sum_{z<y', zs<z} mu(z,y') C_x C_z
        for z in self.elements_up_to(W.length(yp)):
            if z != yp and W.descends(z, j):
                m = self.mu(z, yp)
                if m:
                    sub = self._h_family_fill(x, z, fam)
                    for u, p in sub.items():
                        nv = cur.get(u, ZERO) - p.scale_shift(m, 0)
                        if nv.is_zero():
                            cur.pop(u, None)
                        else:
                            cur[u] = nv
        fam[y] = cur
        return cur

    # -- a-function and gamma -----------------------------------------------------

    def a_function(self, w: AffineElt, ball: int) -> int:
        """max over x, y of length <= ball of -(min v-exponent of h_{x,y,w})."""
        elements = self.elements_up_to(ball)
        best = 0
        for x in elements:
            fams = self.h_family(x, elements)
            for y, fam in fams.items():
                h = fam.get(w)
                if h is not None and not h.is_zero():
                    best = max(best, -h.min_exp())
        return best

    def gamma(self, x: AffineElt, y: AffineElt, z: AffineElt, a_z: int) -> int:
        """Coefficient of v^{-a_z} in h_{x,y,z^{-1}}."""
        zinv = self.W.inv(z)
        fam = self.h_family(x, [y])[y]
        h = fam.get(zinv)
        return 0 if h is None else h.coefficient_of(-a_z)

    # -- disk cache -----------------------------------------------------------------

    def cache_key(self, radius: int) -> str:
        payload = json.dumps(
            {
                "version": CACHE_VERSION,
                "type": self.W.rs.type_tag,
                "affine": self.affine,
                "radius": radius,
                "basis": "C-signed",
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def _cache_path(self, radius: int, cache_dir=None) -> Path:
        base = cache_dir or os.environ.get(CACHE_ENV)
        if base is None:
            base = Path.home() / ".cache" / "asymhecke"
        base = Path(base)
        base.mkdir(parents=True, exist_ok=True)
        tag = self.W.rs.type_tag + ("aff" if self.affine else "fin")
        return base / f"kl-{tag}-r{radius}-{self.cache_key(radius)}.json"

    def warm_kl(self, radius: int, cache_dir=None) -> Path:
        """Compute (or load) KL polynomials on all pairs within the ball.

        The serialized table is a deterministic function of the inputs:
        sorted keys, canonical polynomial text.
        """
        path = self._cache_path(radius, cache_dir)
        W = self.W
        if path.exists():
            with open(path) as fh:
                data = json.load(fh)
            for key, txt in data["P"].items():
                ys, ws = key.split("|")
                pair = (W.from_string(ys), W.from_string(ws))
                self._kl[pair] = LaurentPoly.from_string(txt)
            return path
        elements = self.elements_up_to(radius)
        table = {}
        for w in elements:
            for y in elements:
                if W.length(y) <= W.length(w) and W.bruhat_leq(y, w):
                    p = self.kl_polynomial(y, w)
                    table[f"{W.to_string(y)}|{W.to_string(w)}"] = p.to_string()
        with open(path, "w") as fh:
            json.dump({"schema": CACHE_VERSION, "P": table}, fh,
                      sort_keys=True, separators=(",", ":"))
        return path


_ALGEBRAS = {}


def hecke_algebra(type_tag: str, affine: bool = True) -> HeckeAlgebra:
    """Shared HeckeAlgebra instances; type_tag accepts "A1" or "A1~" forms."""
    clean = type_tag.rstrip("~")
    if type_tag.endswith("~"):
        affine = True
    key = (clean, affine)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = HeckeAlgebra(affine_weyl_group(clean), affine=affine)
    return _ALGEBRAS[key]
