"""Representation ring R(G) for simply-connected groups of type A1-A3.

Characters of irreducibles V(lambda), tensor product decomposition, Weyl
dimension formula, and Euler characteristics of line bundles on the flag
variety (dot-action reflection rule).

Two independent algorithms are kept for the key operations:
  * weyl_character: Freudenthal recursion (primary) vs the alternating-sum
    numerator identity (test oracle);
  * tensor_decompose: dot-action pushing of one character against the other
    highest weight (primary) vs character multiplication + greedy peeling
    (test oracle).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rootdata import RootSystem, Weight, root_system


class VirtualCharacter:
    """Element of R(G): integer combination of irreducibles [V(lambda)].

    Keys are dominant weights; values are (possibly negative) integers.
    """

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms=None):
        self.rs = rs
        clean = {}
        for lam, c in (terms or {}).items():
            lam = rs.weight(lam)
            if not lam.is_dominant():
                raise ValueError(f"VirtualCharacter key {tuple(lam)} not dominant")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def irreducible(cls, rs, lam, coeff=1):
        return cls(rs, {rs.weight(lam): coeff})

    @classmethod
    def zero(cls, rs):
        return cls(rs, {})

    @classmethod
    def triv(cls, rs):
        return cls.irreducible(rs, [0] * rs.rank)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return VirtualCharacter(self.rs, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return VirtualCharacter(self.rs, out)

    def __neg__(self):
        return VirtualCharacter(self.rs, {k: -v for k, v in self.terms.items()})

    def scale(self, c: int):
        return VirtualCharacter(self.rs, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Tensor product, decomposed back into irreducibles."""
        out = {}
        for lam, a in self.terms.items():
            for nu, b in other.terms.items():
                for mu, m in tensor_decompose(self.rs, lam, nu).terms.items():
                    out[mu] = out.get(mu, 0) + a * b * m
        return VirtualCharacter(self.rs, out)

    def dim(self):
        return sum(c * dim(self.rs, lam) for lam, c in self.terms.items())

    def __eq__(self, other):
        return (
            isinstance(other, VirtualCharacter)
            and self.rs is other.rs
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rs.type_tag, tuple(sorted(self.terms.items()))))

    def to_dict(self):
        """JSON-friendly: {"a,b": mult} with sorted keys."""
        return {
            ",".join(str(c) for c in lam): m
            for lam, m in sorted(self.terms.items())
        }

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam, c in sorted(self.terms.items()):
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            bits.append(f"{coef}V{tuple(lam)}")
        return " + ".join(bits).replace("+ -", "- ")


# -- weight multiplicities (Freudenthal) -------------------------------------


@lru_cache(maxsize=None)
def _dominant_multiplicities(type_tag: str, lam: Weight):
    """Multiplicities of dominant weights in V(lam) via Freudenthal."""
    rs = root_system(type_tag)
    # dominant mu with lam - mu in Q+: mu = lam - sum k_j alpha_j,
    # 0 <= k_j <= (A^-1 lam)_j
    bounds = [int(x) for x in rs.to_root_coords(lam)]
    candidates = []

    def rec(j, ks):
        if j == rs.rank:
            mu = lam
            for k, alpha in zip(ks, rs.simple_roots):
                mu = mu - Weight(k * a for a in alpha)
            if mu.is_dominant():
                candidates.append((sum(ks), mu))
            return
        for k in range(bounds[j] + 1):
            rec(j + 1, ks + [k])

    rec(0, [])
    candidates.sort()  # increasing height of lam - mu

    positive_roots = [
        Weight(sum(rs.simple_roots[i][j] * co[i] for i in range(rs.rank))
               for j in range(rs.rank))
        for co in rs.positive_coroots
    ]
    mult = {}

    def lookup(mu):
        dom, _ = rs.dominant_representative(mu)
        return mult.get(dom, 0)

    lam_rho2 = rs.inner(lam + rs.rho, lam + rs.rho)
    for _, mu in candidates:
        if mu == lam:
            mult[lam] = 1
            continue
        denom = lam_rho2 - rs.inner(mu + rs.rho, mu + rs.rho)
        total = Fraction(0)
        for alpha in positive_roots:
            k = 1
            while True:
                nu = mu + Weight(k * a for a in alpha)
                m = lookup(nu)
                if m == 0 and not _within(rs, lam, nu):
                    break
                total += 2 * m * rs.inner(nu, alpha)
                k += 1
        val = total / denom
        assert val.denominator == 1 and val >= 0
        mult[mu] = int(val)
    return mult


def _within(rs, lam, nu):
    """Whether lam - nu is still a nonnegative root combination."""
    coords = rs.to_root_coords(Weight(a - b for a, b in zip(lam, nu)))
    return all(x.denominator == 1 and x >= 0 for x in coords)


def weyl_character(rs: RootSystem, lam) -> dict:
    """Full formal character of V(lam): {Weight: multiplicity} over all of P."""
    lam = rs.weight(lam)
    if not lam.is_dominant():
        raise ValueError(f"{tuple(lam)} is not dominant")
    out = {}
    for mu, m in _dominant_multiplicities(rs.type_tag, lam).items():
        for nu in rs.orbit(mu):
            out[nu] = m
    return out


def weyl_character_numerator(rs: RootSystem, lam) -> dict:
    """Independent oracle: character via ch(lam) * A_rho = A_{lam+rho}.

    Computes A_{lam+rho} and divides by A_rho as formal sums, by peeling the
    unique maximal term at each step.
    """
    lam = rs.weight(lam)
    if not lam.is_dominant():
        raise ValueError(f"{tuple(lam)} is not dominant")

    def alternating(mu):
        out = {}
        for w in rs.weyl_elements:
            nu = rs.act(w, mu)
            out[nu] = out.get(nu, 0) + (-1) ** w.length
        return {k: v for k, v in out.items() if v}

    numer = alternating(lam + rs.rho)
    denom = alternating(rs.rho)
    # divide: repeatedly cancel the maximal remaining term of the numerator
    quot = {}
    # height function for picking a maximal term deterministically
    def height(mu):
        return sum(rs.to_root_coords(mu)), tuple(mu)

    lead_mu, lead_c = max(denom.items(), key=lambda kv: height(kv[0]))
    while numer:
        mu, c = max(numer.items(), key=lambda kv: height(kv[0]))
        term = mu - lead_mu
        coef = c // lead_c
        assert coef * lead_c == c
        quot[term] = quot.get(term, 0) + coef
        for dmu, dc in denom.items():
            key = term + dmu
            nv = numer.get(key, 0) - coef * dc
            if nv:
                numer[key] = nv
            else:
                numer.pop(key, None)
    return quot


def weight_multiplicity(rs: RootSystem, lam, mu) -> int:
    """Multiplicity of the weight mu in V(lam)."""
    lam = rs.weight(lam)
    dom, _ = rs.dominant_representative(mu)
    return _dominant_multiplicities(rs.type_tag, lam).get(dom, 0)


def dim(rs: RootSystem, lam) -> int:
    """Weyl dimension formula."""
    lam = rs.weight(lam)
    if not lam.is_dominant():
        raise ValueError(f"{tuple(lam)} is not dominant")
    num = den = 1
    for coroot in rs.positive_coroots:
        num *= rs.pair_coroot(lam + rs.rho, coroot)
        den *= rs.pair_coroot(rs.rho, coroot)
    assert num % den == 0
    return num // den


# -- Euler characteristic of O(lambda) on the flag variety --------------------


def euler_characteristic(rs: RootSystem, lam) -> VirtualCharacter:
    """chi(B, O(lam)) by the dot-action reflection rule.

    Zero when lam + rho is singular; otherwise (-1)^{l(w)} [V(w(lam+rho)-rho)]
    where w(lam+rho) is dominant.
    """
    lam = rs.weight(lam)
    shifted = lam + rs.rho
    dom, w = rs.dominant_representative(shifted)
    if any(c == 0 for c in dom):
        return VirtualCharacter.zero(rs)
    return VirtualCharacter.irreducible(rs, dom - rs.rho, (-1) ** w.length)


# -- tensor products -----------------------------------------------------------


@lru_cache(maxsize=None)
def _tensor_cached(type_tag: str, lam: Weight, nu: Weight):
    rs = root_system(type_tag)
    # push every weight of V(nu) against lam via the dot action
    out = {}
    for mu, m in _dominant_multiplicities(type_tag, nu).items():
        for beta in rs.orbit(mu):
            shifted = lam + beta + rs.rho
            dom, w = rs.dominant_representative(shifted)
            if any(c == 0 for c in dom):
                continue
            key = dom - rs.rho
            out[key] = out.get(key, 0) + m * (-1) ** w.length
    return {k: v for k, v in out.items() if v}


def tensor_decompose(rs: RootSystem, lam, nu) -> VirtualCharacter:
    """Decomposition of V(lam) (x) V(nu) into irreducibles."""
    lam, nu = rs.weight(lam), rs.weight(nu)
    if not (lam.is_dominant() and nu.is_dominant()):
        raise ValueError("tensor_decompose needs dominant weights")
    # fewer weights to push when nu is the smaller representation
    if dim(rs, nu) > dim(rs, lam):
        lam, nu = nu, lam
    return VirtualCharacter(rs, _tensor_cached(rs.type_tag, lam, nu))


def tensor_decompose_by_peeling(rs: RootSystem, lam, nu) -> VirtualCharacter:
    """Oracle: multiply formal characters, peel highest weights greedily."""
    lam, nu = rs.weight(lam), rs.weight(nu)
    a, b = weyl_character(rs, lam), weyl_character(rs, nu)
    prod = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            key = m1 + m2
            prod[key] = prod.get(key, 0) + c1 * c2
    prod = {k: v for k, v in prod.items() if v}

    def height(mu):
        return sum(rs.to_root_coords(mu)), tuple(mu)

    out = {}
    while prod:
        mu, c = max(
            ((k, v) for k, v in prod.items() if k.is_dominant()),
            key=lambda kv: height(kv[0]),
        )
        assert c > 0
        out[mu] = c
        for wmu, wm in weyl_character(rs, mu).items():
            nv = prod.get(wmu, 0) - c * wm
            if nv:
                prod[wmu] = nv
            else:
                prod.pop(wmu, None)
    return VirtualCharacter(rs, out)


# -- polynomial model of R(G) ---------------------------------------------------


def polynomial_model(rs: RootSystem):
    """Ring isomorphism R(G) -> Z[e_1..e_n], [V(varpi_i)] -> e_i.

    Returns (symbols, to_poly) where to_poly maps a VirtualCharacter to a
    sympy expression.  Used for exact determinants over R(G).
    """
    import sympy

    syms = sympy.symbols(f"e1:{rs.rank + 1}")

    @lru_cache(maxsize=None)
    def irr_poly(lam: Weight):
        if all(c == 0 for c in lam):
            return sympy.Integer(1)
        # product of fundamentals = V(lam) + lower terms
        prod = VirtualCharacter.triv(rs)
        for i, c in enumerate(lam):
            fw = rs.fundamental_weights[i]
            for _ in range(c):
                prod = prod * VirtualCharacter.irreducible(rs, fw)
        expr = sympy.Integer(1)
        for i, c in enumerate(lam):
            expr *= syms[i] ** c
        for mu, m in prod.terms.items():
            if mu != lam:
                expr -= m * irr_poly(mu)
        assert prod.terms.get(lam) == 1
        return sympy.expand(expr)

    def to_poly(vc: VirtualCharacter):
        return sympy.expand(
            sum((m * irr_poly(lam) for lam, m in vc.terms.items()),
                sympy.Integer(0))
        )

    return syms, to_poly
