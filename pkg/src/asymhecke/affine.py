"""Extended affine Weyl groups W_ext = P ⋊ W for types A1-A3.

Elements are pairs (lambda, w) representing t_lambda * w with lambda in the
weight lattice P and w in the finite Weyl group.  The affine Weyl group
proper is the subgroup with lambda in the root lattice Q; it is a Coxeter
group with generators s_0 = t_theta * s_theta and the finite s_1..s_n.

Lengths come from the closed Iwahori-Matsumoto formula

    l(t_lambda w) = sum_{a>0, w^-1 a>0} |<lambda, a^vee>|
                  + sum_{a>0, w^-1 a<0} |<lambda, a^vee> - 1|.

Length-zero elements of W_ext form the group Omega = P/Q.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .rootdata import RootSystem, Weight, WeylElt, root_system


class AffineElt:
    """Element t_lambda * w of the extended affine Weyl group."""

    __slots__ = ("translation", "finite", "_hash")

    def __init__(self, translation: Weight, finite: WeylElt):
        self.translation = translation
        self.finite = finite
        self._hash = hash((translation, finite))

    def __eq__(self, other):
        return (
            isinstance(other, AffineElt)
            and self.translation == other.translation
            and self.finite == other.finite
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"AffineElt(t{tuple(self.translation)}*{self.finite!r})"


class AffineWeylGroup:
    """Operations on the (extended) affine Weyl group of a root system."""

    def __init__(self, root_sys: RootSystem):
        self.rs = root_sys
        self.rank = root_sys.rank
        zero = Weight([0] * self.rank)
        self.identity = AffineElt(zero, root_sys.identity)
        # s_theta: reflection in the highest root
        theta = root_sys.highest_root
        self._s_theta = next(
            w
            for w in root_sys.weyl_elements
            if root_sys.act(w, theta) == -theta
            and self._is_reflection_on(w, theta)
        )
        self.s0 = AffineElt(theta, self._s_theta)
        self._len_cache = {}
        self._descent_cache = {}

    def _is_reflection_on(self, w, theta):
        # pick out s_theta among elements sending theta to -theta: it is an
        # involution whose matrix has trace n - 2 (one eigenvalue -1)
        rs = self.rs
        if rs.mult(w, w) is not rs.identity:
            return False
        tr = sum(w.matrix[i][i] for i in range(rs.rank))
        return tr == rs.rank - 2

    # -- group law ---------------------------------------------------------

    def mult(self, a: AffineElt, b: AffineElt) -> AffineElt:
        # (t_l u)(t_m v) = t_{l + u(m)} (u v)
        rs = self.rs
        return AffineElt(
            a.translation + rs.act(a.finite, b.translation),
            rs.mult(a.finite, b.finite),
        )

    def inv(self, a: AffineElt) -> AffineElt:
        rs = self.rs
        wi = rs.inv(a.finite)
        return AffineElt(-rs.act(wi, a.translation), wi)

    def translation(self, lam) -> AffineElt:
        return AffineElt(self.rs.weight(lam), self.rs.identity)

    def from_finite(self, w: WeylElt) -> AffineElt:
        return AffineElt(Weight([0] * self.rank), w)

    def simple_reflection(self, j: int) -> AffineElt:
        """Generator s_j; j = 0 is the affine reflection, 1..n finite."""
        if j == 0:
            return self.s0
        return self.from_finite(self.rs.simple_reflections[j - 1])

    def from_word(self, word) -> AffineElt:
        w = self.identity
        for j in word:
            w = self.mult(w, self.simple_reflection(j))
        return w

    # -- length and Coxeter structure ---------------------------------------

    def length(self, a: AffineElt) -> int:
        hit = self._len_cache.get(a)
        if hit is not None:
            return hit
        rs = self.rs
        lam, w = a.translation, a.finite
        wi = rs.inv(w)
        total = 0
        for coroot in rs.positive_coroots:
            k = rs.pair_coroot(lam, coroot)
            # w^-1(alpha) > 0 iff l(w s_alpha) > l(w); test via action on
            # the coroot expressed as a root (simply laced: same coords)
            alpha = Weight(
                sum(rs.simple_roots[i][j] * coroot[i] for i in range(rs.rank))
                for j in range(rs.rank)
            )
            img = rs.act(wi, alpha)
            positive = _root_is_positive(rs, img)
            total += abs(k) if positive else abs(k - 1)
        self._len_cache[a] = total
        return total

    def descends(self, a: AffineElt, j: int, side: str = "right") -> bool:
        """Whether l(a s_j) < l(a) (right) or l(s_j a) < l(a) (left)."""
        key = (a, j, side)
        hit = self._descent_cache.get(key)
        if hit is None:
            s = self.simple_reflection(j)
            other = self.mult(a, s) if side == "right" else self.mult(s, a)
            hit = self.length(other) < self.length(a)
            self._descent_cache[key] = hit
        return hit

    def right_descents(self, a: AffineElt):
        return tuple(j for j in range(self.rank + 1) if self.descends(a, j))

    def left_descents(self, a: AffineElt):
        return tuple(
            j for j in range(self.rank + 1) if self.descends(a, j, "left")
        )

    def reduced_word(self, a: AffineElt):
        """A reduced expression; empty tuple for length-zero elements."""
        word = []
        cur = a
        ln = self.length(cur)
        while ln > 0:
            for j in range(self.rank + 1):
                nxt = self.mult(cur, self.simple_reflection(j))
                ln2 = self.length(nxt)
                if ln2 < ln:
                    word.append(j)
                    cur, ln = nxt, ln2
                    break
            else:
                raise AssertionError("no descent on a positive-length element")
        if cur != self.identity:
            raise ValueError(
                "element is not in the affine Weyl group proper "
                "(nontrivial Omega component)"
            )
        return tuple(reversed(word))

    def in_affine_group(self, a: AffineElt) -> bool:
        """True iff the translation part lies in the root lattice Q."""
        return self.rs.in_root_lattice(a.translation)

    def omega_component(self, a: AffineElt) -> AffineElt:
        """The length-zero element omega with a = omega * (Coxeter part)."""
        for omega in self.omega_elements():
            if self.in_affine_group(self.mult(self.inv(omega), a)):
                return omega
        raise AssertionError("P/Q coset without a length-zero representative")

    @lru_cache(maxsize=None)
    def omega_elements(self):
        """All length-zero elements: omega_i = t_{varpi_i} w_i plus identity."""
        rs = self.rs
        out = [self.identity]
        for i in range(self.rank):
            lam = rs.fundamental_weights[i]
            for w in rs.weyl_elements:
                cand = AffineElt(lam, w)
                if self.length(cand) == 0:
                    out.append(cand)
                    break
        return tuple(out)

    # -- ball enumeration ----------------------------------------------------

    def ball(self, radius: int):
        """All elements of the affine Weyl group (over Q) of length <= radius.

        Returned sorted by (length, translation, finite index) for
        deterministic iteration order.
        """
        gens = [self.simple_reflection(j) for j in range(self.rank + 1)]
        seen = {self.identity: 0}
        frontier = [self.identity]
        for dist in range(1, radius + 1):
            new_frontier = []
            for a in frontier:
                for g in gens:
                    b = self.mult(a, g)
                    if b not in seen:
                        # BFS distance in the Cayley graph equals length
                        seen[b] = dist
                        new_frontier.append(b)
            frontier = new_frontier
        out = sorted(
            seen,
            key=lambda a: (seen[a], tuple(a.translation), a.finite.index),
        )
        return out

    # -- Bruhat order ----------------------------------------------------------

    def bruhat_leq(self, x: AffineElt, y: AffineElt) -> bool:
        return self._bruhat(x, y)

    @lru_cache(maxsize=1 << 20)
    def _bruhat(self, x, y):
        lx, ly = self.length(x), self.length(y)
        if lx > ly:
            return False
        if lx == ly:
            return x == y
        # take any right descent s of y: x <= y iff min(x, xs) <= ys
        for j in range(self.rank + 1):
            s = self.simple_reflection(j)
            ys = self.mult(y, s)
            if self.length(ys) < ly:
                xs = self.mult(x, s)
                if self.length(xs) < lx:
                    return self._bruhat(xs, ys)
                return self._bruhat(x, ys) or self._bruhat(xs, ys)
        raise AssertionError("positive-length element with no descent")

    # -- text form ---------------------------------------------------------------

    def to_string(self, a: AffineElt) -> str:
        lam = ",".join(str(c) for c in a.translation)
        word = "".join(str(j) for j in a.finite.word) or "e"
        return f"t[{lam}]*w[{word}]"

    def from_string(self, text: str) -> AffineElt:
        m = re.fullmatch(
            r"\s*t\[([-\d,\s]*)\]\s*[*·]\s*w\[([\de]*)\]\s*", text
        )
        if not m:
            raise ValueError(f"cannot parse affine element {text!r}")
        coords = [int(x) for x in m.group(1).split(",")] if m.group(1).strip() else []
        if len(coords) != self.rank:
            raise ValueError(
                f"translation {coords} has wrong rank for {self.rs.type_tag}"
            )
        wtxt = m.group(2)
        word = [] if wtxt in ("", "e") else [int(ch) for ch in wtxt]
        return AffineElt(self.rs.weight(coords), self.rs.from_word(word))

    def __repr__(self):
        return f"AffineWeylGroup({self.rs.type_tag})"


def _root_is_positive(rs: RootSystem, root_fund_coords) -> bool:
    """Positivity of a root given in fundamental coordinates."""
    coords = rs.to_root_coords(root_fund_coords)
    pos = any(c > 0 for c in coords)
    neg = any(c < 0 for c in coords)
    if pos and neg:
        raise ValueError("not a root: mixed signs in root coordinates")
    return pos


@lru_cache(maxsize=None)
def affine_weyl_group(type_tag: str) -> AffineWeylGroup:
    return AffineWeylGroup(root_system(type_tag))
