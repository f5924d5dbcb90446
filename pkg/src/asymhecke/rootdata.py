"""Root systems, weight lattices and finite Weyl groups for types A1-A3.

Weights live in fundamental-weight coordinates (integer tuples).  The whole
finite Weyl group is precomputed at construction time (at most 24 elements),
so products, inverses, lengths and descents are table lookups.

Scaffolding is generic over a Cartan matrix of simply-laced type A; only
"A1", "A2", "A3" are exposed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
}


class WeylElt:
    """Finite Weyl group element: reduced word plus cached action matrix.

    Equality and hashing go through the action matrix (canonical); the word
    is one chosen reduced expression.
    """

    __slots__ = ("word", "matrix", "length", "index")

    def __init__(self, word, matrix, index):
        self.word = word
        self.matrix = matrix
        self.length = len(word)
        self.index = index

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"W[{''.join(str(i) for i in self.word) or 'e'}]"


class Weight(tuple):
    """Integer weight in fundamental-weight coordinates."""

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self)

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)


class RootSystem:
    """Root datum of a simply-connected group of type A1/A2/A3."""

    def __init__(self, type_tag: str):
        if type_tag not in CARTAN:
            raise ValueError(f"unsupported root system type: {type_tag!r}")
        self.type_tag = type_tag
        self.cartan = CARTAN[type_tag]
        self.rank = len(self.cartan)
        # simple root alpha_j in fundamental coordinates = column j of Cartan
        self.simple_roots = tuple(
            Weight(self.cartan[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )
        self.fundamental_weights = tuple(
            Weight(1 if i == j else 0 for i in range(self.rank))
            for j in range(self.rank)
        )
        # positive (co)roots of A_n: e_i + ... + e_j in the simple-coroot basis
        self.positive_coroots = tuple(
            tuple(1 if i <= k <= j else 0 for k in range(self.rank))
            for i in range(self.rank)
            for j in range(i, self.rank)
        )
        self.rho = Weight([1] * self.rank)
        self._cartan_inv = _invert_fraction_matrix(self.cartan)
        self._build_group()

    # -- group table -----------------------------------------------------

    def _reflection_matrix(self, j):
        # s_j(lambda)_i = c_i - A[i][j] * c_j
        n = self.rank
        return tuple(
            tuple(
                (1 if i == k else 0) - (self.cartan[i][j] if k == j else 0)
                for k in range(n)
            )
            for i in range(n)
        )

    def _build_group(self):
        n = self.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        gens = [self._reflection_matrix(j) for j in range(n)]
        elements = [WeylElt((), ident, 0)]
        seen = {ident: elements[0]}
        frontier = [elements[0]]
        while frontier:
            new_frontier = []
            for w in frontier:
                for j, g in enumerate(gens):
                    m = _mat_mul(w.matrix, g)  # w * s_j acts by w∘s_j
                    if m not in seen:
                        elt = WeylElt(w.word + (j + 1,), m, len(elements))
                        seen[m] = elt
                        elements.append(elt)
                        new_frontier.append(elt)
            frontier = new_frontier
        elements.sort(key=lambda w: (w.length, w.word))
        for i, w in enumerate(elements):
            w.index = i
        self.weyl_elements = tuple(elements)
        self._by_matrix = {w.matrix: w for w in elements}
        self.identity = elements[0]
        self.w0 = elements[-1]
        order = len(elements)
        self._mult = [
            [self._by_matrix[_mat_mul(a.matrix, b.matrix)] for b in elements]
            for a in elements
        ]
        self._inv = [None] * order
        for a in elements:
            for b in elements:
                if self._mult[a.index][b.index] is self.identity:
                    self._inv[a.index] = b
        self.simple_reflections = tuple(
            self._by_matrix[g] for g in gens
        )

    # -- Weyl group operations --------------------------------------------

    def mult(self, a: WeylElt, b: WeylElt) -> WeylElt:
        return self._mult[a.index][b.index]

    def inv(self, a: WeylElt) -> WeylElt:
        return self._inv[a.index]

    def from_word(self, word) -> WeylElt:
        w = self.identity
        for j in word:
            if not 1 <= j <= self.rank:
                raise ValueError(f"bad finite generator index {j}")
            w = self.mult(w, self.simple_reflections[j - 1])
        return w

    def act(self, w: WeylElt, lam) -> Weight:
        lam = self.weight(lam)
        m = w.matrix
        return Weight(
            sum(m[i][k] * lam[k] for k in range(self.rank))
            for i in range(self.rank)
        )

    def weight(self, coords) -> Weight:
        lam = Weight(coords)
        if len(lam) != self.rank:
            raise ValueError(
                f"weight {tuple(lam)} has wrong rank for {self.type_tag}"
            )
        return lam

    def pair_coroot(self, lam, coroot) -> int:
        """<lambda, alpha^vee> for a positive coroot in simple-coroot coords."""
        return sum(c * k for c, k in zip(lam, coroot))

    def dominant_representative(self, lam):
        """(mu, w) with mu dominant and w(lam) = mu; w minimal length."""
        lam = self.weight(lam)
        w = self.identity
        cur = lam
        while True:
            for j in range(self.rank):
                if cur[j] < 0:
                    cur = self.act(self.simple_reflections[j], cur)
                    w = self.mult(self.simple_reflections[j], w)
                    break
            else:
                return cur, w

    def left_descents(self, w: WeylElt):
        """Indices j (1-based) with l(s_j w) < l(w), i.e. w^-1(alpha_j) < 0."""
        return tuple(
            j + 1
            for j in range(self.rank)
            if self.mult(self.simple_reflections[j], w).length < w.length
        )

    def right_descents(self, w: WeylElt):
        return tuple(
            j + 1
            for j in range(self.rank)
            if self.mult(w, self.simple_reflections[j]).length < w.length
        )

    def orbit(self, lam):
        """The W-orbit of a weight, as a set."""
        lam = self.weight(lam)
        return {self.act(w, lam) for w in self.weyl_elements}

    # -- conversions -------------------------------------------------------

    def to_root_coords(self, lam):
        """Express a weight in the simple-root basis (Fractions)."""
        lam = self.weight(lam)
        return tuple(
            sum(self._cartan_inv[i][j] * lam[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def in_root_lattice(self, lam) -> bool:
        return all(x.denominator == 1 for x in self.to_root_coords(lam))

    def inner(self, lam, mu) -> Fraction:
        """W-invariant form with <alpha, alpha> = 2 on roots."""
        lam, mu = self.weight(lam), self.weight(mu)
        return sum(
            lam[i] * self._cartan_inv[i][j] * mu[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    @property
    def highest_root(self) -> Weight:
        theta = self.simple_roots[0]
        for a in self.simple_roots[1:]:
            theta = theta + a
        return theta

    @property
    def highest_coroot(self):
        return tuple([1] * self.rank)

    def __repr__(self):
        return f"RootSystem({self.type_tag})"


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _invert_fraction_matrix(m):
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@lru_cache(maxsize=None)
def root_system(type_tag: str) -> RootSystem:
    """Shared immutable RootSystem instances by type tag."""
    return RootSystem(type_tag)
