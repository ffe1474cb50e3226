"""Root systems of the compact simple Lie algebras, built from Cartan matrices.

All arithmetic is exact: integers for roots, Dynkin labels and coroot
pairings, ``fractions.Fraction`` for the symmetrized invariant form
(normalized so that long roots have squared length 2).  Weights are plain
tuples of Dynkin labels (fundamental-weight coordinates); roots are stored
as integer coefficient vectors over the simple roots, with their label and
coroot-label images cached at construction time.

Node numbering follows Bourbaki throughout.  ``ov_to_bourbaki`` documents
the permutation translating Onishchik--Vinberg labels, which differ for
the E series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

Weight = tuple[int, ...]

#: admissible series letters, in canonical (ascending) order
SERIES = ("A", "B", "C", "D", "E", "F", "G")

_SERIES_ORDER = {s: i for i, s in enumerate(SERIES)}

_GROUP_TOKEN = re.compile(r"([A-G])([0-9]+)")


@dataclass(frozen=True)
class SimpleLieType:
    """One compact simple type, e.g. A5, C3, E7.

    Rank restrictions reject the aliases B1/C1 (= A1), D2 (= A1 x A1) and
    D3 (= A3) so that every type has a unique name.
    """

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in _SERIES_ORDER:
            raise ValueError(f"unknown series {self.series!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[self.series]
        if not ok:
            raise ValueError(f"invalid rank {r} for series {self.series}")

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_SERIES_ORDER[self.series], self.rank)

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, token: str) -> "SimpleLieType":
        m = _GROUP_TOKEN.fullmatch(token)
        if m is None:
            raise ValueError(f"malformed group token {token!r}")
        return cls(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class GroupSpec:
    """A finite product of simple factors (a compact semisimple group)."""

    factors: tuple[SimpleLieType, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("empty group")

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def dim(self) -> int:
        return sum(dim_g(f) for f in self.factors)

    @property
    def num_positive_roots(self) -> int:
        return sum(len(build_root_system(f).positive_roots) for f in self.factors)

    def is_canonical(self) -> bool:
        keys = [f.sort_key for f in self.factors]
        return keys == sorted(keys, reverse=True)

    def split(self, labels: Sequence[int]) -> list[Weight]:
        """Cut a concatenated label vector into per-factor weights."""
        if len(labels) != self.rank:
            raise ValueError(
                f"expected {self.rank} labels for {self}, got {len(labels)}"
            )
        out = []
        i = 0
        for f in self.factors:
            out.append(tuple(labels[i : i + f.rank]))
            i += f.rank
        return out

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)


class Root(NamedTuple):
    """A positive root: coefficients over simple roots plus cached images."""

    coeffs: tuple[int, ...]
    labels: tuple[int, ...]  # Dynkin-label image, <alpha, alpha_j^vee>
    coroot: tuple[int, ...]  # <Lambda_j, alpha^vee> pairings
    height: int


def _cartan_and_lengths(t: SimpleLieType) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan data: C[i][j] = <alpha_i, alpha_j^vee> and d_i = (alpha_i,alpha_i)/2."""
    n = t.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    d = [Fraction(1)] * n

    def bond(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        C[i][j] = cij
        C[j][i] = cji

    s = t.series
    if s == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif s == "B":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -2, -1)  # alpha_n short
        d[n - 1] = Fraction(1, 2)
    elif s == "C":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -1, -2)  # alpha_n long
        d = [Fraction(1, 2)] * (n - 1) + [Fraction(1)]
    elif s == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif s == "E":
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif s == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)  # alpha_3, alpha_4 short
        bond(2, 3)
        d[2] = d[3] = Fraction(1, 2)
    elif s == "G":
        bond(0, 1, -1, -3)  # alpha_1 short
        d[0] = Fraction(1, 3)
    return C, d


def _close_positive_roots(C: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Generate all positive roots from the simple ones by root strings.

    From a root alpha and a simple root alpha_i, alpha + alpha_i is a root
    iff p - <alpha, alpha_i^vee> > 0, where p is the depth of the string
    below alpha in the i direction.
    """
    n = len(C)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        new: list[tuple[int, ...]] = []
        for c in frontier:
            label = [sum(c[k] * C[k][j] for k in range(n)) for j in range(n)]
            for i in range(n):
                p = 0
                back = list(c)
                while True:
                    back[i] -= 1
                    if back[i] < 0 or tuple(back) not in found:
                        break
                    p += 1
                if p - label[i] > 0:
                    up = list(c)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in found:
                        found.add(cand)
                        new.append(cand)
        frontier = new
    return sorted(found, key=lambda c: (sum(c), c))


def _invert(M: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(M)
    a = [[Fraction(M[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        inv[col] = [x / f for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


class RootSystem:
    """Immutable root-system data for one simple type.

    Positive roots are ordered by height, then lexicographically by
    coefficient vector, so every downstream output is canonical.
    """

    def __init__(self, lie_type: SimpleLieType):
        self.type = lie_type
        self.rank = lie_type.rank
        C, d = _cartan_and_lengths(lie_type)
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in C)
        self.lengths: tuple[Fraction, ...] = tuple(d)
        self.cartan_inverse: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(r) for r in _invert(C)
        )
        # (Lambda_i, Lambda_j) = (C^-1)_{ij} d_j
        self.fw_gram: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(self.cartan_inverse[i][j] * d[j] for j in range(self.rank))
            for i in range(self.rank)
        )
        roots = []
        for coeffs in _close_positive_roots(C):
            labels = tuple(
                sum(coeffs[k] * C[k][j] for k in range(self.rank))
                for j in range(self.rank)
            )
            # (alpha,alpha)/2 = (1/2) sum_j coeffs_j d_j labels_j
            d_alpha = sum(
                Fraction(coeffs[j]) * d[j] * labels[j] for j in range(self.rank)
            ) / 2
            coroot = tuple(
                _as_int(Fraction(coeffs[j]) * d[j] / d_alpha)
                for j in range(self.rank)
            )
            roots.append(Root(coeffs, labels, coroot, sum(coeffs)))
        self.positive_roots: tuple[Root, ...] = tuple(roots)
        self.sum_pos_coroots: tuple[int, ...] = tuple(
            sum(r.coroot[j] for r in roots) for j in range(self.rank)
        )
        #: Dynkin labels of the Weyl vector delta
        self.weyl_vector_labels: Weight = (1,) * self.rank
        self.root_labels: frozenset[Weight] = frozenset(
            r.labels for r in roots
        ) | frozenset(tuple(-x for x in r.labels) for r in roots)

    # -- pairings -------------------------------------------------------

    def pairing(self, weight: Sequence[int], root: Root) -> int:
        """Integral coroot pairing <weight, alpha^vee>."""
        return sum(w * c for w, c in zip(weight, root.coroot))

    def sum_pos_coroots_pairing(self, weight: Sequence[int]) -> int:
        """Sum over positive roots of <weight, alpha^vee>."""
        return sum(w * c for w, c in zip(weight, self.sum_pos_coroots))

    def weight_form(self, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
        """Invariant form (mu, nu) of two weights in Dynkin labels."""
        total = Fraction(0)
        for i, a in enumerate(mu):
            if a:
                row = self.fw_gram[i]
                total += a * sum(b * row[j] for j, b in enumerate(nu) if b)
        return total

    def root_form(self, mu: Sequence[int], root: Root) -> Fraction:
        """Invariant form (mu, alpha) for a weight and a root."""
        return sum(
            Fraction(c) * d * m
            for c, d, m in zip(root.coeffs, self.lengths, mu)
            if c and m
        ) or Fraction(0)

    def root_coords(self, labels: Sequence[int]) -> tuple[Fraction, ...]:
        """Express a weight given by Dynkin labels in the simple-root basis."""
        n = self.rank
        return tuple(
            sum(labels[i] * self.cartan_inverse[i][j] for i in range(n))
            for j in range(n)
        )

    # -- Weyl chamber ---------------------------------------------------

    def reflect(self, weight: Sequence[int], i: int) -> Weight:
        """Simple reflection s_i in Dynkin-label coordinates."""
        wi = weight[i]
        return tuple(w - wi * self.cartan[i][j] for j, w in enumerate(weight))

    def dominant_conjugate(self, weight: Sequence[int]) -> Weight:
        w = tuple(weight)
        while True:
            i = next((k for k, x in enumerate(w) if x < 0), None)
            if i is None:
                return w
            w = self.reflect(w, i)

    def simple_reflections_orbit(self, weight: Sequence[int]) -> frozenset[Weight]:
        """Full Weyl orbit by closure under simple reflections."""
        seen = {tuple(weight)}
        frontier = [tuple(weight)]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    r = self.reflect(w, i)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return frozenset(seen)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator


@lru_cache(maxsize=None)
def build_root_system(lie_type: SimpleLieType) -> RootSystem:
    """Construct (and cache) the root system of one simple type."""
    return RootSystem(lie_type)


def dim_g(lie_type: SimpleLieType) -> int:
    """Dimension of the compact group: rank + 2 * (number of positive roots)."""
    rs = build_root_system(lie_type)
    return rs.rank + 2 * len(rs.positive_roots)


def dominant_conjugate(lie_type: SimpleLieType, weight: Sequence[int]) -> Weight:
    """The unique dominant Weyl-chamber representative of a weight."""
    return build_root_system(lie_type).dominant_conjugate(weight)


def diagram_automorphisms(t: SimpleLieType) -> list[tuple[int, ...]]:
    """Label permutations induced by the Dynkin-diagram automorphism group.

    Each entry p sends a weight w to w' with w'[i] = w[p[i]].  Used to
    identify enumeration candidates that differ only by an outer
    automorphism (A-series flip, D-series spinor swap, S3 triality on D4,
    E6 flip).
    """
    n = t.rank
    ident = tuple(range(n))
    perms = [ident]
    if t.series == "A" and n > 1:
        perms.append(tuple(reversed(ident)))
    elif t.series == "D" and n == 4:
        import itertools

        # nodes 1, 3, 4 (indices 0, 2, 3) are permuted freely
        for p in itertools.permutations((0, 2, 3)):
            perm = [0, 1, 0, 0]
            perm[0], perm[2], perm[3] = p
            if tuple(perm) != ident:
                perms.append(tuple(perm))
    elif t.series == "D":
        swap = list(ident)
        swap[n - 2], swap[n - 1] = swap[n - 1], swap[n - 2]
        perms.append(tuple(swap))
    elif t.series == "E" and n == 6:
        perms.append((5, 1, 4, 3, 2, 0))
    return perms


def automorphism_canonical(t: SimpleLieType, weight: Sequence[int]) -> Weight:
    """Lexicographically greatest image of a weight under diagram automorphisms."""
    w = tuple(weight)
    return max(tuple(w[p[i]] for i in range(t.rank)) for p in diagram_automorphisms(t))


_OV_TO_BOURBAKI = {
    ("E", 6): (1, 3, 4, 5, 6, 2),
    ("E", 7): (7, 6, 5, 4, 3, 1, 2),
    ("E", 8): (8, 7, 6, 5, 4, 3, 1, 2),
}


def ov_to_bourbaki(t: SimpleLieType, labels: Sequence[int]) -> Weight:
    """Translate Onishchik--Vinberg Dynkin labels to Bourbaki numbering.

    The two conventions agree on the classical series, F4 and G2; for the
    E series OV number the nodes along the long chain starting from the
    minuscule end, with the branch node last (so the 56-dimensional
    representation of E7 is the OV first fundamental weight).
    """
    perm = _OV_TO_BOURBAKI.get((t.series, t.rank))
    if perm is None:
        return tuple(labels)
    out = [0] * t.rank
    for ov_pos, bk_node in enumerate(perm):
        out[bk_node - 1] = labels[ov_pos]
    return tuple(out)
