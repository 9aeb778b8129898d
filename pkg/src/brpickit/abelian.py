"""Finite abelian groups, their characters, homomorphisms, and the pairing.

A group is a list of cyclic factor orders (kept exactly as given, never
renormalized to a divisor chain).  Elements and characters are coordinate
vectors against those factors; the dual group uses the same factors, with
the i-th character generator dual to the i-th group generator.  The pairing
is returned as an integer exponent e mod N (N the group exponent), meaning
the scalar value is zeta_N^e.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm, prod

from .cyclo import CycloScalar
from .errors import DomainError


class FinAbGroup:
    __slots__ = ("factors", "exponent")

    def __init__(self, factors):
        factors = tuple(int(f) for f in factors)
        if any(f < 1 for f in factors):
            raise DomainError(f"cyclic factor orders must be >= 1, got {factors}")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "exponent", lcm(*factors) if factors else 1)

    def __setattr__(self, name, value):
        raise AttributeError("FinAbGroup is immutable")

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(("FinAbGroup", self.factors))

    def __repr__(self):
        return f"FinAbGroup({list(self.factors)})"

    # -- element/character constructors -----------------------------------

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, self._normalize(coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def generator(self, i: int) -> "GroupElement":
        coords = [0] * self.rank
        coords[i] = 1
        return GroupElement(self, tuple(coords))

    def character(self, exps) -> "Character":
        return Character(self, self._normalize(exps))

    def trivial_character(self) -> "Character":
        return Character(self, (0,) * self.rank)

    def char_generator(self, i: int) -> "Character":
        exps = [0] * self.rank
        exps[i] = 1
        return Character(self, tuple(exps))

    def _normalize(self, coords) -> tuple:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise DomainError(
                f"coordinate vector of length {len(coords)} for group of rank {self.rank}")
        return tuple(c % f for c, f in zip(coords, self.factors))

    def elements(self):
        for coords in itertools.product(*(range(f) for f in self.factors)):
            yield GroupElement(self, coords)

    def characters(self):
        for exps in itertools.product(*(range(f) for f in self.factors)):
            yield Character(self, exps)

    def to_json(self) -> dict:
        return {"factors": list(self.factors)}

    @staticmethod
    def from_json(obj) -> "FinAbGroup":
        return FinAbGroup(obj["factors"])


@dataclass(frozen=True)
class GroupElement:
    parent: FinAbGroup
    coords: tuple

    def to_json(self):
        return {"coords": list(self.coords)}

    def __repr__(self):
        return f"GroupElement{self.coords}"


@dataclass(frozen=True)
class Character:
    parent: FinAbGroup
    exps: tuple

    def to_json(self):
        return {"exps": list(self.exps)}

    def __repr__(self):
        return f"Character{self.exps}"


def _vec(x):
    if isinstance(x, GroupElement):
        return x.coords
    if isinstance(x, Character):
        return x.exps
    raise DomainError(f"expected a group element or character, got {type(x).__name__}")


def _same_kind(x, coords):
    if isinstance(x, GroupElement):
        return GroupElement(x.parent, coords)
    return Character(x.parent, coords)


def add(a, b):
    if a.parent != b.parent or type(a) is not type(b):
        raise DomainError("operands live in different groups")
    va, vb = _vec(a), _vec(b)
    return _same_kind(a, tuple((x + y) % f for x, y, f in zip(va, vb, a.parent.factors)))


def neg(a):
    return _same_kind(a, tuple((-x) % f for x, f in zip(_vec(a), a.parent.factors)))


def sub(a, b):
    return add(a, neg(b))


def eq(a, b) -> bool:
    return type(a) is type(b) and a.parent == b.parent and _vec(a) == _vec(b)


def is_zero(a) -> bool:
    return all(c == 0 for c in _vec(a))


def order_of(a) -> int:
    fs = a.parent.factors
    return lcm(*(f // gcd(f, c) for c, f in zip(_vec(a), fs))) if fs else 1


def scalar_mul(k: int, a):
    return _same_kind(a, tuple((k * x) % f for x, f in zip(_vec(a), a.parent.factors)))


def subgroup_generated(gens):
    """Closure of a set of elements (or characters) under the group law.

    Returns a deterministically sorted list.
    """
    gens = list(gens)
    if not gens:
        raise DomainError("need at least one generator to know the ambient group")
    parent = gens[0].parent
    zero = _same_kind(gens[0], (0,) * parent.rank)
    seen = {_vec(zero): zero}
    frontier = [zero]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = add(x, g)
            if _vec(y) not in seen:
                seen[_vec(y)] = y
                frontier.append(y)
    return [seen[c] for c in sorted(seen)]


def direct_sum(G: FinAbGroup, H: FinAbGroup) -> FinAbGroup:
    return FinAbGroup(G.factors + H.factors)


def dual_group(G: FinAbGroup) -> FinAbGroup:
    # Ĝ ≅ G with the i-th character generator dual to the i-th group generator.
    return FinAbGroup(G.factors)


def pair(chi: Character, g: GroupElement) -> int:
    """Exponent e mod N with <chi, g> = zeta_N^e, N the group exponent."""
    if not isinstance(chi, Character) or not isinstance(g, GroupElement):
        raise DomainError("pair(chi, g) wants a character and a group element")
    if chi.parent != g.parent:
        raise DomainError("character and element live in different groups")
    G = g.parent
    N = G.exponent
    return sum(e * c * (N // f) for e, c, f in zip(chi.exps, g.coords, G.factors)) % N


def pair_value(chi: Character, g: GroupElement) -> CycloScalar:
    """The pairing as an exact root of unity in Q(zeta_N)."""
    return CycloScalar.root_of_unity(g.parent.exponent, pair(chi, g))


# -- homomorphisms ---------------------------------------------------------

class GroupHom:
    """A homomorphism given by the images of the source's standard generators.

    matrix[i] is the coordinate vector (in the target) of the image of the
    i-th source generator.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FinAbGroup, target: FinAbGroup, matrix):
        matrix = tuple(target._normalize(row) for row in matrix)
        if len(matrix) != source.rank:
            raise DomainError(
                f"hom matrix has {len(matrix)} rows for source rank {source.rank}")
        # order compatibility: n_i * image(e_i) must vanish in the target
        for n_i, row in zip(source.factors, matrix):
            if any((n_i * c) % f for c, f in zip(row, target.factors)):
                raise DomainError(
                    f"generator of order {n_i} maps to an element whose order does not divide it")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("GroupHom is immutable")

    def __call__(self, g: GroupElement) -> GroupElement:
        if g.parent != self.source:
            raise DomainError("element is not in the hom's source group")
        out = [0] * self.target.rank
        for c, row in zip(g.coords, self.matrix):
            if c:
                for j, m in enumerate(row):
                    out[j] += c * m
        return self.target.element(out)

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.source == other.source
                and self.target == other.target and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"GroupHom({[list(r) for r in self.matrix]})"

    def to_json(self):
        return {"matrix": [list(r) for r in self.matrix]}


def hom_identity(G: FinAbGroup) -> GroupHom:
    n = G.rank
    return GroupHom(G, G, tuple(tuple(1 if i == j else 0 for j in range(n))
                                for i in range(n)))


def hom_compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """f after g."""
    if g.target != f.source:
        raise DomainError("hom composition shape mismatch")
    return GroupHom(g.source, f.target, tuple(f(g.target.element(row)).coords
                                              for row in g.matrix))


def hom_is_automorphism(h: GroupHom) -> bool:
    """Bijectivity test: exhaustive for small groups, Smith form above 10^4."""
    if h.source.order != h.target.order:
        return False
    if h.source.order <= 10 ** 4:
        images = {h(g).coords for g in h.source.elements()}
        return len(images) == h.source.order
    # Surjectivity of the induced map: rows of the hom matrix together with
    # the target relations must generate Z^rank.  For equal finite orders
    # surjective implies bijective.
    rows = [list(r) for r in h.matrix]
    for j, f in enumerate(h.target.factors):
        rel = [0] * h.target.rank
        rel[j] = f
        rows.append(rel)
    diag = smith_diagonal(rows)
    return len(diag) >= h.target.rank and all(d == 1 for d in diag[:h.target.rank])


def smith_diagonal(rows) -> list:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Trailing zero invariant factors are omitted, so the returned length is
    the rank of the matrix.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return []
    nrows, ncols = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # find a nonzero pivot of minimal absolute value
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        # clear column and row by division with remainder; repeat until clean
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, ncols):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
        diag.append(abs(m[t][t]))
        t += 1
    # enforce the divisibility chain d1 | d2 | ...
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, (a * b // g if g else 0)
    return diag
