"""Exact linear algebra over cyclotomic scalars.

Matrices are plain lists of rows of CycloScalar.  Subspaces are stored as
row-reduced echelon bases (zero rows dropped, pivots normalized to 1 and
cleared above), so two equal subspaces have literally equal bases and
equality is entrywise comparison.

Also houses the diagonal G-action on V, V*, V+V and V+V* (V presented in a
character-diagonal basis), composition of linear relations inside V+V, and
the bilinear form transported along such a composition.
"""

from __future__ import annotations

from fractions import Fraction

from . import abelian as ab
from .abelian import Character, FinAbGroup, GroupElement
from .cyclo import CycloScalar
from .errors import DomainError

_ZERO = CycloScalar.zero()
_ONE = CycloScalar.one()


def sc(x) -> CycloScalar:
    if isinstance(x, CycloScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloScalar.from_rational(x)
    raise DomainError(f"cannot use {type(x).__name__} as a scalar")


def mat(rows):
    return [[sc(x) for x in row] for row in rows]


def vec(entries):
    return [sc(x) for x in entries]


# -- matrix operations -----------------------------------------------------

def rref(M):
    """Reduced row echelon form.  Returns (rows_without_zero_rows, pivot_cols)."""
    rows = [list(r) for r in mat(M)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DomainError("ragged matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv_p = rows[r][c].inv()
        rows[r] = [x * inv_p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M) -> int:
    return len(rref(M)[1])


def transpose(M):
    M = mat(M)
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def product(A, B):
    A, B = mat(A), mat(B)
    if not A or not B:
        return []
    n, m, p = len(A), len(B), len(B[0])
    if A and len(A[0]) != m:
        raise DomainError(f"matrix product shape mismatch: {len(A[0])} vs {m}")
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = _ZERO
            for k in range(m):
                if not A[i][k].is_zero() and not B[k][j].is_zero():
                    s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(A, x):
    return [r[0] for r in product(A, [[e] for e in x])]


def kernel(M) -> "Subspace":
    """Right null space {x : Mx = 0} as a Subspace of the column ambient."""
    M = mat(M)
    if not M:
        raise DomainError("kernel of an empty matrix has no ambient dimension")
    ncols = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return Subspace(ncols, basis)


def solve(A, b):
    """One exact solution x of Ax = b (free variables set to 0).

    Raises DomainError if the system is inconsistent.
    """
    A = mat(A)
    b = vec(b)
    if len(A) != len(b):
        raise DomainError("solve: row count does not match rhs length")
    if not A:
        return []
    ncols = len(A[0])
    aug = [row + [bb] for row, bb in zip(A, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        raise DomainError("inconsistent linear system")
    x = [_ZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = R[i][ncols]
    return x


def kernel_sparse_rows(rows, n) -> list:
    """Common null space of sparse constraint rows ({col: scalar} dicts) in k^n.

    Maintains a running kernel basis and cuts it down one constraint at a
    time, so cost scales with the final kernel dimension rather than with
    the full constraint matrix.
    Returns a list of dense basis vectors (not canonicalized).
    """
    basis = []
    for i in range(n):
        v = [_ZERO] * n
        v[i] = _ONE
        basis.append(v)
    for row in rows:
        items = [(j, c) for j, c in row.items() if not c.is_zero()]
        if not items:
            continue
        vals = []
        for v in basis:
            s = _ZERO
            for j, c in items:
                if not v[j].is_zero():
                    s = s + c * v[j]
            vals.append(s)
        pivot = next((k for k, s in enumerate(vals) if not s.is_zero()), None)
        if pivot is None:
            continue
        pv = basis[pivot]
        pval_inv = vals[pivot].inv()
        new_basis = []
        for k, (v, s) in enumerate(zip(basis, vals)):
            if k == pivot:
                continue
            if s.is_zero():
                new_basis.append(v)
            else:
                f = s * pval_inv
                new_basis.append([x - f * y for x, y in zip(v, pv)])
        basis = new_basis
    return basis


# -- subspaces -------------------------------------------------------------

class Subspace:
    """A subspace of k^n held as a canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, rows):
        rows = mat(rows)
        if any(len(r) != ambient_dim for r in rows):
            raise DomainError("basis row length does not match ambient dimension")
        R, _ = rref(rows) if rows else ([], [])
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in R))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise DomainError("vector length does not match ambient dimension")
        v = list(v)
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if not x.is_zero())
            if not v[p].is_zero():
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return all(x.is_zero() for x in v)

    def coords_of(self, v):
        """Coefficients of v against the stored basis (DomainError if outside)."""
        v = list(vec(v))
        coeffs = []
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if not x.is_zero())
            f = v[p]
            coeffs.append(f)
            if not f.is_zero():
                v = [x - f * y for x, y in zip(v, row)]
        if not all(x.is_zero() for x in v):
            raise DomainError("vector is not in the subspace")
        return coeffs

    def equals(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        return all(x == y for r, s in zip(self.basis, other.basis)
                   for x, y in zip(r, s))

    __eq__ = equals

    __hash__ = None

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DomainError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient_dim, [])
        # coefficient pairs (s, t) with sum_i s_i a_i = sum_j t_j b_j
        cols = [list(r) for r in self.basis] + [[-x for x in r] for r in other.basis]
        M = transpose(cols)
        K = kernel(M)
        d = self.dim
        rows = []
        for coeffs in K.basis:
            v = [_ZERO] * self.ambient_dim
            for s, row in zip(coeffs[:d], self.basis):
                if not s.is_zero():
                    v = [x + s * y for x, y in zip(v, row)]
            rows.append(v)
        return Subspace(self.ambient_dim, rows)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DomainError("ambient dimension mismatch")
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def project(self, indices) -> "Subspace":
        """Image under the coordinate projection onto the listed indices."""
        indices = list(indices)
        rows = [[r[i] for i in indices] for r in self.basis]
        return Subspace(len(indices), rows)

    def to_json(self):
        return {"ambient": self.ambient_dim,
                "basis": [[x.to_string() for x in r] for r in self.basis]}

    @staticmethod
    def from_json(obj) -> "Subspace":
        return Subspace(obj["ambient"],
                        [[CycloScalar.from_string(s) for s in r] for r in obj["basis"]])

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"


def full_space(n: int) -> Subspace:
    rows = []
    for i in range(n):
        r = [_ZERO] * n
        r[i] = _ONE
        rows.append(r)
    return Subspace(n, rows)


def zero_space(n: int) -> Subspace:
    return Subspace(n, [])


# -- the G-module V and its diagonal action --------------------------------

class GModuleV:
    """V with a character-diagonal basis: basis vector i spans the chi_i line.

    u must have order 2 and every character must send u to -1.
    """

    __slots__ = ("group", "u", "chars")

    def __init__(self, group: FinAbGroup, u: GroupElement, chars):
        chars = tuple(chars)
        if u.parent != group:
            raise DomainError("u does not live in the given group")
        if ab.order_of(u) != 2:
            raise DomainError(f"u must have order 2, got order {ab.order_of(u)}")
        N = group.exponent
        for i, chi in enumerate(chars):
            if not isinstance(chi, Character) or chi.parent != group:
                raise DomainError(f"character {i} does not live in the given group")
            if ab.pair(chi, u) != N // 2:
                raise DomainError(f"character {i} does not send u to -1")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "chars", chars)

    def __setattr__(self, name, value):
        raise AttributeError("GModuleV is immutable")

    @property
    def dim(self) -> int:
        return len(self.chars)

    @property
    def conductor(self) -> int:
        return self.group.exponent

    def __eq__(self, other):
        return (isinstance(other, GModuleV) and self.group == other.group
                and self.u == other.u and self.chars == other.chars)

    __hash__ = None

    def __repr__(self):
        return f"GModuleV(dim {self.dim} over {self.group!r})"


_SPACES = ("V", "Vdual", "VplusV", "VplusVdual")


def action_exponents(mod: GModuleV, g, space: str):
    """Per-coordinate exponents e_i with g acting as diag(zeta_N^{e_i}).

    g may be a single group element (acting diagonally on both summands of a
    direct sum) or a pair (x, y) acting componentwise.
    """
    if space not in _SPACES:
        raise DomainError(f"unknown space name {space!r}; expected one of {_SPACES}")
    if isinstance(g, GroupElement):
        x = y = g
    else:
        x, y = g
    N = mod.group.exponent
    v_part = [ab.pair(chi, x) for chi in mod.chars]
    if space == "V":
        return v_part
    if space == "Vdual":
        return [(-e) % N for e in v_part]
    second = [ab.pair(chi, y) for chi in mod.chars]
    if space == "VplusV":
        return v_part + second
    return v_part + [(-e) % N for e in second]


def act(mod: GModuleV, g, space: str, v):
    """Apply the diagonal action of g on the named space to a vector."""
    exps = action_exponents(mod, g, space)
    v = vec(v)
    if len(v) != len(exps):
        raise DomainError(f"vector length {len(v)} does not match {space} dimension {len(exps)}")
    N = mod.group.exponent
    return [CycloScalar.root_of_unity(N, e) * x for e, x in zip(exps, v)]


def act_subspace(mod: GModuleV, g, space: str, S: Subspace) -> Subspace:
    return Subspace(S.ambient_dim, [act(mod, g, space, row) for row in S.basis])


# -- bilinear forms --------------------------------------------------------

class BilinearForm:
    """A bilinear form on a subspace, stored as a Gram matrix in its basis."""

    __slots__ = ("space", "gram")

    def __init__(self, space: Subspace, gram):
        gram = mat(gram)
        if len(gram) != space.dim or any(len(r) != space.dim for r in gram):
            raise DomainError(
                f"gram matrix must be {space.dim}x{space.dim} for this space")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "gram", tuple(tuple(r) for r in gram))

    def __setattr__(self, name, value):
        raise AttributeError("BilinearForm is immutable")

    def evaluate(self, v, w) -> CycloScalar:
        cv = self.space.coords_of(v)
        cw = self.space.coords_of(w)
        s = _ZERO
        for i, a in enumerate(cv):
            if a.is_zero():
                continue
            for j, b in enumerate(cw):
                if not b.is_zero() and not self.gram[i][j].is_zero():
                    s = s + a * self.gram[i][j] * b
        return s

    def is_symmetric(self) -> bool:
        d = self.space.dim
        return all(self.gram[i][j] == self.gram[j][i] for i in range(d) for j in range(d))

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.gram for x in r)

    def __eq__(self, other):
        return (isinstance(other, BilinearForm) and self.space == other.space
                and all(x == y for r, s in zip(self.gram, other.gram)
                        for x, y in zip(r, s)))

    __hash__ = None

    def to_json(self):
        return {"gram": [[x.to_string() for x in r] for r in self.gram]}

    def __repr__(self):
        return f"BilinearForm(on dim {self.space.dim})"


def zero_form(space: Subspace) -> BilinearForm:
    d = space.dim
    return BilinearForm(space, [[_ZERO] * d for _ in range(d)])


def form_invariant_under(mod: GModuleV, beta: BilinearForm, elements,
                         space: str = "VplusV") -> bool:
    """Whether the form is preserved by each listed group action.

    elements: group elements or (x, y) pairs, matching the named space.
    Raises DomainError if the underlying subspace itself is not preserved
    (a different failure kind than the form changing).
    """
    S = beta.space
    for g in elements:
        moved = [act(mod, g, space, row) for row in S.basis]
        for mv in moved:
            if not S.contains(mv):
                raise DomainError("subspace is not invariant under the given action")
        for i, mi in enumerate(moved):
            for j, mj in enumerate(moved):
                if beta.evaluate(mi, mj) != beta.gram[i][j]:
                    return False
    return True


# -- relation composition and the transported form -------------------------

def _check_axis_conditions(W: Subspace, name: str):
    d = W.ambient_dim // 2
    axis1 = Subspace(2 * d, [[_ONE if j == i else _ZERO for j in range(2 * d)]
                             for i in range(d)])
    axis2 = Subspace(2 * d, [[_ONE if j == i + d else _ZERO for j in range(2 * d)]
                             for i in range(d)])
    if W.intersect(axis1).dim or W.intersect(axis2).dim:
        raise DomainError(f"witness not unique: {name} meets a coordinate axis")


def _compose_with_lift(W: Subspace, Wt: Subspace):
    """Shared core of relation_compose/bullet_form.

    Returns (composite, lift) where lift maps the composite's basis rows to
    their unique middle-coordinate witnesses.
    """
    if W.ambient_dim != Wt.ambient_dim or W.ambient_dim % 2:
        raise DomainError("relation composition wants two subspaces of V+V")
    d = W.ambient_dim // 2
    _check_axis_conditions(W, "left factor")
    _check_axis_conditions(Wt, "right factor")
    n = 3 * d
    # X1 = {(v1,v2,w)) : (v1,v2) in W},  X2 = {(v1,v2,w) : (v2,w) in Wt}
    x1_rows = [list(r) + [_ZERO] * d for r in W.basis]
    for i in range(d):
        row = [_ZERO] * n
        row[2 * d + i] = _ONE
        x1_rows.append(row)
    x2_rows = [[_ZERO] * d + list(r) for r in Wt.basis]
    for i in range(d):
        row = [_ZERO] * n
        row[i] = _ONE
        x2_rows.append(row)
    X = Subspace(n, x1_rows).intersect(Subspace(n, x2_rows))
    outer = list(range(d)) + list(range(2 * d, 3 * d))
    composite = X.project(outer)
    if composite.dim != X.dim:
        raise DomainError("witness not unique: middle coordinate is not determined")
    # For each composite basis row, solve for its lift in X and read off the
    # middle block.
    O = [[r[i] for i in outer] for r in X.basis]
    lifts = []
    for crow in composite.basis:
        lam = solve(transpose(O), crow)
        middle = [_ZERO] * d
        for l, xrow in zip(lam, X.basis):
            if not l.is_zero():
                middle = [m + l * xrow[d + i] for i, m in enumerate(middle)]
        lifts.append(middle)
    return composite, lifts


def relation_compose(W: Subspace, Wt: Subspace) -> Subspace:
    """{(v1, w1) : exists v2 with (v1,v2) in W and (v2,w1) in Wt}."""
    composite, _ = _compose_with_lift(W, Wt)
    return composite


def bullet_form(W: Subspace, beta: BilinearForm, Wt: Subspace,
                betat: BilinearForm) -> BilinearForm:
    """The form on the composite: sum of the two forms through the witnesses."""
    if beta.space != W or betat.space != Wt:
        raise DomainError("forms must live on the subspaces being composed")
    composite, lifts = _compose_with_lift(W, Wt)
    d = W.ambient_dim // 2
    left_vecs = []
    right_vecs = []
    for crow, middle in zip(composite.basis, lifts):
        left_vecs.append(list(crow[:d]) + middle)
        right_vecs.append(middle + list(crow[d:]))
    m = composite.dim
    gram = [[beta.evaluate(left_vecs[i], left_vecs[j])
             + betat.evaluate(right_vecs[i], right_vecs[j])
             for j in range(m)] for i in range(m)]
    return BilinearForm(composite, gram)
