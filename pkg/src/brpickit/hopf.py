"""Host Hopf algebras with skew group generators and their comodule algebras.

The hosts are pointed algebras on basis (S, g): S an ascending tuple of
generator indices, g a group element, ordered lexicographically.  Each
generator v_i carries a character chi_i (so g v_i = chi_i(g) v_i g) and a
group-like colabel c_i with Delta(v_i) = v_i x 1 + c_i x v_i.  Generators in
the same block anticommute and square to zero; generators in different
blocks commute.  Consistency of the coproduct with those relations forces
chi_i(c_j) = -1 inside a block and +1 across blocks, which is validated at
construction.  The doubled host of a module (V, u, G) is the tensor host of
two copies of its supergroup host, with group G x G and blocks V1, V2.

On the doubled host we build comodule algebras K from data
(W1, W2, W3, beta, F, psi): a twisted group algebra k_psi F extended by
generators from W1 (first axis), W2 (second axis) and W3 (graphs meeting
neither axis), subject to

    e_f e_h = psi(f, h) e_{fh},          e_f w = (f.w) e_f,
    w w' + w' w = beta(w, w') 1          on sectors 11, 22, 33, 13,
    w w' - w' w = beta(w, w') e_u        on sectors 12, 23,

with f acting componentwise on V + V.  The validator enforces the axis and
independence conditions, F-stability of each sector, invariance of beta,
the cocycle law for psi, and the centrality of e_u in k_psi F whenever the
presentation mentions e_u; incompatible data raises a DomainError listing
every violated clause.  Coactions, cotensor products (computed as exact
kernels, blockwise over group-part classes), the Loewy filtration induced
by the host coradical filtration, the diagonal comodule model of a host
over its own double, and simplicity/freeness probes all live here.
Verification routines return reports with located witnesses; nothing is
assumed to hold by construction.
"""

import itertools
import random
from fractions import Fraction

from . import abelian as ab
from . import linalg as la
from . import orth
from . import brpic as bp
from .cyclo import CycloScalar
from .errors import BrpicError, CapacityError, DomainError, InputValidationError

_ZERO = CycloScalar.zero(1)
_ONE = CycloScalar.one(1)
_HALF = la.sc(Fraction(1, 2))


# -- sparse element helpers -------------------------------------------------

def _addin(acc, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = v


def _scaled(d, c):
    if c.is_zero():
        return {}
    return {k: c * v for k, v in d.items()}


def _elem_add(a, b):
    out = dict(a)
    for k, c in b.items():
        _addin(out, k, c)
    return out


def _subsets(n):
    return sorted(itertools.chain.from_iterable(
        itertools.combinations(range(n), r) for r in range(n + 1)))


# -- host Hopf algebras -----------------------------------------------------

class HopfAlg:
    """Pointed host algebra on basis (index tuple, group element)."""

    __slots__ = ("group", "chars", "colikes", "blocks", "modules", "kind",
                 "nv", "basis", "index", "dim", "one_idx",
                 "_mul", "_com", "_anti")

    def __init__(self, group, chars, colikes, blocks=None, modules=None,
                 kind="custom"):
        chars = tuple(chars)
        colikes = tuple(colikes)
        nv = len(chars)
        if len(colikes) != nv:
            raise InputValidationError("one colabel per generator is required")
        blocks = tuple(blocks) if blocks is not None else (0,) * nv
        if len(blocks) != nv:
            raise InputValidationError("one block label per generator is required")
        for i, chi in enumerate(chars):
            if chi.parent != group:
                raise DomainError(f"character {i} does not live in the host group")
        for i, c in enumerate(colikes):
            if c.parent != group:
                raise DomainError(f"colabel {i} does not live in the host group")
        for i in range(nv):
            for j in range(nv):
                val = ab.pair_value(chars[i], colikes[j])
                if blocks[i] == blocks[j]:
                    if not (val + _ONE).is_zero():
                        raise DomainError(
                            f"chi_{i}(c_{j}) must be -1 inside a block")
                else:
                    if not (val - _ONE).is_zero():
                        raise DomainError(
                            f"chi_{i}(c_{j}) must be 1 across blocks")
        dim = (1 << nv) * group.order
        if dim > 65536:
            raise CapacityError(f"host dimension {dim} exceeds the supported bound")
        els = list(group.elements())
        basis = sorted(((S, g) for S in _subsets(nv) for g in els),
                       key=lambda t: (t[0], t[1].coords))
        index = {(S, g.coords): i for i, (S, g) in enumerate(basis)}
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "chars", chars)
        object.__setattr__(self, "colikes", colikes)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "modules", tuple(modules) if modules else ())
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "nv", nv)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "one_idx", index[((), group.zero().coords)])
        object.__setattr__(self, "_mul", {})
        object.__setattr__(self, "_com", {})
        object.__setattr__(self, "_anti", {})

    def __setattr__(self, name, value):
        raise AttributeError("HopfAlg is immutable")

    def __repr__(self):
        return f"HopfAlg(dim {self.dim}, {self.kind})"

    def group_like(self, g) -> int:
        return self.index[((), g.coords)]

    def v_basis(self, i) -> int:
        return self.index[((i,), self.group.zero().coords)]

    @property
    def one(self):
        return {self.one_idx: _ONE}

    def deg(self, i) -> int:
        return len(self.basis[i][0])

    def mono_mul(self, i, j):
        got = self._mul.get((i, j))
        if got is not None:
            return got
        S1, g1 = self.basis[i]
        S2, g2 = self.basis[j]
        if set(S1) & set(S2):
            out = {}
        else:
            sign = 1
            for b in S2:
                for a in S1:
                    if a > b and self.blocks[a] == self.blocks[b]:
                        sign = -sign
            c = _ONE if sign > 0 else -_ONE
            for b in S2:
                c = c * ab.pair_value(self.chars[b], g1)
            merged = tuple(sorted(S1 + S2))
            out = {self.index[(merged, ab.add(g1, g2).coords)]: c}
        self._mul[(i, j)] = out
        return out

    def mul(self, x, y):
        acc = {}
        for i, cx in x.items():
            for j, cy in y.items():
                for k, c in self.mono_mul(i, j).items():
                    _addin(acc, k, cx * cy * c)
        return acc

    def tensor_mul(self, t1, t2):
        acc = {}
        for (a1, b1), c1 in t1.items():
            for (a2, b2), c2 in t2.items():
                pa = self.mono_mul(a1, a2)
                if not pa:
                    continue
                pb = self.mono_mul(b1, b2)
                if not pb:
                    continue
                for a3, ca in pa.items():
                    for b3, cb in pb.items():
                        _addin(acc, (a3, b3), c1 * c2 * ca * cb)
        return acc

    def comult(self, i):
        got = self._com.get(i)
        if got is not None:
            return got
        S, g = self.basis[i]
        gg = self.group_like(g)
        acc = {(self.one_idx, self.one_idx): _ONE}
        for s in S:
            dv = {(self.v_basis(s), self.one_idx): _ONE,
                  (self.group_like(self.colikes[s]), self.v_basis(s)): _ONE}
            acc = self.tensor_mul(acc, dv)
        acc = self.tensor_mul(acc, {(gg, gg): _ONE})
        self._com[i] = acc
        return acc

    def comult_elem(self, x):
        acc = {}
        for i, c in x.items():
            for key, c2 in self.comult(i).items():
                _addin(acc, key, c * c2)
        return acc

    def counit(self, i):
        S, _ = self.basis[i]
        return _ONE if not S else _ZERO

    def counit_elem(self, x):
        out = _ZERO
        for i, c in x.items():
            if not self.basis[i][0]:
                out = out + c
        return out

    def antipode(self, i):
        got = self._anti.get(i)
        if got is not None:
            return got
        S, g = self.basis[i]
        acc = {self.group_like(ab.neg(g)): _ONE}
        for s in reversed(S):
            ci = self.group_like(ab.neg(self.colikes[s]))
            sv = _scaled(self.mono_mul(ci, self.v_basis(s)), -_ONE)
            acc = self.mul(acc, sv)
        self._anti[i] = acc
        return acc

    def antipode_elem(self, x):
        acc = {}
        for i, c in x.items():
            for k, c2 in self.antipode(i).items():
                _addin(acc, k, c * c2)
        return acc


def check_hopf_axioms(H, rng=None, pair_limit=None):
    """Verify the Hopf axioms on H basiswise; returns a report with witnesses.

    Comultiplicativity of Delta and associativity of the product run over
    all pairs/triples on small hosts and over a random sample on large ones.
    """
    rng = rng if rng is not None else random.Random(0)
    failures = []

    def note(kind, where):
        if len(failures) < 10:
            failures.append((kind, where))

    one = H.one_idx
    for i in range(H.dim):
        com = H.comult(i)
        left = {}
        right = {}
        for (a, b), c in com.items():
            for (a1, a2), c2 in H.comult(a).items():
                _addin(left, (a1, a2, b), c * c2)
            for (b1, b2), c2 in H.comult(b).items():
                _addin(right, (a, b1, b2), c * c2)
        if left != right:
            note("coassoc", i)
        cl = {}
        cr = {}
        for (a, b), c in com.items():
            e = H.counit(a)
            if not e.is_zero():
                _addin(cl, b, e * c)
            e = H.counit(b)
            if not e.is_zero():
                _addin(cr, a, e * c)
        if cl != {i: _ONE} or cr != {i: _ONE}:
            note("counit", i)
        sl = {}
        sr = {}
        for (a, b), c in com.items():
            for k, c2 in H.mul(H.antipode(a), {b: _ONE}).items():
                _addin(sl, k, c * c2)
            for k, c2 in H.mul({a: _ONE}, H.antipode(b)).items():
                _addin(sr, k, c * c2)
        eps = H.counit(i)
        target = {} if eps.is_zero() else {one: eps}
        if sl != target or sr != target:
            note("antipode", i)
        # S^2 is conjugation by the colabels: parity on each generator
        par = _ONE if len(H.basis[i][0]) % 2 == 0 else -_ONE
        if H.antipode_elem(H.antipode(i)) != {i: par}:
            note("antipode_square_parity", i)

    if H.comult(one) != {(one, one): _ONE}:
        note("comult_unit", one)

    if pair_limit is None:
        pair_limit = H.dim * H.dim if H.dim <= 72 else max(400, 4 * H.dim)
    if H.dim * H.dim <= pair_limit:
        pairs = [(i, j) for i in range(H.dim) for j in range(H.dim)]
    else:
        pairs = [(rng.randrange(H.dim), rng.randrange(H.dim))
                 for _ in range(pair_limit)]
    for i, j in pairs:
        prod = H.mono_mul(i, j)
        lhs = H.comult_elem(prod)
        rhs = H.tensor_mul(H.comult(i), H.comult(j))
        if lhs != rhs:
            note("comult_mult", (i, j))
        le = H.counit_elem(prod)
        if le != H.counit(i) * H.counit(j):
            note("counit_mult", (i, j))

    ntriples = min(300, H.dim ** 3)
    for _ in range(ntriples):
        i = rng.randrange(H.dim)
        j = rng.randrange(H.dim)
        k = rng.randrange(H.dim)
        lhs = H.mul(H.mono_mul(i, j), {k: _ONE})
        rhs = H.mul({i: _ONE}, H.mono_mul(j, k))
        if lhs != rhs:
            note("assoc", (i, j, k))

    return {"ok": not failures, "failures": failures,
            "checked_pairs": len(pairs), "checked_triples": ntriples}


# -- host constructors ------------------------------------------------------

_SUPER_CACHE = {}
_DOUBLE_CACHE = {}


def _module_key(module):
    return (module.group.factors, module.u.coords,
            tuple(chi.exps for chi in module.chars))


def build_supergroup(module) -> HopfAlg:
    """Host of a module (V, u, G): exterior V smashed with kG, colabels u."""
    key = _module_key(module)
    got = _SUPER_CACHE.get(key)
    if got is None:
        got = HopfAlg(module.group, module.chars, (module.u,) * module.dim,
                      blocks=(0,) * module.dim, modules=(module,),
                      kind="supergroup")
        _SUPER_CACHE[key] = got
    return got


def build_tensor_hopf(m1, m2) -> HopfAlg:
    """Tensor host of two modules over G1 x G2, blocks 0 and 1."""
    GG = ab.direct_sum(m1.group, m2.group)
    r1 = len(m1.group.factors)
    r2 = len(m2.group.factors)
    z1 = (0,) * r1
    z2 = (0,) * r2
    chars = tuple(GG.character(tuple(chi.exps) + z2) for chi in m1.chars) \
        + tuple(GG.character(z1 + tuple(chi.exps)) for chi in m2.chars)
    zero1 = m1.group.zero().coords
    zero2 = m2.group.zero().coords
    colikes = tuple(GG.element(tuple(m1.u.coords) + zero2)
                    for _ in range(m1.dim)) \
        + tuple(GG.element(zero1 + tuple(m2.u.coords)) for _ in range(m2.dim))
    blocks = (0,) * m1.dim + (1,) * m2.dim
    return HopfAlg(GG, chars, colikes, blocks=blocks, modules=(m1, m2),
                   kind="tensor")


def doubled_host(module) -> HopfAlg:
    """Tensor host of two copies of a module; cached by module value."""
    key = _module_key(module)
    got = _DOUBLE_CACHE.get(key)
    if got is None:
        got = build_tensor_hopf(module, module)
        _DOUBLE_CACHE[key] = got
    return got


def cop_phi(H):
    """The co-opposite identification v_i -> v_i c_i, g -> g, as basis images."""
    out = []
    for S, g in H.basis:
        acc = {H.group_like(g): _ONE}
        pre = {H.one_idx: _ONE}
        for s in S:
            img = H.mono_mul(H.v_basis(s), H.group_like(H.colikes[s]))
            pre = H.mul(pre, img)
        out.append(H.mul(pre, acc))
    return out


def check_cop_iso(H, rng=None):
    """Check that cop_phi is a bijective algebra map reversing the coproduct."""
    rng = rng if rng is not None else random.Random(0)
    phi = cop_phi(H)
    failures = []

    def note(kind, where):
        if len(failures) < 10:
            failures.append((kind, where))

    def apply_phi(x):
        acc = {}
        for i, c in x.items():
            for k, c2 in phi[i].items():
                _addin(acc, k, c * c2)
        return acc

    npairs = H.dim * H.dim
    if npairs <= 4096:
        pairs = [(i, j) for i in range(H.dim) for j in range(H.dim)]
    else:
        pairs = [(rng.randrange(H.dim), rng.randrange(H.dim))
                 for _ in range(2048)]
    for i, j in pairs:
        lhs = apply_phi(H.mono_mul(i, j))
        rhs = H.mul(phi[i], phi[j])
        if lhs != rhs:
            note("multiplicative", (i, j))
    for i in range(H.dim):
        lhs = H.comult_elem(phi[i])
        rhs = {}
        for (a, b), c in H.comult(i).items():
            for a2, ca in phi[a].items():
                for b2, cb in phi[b].items():
                    _addin(rhs, (b2, a2), c * ca * cb)
        if lhs != rhs:
            note("coproduct_reversal", i)
        if H.counit_elem(phi[i]) != H.counit(i):
            note("counit", i)
    seen = {}
    for i in range(H.dim):
        if len(phi[i]) != 1:
            note("not_monomial", i)
            continue
        k = next(iter(phi[i]))
        if k in seen:
            note("not_injective", (seen[k], i))
        seen[k] = i
    bij = len(seen) == H.dim and not any(f[0].startswith("not_") for f in failures)
    return {"ok": not failures and bij, "bijective": bij,
            "failures": failures, "checked_pairs": len(pairs)}


# -- comodule algebras ------------------------------------------------------

class ComodAlg:
    """A right comodule algebra over a host, held as sparse tables.

    mult maps basis pairs (i, j) to {k: coefficient}; coaction maps a basis
    index to {(host_index, k): coefficient}.  Either table may be backed by
    a builder function and filled on demand (cotensor products do this).
    """

    __slots__ = ("host", "dim", "basis", "index", "mult", "coaction", "unit",
                 "group_part", "loewy_degree", "meta", "_mulfn", "_coactfn")

    def __init__(self, host, basis, mult, coaction, unit, group_part=None,
                 loewy_degree=None, meta=None, mulfn=None, coactfn=None):
        basis = tuple(basis)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "dim", len(basis))
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "index", {lab: i for i, lab in enumerate(basis)})
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "coaction", coaction)
        object.__setattr__(self, "unit", dict(unit))
        object.__setattr__(self, "group_part",
                           tuple(group_part) if group_part is not None else None)
        object.__setattr__(self, "loewy_degree",
                           tuple(loewy_degree) if loewy_degree is not None else None)
        object.__setattr__(self, "meta", dict(meta) if meta else {})
        object.__setattr__(self, "_mulfn", mulfn)
        object.__setattr__(self, "_coactfn", coactfn)

    def __setattr__(self, name, value):
        raise AttributeError("ComodAlg is immutable")

    def __repr__(self):
        return f"ComodAlg(dim {self.dim}, {self.meta.get('kind', '?')})"

    def mul_basis(self, i, j):
        got = self.mult.get((i, j))
        if got is None:
            if self._mulfn is None:
                return {}
            got = self._mulfn(i, j)
            self.mult[(i, j)] = got
        return got

    def mul(self, x, y):
        acc = {}
        for i, cx in x.items():
            for j, cy in y.items():
                for k, c in self.mul_basis(i, j).items():
                    _addin(acc, k, cx * cy * c)
        return acc

    def coact_basis(self, i):
        got = self.coaction.get(i)
        if got is None:
            if self._coactfn is None:
                return {}
            got = self._coactfn(i)
            self.coaction[i] = got
        return got

    def coact(self, x):
        acc = {}
        for i, c in x.items():
            for key, c2 in self.coact_basis(i).items():
                _addin(acc, key, c * c2)
        return acc


# -- compatible data --------------------------------------------------------

class CompatibleData:
    """Input data (W1, W2, W3, beta, F, psi) for a comodule algebra K.

    beta is a raw gram table over the concatenated canonical sector bases
    (a BilinearForm is accepted when only the third sector is present); F is
    a subset of G x G; psi is a table of scalars over F x F, defaulting to 1.
    """

    __slots__ = ("module", "W1", "W2", "W3", "gram", "F", "psi", "alpha",
                 "rows", "types", "coords_set", "pair_group")

    def __init__(self, module, W1, W2, W3, beta, F, psi=None, alpha=None):
        m = module.dim
        amb = 2 * m
        GG = ab.direct_sum(module.group, module.group)

        def space(S):
            if S is None:
                return la.zero_space(amb)
            if not isinstance(S, la.Subspace):
                S = la.Subspace(amb, S)
            if S.ambient_dim != amb:
                raise InputValidationError(
                    f"sector ambient dimension {S.ambient_dim} != {amb}")
            return S

        W1 = space(W1)
        W2 = space(W2)
        W3 = space(W3)
        rows = W1.basis + W2.basis + W3.basis
        types = (1,) * W1.dim + (2,) * W2.dim + (3,) * W3.dim
        nW = len(rows)
        if beta is None:
            gram = tuple((( _ZERO, ) * nW) for _ in range(nW))
        elif isinstance(beta, la.BilinearForm):
            if W1.dim or W2.dim or not beta.space.equals(W3):
                raise InputValidationError(
                    "a BilinearForm is only accepted on a pure third sector")
            gram = tuple(tuple(r) for r in beta.gram)
        else:
            gram = tuple(tuple(la.sc(x) for x in r) for r in beta)
            if len(gram) != nW or any(len(r) != nW for r in gram):
                raise InputValidationError(
                    f"gram table must be {nW} x {nW} over the sector basis")

        if isinstance(F, orth.TwistedSubgroup):
            F = F.elements
        els = []
        seen = set()
        for f in F:
            if not isinstance(f, ab.GroupElement):
                f = GG.element(tuple(f))
            if f.parent != GG:
                raise InputValidationError("F element does not live in G x G")
            if f.coords not in seen:
                seen.add(f.coords)
                els.append(f)
        els.sort(key=lambda f: f.coords)
        els = tuple(els)

        if psi is None:
            table = {}
        elif isinstance(psi, orth.TwoCocycle):
            table = {(a.coords, b.coords): psi.value(a, b)
                     for a in els for b in els}
        else:
            table = {k: la.sc(v) for k, v in dict(psi).items()}
        full = {}
        for a in els:
            for b in els:
                full[(a.coords, b.coords)] = table.get((a.coords, b.coords), _ONE)

        object.__setattr__(self, "module", module)
        object.__setattr__(self, "W1", W1)
        object.__setattr__(self, "W2", W2)
        object.__setattr__(self, "W3", W3)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "F", els)
        object.__setattr__(self, "psi", full)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "types", types)
        object.__setattr__(self, "coords_set", frozenset(seen))
        object.__setattr__(self, "pair_group", GG)

    def __setattr__(self, name, value):
        raise AttributeError("CompatibleData is immutable")

    def __repr__(self):
        dims = (self.W1.dim, self.W2.dim, self.W3.dim)
        return f"CompatibleData(sectors {dims}, |F|={len(self.F)})"

    def split(self, f):
        r = len(self.module.group.factors)
        G = self.module.group
        return G.element(f.coords[:r]), G.element(f.coords[r:])

    def uu_coords(self):
        return tuple(self.module.u.coords) + tuple(self.module.u.coords)

    def sector_space(self, t):
        return (self.W1, self.W2, self.W3)[t - 1]

    def act_matrix(self, f):
        """Rows: coordinates of f.w_i against the global sector basis."""
        f1, f2 = self.split(f)
        offs = (0, self.W1.dim, self.W1.dim + self.W2.dim)
        out = []
        for wi, row in enumerate(self.rows):
            moved = la.act(self.module, (f1, f2), "VplusV", row)
            t = self.types[wi]
            local = self.sector_space(t).coords_of(moved)
            dense = [_ZERO] * len(self.rows)
            for k, c in enumerate(local):
                dense[offs[t - 1] + k] = c
            out.append(dense)
        return out


_SYM_SIGN = {(1, 1): 1, (2, 2): 1, (3, 3): 1, (1, 3): 1, (1, 2): -1, (2, 3): -1}


def compatible_violations(data) -> list:
    """Names of every compatibility clause the data violates (empty = valid)."""
    module = data.module
    m = module.dim
    GG = data.pair_group
    bad = []
    if any(any(not c.is_zero() for c in row[m:]) for row in data.W1.basis):
        bad.append("W1_axis")
    if any(any(not c.is_zero() for c in row[:m]) for row in data.W2.basis):
        bad.append("W2_axis")
    axis1 = la.Subspace(2 * m, [[_ONE if j == i else _ZERO for j in range(2 * m)]
                                for i in range(m)])
    axis2 = la.Subspace(2 * m, [[_ONE if j == m + i else _ZERO for j in range(2 * m)]
                                for i in range(m)])
    if data.W3.intersect(axis1).dim or data.W3.intersect(axis2).dim:
        bad.append("W3_axis")
    if data.W1.sum(data.W2).sum(data.W3).dim != len(data.rows):
        bad.append("independent")

    if GG.zero().coords not in data.coords_set:
        bad.append("F_subgroup")
    else:
        for a in data.F:
            if any(ab.add(a, b).coords not in data.coords_set for b in data.F):
                bad.append("F_subgroup")
                break

    stable = True
    for t, name in ((1, "F_stable_W1"), (2, "F_stable_W2"), (3, "F_stable_W3")):
        S = data.sector_space(t)
        if S.dim == 0:
            continue
        for f in data.F:
            f1, f2 = data.split(f)
            if not la.act_subspace(module, (f1, f2), "VplusV", S).equals(S):
                bad.append(name)
                stable = False
                break

    nW = len(data.rows)
    eu_beta = any(not data.gram[i][j].is_zero()
                  for i in range(nW) for j in range(nW)
                  if _SYM_SIGN.get(tuple(sorted((data.types[i], data.types[j])))) == -1)
    needs_u = data.W3.dim > 0 or eu_beta
    has_u = data.uu_coords() in data.coords_set
    if needs_u and not has_u:
        bad.append("u_in_F")

    sym_ok = True
    for i in range(nW):
        for j in range(i, nW):
            sign = _SYM_SIGN[tuple(sorted((data.types[i], data.types[j])))]
            lhs = data.gram[j][i]
            rhs = data.gram[i][j] if sign > 0 else -data.gram[i][j]
            if lhs != rhs:
                sym_ok = False
    if not sym_ok:
        bad.append("beta_symmetry")

    if stable and "F_subgroup" not in bad:
        inv_ok = True
        for f in data.F:
            P = data.act_matrix(f)
            for i in range(nW):
                for j in range(nW):
                    acc = _ZERO
                    for k in range(nW):
                        if P[i][k].is_zero():
                            continue
                        for l in range(nW):
                            if P[j][l].is_zero() or data.gram[k][l].is_zero():
                                continue
                            acc = acc + P[i][k] * P[j][l] * data.gram[k][l]
                    if acc != data.gram[i][j]:
                        inv_ok = False
        if not inv_ok:
            bad.append("beta_F_invariant")

    zero_c = GG.zero().coords
    if any(data.psi[(zero_c, f.coords)] != _ONE or data.psi[(f.coords, zero_c)] != _ONE
           for f in data.F):
        bad.append("psi_normalized")
    if any(v.is_zero() for v in data.psi.values()):
        bad.append("psi_cocycle")
    elif "F_subgroup" not in bad:
        coc_ok = True
        for a in data.F:
            for b in data.F:
                midab = ab.add(a, b).coords
                for c in data.F:
                    lhs = data.psi[(a.coords, b.coords)] * data.psi[(midab, c.coords)]
                    rhs = data.psi[(b.coords, c.coords)] \
                        * data.psi[(a.coords, ab.add(b, c).coords)]
                    if lhs != rhs:
                        coc_ok = False
        if not coc_ok:
            bad.append("psi_cocycle")

    if needs_u and has_u:
        uu = data.uu_coords()
        if any(data.psi[(f.coords, uu)] != data.psi[(uu, f.coords)]
               for f in data.F):
            bad.append("psi_u_central")
    return bad


def alpha_supports_w3(module, alpha) -> bool:
    """True when (u, u) lies in U_alpha and psi_alpha commutes with it, so
    data with a nonzero graph sector can be built over alpha."""
    U = orth.u_alpha(alpha)
    psi = orth.psi_alpha(alpha)
    uu = tuple(module.u.coords) + tuple(module.u.coords)
    e = next((f for f in U.elements if f.coords == uu), None)
    if e is None:
        return False
    return all(psi.value(f, e) == psi.value(e, f) for f in U.elements)


def build_K(data, host=None) -> ComodAlg:
    """The comodule algebra K of a compatible datum over the doubled host."""
    bad = compatible_violations(data)
    if bad:
        raise DomainError("incompatible comodule-algebra data; violated: "
                          + ", ".join(bad))
    module = data.module
    m = module.dim
    if host is None:
        host = doubled_host(module)
    elif host.kind != "tensor" or host.modules != (module, module):
        raise InputValidationError("host must be the doubled host of the module")

    rows = data.rows
    nW = len(rows)
    Fels = data.F
    nF = len(Fels)
    if (1 << nW) * nF > 8192:
        raise CapacityError("comodule algebra dimension exceeds the supported bound")
    GG = data.pair_group
    f_index = {f.coords: k for k, f in enumerate(Fels)}
    id_f = f_index[GG.zero().coords]
    f_mul = [[f_index[ab.add(a, b).coords] for b in Fels] for a in Fels]
    u_f = f_index.get(data.uu_coords())
    psiv = [[data.psi[(a.coords, b.coords)] for b in Fels] for a in Fels]
    act_rows = []
    for fk, f in enumerate(Fels):
        P = data.act_matrix(f)
        act_rows.append([{j: c for j, c in enumerate(P[i]) if not c.is_zero()}
                         for i in range(nW)])
    gram = data.gram
    types = data.types

    memo = {}

    def nf(word):
        got = memo.get(word)
        if got is not None:
            return got
        out = None
        for p in range(len(word) - 1):
            (ka, a), (kb, b) = word[p], word[p + 1]
            if ka == "e" and kb == "e":
                out = _scaled(nf(word[:p] + (("e", f_mul[a][b]),) + word[p + 2:]),
                              psiv[a][b])
                break
            if ka == "e" and kb == "w":
                acc = {}
                for wj, cj in act_rows[a][b].items():
                    sub = nf(word[:p] + (("w", wj), ("e", a)) + word[p + 2:])
                    for k, v in sub.items():
                        _addin(acc, k, cj * v)
                out = acc
                break
            if ka == "w" and kb == "w":
                if a == b:
                    out = _scaled(nf(word[:p] + word[p + 2:]),
                                  _HALF * gram[a][a])
                    break
                if a > b:
                    sector = tuple(sorted((types[a], types[b])))
                    c = gram[b][a]
                    if _SYM_SIGN[sector] == -1:
                        acc = dict(nf(word[:p] + (("w", b), ("w", a)) + word[p + 2:]))
                        if not c.is_zero():
                            sub = nf(word[:p] + (("e", u_f),) + word[p + 2:])
                            for k, v in sub.items():
                                _addin(acc, k, -(c * v))
                        out = acc
                    else:
                        acc = _scaled(nf(word[:p] + (("w", b), ("w", a)) + word[p + 2:]),
                                      -_ONE)
                        if not c.is_zero():
                            sub = nf(word[:p] + word[p + 2:])
                            for k, v in sub.items():
                                _addin(acc, k, c * v)
                        out = acc
                    break
        if out is None:
            S = tuple(i for k, i in word if k == "w")
            f = next((i for k, i in word if k == "e"), id_f)
            out = {(S, f): _ONE}
        memo[word] = out
        return out

    keys = [(S, fk) for S in _subsets(nW) for fk in range(nF)]
    kidx = {key: i for i, key in enumerate(keys)}
    labels = tuple((S, Fels[fk].coords) for S, fk in keys)

    mult = {}
    for i, (S1, f1) in enumerate(keys):
        for j, (S2, f2) in enumerate(keys):
            word = tuple(("w", s) for s in S1) + (("e", f1),) \
                + tuple(("w", s) for s in S2) + (("e", f2),)
            mult[(i, j)] = {kidx[key]: c for key, c in nf(word).items()}

    zeroG = module.group.zero().coords
    zeroGG = GG.zero().coords
    ue = tuple(module.u.coords) + zeroG
    eu = zeroG + tuple(module.u.coords)
    uu = data.uu_coords()
    unit_k = kidx[((), id_f)]

    lamw = []
    for wi, row in enumerate(rows):
        t = types[wi]
        d = {}
        if t == 1:
            for j in range(m):
                if not row[j].is_zero():
                    _addin(d, (host.index[((j,), zeroGG)], unit_k), row[j])
            _addin(d, (host.index[((), ue)], kidx[((wi,), id_f)]), _ONE)
        elif t == 2:
            for j in range(m):
                if not row[m + j].is_zero():
                    _addin(d, (host.index[((m + j,), zeroGG)], unit_k), row[m + j])
            _addin(d, (host.index[((), eu)], kidx[((wi,), id_f)]), _ONE)
        else:
            for j in range(m):
                if not row[j].is_zero():
                    _addin(d, (host.index[((j,), zeroGG)], unit_k), row[j])
            for j in range(m):
                if not row[m + j].is_zero():
                    _addin(d, (host.index[((m + j,), uu)], kidx[((), u_f)]),
                           row[m + j])
            _addin(d, (host.index[((), ue)], kidx[((wi,), id_f)]), _ONE)
        lamw.append(d)
    lame = [{(host.index[((), f.coords)], kidx[((), fk)]): _ONE}
            for fk, f in enumerate(Fels)]

    def ctmul(t1, t2):
        acc = {}
        for (h1, k1), c1 in t1.items():
            for (h2, k2), c2 in t2.items():
                hp = host.mono_mul(h1, h2)
                if not hp:
                    continue
                kd = mult.get((k1, k2))
                if not kd:
                    continue
                for h3, ch in hp.items():
                    for k3, ck in kd.items():
                        _addin(acc, (h3, k3), c1 * c2 * ch * ck)
        return acc

    coaction = {}
    for i, (S, fk) in enumerate(keys):
        acc = {(host.one_idx, unit_k): _ONE}
        for s in S:
            acc = ctmul(acc, lamw[s])
        acc = ctmul(acc, lame[fk])
        coaction[i] = acc

    unit = {unit_k: _ONE}
    group_part = tuple(Fels[fk] for S, fk in keys)
    loewy = tuple(len(S) for S, fk in keys)
    return ComodAlg(host, labels, mult, coaction, unit, group_part, loewy,
                    meta={"kind": "K", "data": data})


def build_L(module, W, beta, alpha, host=None) -> ComodAlg:
    """K built from the twisted subgroup and cocycle attached to alpha."""
    U = orth.u_alpha(alpha)
    psi = orth.psi_alpha(alpha)
    data = CompatibleData(module, None, None, W, beta, U.elements, psi,
                          alpha=alpha)
    return build_K(data, host)


# -- abstract subalgebra model ----------------------------------------------

class _SparseEchelon:
    """Incremental exact echelon over sparse vectors with hashable keys."""

    __slots__ = ("pivots", "order", "rows_by_pos")

    def __init__(self):
        self.pivots = {}
        self.order = []
        self.rows_by_pos = []

    @property
    def dim(self):
        return len(self.order)

    def reduce(self, d):
        d = dict(d)
        coords = {}
        while True:
            hit = None
            for k in d:
                if k in self.pivots and (hit is None or k < hit):
                    hit = k
            if hit is None:
                break
            pos, row = self.pivots[hit]
            f = d[hit]
            coords[pos] = f
            for k2, c2 in row.items():
                _addin(d, k2, -(f * c2))
        return d, coords

    def insert(self, d):
        res, _ = self.reduce(d)
        if not res:
            return None
        piv = min(res)
        f = res[piv].inv()
        row = {k: f * c for k, c in res.items()}
        for _, (pos, r) in list(self.pivots.items()):
            c = r.get(piv)
            if c is not None:
                for k2, c2 in row.items():
                    _addin(r, k2, -(c * c2))
        pos = len(self.order)
        self.pivots[piv] = (pos, row)
        self.order.append(piv)
        self.rows_by_pos.append(row)
        return pos

    def coords(self, d):
        res, coords = self.reduce(d)
        if res:
            return None
        return coords


def build_C(module, W1, W2, W3, F, host=None) -> ComodAlg:
    """Subalgebra of the doubled host generated by kF, W1 + W2 and graph
    brackets from W3, with the restricted coaction (= coproduct)."""
    data = CompatibleData(module, W1, W2, W3, None, F)
    bad = [b for b in compatible_violations(data) if not b.startswith("psi")]
    if bad:
        raise DomainError("incompatible subalgebra data; violated: "
                          + ", ".join(bad))
    m = module.dim
    if host is None:
        host = doubled_host(module)
    GG = data.pair_group
    zeroGG = GG.zero().coords
    uu = data.uu_coords()

    gens = []
    for f in data.F:
        gens.append({host.index[((), f.coords)]: _ONE})
    for wi, row in enumerate(data.rows):
        t = data.types[wi]
        d = {}
        for j in range(m):
            if not row[j].is_zero():
                _addin(d, host.index[((j,), zeroGG)], row[j])
        for j in range(m):
            if not row[m + j].is_zero():
                grp = uu if t == 3 else zeroGG
                _addin(d, host.index[((m + j,), grp)], row[m + j])
        gens.append(d)

    ech = _SparseEchelon()
    for g in gens:
        ech.insert(g)
    current = list(gens)
    while True:
        added = []
        for a in current:
            for g in gens:
                prod = host.mul(a, g)
                if prod and ech.insert(prod) is not None:
                    added.append(prod)
        if not added:
            break
        current = added
    if ech.coords(host.one) is None:
        ech.insert(host.one)

    basis_rows = list(ech.rows_by_pos)
    n = len(basis_rows)
    labels = tuple(("c", i) for i in range(n))

    mult = {}
    for i in range(n):
        for j in range(n):
            prod = host.mul(basis_rows[i], basis_rows[j])
            co = ech.coords(prod)
            if co is None:
                raise BrpicError("internal invariant violation: "
                                 "subalgebra closure failed on a product")
            mult[(i, j)] = co

    coaction = {}
    loewy = []
    for i, rowv in enumerate(basis_rows):
        byh = {}
        for h, c in rowv.items():
            for (h1, h2), c2 in host.comult(h).items():
                _addin(byh.setdefault(h1, {}), h2, c * c2)
        entry = {}
        md = 0
        for h1 in sorted(byh):
            co = ech.coords(byh[h1])
            if co is None:
                raise DomainError("generated subalgebra is not a coideal: "
                                  "coproduct leaves H tensor C")
            md = max(md, host.deg(h1))
            for pos, c in co.items():
                _addin(entry, (h1, pos), c)
        coaction[i] = entry
        loewy.append(md)

    unit = ech.coords(host.one)
    return ComodAlg(host, labels, mult, coaction, unit, None, loewy,
                    meta={"kind": "C", "data": data, "echelon": ech})


# -- diagonal model ---------------------------------------------------------

def diag_comodule(H) -> ComodAlg:
    """H as a comodule algebra over its own double, along the diagonal."""
    if H.kind != "supergroup":
        raise InputValidationError("diagonal model needs a supergroup host")
    module = H.modules[0]
    m = module.dim
    B = doubled_host(module)
    zeroG = module.group.zero().coords
    phi = cop_phi(H)
    emb1 = [B.index[(S, g.coords + zeroG)] for S, g in H.basis]
    emb2 = [B.index[(tuple(x + m for x in S), zeroG + g.coords)]
            for S, g in H.basis]

    mult = {(i, j): dict(H.mono_mul(i, j))
            for i in range(H.dim) for j in range(H.dim)}
    coaction = {}
    loewy = []
    for i in range(H.dim):
        t3 = {}
        for (a, b), c in H.comult(i).items():
            for (b1, b2), c2 in H.comult(b).items():
                _addin(t3, (a, b1, b2), c * c2)
        acc = {}
        for (a1, a2, a3), c in t3.items():
            for p, cp in phi[a3].items():
                for h, ch in B.mono_mul(emb1[p], emb2[a1]).items():
                    _addin(acc, (h, a2), c * cp * ch)
        coaction[i] = acc
        loewy.append(max((B.deg(h) for (h, _k) in acc), default=0))

    labels = tuple((S, g.coords) for S, g in H.basis)
    unit = {H.one_idx: _ONE}
    return ComodAlg(B, labels, mult, coaction, unit, None, loewy,
                    meta={"kind": "diag", "hopf": H})


def check_diag_iso(H):
    """Compare the diagonal model of H with the K built from the diagonal
    subspace of V + V and the diagonal subgroup of G x G, via the map
    sending v to (v, v) e_(u,u) and g to e_(g,g)."""
    module = H.modules[0]
    m = module.dim
    G = module.group
    D = diag_comodule(H)
    rows = [[_ONE if (j == i or j == m + i) else _ZERO for j in range(2 * m)]
            for i in range(m)]
    F = [tuple(g.coords) + tuple(g.coords) for g in G.elements()]
    data = CompatibleData(module, None, None, la.Subspace(2 * m, rows), None, F)
    K = build_K(data)
    zeroGG = data.pair_group.zero().coords
    uu = data.uu_coords()

    sig_v = [K.mul({K.index[((i,), zeroGG)]: _ONE},
                   {K.index[((), uu)]: _ONE}) for i in range(m)]
    sig = []
    for S, g in H.basis:
        acc = dict(K.unit)
        for s in S:
            acc = K.mul(acc, sig_v[s])
        acc = K.mul(acc, {K.index[((), tuple(g.coords) + tuple(g.coords))]: _ONE})
        sig.append(acc)

    failures = []

    def note(kind, where):
        if len(failures) < 10:
            failures.append((kind, where))

    def push(x):
        acc = {}
        for i, c in x.items():
            for k, c2 in sig[i].items():
                _addin(acc, k, c * c2)
        return acc

    if sig[H.one_idx] != K.unit:
        note("unit", None)
    for i in range(H.dim):
        for j in range(H.dim):
            if K.mul(sig[i], sig[j]) != push(H.mono_mul(i, j)):
                note("algebra_map", (i, j))
    for i in range(H.dim):
        lhs = {}
        for (h, k), c in D.coact_basis(i).items():
            for k2, c2 in sig[k].items():
                _addin(lhs, (h, k2), c * c2)
        if lhs != K.coact(sig[i]):
            note("comodule_map", i)
    ech = _SparseEchelon()
    for x in sig:
        ech.insert(x)
    bij = ech.dim == H.dim and K.dim == H.dim
    if not bij:
        note("not_bijective", (ech.dim, K.dim, H.dim))
    return {"ok": not failures, "bijective": bij, "dim": H.dim,
            "failures": failures}


# -- comodule-algebra verification ------------------------------------------

def coinvariants(A) -> list:
    """Basis of {x : coaction(x) = 1 tensor x}, as dense coefficient vectors."""
    host = A.host
    rows = {}
    for i in range(A.dim):
        for (h, k), c in A.coact_basis(i).items():
            _addin(rows.setdefault((h, k), {}), i, c)
    for i in range(A.dim):
        _addin(rows.setdefault((host.one_idx, i), {}), i, -_ONE)
    return la.kernel_sparse_rows([r for r in rows.values() if r], A.dim)


def check_comodule_algebra(A, rng=None, pair_limit=None):
    """Verify coassociativity, counitality and multiplicativity of the
    coaction; returns a report with located witnesses and the dimension of
    the coinvariant subalgebra."""
    rng = rng if rng is not None else random.Random(0)
    host = A.host
    failures = []

    def note(kind, where):
        if len(failures) < 10:
            failures.append((kind, where))

    for i in range(A.dim):
        lam = A.coact_basis(i)
        left = {}
        right = {}
        for (h, k), c in lam.items():
            for (h1, h2), c2 in host.comult(h).items():
                _addin(left, (h1, h2, k), c * c2)
            for (h2, k2), c2 in A.coact_basis(k).items():
                _addin(right, (h, h2, k2), c * c2)
        if left != right:
            note("coassoc", A.basis[i])
        cu = {}
        for (h, k), c in lam.items():
            e = host.counit(h)
            if not e.is_zero():
                _addin(cu, k, e * c)
        if cu != {i: _ONE}:
            note("counit", A.basis[i])

    lam1 = A.coact(A.unit)
    unit_target = {}
    for k, c in A.unit.items():
        _addin(unit_target, (host.one_idx, k), c)
    if lam1 != unit_target:
        note("unit", None)

    if pair_limit is None:
        pair_limit = A.dim * A.dim if A.dim <= 24 else max(200, 4 * A.dim)
    if A.dim * A.dim <= pair_limit:
        pairs = [(i, j) for i in range(A.dim) for j in range(A.dim)]
    else:
        pairs = [(rng.randrange(A.dim), rng.randrange(A.dim))
                 for _ in range(pair_limit)]
    for i, j in pairs:
        lhs = {}
        for (h1, k1), c1 in A.coact_basis(i).items():
            for (h2, k2), c2 in A.coact_basis(j).items():
                hp = host.mono_mul(h1, h2)
                if not hp:
                    continue
                kd = A.mul_basis(k1, k2)
                if not kd:
                    continue
                for h3, ch in hp.items():
                    for k3, ck in kd.items():
                        _addin(lhs, (h3, k3), c1 * c2 * ch * ck)
        rhs = {}
        for k, c in A.mul_basis(i, j).items():
            for key, c2 in A.coact_basis(k).items():
                _addin(rhs, key, c * c2)
        if lhs != rhs:
            note("multiplicative", (A.basis[i], A.basis[j]))

    coin = coinvariants(A)
    return {"ok": not failures, "failures": failures,
            "checked_pairs": len(pairs), "coinvariants_dim": len(coin)}


# -- cotensor products ------------------------------------------------------

def _one_sided_ok(entries, H, dim, side):
    for i in range(dim):
        lam = entries[i]
        left = {}
        right = {}
        if side == "right":
            for (k, p), c in lam.items():
                for (p1, p2), c2 in H.comult(p).items():
                    _addin(left, (k, p1, p2), c * c2)
                for (k2, p2), c2 in entries[k].items():
                    _addin(right, (k2, p2, p), c * c2)
            cu = {}
            for (k, p), c in lam.items():
                e = H.counit(p)
                if not e.is_zero():
                    _addin(cu, k, e * c)
        else:
            for (p, k), c in lam.items():
                for (p1, p2), c2 in H.comult(p).items():
                    _addin(left, (p1, p2, k), c * c2)
                for (p2, k2), c2 in entries[k].items():
                    _addin(right, (p, p2, k2), c * c2)
            cu = {}
            for (p, k), c in lam.items():
                e = H.counit(p)
                if not e.is_zero():
                    _addin(cu, k, e * c)
        if left != right or cu != {i: _ONE}:
            return False
    return True


def cotensor(L, K) -> ComodAlg:
    """Exact cotensor product of two group-labeled comodule algebras over the
    doubled host, computed blockwise over (u, u)-classes of group parts."""
    host = L.host
    if K.host is not host:
        if (K.host.kind != host.kind or K.host.group != host.group
                or K.host.modules != host.modules):
            raise InputValidationError("factors live over different hosts")
    if host.kind != "tensor" or host.modules[0] != host.modules[1]:
        raise InputValidationError("cotensor needs the doubled host of a module")
    if L.group_part is None or K.group_part is None:
        raise DomainError("cotensor requires group-labeled factors")
    module = host.modules[0]
    m = module.dim
    r = len(module.group.factors)
    zeroG = module.group.zero().coords
    H = build_supergroup(module)
    phi = cop_phi(H)

    def p1H(h):
        S, g = host.basis[h]
        if any(s >= m for s in S):
            return None
        return H.index[(S, g.coords[:r])]

    def p2H(h):
        S, g = host.basis[h]
        if any(s < m for s in S):
            return None
        return phi[H.index[(tuple(s - m for s in S), g.coords[r:])]]

    lam_r = []
    for i in range(L.dim):
        d = {}
        for (h, k), c in L.coact_basis(i).items():
            img = p2H(h)
            if img:
                for p, cp in img.items():
                    _addin(d, (k, p), c * cp)
        lam_r.append(d)
    lam_l = []
    for j in range(K.dim):
        d = {}
        for (h, k), c in K.coact_basis(j).items():
            p = p1H(h)
            if p is not None:
                _addin(d, (p, k), c)
        lam_l.append(d)
    if not _one_sided_ok(lam_r, H, L.dim, "right"):
        raise BrpicError("internal invariant violation: induced right coaction "
                         "is not a comodule structure")
    if not _one_sided_ok(lam_l, H, K.dim, "left"):
        raise BrpicError("internal invariant violation: induced left coaction "
                         "is not a comodule structure")

    GG = host.group
    uu = GG.element(tuple(module.u.coords) + tuple(module.u.coords))

    def klass(g):
        a = g.coords
        b = ab.add(g, uu).coords
        return (a, b) if a <= b else (b, a)

    lcl = {}
    for i in range(L.dim):
        lcl.setdefault(klass(L.group_part[i]), []).append(i)
    kcl = {}
    for j in range(K.dim):
        kcl.setdefault(klass(K.group_part[j]), []).append(j)

    ech = _SparseEchelon()
    for ka in sorted(lcl):
        for kb in sorted(kcl):
            cols = [(i, j) for i in lcl[ka] for j in kcl[kb]]
            cix = {c: t for t, c in enumerate(cols)}
            rows = {}
            for i, j in cols:
                t = cix[(i, j)]
                for (k, p), c in lam_r[i].items():
                    _addin(rows.setdefault((k, p, j), {}), t, c)
                for (p, k), c in lam_l[j].items():
                    _addin(rows.setdefault((i, p, k), {}), t, -c)
            for vec in la.kernel_sparse_rows(
                    [r_ for r_ in rows.values() if r_], len(cols)):
                flat = {}
                for t, c in enumerate(vec):
                    if not c.is_zero():
                        i, j = cols[t]
                        flat[i * K.dim + j] = c
                if flat:
                    ech.insert(flat)

    n = ech.dim
    labels = tuple(("z", t) for t in range(n))
    zrows = ech.rows_by_pos

    def flat_mul(x, y):
        acc = {}
        for fa, ca in x.items():
            a, b = divmod(fa, K.dim)
            for fb, cb in y.items():
                a2, b2 = divmod(fb, K.dim)
                ld = L.mul_basis(a, a2)
                if not ld:
                    continue
                kd = K.mul_basis(b, b2)
                if not kd:
                    continue
                for a3, c3 in ld.items():
                    for b3, c4 in kd.items():
                        _addin(acc, a3 * K.dim + b3, ca * cb * c3 * c4)
        return acc

    def mulfn(i, j):
        co = ech.coords(flat_mul(zrows[i], zrows[j]))
        if co is None:
            raise BrpicError("internal invariant violation: cotensor product "
                             "left the computed kernel")
        return co

    def P1(h):
        S, g = host.basis[h]
        if any(s >= m for s in S):
            return None
        return host.index[(S, g.coords[:r] + zeroG)]

    def P2(h):
        S, g = host.basis[h]
        if any(s < m for s in S):
            return None
        return host.index[(S, zeroG + g.coords[r:])]

    def coactfn(t):
        byh = {}
        for flat, c in zrows[t].items():
            a, b = divmod(flat, K.dim)
            for (h1, a0), c1 in L.coact_basis(a).items():
                q1 = P1(h1)
                if q1 is None:
                    continue
                for (h2, b0), c2 in K.coact_basis(b).items():
                    q2 = P2(h2)
                    if q2 is None:
                        continue
                    for h3, ch in host.mono_mul(q1, q2).items():
                        _addin(byh.setdefault(h3, {}),
                               a0 * K.dim + b0, c * c1 * c2 * ch)
        entry = {}
        for h3 in sorted(byh):
            vec = {k: c for k, c in byh[h3].items() if not c.is_zero()}
            if not vec:
                continue
            co = ech.coords(vec)
            if co is None:
                raise BrpicError("internal invariant violation: cotensor "
                                 "coaction left the computed kernel")
            for pos, c in co.items():
                _addin(entry, (h3, pos), c)
        return entry

    uflat = {}
    for a, ca in L.unit.items():
        for b, cb in K.unit.items():
            _addin(uflat, a * K.dim + b, ca * cb)
    unit = ech.coords(uflat)
    if unit is None:
        raise BrpicError("internal invariant violation: unit is outside "
                         "the cotensor kernel")

    return ComodAlg(host, labels, {}, {}, unit, None, None,
                    meta={"kind": "cotensor", "left": L, "right": K,
                          "echelon": ech, "flat_dim": L.dim * K.dim},
                    mulfn=mulfn, coactfn=coactfn)


def verify_cotensor_iso(d, dt):
    """Check that the cotensor of the models of d and dt (second factor with
    identity twist) is isomorphic, as a comodule algebra, to the model of
    their composed datum, via w -> iota1(w) x 1 + e_u x iota2(w) and
    e_f -> e_f x e_(f2,f2).  Returns a report; 'ok' requires the dimension
    law and every structural check."""
    module = d.module
    G = module.group
    GG = ab.direct_sum(G, G)
    ident = orth.orth_identity(G)
    if dt.alpha.hom.matrix != ident.hom.matrix:
        raise DomainError("second factor must carry the identity twist")
    if dt.module != module:
        raise DomainError("factors live over different modules")
    m = module.dim
    r = len(G.factors)
    zeroG = G.zero().coords
    zeroGG = GG.zero().coords

    d3 = bp.rdatum_product(d, dt)
    L1 = build_L(module, d.W, d.beta, d.alpha)
    L2 = build_L(module, dt.W, dt.beta, dt.alpha)
    L3 = build_L(module, d3.W, d3.beta, d3.alpha)
    C = cotensor(L1, L2)
    data1 = L1.meta["data"]
    data3 = L3.meta["data"]
    ech = C.meta["echelon"]
    Kdim = L2.dim

    failures = []

    def note(kind, where=None):
        if len(failures) < 12:
            failures.append((kind, where))

    expected = (1 << d3.W.dim) * len(data1.F)
    report = {"dim_cot": C.dim, "dim_expected": expected, "dim_model": L3.dim}
    if not (C.dim == expected == L3.dim):
        note("dimension_law", (C.dim, expected, L3.dim))

    uu = data1.uu_coords()
    unit1 = L1.index[((), zeroGG)]
    unit2 = L2.index[((), zeroGG)]
    uflat = {unit1 * Kdim + unit2: _ONE}

    def flat_mul(x, y):
        acc = {}
        for fa, ca in x.items():
            a, b = divmod(fa, Kdim)
            for fb, cb in y.items():
                a2, b2 = divmod(fb, Kdim)
                ld = L1.mul_basis(a, a2)
                if not ld:
                    continue
                kd = L2.mul_basis(b, b2)
                if not kd:
                    continue
                for a3, c3 in ld.items():
                    for b3, c4 in kd.items():
                        _addin(acc, a3 * Kdim + b3, ca * cb * c3 * c4)
        return acc

    R = d.W.basis
    dW = len(R)
    A = [[R[k][i] for k in range(dW)] for i in range(m)]
    phiw = []
    for row in data3.rows:
        v1 = list(row[:m])
        try:
            s = la.solve(A, v1)
        except DomainError:
            note("iota_witness", row)
            return {"ok": False, "failures": failures, **report}
        v2 = [_ZERO] * m
        for k, ck in enumerate(s):
            if ck.is_zero():
                continue
            for i in range(m):
                v2[i] = v2[i] + ck * R[k][m + i]
        iota1 = v1 + v2
        iota2 = v2 + list(row[m:])
        try:
            cw = d.W.coords_of(iota1)
            ct = dt.W.coords_of(iota2)
        except DomainError:
            note("iota_membership", row)
            return {"ok": False, "failures": failures, **report}
        vec = {}
        for k, c in enumerate(cw):
            if not c.is_zero():
                _addin(vec, L1.index[((k,), zeroGG)] * Kdim + unit2, c)
        eu1 = L1.index[((), uu)]
        for k, c in enumerate(ct):
            if not c.is_zero():
                _addin(vec, eu1 * Kdim + L2.index[((k,), zeroGG)], c)
        phiw.append(vec)

    phie = []
    for f in data1.F:
        f2 = f.coords[r:]
        phie.append({L1.index[((), f.coords)] * Kdim
                     + L2.index[((), f2 + f2)]: _ONE})

    g3 = data3.gram
    nW3 = len(data3.rows)
    for i in range(nW3):
        for j in range(i, nW3):
            lhs = _elem_add(flat_mul(phiw[i], phiw[j]),
                            flat_mul(phiw[j], phiw[i])) if i != j \
                else flat_mul(phiw[i], phiw[i])
            target = _scaled(uflat, g3[i][j] if i != j else _HALF * g3[i][i])
            if lhs != target:
                note("relations_w", (i, j))
    psi1 = data1.psi
    fpos = {f.coords: k for k, f in enumerate(data1.F)}
    for a in data1.F:
        for b in data1.F:
            lhs = flat_mul(phie[fpos[a.coords]], phie[fpos[b.coords]])
            rhs = _scaled(phie[fpos[ab.add(a, b).coords]],
                          psi1[(a.coords, b.coords)])
            if lhs != rhs:
                note("relations_psi", (a.coords, b.coords))
    for f in data1.F:
        P = data3.act_matrix(f)
        for wi in range(nW3):
            lhs = flat_mul(phie[fpos[f.coords]], phiw[wi])
            rhs = {}
            for wj in range(nW3):
                if P[wi][wj].is_zero():
                    continue
                for k, c in flat_mul(phiw[wj], phie[fpos[f.coords]]).items():
                    _addin(rhs, k, P[wi][wj] * c)
            if lhs != rhs:
                note("relations_action", (f.coords, wi))

    phimat = []
    for S, fc in L3.basis:
        acc = dict(uflat)
        for s in S:
            acc = flat_mul(acc, phiw[s])
        acc = flat_mul(acc, phie[fpos[fc]])
        phimat.append(acc)

    ech2 = _SparseEchelon()
    coords3 = []
    for b, vecb in enumerate(phimat):
        ech2.insert(vecb)
        co = ech.coords(vecb)
        if co is None:
            note("image_outside_cotensor", L3.basis[b])
            coords3.append(None)
        else:
            coords3.append(co)
    bij = ech2.dim == L3.dim and C.dim == L3.dim and all(
        co is not None for co in coords3)
    if not bij:
        note("not_bijective", (ech2.dim, C.dim, L3.dim))
    report["bijective"] = bij

    if all(co is not None for co in coords3):
        for b in range(L3.dim):
            lhs = {}
            for pos, c in coords3[b].items():
                for key, c2 in C.coact_basis(pos).items():
                    _addin(lhs, key, c * c2)
            rhs = {}
            for (h, b2), c in L3.coact_basis(b).items():
                for pos, c2 in coords3[b2].items():
                    _addin(rhs, (h, pos), c * c2)
            if lhs != rhs:
                note("comodule_map", L3.basis[b])

    report["ok"] = not failures
    report["failures"] = failures
    return report


# -- Loewy filtration -------------------------------------------------------

def loewy_graded(A) -> ComodAlg:
    """Associated graded of A under the filtration pulled back from the host
    coradical filtration.  Requires (and verifies) that each filtration step
    is spanned by basis vectors of the recorded degree."""
    host = A.host
    if A.loewy_degree is None:
        raise DomainError("algebra carries no degree labels to grade against")
    deg = A.loewy_degree
    maxd = max((host.deg(h) for i in range(A.dim)
                for (h, _k) in A.coact_basis(i)), default=0)
    for i in range(A.dim):
        md = max((host.deg(h) for (h, _k) in A.coact_basis(i)), default=0)
        if md != deg[i]:
            raise BrpicError("recorded degree disagrees with the coaction "
                             f"at basis {A.basis[i]}")
    for n in range(maxd + 1):
        rows = {}
        for i in range(A.dim):
            for (h, k), c in A.coact_basis(i).items():
                if host.deg(h) > n:
                    _addin(rows.setdefault((h, k), {}), i, c)
        kern = la.kernel_sparse_rows([r_ for r_ in rows.values() if r_], A.dim)
        count = sum(1 for i in range(A.dim) if deg[i] <= n)
        if len(kern) != count:
            raise BrpicError("Loewy filtration step is not spanned by the "
                             f"monomial basis at degree {n}")

    mult = {}
    for i in range(A.dim):
        for j in range(A.dim):
            entry = {}
            for k, c in A.mul_basis(i, j).items():
                if deg[k] > deg[i] + deg[j]:
                    raise BrpicError("product violates the filtration at "
                                     f"{A.basis[i]} * {A.basis[j]}")
                if deg[k] == deg[i] + deg[j]:
                    entry[k] = c
            mult[(i, j)] = entry
    coaction = {}
    for i in range(A.dim):
        entry = {}
        for (h, k), c in A.coact_basis(i).items():
            tot = host.deg(h) + deg[k]
            if tot > deg[i]:
                raise BrpicError("coaction violates the filtration at "
                                 f"{A.basis[i]}")
            if tot == deg[i]:
                entry[(h, k)] = c
        coaction[i] = entry
    return ComodAlg(host, A.basis, mult, coaction, A.unit, A.group_part,
                    deg, meta={"kind": "graded", "of": A})


def same_tables(A, B):
    """Exact structural equality of two table-backed comodule algebras."""
    if A.basis != B.basis:
        return False, "basis labels differ"
    if A.unit != B.unit:
        return False, "units differ"
    if A.loewy_degree != B.loewy_degree:
        return False, "degree labels differ"
    for i in range(A.dim):
        for j in range(A.dim):
            if A.mul_basis(i, j) != B.mul_basis(i, j):
                return False, f"products differ at {A.basis[i]} * {A.basis[j]}"
    for i in range(A.dim):
        if A.coact_basis(i) != B.coact_basis(i):
            return False, f"coactions differ at {A.basis[i]}"
    return True, None


# -- probes -----------------------------------------------------------------

def probe_right_simple(A, rng=None, extra_vectors=4):
    """Search for a proper invariant right ideal by closing start vectors
    under right multiplications and coaction functionals.  Reports the first
    counterexample found, or that none was found; it never claims a proof."""
    rng = rng if rng is not None else random.Random(0)
    host = A.host
    rmul = []
    for b in range(A.dim):
        rmul.append([A.mul_basis(i, b) for i in range(A.dim)])
    legs = {}
    for i in range(A.dim):
        for (h, k), c in A.coact_basis(i).items():
            legs.setdefault(h, [dict() for _ in range(A.dim)])[i][k] = c
    ops = rmul + [legs[h] for h in sorted(legs)]

    starts = [{i: _ONE} for i in range(A.dim)]
    for _ in range(extra_vectors):
        v = {}
        for i in range(A.dim):
            c = rng.randint(-3, 3)
            if c:
                v[i] = la.sc(c)
        if v:
            starts.append(v)

    checked = 0
    for v in starts:
        checked += 1
        ech = _SparseEchelon()
        ech.insert(v)
        frontier = [v]
        while frontier and ech.dim < A.dim:
            w = frontier.pop()
            for op in ops:
                img = {}
                for i, c in w.items():
                    for k, c2 in op[i].items():
                        _addin(img, k, c * c2)
                if img and ech.insert(img) is not None:
                    frontier.append(img)
                    if ech.dim == A.dim:
                        break
        if ech.dim < A.dim:
            witness = sorted((A.basis[i], c.to_string()) for i, c in v.items())
            return {"simple": False, "counterexample":
                    {"start": witness, "span_dim": ech.dim, "dim": A.dim},
                    "vectors_checked": checked,
                    "note": "proper invariant right ideal found"}
    return {"simple": None, "counterexample": None,
            "vectors_checked": checked,
            "note": "no counterexample found"}


def morita_equiv_criterion(data1, data2):
    """Translation test for two compatible data over one module: succeeds if
    some g in G x G carries the sectors of the first onto the second with
    matching beta, while F and psi agree (conjugation is trivial here).
    Returns (found, witness)."""
    if data1.module != data2.module:
        return False, None
    if data1.coords_set != data2.coords_set or data1.psi != data2.psi:
        return False, None
    dims1 = (data1.W1.dim, data1.W2.dim, data1.W3.dim)
    dims2 = (data2.W1.dim, data2.W2.dim, data2.W3.dim)
    if dims1 != dims2:
        return False, None
    module = data1.module
    GG = data1.pair_group
    nW = len(data1.rows)
    offs = (0, data1.W1.dim, data1.W1.dim + data1.W2.dim)
    for g in GG.elements():
        g1, g2 = data1.split(g)
        ok = True
        for t in (1, 2, 3):
            S1 = data1.sector_space(t)
            if S1.dim == 0:
                continue
            moved = la.act_subspace(module, (g1, g2), "VplusV", S1)
            if not moved.equals(data2.sector_space(t)):
                ok = False
                break
        if not ok:
            continue
        P = []
        for wi, row in enumerate(data1.rows):
            t = data1.types[wi]
            moved = la.act(module, (g1, g2), "VplusV", row)
            local = data2.sector_space(t).coords_of(moved)
            dense = [_ZERO] * nW
            for k, c in enumerate(local):
                dense[offs[t - 1] + k] = c
            P.append(dense)
        match = True
        for i in range(nW):
            for j in range(nW):
                acc = _ZERO
                for k in range(nW):
                    if P[i][k].is_zero():
                        continue
                    for l in range(nW):
                        if P[j][l].is_zero() or data2.gram[k][l].is_zero():
                            continue
                        acc = acc + P[i][k] * P[j][l] * data2.gram[k][l]
                if acc != data1.gram[i][j]:
                    match = False
        if match:
            return True, g
    return False, None


def freeness_probe(L, K, C=None):
    """Greedy generator count for L tensor K as a right module over its
    cotensor subalgebra; records whether the numbers are consistent with
    freeness.  A probe, not a proof."""
    if C is None:
        C = cotensor(L, K)
    n = L.dim * K.dim
    zrows = C.meta["echelon"].rows_by_pos
    Kdim = K.dim

    def flat_mul(x, y):
        acc = {}
        for fa, ca in x.items():
            a, b = divmod(fa, Kdim)
            for fb, cb in y.items():
                a2, b2 = divmod(fb, Kdim)
                ld = L.mul_basis(a, a2)
                if not ld:
                    continue
                kd = K.mul_basis(b, b2)
                if not kd:
                    continue
                for a3, c3 in ld.items():
                    for b3, c4 in kd.items():
                        _addin(acc, a3 * Kdim + b3, ca * cb * c3 * c4)
        return acc

    ech = _SparseEchelon()
    gens = 0
    for flat in range(n):
        v = {flat: _ONE}
        if ech.coords(v) is not None:
            continue
        gens += 1
        for z in zrows:
            prod = flat_mul(v, z)
            if prod:
                ech.insert(prod)
    divisible = C.dim > 0 and n % C.dim == 0
    return {"flat_dim": n, "sub_dim": C.dim,
            "expected_rank": n // C.dim if divisible else None,
            "divisible": divisible, "generators_used": gens,
            "spanned": ech.dim == n,
            "free_consistent": divisible and gens * C.dim == n and ech.dim == n}


# -- serialization ----------------------------------------------------------

# -- seeded generators ------------------------------------------------------

_T_CHOICES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2),
              Fraction(3), Fraction(-2, 3))
_B_CHOICES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2),
              Fraction(-3))


def _split_pair(module, f):
    r = len(module.group.factors)
    return (module.group.element(f.coords[:r]),
            module.group.element(f.coords[r:]))


def compatible_families(module):
    """Candidate (name, F elements, psi, central_ok) tuples for a module.

    central_ok marks whether the family's twist commutes with (u, u), i.e.
    whether data over it may carry a nonzero third sector.
    """
    G = module.group
    GG = ab.direct_sum(G, G)
    zero = GG.zero().coords
    uu = tuple(module.u.coords) + tuple(module.u.coords)
    fams = []
    diag = [tuple(g.coords) + tuple(g.coords) for g in G.elements()]
    fams.append(("diag", diag, None, True))
    fams.append(("trivial", [zero], None, True))
    fams.append(("order2", [zero, uu], None, True))
    fams.append(("order2_sign", [zero, uu], {(uu, uu): Fraction(-1)}, True))
    if G.order <= 4:
        whole = [tuple(a.coords) + tuple(b.coords)
                 for a in G.elements() for b in G.elements()]
        fams.append(("whole", whole, None, True))
        for k, alpha in enumerate(bp.suite_alphas(module)):
            U = orth.u_alpha(alpha)
            fams.append((f"U_alpha_{k}", U.elements, orth.psi_alpha(alpha),
                         alpha_supports_w3(module, alpha)))
    if G.order == 2:
        # bicharacter twist on G x G that is not central at (u, u)
        whole = [tuple(a.coords) + tuple(b.coords)
                 for a in G.elements() for b in G.elements()]
        psi = {}
        for a in whole:
            for b in whole:
                if a[0] * b[1] % 2:
                    psi[(a, b)] = Fraction(-1)
        fams.append(("bichar", whole, psi, False))
    return fams


def _random_subset(rng, n, cap):
    out = [i for i in range(n) if rng.random() < 0.5]
    while len(out) > cap:
        out.pop(rng.randrange(len(out)))
    return out


def random_compatible_data(module, rng, dim_cap=128) -> "CompatibleData":
    """A valid compatible datum drawn from stable sector families.

    Sector positions are filtered so that every drawn datum passes
    compatible_violations: graph lines only where the character agrees on
    both components over F, beta entries only where the paired eigenvalues
    cancel on all of F, e_u-sector entries only when (u, u) lies in F and
    the twist commutes with it.
    """
    m = module.dim
    N = module.group.exponent
    fams = compatible_families(module)
    name, F, psi, central_ok = fams[rng.randrange(len(fams))]
    GG = ab.direct_sum(module.group, module.group)
    Fels = [c if isinstance(c, ab.GroupElement) else GG.element(c) for c in F]
    uu = tuple(module.u.coords) + tuple(module.u.coords)
    has_uu = any(f.coords == uu for f in Fels) and central_ok

    graph_ok = []
    for i in range(m):
        chi = module.chars[i]
        if all(ab.pair(chi, _split_pair(module, f)[0])
               == ab.pair(chi, _split_pair(module, f)[1]) for f in Fels):
            graph_ok.append(i)

    S1 = _random_subset(rng, m, 2)
    S2 = _random_subset(rng, m, 2)
    S3 = [] if not has_uu else \
        [i for i in graph_ok if not (i in S1 and i in S2)
         and rng.random() < 0.5][:2]
    while (1 << (len(S1) + len(S2) + len(S3))) * len(Fels) > dim_cap:
        for S in (S3, S2, S1):
            if S:
                S.pop()
                break

    rows1 = [[_ONE if j == i else _ZERO for j in range(2 * m)] for i in S1]
    rows2 = [[_ONE if j == m + i else _ZERO for j in range(2 * m)] for i in S2]
    rows3 = []
    for i in S3:
        t = la.sc(_T_CHOICES[rng.randrange(len(_T_CHOICES))])
        row = [_ZERO] * (2 * m)
        row[i] = _ONE
        row[m + i] = t
        rows3.append(row)

    types = [1] * len(S1) + [2] * len(S2) + [3] * len(S3)
    pos = S1 + S2 + S3
    nW = len(types)

    def eigen(k, f):
        f1, f2 = _split_pair(module, f)
        chi = module.chars[pos[k]]
        return ab.pair(chi, f2) if types[k] == 2 else ab.pair(chi, f1)

    gram = [[_ZERO] * nW for _ in range(nW)]
    for i in range(nW):
        for j in range(i, nW):
            sector = tuple(sorted((types[i], types[j])))
            if _SYM_SIGN[sector] < 0 and not has_uu:
                continue
            if any((eigen(i, f) + eigen(j, f)) % N for f in Fels):
                continue
            if rng.random() < 0.5:
                c = la.sc(_B_CHOICES[rng.randrange(len(_B_CHOICES))])
                gram[i][j] = c
                gram[j][i] = c if (i == j or _SYM_SIGN[sector] > 0) else -c

    return CompatibleData(
        module,
        la.Subspace(2 * m, rows1) if rows1 else None,
        la.Subspace(2 * m, rows2) if rows2 else None,
        la.Subspace(2 * m, rows3) if rows3 else None,
        gram, Fels, psi)


def random_graph_datum(module, rng, alpha, dim_cap=64):
    """A relation datum (W, beta, alpha) with W a U_alpha-stable graph span."""
    m = module.dim
    N = module.group.exponent
    U = orth.u_alpha(alpha)

    graph_ok = []
    if alpha_supports_w3(module, alpha):
        for i in range(m):
            chi = module.chars[i]
            if all(ab.pair(chi, _split_pair(module, f)[0])
                   == ab.pair(chi, _split_pair(module, f)[1])
                   for f in U.elements):
                graph_ok.append(i)
    S3 = [i for i in graph_ok if rng.random() < 0.6]
    while (1 << len(S3)) * len(U.elements) > dim_cap and S3:
        S3.pop()
    rows = []
    for i in S3:
        t = la.sc(_T_CHOICES[rng.randrange(len(_T_CHOICES))])
        row = [_ZERO] * (2 * m)
        row[i] = _ONE
        row[m + i] = t
        rows.append(row)
    W = la.Subspace(2 * m, rows) if rows else la.zero_space(2 * m)
    nW = W.dim
    gram = [[_ZERO] * nW for _ in range(nW)]
    for a in range(nW):
        for b in range(a, nW):
            chi_a = module.chars[S3[a]]
            chi_b = module.chars[S3[b]]
            if any((ab.pair(chi_a, _split_pair(module, f)[0])
                    + ab.pair(chi_b, _split_pair(module, f)[0])) % N
                   for f in U.elements):
                continue
            if rng.random() < 0.5:
                c = la.sc(_B_CHOICES[rng.randrange(len(_B_CHOICES))])
                gram[a][b] = c
                gram[b][a] = c
    return bp.RDatum(module, W, la.BilinearForm(W, gram), alpha)


def hopf_to_json(H) -> dict:
    basis = [{"v": list(S), "g": list(g.coords)} for S, g in H.basis]
    mult = []
    for i in range(H.dim):
        for j in range(H.dim):
            for k, c in sorted(H.mono_mul(i, j).items()):
                mult.append([i, j, k, c.to_string()])
    comult = []
    for i in range(H.dim):
        for (a, b), c in sorted(H.comult(i).items()):
            comult.append([i, a, b, c.to_string()])
    counit = [H.counit(i).to_string() for i in range(H.dim)]
    antipode = []
    for i in range(H.dim):
        for k, c in sorted(H.antipode(i).items()):
            antipode.append([i, k, c.to_string()])
    return {"dim": H.dim, "basis": basis, "mult": mult, "comult": comult,
            "counit": counit, "antipode": antipode}


def _label_json(lab):
    if isinstance(lab, tuple) and len(lab) == 2 and isinstance(lab[0], tuple):
        return {"w": list(lab[0]), "f": list(lab[1])}
    return {"tag": str(lab[0]), "i": lab[1]}


def comodalg_to_json(A) -> dict:
    basis = [_label_json(lab) for lab in A.basis]
    mult = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in sorted(A.mul_basis(i, j).items()):
                mult.append([i, j, k, c.to_string()])
    coaction = []
    for i in range(A.dim):
        for (h, k), c in sorted(A.coact_basis(i).items()):
            coaction.append([i, h, k, c.to_string()])
    out = {"dim": A.dim, "basis": basis, "mult": mult, "coaction": coaction,
           "unit": [[k, c.to_string()] for k, c in sorted(A.unit.items())]}
    if A.loewy_degree is not None:
        out["loewy_degree"] = list(A.loewy_degree)
    return out
