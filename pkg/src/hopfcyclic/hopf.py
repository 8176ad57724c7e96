"""
Finite-dimensional algebras, Hopf algebras and module algebras given by
structure constants, with axiom verification and derived constructions
(opposite, co-opposite, crossed product, invariants, integrals).

Elements are handled as sparse dicts {basis index: scalar}; tensors as
dicts {tuple of basis indices: scalar}.
"""

from hopfcyclic.fields import QQ
from hopfcyclic.linalg import (
    BasedSpace, Echelon, LinalgError, SparseMap, SparseVector, axpy,
    rank_and_kernel, tensor_map, tensor_space,
)
from hopfcyclic.report import Report, check_maps_equal

K_SPACE = BasedSpace(("1",), "k")


class DegenerateInputError(ValueError):
    """Zero-dimensional or otherwise unusable structure data."""


class AxiomError(ValueError):
    """Structure data failing its axioms; carries the report."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class MissingAntipodeInverse(ValueError):
    """An operation needs S^-1 but the Hopf data does not provide it."""


def swap_map(V, W, field=QQ):
    """V (x) W -> W (x) V."""
    src = tensor_space(V, W)
    tgt = tensor_space(W, V)
    one = field.one
    n = W.dim
    m = V.dim
    return SparseMap(src, tgt, [{j * m + i: one} for i in range(m) for j in range(n)],
                     field)


def _linear(table, x):
    """Apply a table (list of dicts) to an element dict."""
    out = {}
    for i, c in x.items():
        axpy(out, c, table[i])
    return out


class AlgebraData:
    """An associative unital algebra by structure constants."""

    def __init__(self, space, mul, unit, field=QQ, name=""):
        if space.dim == 0:
            raise DegenerateInputError("zero-dimensional algebra")
        if isinstance(unit, dict):
            unit = SparseVector(space, unit)
        self.space = space
        self.mul = mul
        self.unit = unit
        self.field = field
        self.name = name or space.name
        d = space.dim
        if mul.source.dim != d * d or mul.target.dim != d:
            raise LinalgError("multiplication has the wrong shape")
        self._table = [[mul.cols[i * d + j] for j in range(d)] for i in range(d)]
        self._seq_cache = {}

    @classmethod
    def from_table(cls, labels, products, unit, field=QQ, name=""):
        """products: {(i, j): {k: c}} on basis indices; unit: {k: c}."""
        space = BasedSpace(labels, name)
        d = space.dim
        cols = [dict() for _ in range(d * d)]
        for (i, j), v in products.items():
            cols[i * d + j] = {k: field(c) for k, c in v.items() if c}
        mul = SparseMap(tensor_space(space, space), space, cols, field)
        return cls(space, mul, {k: field(c) for k, c in unit.items()}, field, name)

    @property
    def dim(self):
        return self.space.dim

    @property
    def labels(self):
        return self.space.labels

    def product(self, i, j):
        return self._table[i][j]

    def mul_elems(self, x, y):
        out = {}
        for i, a in x.items():
            row = self._table[i]
            for j, b in y.items():
                axpy(out, a * b, row[j])
        return out

    def product_seq(self, seq):
        """Product of basis elements seq[0] seq[1] ... as a dict (1 if empty)."""
        seq = tuple(seq)
        hit = self._seq_cache.get(seq)
        if hit is not None:
            return hit
        if not seq:
            out = dict(self.unit.entries)
        elif len(seq) == 1:
            out = {seq[0]: self.field.one}
        else:
            out = self.mul_elems(self.product_seq(seq[:-1]), {seq[-1]: self.field.one})
        self._seq_cache[seq] = out
        return out

    def unit_dict(self):
        return dict(self.unit.entries)

    def unit_map(self):
        return SparseMap(K_SPACE, self.space, [dict(self.unit.entries)], self.field)

    def identity(self):
        return SparseMap.identity(self.space, self.field)

    def structure_triples(self):
        """Nonzero structure constants as ((i, j), k, c)."""
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k, c in sorted(self._table[i][j].items()):
                    yield (i, j), k, c

    def __repr__(self):
        return "AlgebraData(%s, dim=%d)" % (self.name, self.dim)


class HopfAlgebraData:
    """A Hopf algebra (or, with antipode None, a bialgebra)."""

    def __init__(self, algebra, comul, counit, antipode, antipode_inverse=None,
                 name=""):
        self.algebra = algebra
        self.comul = comul
        self.counit = counit
        self.antipode = antipode
        self.antipode_inverse = antipode_inverse
        self.name = name or algebra.name
        self._co_cache = {}

    @property
    def field(self):
        return self.algebra.field

    @property
    def space(self):
        return self.algebra.space

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def is_hopf(self):
        return self.antipode is not None

    @property
    def has_antipode_inverse(self):
        return self.antipode_inverse is not None

    # element-level helpers ------------------------------------------------

    def eps(self, i):
        return self.counit.cols[i].get(0, self.field.zero)

    def eps_elem(self, x):
        out = self.field.zero
        for i, c in x.items():
            out = out + c * self.eps(i)
        return out

    def coproduct(self, i):
        """Delta(e_i) as {(j, k): c}."""
        return self.coproduct_n(i, 1)

    def coproduct_n(self, i, n):
        """Delta^n(e_i) as {tuple of n+1 indices: c}; Delta^0 = id."""
        key = (i, n)
        hit = self._co_cache.get(key)
        if hit is not None:
            return hit
        d = self.dim
        if n == 0:
            out = {(i,): self.field.one}
        else:
            prev = self.coproduct_n(i, n - 1)
            out = {}
            for t, c in prev.items():
                # Delta on the first tensor leg (left-nested)
                for flat, c2 in self.comul.cols[t[0]].items():
                    j, k = divmod(flat, d)
                    key2 = (j, k) + t[1:]
                    x = out.get(key2)
                    v = c * c2
                    out[key2] = v if x is None else x + v
            out = {k: v for k, v in out.items() if v}
        self._co_cache[key] = out
        return out

    def coproduct_elem(self, x, n=1):
        out = {}
        for i, c in x.items():
            axpy(out, c, self.coproduct_n(i, n))
        return out

    def S(self, x):
        if self.antipode is None:
            raise DegenerateInputError("bialgebra has no antipode")
        return _linear(self.antipode.cols, x)

    def S_inv(self, x):
        if self.antipode_inverse is None:
            raise MissingAntipodeInverse("antipode inverse not available")
        return _linear(self.antipode_inverse.cols, x)

    def mul_elems(self, x, y):
        return self.algebra.mul_elems(x, y)

    def product_seq(self, seq):
        return self.algebra.product_seq(seq)

    def unit_dict(self):
        return self.algebra.unit_dict()

    def with_antipode_inverse(self):
        """Return a copy whose antipode inverse is computed by exact inversion."""
        if self.antipode_inverse is not None:
            return self
        inv = invert(self.antipode)
        return HopfAlgebraData(self.algebra, self.comul, self.counit, self.antipode,
                               inv, self.name)

    def __repr__(self):
        return "HopfAlgebraData(%s, dim=%d)" % (self.name, self.dim)


class ModuleAlgebraData:
    """A left H-module algebra A with action H (x) A -> A."""

    def __init__(self, hopf, algebra, action, name=""):
        self.hopf = hopf
        self.algebra = algebra
        self.action = action
        self.name = name or "%s<-%s" % (algebra.name, hopf.name)
        da = algebra.dim
        self._act = [[action.cols[h * da + a] for a in range(da)]
                     for h in range(hopf.dim)]

    @property
    def field(self):
        return self.algebra.field

    def act(self, h, a):
        return self._act[h][a]

    def act_elem(self, x, y):
        """x . y for element dicts x in H and y in A."""
        out = {}
        for h, c in x.items():
            row = self._act[h]
            for a, d in y.items():
                axpy(out, c * d, row[a])
        return out

    def __repr__(self):
        return "ModuleAlgebraData(%s)" % self.name


def invert(m):
    """Exact inverse of a square map, by solving against the identity."""
    n = m.source.dim
    if m.target.dim != n:
        raise LinalgError("not square")
    ech = Echelon(m.field)
    for j, col in enumerate(m.cols):
        ech.add(col, gen=j)
    if ech.rank != n:
        raise LinalgError("map is singular")
    cols = []
    one = m.field.one
    for i in range(n):
        rem, combo = ech.reduce({i: one}, track=True)
        cols.append({k: v for k, v in combo.items() if v})
    return SparseMap(m.target, m.source, cols, m.field)


# ----------------------------------------------------------------------------
# verification


def verify_algebra(a):
    """Associativity and unit laws as matrix identities."""
    if a.dim == 0:
        raise DegenerateInputError("zero-dimensional algebra")
    rep = Report("algebra %s" % a.name)
    A, mul = a.space, a.mul
    idA = a.identity()
    lhs = mul @ tensor_map([mul, idA])
    rhs = mul @ tensor_map([idA, mul])
    check_maps_equal(rep, "associativity", lhs, rhs)
    eta = a.unit_map()
    check_maps_equal(rep, "left unit", mul @ tensor_map([eta, idA]), idA,
                     col_labels=A.labels, row_labels=A.labels)
    check_maps_equal(rep, "right unit", mul @ tensor_map([idA, eta]), idA,
                     col_labels=A.labels, row_labels=A.labels)
    return rep


def verify_hopf(h, algebra_first=True):
    """Coalgebra, bialgebra and antipode axioms (and S^-1 if present)."""
    rep = Report("hopf algebra %s" % h.name)
    if algebra_first:
        rep.extend(verify_algebra(h.algebra), "algebra: ")
    H, F = h.space, h.field
    idH = SparseMap.identity(H, F)
    D, eps, mul = h.comul, h.counit, h.algebra.mul
    idK = SparseMap.identity(K_SPACE, F)
    check_maps_equal(rep, "coassociativity",
                     tensor_map([D, idH]) @ D, tensor_map([idH, D]) @ D)
    check_maps_equal(rep, "left counit", tensor_map([eps, idH]) @ D, idH,
                     row_labels=H.labels)
    check_maps_equal(rep, "right counit", tensor_map([idH, eps]) @ D, idH,
                     row_labels=H.labels)
    # Delta and eps are algebra maps
    mid = tensor_map([idH, swap_map(H, H, F), idH])
    check_maps_equal(rep, "comultiplication is multiplicative",
                     D @ mul, tensor_map([mul, mul]) @ mid @ tensor_map([D, D]))
    eta = h.algebra.unit_map()
    check_maps_equal(rep, "comultiplication is unital", D @ eta,
                     tensor_map([eta, eta]), col_labels=K_SPACE.labels)
    check_maps_equal(rep, "counit is multiplicative", eps @ mul,
                     tensor_map([eps, eps]), row_labels=K_SPACE.labels)
    check_maps_equal(rep, "counit is unital", eps @ eta, idK)
    if h.antipode is not None:
        S = h.antipode
        ee = eta @ eps
        check_maps_equal(rep, "antipode law (S (x) id)",
                         mul @ tensor_map([S, idH]) @ D, ee)
        check_maps_equal(rep, "antipode law (id (x) S)",
                         mul @ tensor_map([idH, S]) @ D, ee)
    if h.antipode_inverse is not None:
        if h.antipode is None:
            rep.add("antipode inverse", False, "inverse given without antipode")
        else:
            Si = h.antipode_inverse
            check_maps_equal(rep, "S o S^-1 = id", h.antipode @ Si, idH)
            check_maps_equal(rep, "S^-1 o S = id", Si @ h.antipode, idH)
    return rep


def verify_module_algebra(m, hopf_first=True):
    """Module law, unit law and the module-algebra laws."""
    rep = Report("module algebra %s" % m.name)
    if hopf_first:
        rep.extend(verify_hopf(m.hopf), "hopf: ")
        rep.extend(verify_algebra(m.algebra), "algebra: ")
    h, a, F = m.hopf, m.algebra, m.field
    H, A = h.space, a.space
    idH = SparseMap.identity(H, F)
    idA = a.identity()
    act = m.action
    check_maps_equal(rep, "module law (gh).a = g.(h.a)",
                     act @ tensor_map([h.algebra.mul, idA]),
                     act @ tensor_map([idH, act]))
    check_maps_equal(rep, "unit acts trivially",
                     act @ tensor_map([h.algebra.unit_map(), idA]), idA,
                     col_labels=A.labels)
    lhs = act @ tensor_map([idH, a.mul])
    rhs = (a.mul @ tensor_map([act, act])
           @ tensor_map([idH, swap_map(H, A, F), idA])
           @ tensor_map([h.comul, idA, idA]))
    check_maps_equal(rep, "h.(ab) = (h0.a)(h1.b)", lhs, rhs)
    check_maps_equal(rep, "h.1 = eps(h)1",
                     act @ tensor_map([idH, a.unit_map()]),
                     a.unit_map() @ h.counit, col_labels=H.labels)
    return rep


def require_ok(report):
    if not report.ok:
        raise AxiomError(report)
    return report


# ----------------------------------------------------------------------------
# derived objects


def iterated_coproduct(h, n):
    """Delta^n : H -> H^(n+1), left-nested: Delta^n = (Delta (x) id) Delta^(n-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    H, F = h.space, h.field
    idH = SparseMap.identity(H, F)
    out = idH
    for k in range(1, n + 1):
        step = tensor_map([h.comul] + [idH] * (k - 1)) if k > 1 else h.comul
        out = step @ out
    return out


def opposite_algebra(a):
    mul = a.mul @ swap_map(a.space, a.space, a.field)
    space = BasedSpace(a.space.labels, a.name + "^op")
    mul = SparseMap(tensor_space(space, space), space, mul.cols, a.field)
    return AlgebraData(space, mul, dict(a.unit.entries), a.field, a.name + "^op")


def cop_hopf(h, require_hopf=False):
    """H^cop: opposite comultiplication; antipode S^-1.

    Without S^-1 the result is a bialgebra (antipode None) unless
    require_hopf is set, in which case MissingAntipodeInverse is raised.
    """
    if h.antipode_inverse is None and require_hopf:
        raise MissingAntipodeInverse("H^cop is a Hopf algebra only if S is invertible")
    H, F = h.space, h.field
    comul = swap_map(H, H, F) @ h.comul
    return HopfAlgebraData(h.algebra, comul, h.counit, h.antipode_inverse,
                           h.antipode if h.antipode_inverse is not None else None,
                           h.name + "^cop")


def op_cop(m):
    """A^op as a module algebra over H^cop, with the same action."""
    a_op = opposite_algebra(m.algebra)
    h_cop = cop_hopf(m.hopf)
    action = SparseMap(tensor_space(h_cop.space, a_op.space), a_op.space,
                       m.action.cols, m.field)
    return ModuleAlgebraData(h_cop, a_op, action, m.name + "^op,cop")


def crossed_product(m, verify=True):
    """A >< H on A (x) H with (a(x)g)(b(x)h) = a(g0.b) (x) g1 h."""
    h, a, F = m.hopf, m.algebra, m.field
    dh = h.dim
    labels = [(x, y) for x in a.labels for y in h.labels]
    products = {}
    n = a.dim * dh
    for i in range(n):
        ai, gi = divmod(i, dh)
        for j in range(n):
            bj, hj = divmod(j, dh)
            out = {}
            for (g0, g1), c in h.coproduct(gi).items():
                left = a.mul_elems({ai: F.one}, m.act(g0, bj))
                right = h.algebra.product(g1, hj)
                for p, x in left.items():
                    for q, y in right.items():
                        axpy(out, c * x * y, {p * dh + q: F.one})
            products[(i, j)] = out
    unit = {}
    for p, x in a.unit.entries.items():
        for q, y in h.algebra.unit.entries.items():
            unit[p * dh + q] = x * y
    alg = AlgebraData.from_table(labels, products, unit, F,
                                 name="%s#%s" % (a.name, h.name))
    if verify:
        require_ok(verify_algebra(alg))
    return alg


def tensor_algebra(a, b):
    """The tensor product algebra A (x) B, basis labels (a, b)."""
    F = a.field
    db = b.dim
    labels = [(x, y) for x in a.labels for y in b.labels]
    products = {}
    n = a.dim * db
    for i in range(n):
        ai, bi = divmod(i, db)
        for j in range(n):
            aj, bj = divmod(j, db)
            out = {}
            for p, x in a.product(ai, aj).items():
                for q, y in b.product(bi, bj).items():
                    out[p * db + q] = x * y
            products[(i, j)] = out
    unit = {p * db + q: x * y for p, x in a.unit.entries.items()
            for q, y in b.unit.entries.items()}
    return AlgebraData.from_table(labels, products, unit, F,
                                  name="%s(x)%s" % (a.name, b.name))


def invariant_subalgebra(m):
    """A^H = {a : h.a = eps(h) a for all h}; returns (algebra, inclusion)."""
    h, a, F = m.hopf, m.algebra, m.field
    da = a.dim
    # stacked map A -> A^(dim H): a |-> (h.a - eps(h) a)_h
    cols = []
    for j in range(da):
        col = {}
        for hi in range(h.dim):
            v = dict(m.act(hi, j))
            axpy(v, -h.eps(hi), {j: F.one})
            for r, c in v.items():
                col[hi * da + r] = c
        cols.append(col)
    stacked = SparseMap(a.space, BasedSpace(range(h.dim * da)), cols, F)
    _, kernel = rank_and_kernel(stacked)
    basis = [k.entries for k in kernel]
    if not basis:
        raise DegenerateInputError("invariant subalgebra is zero")
    labels = []
    for n, v in enumerate(basis):
        if len(v) == 1 and next(iter(v.values())) == F.one:
            labels.append(a.labels[next(iter(v))])
        else:
            labels.append("inv%d" % n)
    ech = Echelon(F)
    for n, v in enumerate(basis):
        ech.add(v, gen=n)

    def coords(v):
        rem, combo = ech.reduce(v, track=True)
        if rem:
            raise AxiomError(Report("invariant subalgebra", []))
        return {k: c for k, c in combo.items() if c}

    products = {}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            products[(i, j)] = coords(a.mul_elems(u, v))
    unit = coords(a.unit_dict())
    sub = AlgebraData.from_table(labels, products, unit, F, name=a.name + "^H")
    inclusion = SparseMap(sub.space, a.space, [dict(v) for v in basis], F)
    return sub, inclusion


def right_integrals(h):
    """Basis of the space of right integrals {t : t h = eps(h) t for all h}."""
    F = h.field
    d = h.dim
    cols = []
    for j in range(d):
        col = {}
        for hi in range(d):
            v = dict(h.algebra.product(j, hi))
            axpy(v, -h.eps(hi), {j: F.one})
            for r, c in v.items():
                col[hi * d + r] = c
        cols.append(col)
    stacked = SparseMap(h.space, BasedSpace(range(d * d)), cols, F)
    _, kernel = rank_and_kernel(stacked)
    return kernel


def find_right_integral(h):
    """A right integral t with eps(t) = 1, or None if none exists."""
    for k in right_integrals(h):
        e = h.eps_elem(k.entries)
        if e:
            return SparseVector(h.space, {i: c / e for i, c in k.entries.items()})
    return None


def center_dimension(a):
    """dim of the center, as the kernel of x |-> (x e_j - e_j x)_j."""
    F = a.field
    d = a.dim
    cols = []
    for i in range(d):
        col = {}
        for j in range(d):
            v = dict(a.product(i, j))
            axpy(v, -1, a.product(j, i))
            for r, c in v.items():
                col[j * d + r] = c
        cols.append(col)
    stacked = SparseMap(a.space, BasedSpace(range(d * d)), cols, F)
    _, kernel = rank_and_kernel(stacked)
    return len(kernel)
