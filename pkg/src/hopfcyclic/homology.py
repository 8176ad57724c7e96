"""
Hochschild and cyclic homology, Hopf-module homology H_*(H, M), the
integral homotopy for semisimple H, and the pages E^0, E^1, E^2 of the
spectral sequence of the filtration by A-degree on C(H, C(A # H)).

Grading of the pages: E^r_{p,q} has p = A-degree (the cyclic direction) and
q = Hopf degree, so E^1_{p,q} = H_q(H, C_p) with C_p = H (x) A^(p+1).  On
the cylinder this is the level (q, p).
"""

from hopfcyclic.constructions import (
    CoinvariantModule, Transport, adjoint_action, cyclic_module_of_algebra,
)
from hopfcyclic.cyclic import (
    ParacyclicModule, b_operator, factor_dims, is_cyclic_at, map_on_basis,
    normalized_complex, parachain,
)
from hopfcyclic.hopf import (
    MissingAntipodeInverse, crossed_product, find_right_integral, op_cop,
)
from hopfcyclic.linalg import (
    ZERO_SPACE, LinalgError, Quotient, SparseMap,
    axpy, block_map, direct_sum, homology, indexer_for, rank, solve,
    tensor_space,
)
from hopfcyclic.report import Report, check_maps_equal, check_zero


class NotCyclicError(ValueError):
    """Cyclic homology requested for a module with t^(n+1) != id."""


class NotSemisimpleError(ValueError):
    """No right integral t with eps(t) = 1."""


class ChainComplex:
    """Spaces C_n (n >= 0) and boundaries d_n : C_n -> C_{n-1}, cached."""

    def __init__(self, space, d, field, name=""):
        self._space, self._d = space, d
        self.field = field
        self.name = name
        self._cache = {}

    def space(self, n):
        if n < 0:
            return ZERO_SPACE
        key = ("C", n)
        if key not in self._cache:
            self._cache[key] = self._space(n)
        return self._cache[key]

    def d(self, n):
        if n <= 0:
            return SparseMap.zero(self.space(n), ZERO_SPACE, self.field)
        key = ("d", n)
        if key not in self._cache:
            self._cache[key] = self._d(n)
        return self._cache[key]

    def homology(self, n):
        return homology(self.d(n + 1), self.d(n))

    def dims(self, n_max):
        return [self.homology(n).dim for n in range(n_max + 1)]

    def check_squares(self, n_max):
        rep = Report("d^2 = 0 on %s" % self.name)
        for n in range(2, n_max + 2):
            check_zero(rep, "d d @%d" % n, self.d(n - 1) @ self.d(n))
        return rep

    def __repr__(self):
        return "ChainComplex(%s)" % self.name


def b_complex(m, normalized=True):
    """The Hochschild complex (C(m), b) of a paracyclic module."""
    pc = normalized_complex(m) if normalized else parachain(m)
    return ChainComplex(pc.space, pc.b, m.field, "b-complex of %s" % m.name)


def hochschild(m, n_max, normalized=True):
    """dim HH_n for n <= n_max."""
    m.level(n_max + 1)      # trips the size guard before any work is done
    return b_complex(m, normalized).dims(n_max)


# ----------------------------------------------------------------------------
# cyclic homology


def require_cyclic(m, n_max):
    for n in range(n_max + 1):
        if not is_cyclic_at(m, n):
            raise NotCyclicError("t^(n+1) != id at level %d of %s" % (n, m.name))


def connes_bicomplex(m, normalized=True, check=True, n_check=None):
    """Total complex of the (b, B) bicomplex truncated to columns k >= 0:
    Tot_n = sum_k C_{n-2k}, differential b + B (B from column k to k-1)."""
    if check and n_check is not None:
        require_cyclic(m, n_check)
    pc = normalized_complex(m) if normalized else parachain(m)
    F = m.field

    def keys(n):
        return [k for k in range(n // 2 + 1)]

    def pieces(n):
        return [pc.space(n - 2 * k) for k in keys(n)]

    def space(n):
        return direct_sum(keys(n), pieces(n), "Tot%d" % n)[0]

    def d(n):
        src, tgt = keys(n), keys(n - 1)
        blocks = {}
        for k in src:
            deg = n - 2 * k
            if deg >= 1 and k in tgt:
                blocks[(k, k)] = pc.b(deg)
            if k >= 1:
                blocks[(k - 1, k)] = pc.B(deg)
        return block_map(src, pieces(n), tgt, pieces(n - 1), blocks, F,
                         source=space(n), target=space(n - 1))

    cx = ChainComplex(space, d, F, "Connes bicomplex of %s" % m.name)
    cx.parachain = pc
    return cx


def cyclic_homology(m, n_max, normalized=True):
    """dim HC_n for n <= n_max from the (b, B) bicomplex.  Refuses when the
    module is not cyclic at the levels involved."""
    m.level(n_max + 1)
    require_cyclic(m, n_max + 1)
    return connes_bicomplex(m, normalized, check=False).dims(n_max)


def connes_lambda(m, n_max):
    """HC via Connes' complex C_n / (1 - lambda), lambda = (-1)^n t.
    Valid in characteristic 0 only."""
    if m.field.characteristic != 0:
        raise ValueError("the lambda-complex computes HC only in characteristic 0")
    require_cyclic(m, n_max + 1)
    F = m.field
    quots = {}

    def quotient(n):
        if n not in quots:
            t = m.cyclic(n)
            sign = -1 if n % 2 else 1
            gens = []
            for j in range(m.level(n).dim):
                v = {j: F.one}
                axpy(v, -sign, t.cols[j])
                if v:
                    gens.append(v)
            quots[n] = Quotient(m.level(n), gens, F, "C%d/(1-lambda)" % n)
        return quots[n]

    from hopfcyclic.linalg import induced_map

    def space(n):
        return quotient(n).quotient_space

    def d(n):
        return induced_map(b_operator(m, n), quotient(n), quotient(n - 1))

    return ChainComplex(space, d, F, "lambda-complex of %s" % m.name).dims(n_max)


# ----------------------------------------------------------------------------
# Hopf-module homology


def _codec(M):
    dims = factor_dims(M)
    return len(dims), indexer_for(*dims)


def hopf_complex(h, action, name="M"):
    """C_p(H, M) = H^(x)p (x) M with

    delta(g_1..g_p, m) = eps(g_1)(g_2..m) + sum_{0<i<p} (-1)^i (..g_i g_{i+1}..)
                         + (-1)^p (g_1..g_{p-1}, g_p.m).

    ``action`` is a SparseMap H (x) M -> M.
    """
    M = action.target
    F = h.field
    k, midx = _codec(M)
    dM = M.dim

    def space(p):
        return tensor_space(*([h.space] * p + [M]))

    def d(p):
        def fn(x):
            gs, mt = x[:p], x[p:]
            out = {}
            e = h.eps(gs[0])
            if e:
                axpy(out, e, {gs[1:] + mt: 1})
            for i in range(1, p):
                sign = -1 if i % 2 else 1
                for v, c in h.algebra.product(gs[i - 1], gs[i]).items():
                    axpy(out, sign * c, {gs[:i - 1] + (v,) + gs[i + 1:] + mt: 1})
            sign = -1 if p % 2 else 1
            col = action.cols[gs[p - 1] * dM + midx.encode(mt)]
            for j, c in col.items():
                axpy(out, sign * c, {gs[:p - 1] + midx.decode(j): 1})
            return out
        return map_on_basis(space(p), space(p - 1), fn, F)

    return ChainComplex(space, d, F, "C(H, %s)" % name)


def hopf_homology(h, action, p_max, name="M"):
    return hopf_complex(h, action, name).dims(p_max)


def check_module(h, action):
    """Module law (gh).m = g.(h.m) and 1.m = m."""
    rep = Report("module law")
    M = action.target
    dM = M.dim
    for g in range(h.dim):
        for hh in range(h.dim):
            for j in range(dM):
                lhs = {}
                for v, c in h.algebra.product(g, hh).items():
                    axpy(lhs, c, action.cols[v * dM + j])
                rhs = {}
                for i, c in action.cols[hh * dM + j].items():
                    axpy(rhs, c, action.cols[g * dM + i])
                if lhs != rhs:
                    rep.add("(gh).m = g.(h.m)", False,
                            "g=%s h=%s m=%s" % (h.labels[g], h.labels[hh], M.labels[j]))
                    return rep
    rep.add("(gh).m = g.(h.m)", True)
    unit = h.unit_dict()
    ok = True
    for j in range(dM):
        v = {}
        for u, c in unit.items():
            axpy(v, c, action.cols[u * dM + j])
        if v != {j: h.field.one}:
            ok = False
            break
    rep.add("1.m = m", ok, "m=%s" % (M.labels[j] if not ok else ""))
    return rep


def integral_homotopy(h, action, t, p):
    """h_p : C_p -> C_{p+1}, x |-> t (x) x."""
    M = action.target
    src = tensor_space(*([h.space] * p + [M]))
    tgt = tensor_space(*([h.space] * (p + 1) + [M]))
    k, midx = _codec(M)
    F = h.field
    items = sorted(t.entries.items()) if hasattr(t, "entries") else sorted(t.items())

    def fn(x):
        return {(i,) + x: c for i, c in items}
    return map_on_basis(src, tgt, fn, F)


def semisimple_homotopy(h, action, p_max, t=None):
    """With a right integral t, eps(t) = 1: delta h + h delta = id on C_p for
    p >= 1, and delta h = id - (t.) on C_0."""
    if t is None:
        t = find_right_integral(h)
    if t is None:
        raise NotSemisimpleError("no right integral with eps(t) = 1")
    cx = hopf_complex(h, action)
    F = h.field
    rep = Report("integral homotopy")
    tv = t.entries if hasattr(t, "entries") else t
    M = action.target
    dM = M.dim
    for p in range(p_max + 1):
        hp = integral_homotopy(h, action, tv, p)
        lhs = cx.d(p + 1) @ hp
        if p >= 1:
            lhs = lhs + integral_homotopy(h, action, tv, p - 1) @ cx.d(p)
            check_maps_equal(rep, "delta h + h delta = id @%d" % p, lhs,
                             SparseMap.identity(cx.space(p), F))
        else:
            cols = []
            for j in range(dM):
                v = {j: F.one}
                for i, c in tv.items():
                    axpy(v, -c, action.cols[i * dM + j])
                cols.append(v)
            rhs = SparseMap(cx.space(0), cx.space(0), cols, F)
            check_maps_equal(rep, "delta h = id - t. @0", lhs, rhs)
    return rep


# ----------------------------------------------------------------------------
# spectral pages


class SpectralPages:
    """Pages of the spectral sequence of C(H, C(A # H)) filtered by A-degree.

    Attributes after construction (p = A-degree, q = Hopf degree):
      e0[p][q], e1[p][q], e2[p][q]     dimensions
      d1[(p, q)]                        SparseMap E^1_{p,q} -> E^1_{p-1,q}
      d2[(p, q)]                        SparseMap E^2_{p,q} -> E^2_{p-2,q+1}
      total_hh[n]                       dim H_n of the total complex (p+q <= cap)
    """

    def __init__(self, m, p_max, q_max, closed_forms=True):
        self.m = m
        self.p_max, self.q_max = p_max, q_max
        self.field = m.field
        self.transport = Transport(m)
        self.closed = closed_forms
        self._vert = {}
        self._e1 = {}
        self._hb = {}
        self._compute()

    # complexes -----------------------------------------------------------

    def level(self, p, q):
        return self.transport.level(q, p)

    def vertical(self, p):
        """Hopf complex C_*(H, C_p)."""
        if p not in self._vert:
            self._vert[p] = hopf_complex(self.m.hopf, adjoint_action(self.m, p, direct=False),
                                         "C_%d" % p)
        return self._vert[p]

    def delta(self, p, q):
        return self.vertical(p).d(q)

    def horizontal(self, p, q):
        """(-1)^q bfrak : C_q(H, C_p) -> C_q(H, C_{p-1})."""
        key = (p, q)
        if key not in self._hb:
            tr = self.transport
            op = None
            for i in range(p + 1):
                di = tr.closed("d", i, q, p) if self.closed else tr.conjugated("d", i, q, p)
                op = di if op is None else (op + di if i % 2 == 0 else op - di)
            self._hb[key] = op if q % 2 == 0 else -op
        return self._hb[key]

    def e1_subquotient(self, p, q):
        key = (p, q)
        if key not in self._e1:
            self._e1[key] = self.vertical(p).homology(q)
        return self._e1[key]

    # pages ---------------------------------------------------------------

    def _d1(self, p, q):
        """E^1_{p,q} -> E^1_{p-1,q} induced by the horizontal boundary."""
        src = self.e1_subquotient(p, q)
        if p == 0:
            return SparseMap.zero(src.quotient_space, ZERO_SPACE, self.field)
        tgt = self.e1_subquotient(p - 1, q)
        hb = self.horizontal(p, q)
        cols = [tgt.coords(hb.apply(z)) for z in src.reps]
        return SparseMap(src.quotient_space, tgt.quotient_space, cols, self.field)

    def _compute(self):
        P, Q = self.p_max, self.q_max
        self.e0 = [[self.level(p, q).dim for q in range(Q + 1)] for p in range(P + 1)]
        self.e1 = [[self.e1_subquotient(p, q).dim for q in range(Q + 1)]
                   for p in range(P + 1)]
        self.d1 = {}
        for p in range(P + 2):
            for q in range(Q + 1):
                self.d1[(p, q)] = self._d1(p, q)
        self._e2 = {}
        for p in range(P + 1):
            for q in range(Q + 1):
                self._e2[(p, q)] = homology(self.d1[(p + 1, q)], self.d1[(p, q)])
        self.e2 = [[self._e2[(p, q)].dim for q in range(Q + 1)] for p in range(P + 1)]
        self.d2 = {}
        for p in range(2, P + 1):
            for q in range(Q):
                self.d2[(p, q)] = self._d2(p, q)
        n_cap = min(P, Q)
        self.total_hh = [self.total_complex().homology(n).dim for n in range(n_cap + 1)]

    def _lift(self, p, q, e1_vec):
        sq = self.e1_subquotient(p, q)
        z = {}
        for k, c in e1_vec.items():
            axpy(z, c, sq.reps[k])
        return z

    def _d2(self, p, q):
        """d^2 [z] = [-hb(w)] where delta w = hb(z), w in C_{q+1}(H, C_{p-1})."""
        src = self._e2[(p, q)]
        tgt = self._e2[(p - 2, q + 1)]
        cols = []
        for rep in src.reps:
            z = self._lift(p, q, rep)
            rhs = self.horizontal(p, q).apply(z)
            w = solve(self.delta(p - 1, q + 1), rhs)
            if w is None:
                raise LinalgError("d^1-cycle whose horizontal boundary is not exact")
            # D(z - w) = hb(z) - delta(w) - hb(w) = -hb(w)
            y = {k: -c for k, c in self.horizontal(p - 1, q + 1).apply(w).items()}
            e1c = self.e1_subquotient(p - 2, q + 1).coords(y)
            cols.append(tgt.coords(e1c))
        return SparseMap(src.quotient_space, tgt.quotient_space, cols, self.field)

    def total_complex(self):
        """Tot_n = sum_{p+q=n} C_q(H, C_p) with D = delta + (-1)^q bfrak."""
        F = self.field

        def keys(n):
            return [(p, n - p) for p in range(n + 1)]

        def pieces(n):
            return [self.level(*k) for k in keys(n)]

        def space(n):
            return direct_sum(keys(n), pieces(n), "Tot%d" % n)[0]

        def d(n):
            blocks = {}
            for p, q in keys(n):
                if q >= 1:
                    blocks[((p, q - 1), (p, q))] = self.delta(p, q)
                if p >= 1:
                    blocks[((p - 1, q), (p, q))] = self.horizontal(p, q)
            return block_map(keys(n), pieces(n), keys(n - 1), pieces(n - 1), blocks, F,
                             source=space(n), target=space(n - 1))

        return ChainComplex(space, d, F, "Tot C(H, C(A#H))")

    def e2_totals(self):
        n_cap = min(self.p_max, self.q_max)
        return [sum(self.e2[p][n - p] for p in range(n + 1)) for n in range(n_cap + 1)]

    def row_module(self, q):
        """The paracyclic module p |-> E^1_{p,q} = H_q(H, C_p) with the operators
        induced by the transported horizontal operators."""
        tr = self.transport
        F = self.field

        def induced(op, src, tgt):
            cols = [tgt.coords(op.apply(z)) for z in src.reps]
            return SparseMap(src.quotient_space, tgt.quotient_space, cols, F)

        def op(name, i, p):
            return tr.closed(name, i, q, p) if self.closed else tr.conjugated(name, i, q, p)

        return ParacyclicModule(
            lambda p: self.e1_subquotient(p, q).quotient_space,
            lambda i, p: induced(op("d", i, p), self.e1_subquotient(p, q),
                                 self.e1_subquotient(p - 1, q)),
            lambda i, p: induced(op("s", i, p), self.e1_subquotient(p, q),
                                 self.e1_subquotient(p + 1, q)),
            lambda p: induced(op("t", 0, p), self.e1_subquotient(p, q),
                              self.e1_subquotient(p, q)),
            F, "H_%d(H, C)" % q)

    def cyclic_e2(self):
        """E^2 for the cyclic specialization: HC_p of the row modules
        H_q(H, C_*) (None where a row is not cyclic at the needed levels)."""
        out = []
        for q in range(self.q_max + 1):
            row = self.row_module(q)
            try:
                out.append(cyclic_homology(row, self.p_max))
            except NotCyclicError:
                out.append(None)
        return [[None if out[q] is None else out[q][p] for q in range(self.q_max + 1)]
                for p in range(self.p_max + 1)]

    def to_dict(self):
        return {
            "E0": self.e0, "E1": self.e1, "E2": self.e2,
            "d1_rank": {"%d,%d" % k: rank(v) for k, v in sorted(self.d1.items())
                        if k[0] <= self.p_max},
            "d2_rank": {"%d,%d" % k: rank(v) for k, v in sorted(self.d2.items())},
            "E2_totals": self.e2_totals(),
            "total_homology": self.total_hh,
        }


def spectral_pages(m, p_max, q_max, closed_forms=True):
    return SpectralPages(m, p_max, q_max, closed_forms)


# ----------------------------------------------------------------------------
# crossed product versus coinvariants


def crossed_vs_coinvariant(m, n_max, theory="hc"):
    """Compare HC (or HH) of C(A >< H) with the coinvariant module C^H(A)
    in the S^-1 adjoint form, and of C(A^op >< H^cop) with the adjoint form.  Needs a
    normalized right integral and S^-1."""
    rep = Report("crossed product vs coinvariants (%s) %s" % (theory, m.name))
    if find_right_integral(m.hopf) is None:
        raise NotSemisimpleError("no right integral with eps(t) = 1")
    if not m.hopf.has_antipode_inverse:
        raise MissingAntipodeInverse("the comparison uses S^-1")
    fn = cyclic_homology if theory == "hc" else hochschild
    rows = {}
    pairs = [
        ("A><H", cyclic_module_of_algebra(crossed_product(m, verify=False)),
         "C^H s_inv_form", CoinvariantModule(m, "s_inv_form").module),
        ("A^op><H^cop", cyclic_module_of_algebra(crossed_product(op_cop(m), verify=False)),
         "C^H cop_form", CoinvariantModule(m, "cop_form").module),
    ]
    for lname, left, rname, right in pairs:
        a, b = fn(left, n_max), fn(right, n_max)
        rows[lname] = a
        rows[rname] = b
        for n in range(n_max + 1):
            rep.add("%s %s_%d = %s" % (lname, theory.upper(), n, rname), a[n] == b[n],
                    "%d != %d" % (a[n], b[n]))
    rep.table = rows
    return rep
