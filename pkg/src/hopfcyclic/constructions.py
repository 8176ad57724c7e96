"""
Concrete (para)cyclic objects built from a module algebra A over a Hopf
algebra H:

* C(A), the cyclic module of an algebra;
* the cylinder A#H with levels H^(p+1) (x) A^(q+1), generic in S, and its
  variant A^op # H^cop (needs S^-1);
* the maps phi, psi between C(A^op >< H^cop) and the diagonal;
* the coinvariant cyclic modules on H (x) A^(n+1);
* the transport beta, gamma to C(H, C(...)) with its transported operators;
* chi : C(A^H) -> coinvariant module.

Slot layout.  A basis vector of level (p, q) is an index tuple
(g_0, ..., g_p, s_0, ..., s_q).  The A-part is written either in the
"written" order s_k = a_{q-k}, matching tuples printed as (a_q, ..., a_0),
or in "direct" order s_k = a_k.  The generic cylinder uses the written
order, the A^op # H^cop variant the direct one.  All formulas are coded on
the list a = [a_0, ..., a_q] and the layout only affects storage.
"""

from hopfcyclic.cyclic import (
    CylindricalModule, ParacyclicModule, accumulate, expand, map_on_basis,
    verify_paracyclic,
)
from hopfcyclic.hopf import (
    MissingAntipodeInverse, crossed_product, invariant_subalgebra, op_cop,
    opposite_algebra,
)
from hopfcyclic.linalg import (
    Quotient, SparseMap, axpy, descends, induced_map, tensor_space,
)
from hopfcyclic.report import Report, check_maps_equal


def _unit(x):
    return {x: 1}


# ----------------------------------------------------------------------------
# C(A)


def cyclic_module_of_algebra(a, name=None):
    """C_n(A) = A^(n+1) with d_i(a_0..a_n) = (.., a_i a_{i+1}, ..),
    d_n = (a_n a_0, a_1, ..), s_i inserting 1 after a_i and
    t(a_0..a_n) = (a_n, a_0, .., a_{n-1})."""
    F = a.field
    A = a.space
    unit = a.unit_dict()

    def level(n):
        return tensor_space(*([A] * (n + 1)))

    def face(i, n):
        def fn(x):
            if i < n:
                parts = [_unit(v) for v in x[:i]] + [a.product(x[i], x[i + 1])] + \
                        [_unit(v) for v in x[i + 2:]]
            else:
                parts = [a.product(x[n], x[0])] + [_unit(v) for v in x[1:n]]
            return expand(parts)
        return map_on_basis(level(n), level(n - 1), fn, F)

    def degeneracy(i, n):
        def fn(x):
            return expand([_unit(v) for v in x[:i + 1]] + [unit] +
                          [_unit(v) for v in x[i + 1:]])
        return map_on_basis(level(n), level(n + 1), fn, F)

    def cyclic(n):
        return map_on_basis(level(n), level(n),
                            lambda x: {(x[-1],) + x[:-1]: 1}, F)

    return ParacyclicModule(level, face, degeneracy, cyclic, F, name or "C(%s)" % a.name)


# ----------------------------------------------------------------------------
# the cylinder A # H


class _Layout:
    def __init__(self, direct):
        self.direct = direct

    def read(self, slots):
        """Storage slots -> [a_0, ..., a_q]."""
        return list(slots) if self.direct else list(reversed(slots))

    def store(self, parts):
        """[part for a_0, ..., part for a_q] -> storage order."""
        return list(parts) if self.direct else list(reversed(parts))


class _CylinderOps:
    """Element-level operators of A # H for module algebra data mm.

    mm is used as is; the A^op # H^cop variant passes op_cop(m).
    """

    def __init__(self, mm, direct):
        self.m = mm
        self.h = mm.hopf
        self.a = mm.algebra
        self.F = mm.field
        self.lay = _Layout(direct)
        self._S_cache = {}

    def level(self, p, q):
        return tensor_space(*([self.h.space] * (p + 1) + [self.a.space] * (q + 1)))

    def S_of_product(self, seq):
        seq = tuple(seq)
        hit = self._S_cache.get(seq)
        if hit is None:
            hit = self.h.S(self.h.product_seq(seq))
            self._S_cache[seq] = hit
        return hit

    def _coproducts(self, gs):
        """All terms of Delta(g_0) (x) ... (x) Delta(g_p): {((x0,y0),...): c}."""
        return expand([self.h.coproduct(g) for g in gs])

    # horizontal ---------------------------------------------------------

    def cyclic(self, p, q):
        lay, m = self.lay, self.m

        def fn(x):
            gs, a = x[:p + 1], lay.read(x[p + 1:])
            out = {}
            for terms, c in self._coproducts(gs).items():
                new_a0 = m.act_elem(self.S_of_product([t[1] for t in terms]), _unit(a[q]))
                parts = [_unit(t[0]) for t in terms] + \
                    lay.store([new_a0] + [_unit(v) for v in a[:q]])
                accumulate(out, c, parts)
            return out
        L = self.level(p, q)
        return map_on_basis(L, L, fn, self.F)

    def face(self, i, p, q):
        lay, m, alg = self.lay, self.m, self.a

        def fn(x):
            gs, a = x[:p + 1], lay.read(x[p + 1:])
            if i < q:
                new = [_unit(v) for v in a[:i]] + [alg.product(a[i + 1], a[i])] + \
                      [_unit(v) for v in a[i + 2:]]
                return expand([_unit(g) for g in gs] + lay.store(new))
            out = {}
            for terms, c in self._coproducts(gs).items():
                sa = m.act_elem(self.S_of_product([t[1] for t in terms]), _unit(a[q]))
                new0 = alg.mul_elems(_unit(a[0]), sa)
                parts = [_unit(t[0]) for t in terms] + \
                    lay.store([new0] + [_unit(v) for v in a[1:q]])
                accumulate(out, c, parts)
            return out
        return map_on_basis(self.level(p, q), self.level(p, q - 1), fn, self.F)

    def degeneracy(self, i, p, q):
        lay, unit = self.lay, self.a.unit_dict()

        def fn(x):
            gs, a = x[:p + 1], lay.read(x[p + 1:])
            new = [_unit(v) for v in a[:i + 1]] + [unit] + [_unit(v) for v in a[i + 1:]]
            return expand([_unit(g) for g in gs] + lay.store(new))
        return map_on_basis(self.level(p, q), self.level(p, q + 1), fn, self.F)

    # vertical -----------------------------------------------------------

    def _spread(self, g, a, q):
        """Delta^(q+1)(g) = c_0 (x) ... (x) c_{q+1}: yields (c_0, [c_{q+1-j}.a_j]_j, coeff)."""
        m = self.m
        for cs, c in self.h.coproduct_n(g, q + 1).items():
            acted = [m.act(cs[q + 1 - j], a[j]) for j in range(q + 1)]
            yield cs[0], acted, c

    def vcyclic(self, p, q):
        lay = self.lay

        def fn(x):
            gs, a = x[:p + 1], lay.read(x[p + 1:])
            out = {}
            for c0, acted, c in self._spread(gs[p], a, q):
                parts = [_unit(c0)] + [_unit(g) for g in gs[:p]] + lay.store(acted)
                accumulate(out, c, parts)
            return out
        L = self.level(p, q)
        return map_on_basis(L, L, fn, self.F)

    def vface(self, i, p, q):
        lay, h = self.lay, self.h

        def fn(x):
            gs, slots = x[:p + 1], x[p + 1:]
            if i < p:
                parts = [_unit(g) for g in gs[:i]] + [h.algebra.product(gs[i], gs[i + 1])] + \
                        [_unit(g) for g in gs[i + 2:]] + [_unit(s) for s in slots]
                return expand(parts)
            a = lay.read(slots)
            out = {}
            for c0, acted, c in self._spread(gs[p], a, q):
                parts = [h.algebra.product(c0, gs[0])] + [_unit(g) for g in gs[1:p]] + \
                    lay.store(acted)
                accumulate(out, c, parts)
            return out
        return map_on_basis(self.level(p, q), self.level(p - 1, q), fn, self.F)

    def vdegeneracy(self, i, p, q):
        unit = self.h.unit_dict()

        def fn(x):
            gs, slots = x[:p + 1], x[p + 1:]
            return expand([_unit(g) for g in gs[:i + 1]] + [unit] +
                          [_unit(g) for g in gs[i + 1:]] + [_unit(s) for s in slots])
        return map_on_basis(self.level(p, q), self.level(p + 1, q), fn, self.F)


def natural_cylinder(m, variant="generic"):
    """The cylindrical module A # H.

    variant="generic": the operators on (g_0..g_p | a_q..a_0), any Hopf H.
    variant="op_cop":  A^op # H^cop in direct indexing (g_0..g_p | a_0..a_q);
                       needs S^-1.
    """
    if variant == "generic":
        ops = _CylinderOps(m, direct=False)
        name = "%s#%s" % (m.algebra.name, m.hopf.name)
    elif variant == "op_cop":
        if not m.hopf.has_antipode_inverse:
            raise MissingAntipodeInverse("A^op # H^cop needs an invertible antipode")
        ops = _CylinderOps(op_cop(m), direct=True)
        name = "%s^op#%s^cop" % (m.algebra.name, m.hopf.name)
    else:
        raise ValueError("unknown variant %r" % variant)
    c = CylindricalModule(ops.level, ops.face, ops.degeneracy, ops.cyclic,
                          ops.vface, ops.vdegeneracy, ops.vcyclic, m.field, name)
    c.ops = ops
    c.variant = variant
    c.data = m
    return c


def reversal_map(c, p, q):
    """R: reverse the A-slots at level (p, q) (written <-> direct layout)."""
    L = c.level(p, q)
    return map_on_basis(L, L, lambda x: {x[:p + 1] + tuple(reversed(x[p + 1:])): 1},
                        c.field)


def printed_op_cop_cyclic(m, p, q):
    """tau and tau-bar of A^op # H^cop written directly from their printed
    direct-indexing formulas, on (g_0..g_p | a_0..a_q):

      tau    = (g_0^(1), .., g_p^(1) | S^-1(g_0^(0) .. g_p^(0)).a_q, a_0, .., a_{q-1})
      taubar = (g_p^(q+1), g_0, .., g_{p-1} | g_p^(0).a_0, .., g_p^(q).a_q)
    """
    h, F = m.hopf, m.field
    L = tensor_space(*([h.space] * (p + 1) + [m.algebra.space] * (q + 1)))

    def tau(x):
        gs, a = x[:p + 1], x[p + 1:]
        out = {}
        for terms, c in expand([h.coproduct(g) for g in gs]).items():
            s = h.S_inv(h.product_seq([t[0] for t in terms]))
            parts = [_unit(t[1]) for t in terms] + [m.act_elem(s, _unit(a[q]))] + \
                [_unit(v) for v in a[:q]]
            accumulate(out, c, parts)
        return out

    def taubar(x):
        gs, a = x[:p + 1], x[p + 1:]
        out = {}
        for cs, c in h.coproduct_n(gs[p], q + 1).items():
            parts = [_unit(cs[q + 1])] + [_unit(g) for g in gs[:p]] + \
                [m.act(cs[j], a[j]) for j in range(q + 1)]
            accumulate(out, c, parts)
        return out

    return map_on_basis(L, L, tau, F), map_on_basis(L, L, taubar, F)


# ----------------------------------------------------------------------------
# phi and psi


def crossed_cyclic_module(m):
    """C(A^op >< H^cop), the source of phi."""
    return cyclic_module_of_algebra(crossed_product(op_cop(m)))


def phi_map(m, n, reading="statement"):
    """phi : C_n(A^op >< H^cop) -> (A # H)(n, n), generic in S.

    phi(a_0 g_0, .., a_n g_n) = (g_0^(0), .., g_n^(0) |
        S(g_n^(n+1)).a_n, S(g_{n-1}^(n) g_n^(n)).a_{n-1}, .., S(g_0^(1) .. g_n^(1)).a_0)

    reading="proof" expands g_n with one more leg and feeds a_n with
    S(g_n^(n+2)), contracting the unused leg g_n^(n+1) with the counit.
    """
    h, F = m.hopf, m.field
    B = crossed_product(op_cop(m), verify=False)
    dh = h.dim
    src = tensor_space(*([B.space] * (n + 1)))
    tgt = tensor_space(*([h.space] * (n + 1) + [m.algebra.space] * (n + 1)))
    cache = {}

    def S_prod(seq):
        seq = tuple(seq)
        if seq not in cache:
            cache[seq] = h.S(h.product_seq(seq))
        return cache[seq]

    def fn(x):
        pairs = [divmod(v, dh) for v in x]          # (a_i, g_i)
        legs = []
        for i, (_, g) in enumerate(pairs):
            k = i + 1
            if reading == "proof" and i == n:
                k = n + 2
            legs.append(h.coproduct_n(g, k))
        out = {}
        for comps, c in expand(legs).items():
            if reading == "proof":
                last = comps[n]
                c = c * h.eps(last[n + 1])
                if not c:
                    continue
                comps = comps[:n] + (last[:n + 1] + (last[n + 2],),)
            parts = [_unit(comps[i][0]) for i in range(n + 1)]
            written = []
            for j in range(n + 1):
                s = S_prod([comps[i][j + 1] for i in range(j, n + 1)])
                written.append(m.act_elem(s, _unit(pairs[j][0])))
            parts += list(reversed(written))
            accumulate(out, c, parts)
        return out

    return map_on_basis(src, tgt, fn, F)


def psi_map(m, n):
    """psi : (A # H)(n, n) -> C_n(A^op >< H^cop),

    psi(g_0..g_n | a_n..a_0) = ((g_0^(1) g_1^(2) .. g_n^(n+1)).a_0 (x) g_0^(0), ..,
                               g_n^(1).a_n (x) g_n^(0)).
    """
    h, F = m.hopf, m.field
    B = crossed_product(op_cop(m), verify=False)
    dh = h.dim
    src = tensor_space(*([h.space] * (n + 1) + [m.algebra.space] * (n + 1)))
    tgt = tensor_space(*([B.space] * (n + 1)))

    def fn(x):
        gs, a = x[:n + 1], list(reversed(x[n + 1:]))
        out = {}
        for comps, c in expand([h.coproduct_n(g, i + 1) for i, g in enumerate(gs)]).items():
            parts = []
            for j in range(n + 1):
                prod = h.product_seq([comps[i][i + 1 - j] for i in range(j, n + 1)])
                acted = m.act_elem(prod, _unit(a[j]))
                parts.append({ai * dh + comps[j][0]: v for ai, v in acted.items()})
            accumulate(out, c, parts)
        return out

    return map_on_basis(src, tgt, fn, F)


def phi_printed_s_inv(m, n):
    """The printed S-invertible phi : C_n(A >< H) -> (A^op # H^cop)(n, n):

    (g_0^(1), g_1^(2), .., g_n^(n+1) | S^-1(g_0^(0) g_1^(1) .. g_n^(n)).a_0, ..,
     S^-1(g_n^(0)).a_n)
    """
    h, F = m.hopf, m.field
    B = crossed_product(m, verify=False)
    dh = h.dim
    src = tensor_space(*([B.space] * (n + 1)))
    tgt = tensor_space(*([h.space] * (n + 1) + [m.algebra.space] * (n + 1)))

    def fn(x):
        pairs = [divmod(v, dh) for v in x]
        out = {}
        for comps, c in expand([h.coproduct_n(g, i + 1)
                                for i, (_, g) in enumerate(pairs)]).items():
            parts = [_unit(comps[i][i + 1]) for i in range(n + 1)]
            for j in range(n + 1):
                s = h.S_inv(h.product_seq([comps[i][i - j] for i in range(j, n + 1)]))
                parts.append(m.act_elem(s, _unit(pairs[j][0])))
            accumulate(out, c, parts)
        return out

    return map_on_basis(src, tgt, fn, F)


def psi_printed_s_inv(m, n):
    """The printed S-invertible psi : (A^op # H^cop)(n, n) -> C_n(A >< H):

    ((g_0^(0) .. g_n^(0)).a_0 (x) g_0^(1), (g_1^(1) .. g_n^(1)).a_1 (x) g_1^(2), ..,
     g_n^(n).a_n (x) g_n^(n+1))
    """
    h, F = m.hopf, m.field
    B = crossed_product(m, verify=False)
    dh = h.dim
    src = tensor_space(*([h.space] * (n + 1) + [m.algebra.space] * (n + 1)))
    tgt = tensor_space(*([B.space] * (n + 1)))

    def fn(x):
        gs, a = x[:n + 1], x[n + 1:]
        out = {}
        for comps, c in expand([h.coproduct_n(g, i + 1) for i, g in enumerate(gs)]).items():
            parts = []
            for j in range(n + 1):
                prod = h.product_seq([comps[i][j] for i in range(j, n + 1)])
                acted = m.act_elem(prod, _unit(a[j]))
                parts.append({ai * dh + comps[j][j + 1]: v for ai, v in acted.items()})
            accumulate(out, c, parts)
        return out

    return map_on_basis(src, tgt, fn, F)


def verify_phi_psi(m, n_max, cylinder=None, reading="statement"):
    """phi psi = psi phi = id and phi commutes with d_i, s_i, t, for n <= n_max."""
    rep = Report("phi/psi (%s reading) %s" % (reading, m.name))
    cyl = cylinder or natural_cylinder(m)
    diag = _diagonal_unchecked(cyl)
    C = crossed_cyclic_module(m)
    phis = {n: phi_map(m, n, reading) for n in range(n_max + 1)}
    for n in range(n_max + 1):
        phi, psi = phis[n], psi_map(m, n)
        check_maps_equal(rep, "phi psi = id @%d" % n, phi @ psi, diag.identity(n))
        check_maps_equal(rep, "psi phi = id @%d" % n, psi @ phi, C.identity(n))
        check_maps_equal(rep, "phi t = t phi @%d" % n, phi @ C.cyclic(n), diag.cyclic(n) @ phi)
        if n >= 1:
            phi_lo = phis[n - 1]
            for i in range(n + 1):
                check_maps_equal(rep, "phi d%d = d%d phi @%d" % (i, i, n),
                                 phi_lo @ C.face(i, n), diag.face(i, n) @ phi)
        if n + 1 <= n_max:
            phi_hi = phis[n + 1]
            for i in range(n + 1):
                check_maps_equal(rep, "phi s%d = s%d phi @%d" % (i, i, n),
                                 phi_hi @ C.degeneracy(i, n), diag.degeneracy(i, n) @ phi)
    return rep


def verify_printed_s_inv(m, n_max):
    """The printed S-invertible phi, psi agree with the generic ones for
    (A^op, H^cop) followed (resp. preceded) by the slot reversal R."""
    rep = Report("S-invertible phi/psi %s" % m.name)
    if not m.hopf.has_antipode_inverse:
        rep.add("antipode inverse available", False, "S^-1 missing")
        return rep
    mop = op_cop(m)
    cyl = natural_cylinder(m, "op_cop")
    for n in range(n_max + 1):
        R = reversal_map(cyl, n, n)
        check_maps_equal(rep, "printed phi = R phi(op,cop) @%d" % n,
                         phi_printed_s_inv(m, n), R @ phi_map(mop, n))
        check_maps_equal(rep, "printed psi = psi(op,cop) R @%d" % n,
                         psi_printed_s_inv(m, n), psi_map(mop, n) @ R)
    return rep


def _diagonal_unchecked(c):
    from hopfcyclic.cyclic import diagonal
    return diagonal(c, require_verified=False)


# ----------------------------------------------------------------------------
# coinvariant cyclic modules


def adjoint_action(mm, n, direct):
    """h.(g | a_n..a_0) = (h^(1) g S(h^(0)) | h^(2).a_n, .., h^(n+2).a_0) on H (x) A^(n+1).

    Returns a SparseMap H (x) level -> level; the layout flag picks how the
    a's are stored.
    """
    h, F = mm.hopf, mm.field
    lay = _Layout(direct)
    L = tensor_space(h.space, *([mm.algebra.space] * (n + 1)))
    src = tensor_space(h.space, L)

    def fn(x):
        hh, g, a = x[0], x[1], lay.read(x[2:])
        out = {}
        for cs, c in h.coproduct_n(hh, n + 2).items():
            new_g = h.mul_elems(h.algebra.product(cs[1], g), h.S(_unit(cs[0])))
            acted = [mm.act(cs[n + 2 - j], a[j]) for j in range(n + 1)]
            accumulate(out, c, [new_g] + lay.store(acted))
        return out

    return map_on_basis(src, L, fn, F)


def adjoint_action_s_inv(m, n):
    """h.(g | a_0..a_n) = (h^(n+2) g S(h^(0)) | h^(1).a_0, .., h^(n+1).a_n)."""
    h, F = m.hopf, m.field
    L = tensor_space(h.space, *([m.algebra.space] * (n + 1)))
    src = tensor_space(h.space, L)

    def fn(x):
        hh, g, a = x[0], x[1], x[2:]
        out = {}
        for cs, c in h.coproduct_n(hh, n + 2).items():
            new_g = h.mul_elems(h.algebra.product(cs[n + 2], g), h.S(_unit(cs[0])))
            acted = [m.act(cs[j + 1], a[j]) for j in range(n + 1)]
            accumulate(out, c, [new_g] + acted)
        return out

    return map_on_basis(src, L, fn, F)


def action_span(action, hopf):
    """Generators h.x - eps(h) x over basis h and basis x."""
    L = action.target
    d = L.dim
    gens = []
    for hi in range(hopf.dim):
        e = hopf.eps(hi)
        for j in range(d):
            v = dict(action.cols[hi * d + j])
            if e:
                axpy(v, -e, {j: 1})
            if v:
                gens.append(v)
    return gens


class CoinvariantModule:
    """Quotients of H (x) A^(n+1) by the action span, with induced operators.

    form="cop_form": the first column of A # H, (g | a_n..a_0), the adjoint action,
                     operators t = (g^(0) | a_{n-1}, .., a_0, S(g^(1)).a_n) etc.
    form="s_inv_form": the first column of A^op # H^cop, (g | a_0..a_n),
                     the S^-1 adjoint action, t = (g^(1) | S^-1(g^(0)).a_n, a_0, ..); needs S^-1.
    """

    def __init__(self, m, form="cop_form"):
        self.m = m
        self.form = form
        self.field = m.field
        if form == "cop_form":
            self.cylinder = natural_cylinder(m, "generic")
        elif form == "s_inv_form":
            self.cylinder = natural_cylinder(m, "op_cop")
        else:
            raise ValueError("unknown coinvariant form %r" % form)
        self.base = self.cylinder.row(0)
        self._q = {}
        self.module = ParacyclicModule(
            lambda n: self.quotient(n).quotient_space,
            lambda i, n: induced_map(self.base.face(i, n), self.quotient(n),
                                     self.quotient(n - 1)),
            lambda i, n: induced_map(self.base.degeneracy(i, n), self.quotient(n),
                                     self.quotient(n + 1)),
            lambda n: induced_map(self.base.cyclic(n), self.quotient(n), self.quotient(n)),
            m.field, "C^H_%s(%s)" % (form, m.name))

    def action(self, n):
        if self.form == "cop_form":
            return adjoint_action(self.m, n, direct=False)
        return adjoint_action_s_inv(self.m, n)

    def span(self, n):
        return action_span(self.action(n), self.m.hopf)

    def quotient(self, n):
        q = self._q.get(n)
        if q is None:
            q = Quotient(self.base.level(n), self.span(n), self.field,
                         name="coinv%d" % n)
            self._q[n] = q
        return q

    def verify(self, n_max):
        """Descent of every operator and the cyclic identities on the quotient."""
        rep = Report("coinvariant %s %s" % (self.form, self.m.name))
        b = self.base
        for n in range(n_max + 1):
            ops = [("t", b.cyclic(n), n)]
            if n >= 1:
                ops += [("d%d" % i, b.face(i, n), n - 1) for i in range(n + 1)]
            if n + 1 <= n_max:
                ops += [("s%d" % i, b.degeneracy(i, n), n + 1) for i in range(n + 1)]
            for name, op, tgt in ops:
                bad = descends(op, self.quotient(n), self.quotient(tgt))
                rep.add("%s preserves the action span @%d" % (name, n), bad is None,
                        "span generator %s maps outside the span" % bad)
        rep.extend(verify_paracyclic(self.module, n_max, require_cyclic=True), "quotient: ")
        return rep


def coinvariant_module(m, form="cop_form"):
    if form == "s_inv_form" and not m.hopf.has_antipode_inverse:
        raise MissingAntipodeInverse("the S^-1 coinvariant form needs S^-1")
    return CoinvariantModule(m, form)


def coinvariant_spans_agree(m, n):
    """Compare span{h.x - eps(h)x} for the S^-1 adjoint action with the span
    for the adjoint action of (A^op, H^cop) on the same space (direct indexing).

    Returns (equal, dim of the first span, dim of the second).
    """
    from hopfcyclic.linalg import Echelon
    if not m.hopf.has_antipode_inverse:
        raise MissingAntipodeInverse("needs S^-1")
    mop = op_cop(m)
    s1 = action_span(adjoint_action_s_inv(m, n), m.hopf)
    s2 = action_span(adjoint_action(mop, n, direct=True), mop.hopf)
    e1, e2 = Echelon(m.field), Echelon(m.field)
    for v in s1:
        e1.add(v)
    for v in s2:
        e2.add(v)
    same = e1.rank == e2.rank and all(e1.contains(v) for v in e2.vectors())
    return same, e1.rank, e2.rank


# ----------------------------------------------------------------------------
# beta, gamma and the transported operators


class Transport:
    """beta : (A # H)(p, q) -> C_p(H, C_q) and its inverse gamma.

    Level (p, q) of the target is H^p (x) (H (x) A^(q+1)) stored as
    (g_1, .., g_p, g, a_q, .., a_0); it has the same basis tuples as the
    cylinder level, so both live on the same tensor space.
    """

    def __init__(self, m, cylinder=None):
        self.m = m
        self.h = m.hopf
        self.F = m.field
        self.cyl = cylinder or natural_cylinder(m, "generic")
        self._cache = {}

    def level(self, p, q):
        return self.cyl.level(p, q)

    def _cached(self, key, make):
        hit = self._cache.get(key)
        if hit is None:
            hit = make()
            self._cache[key] = hit
        return hit

    def beta(self, p, q):
        """(g_0..g_p | a) |-> (g_1^(1)..g_p^(1) | g_0 g_1^(0)..g_p^(0) | a)."""
        h = self.h

        def fn(x):
            gs, slots = x[:p + 1], x[p + 1:]
            out = {}
            for terms, c in expand([h.coproduct(g) for g in gs[1:]]).items():
                g = h.product_seq((gs[0],) + tuple(t[0] for t in terms))
                parts = [_unit(t[1]) for t in terms] + [g] + [_unit(s) for s in slots]
                accumulate(out, c, parts)
            return out
        return self._cached(("beta", p, q), lambda: map_on_basis(
            self.level(p, q), self.level(p, q), fn, self.F))

    def gamma(self, p, q):
        """(g_1..g_p | g | a) |-> (g S(g_1^(0)..g_p^(0)), g_1^(1)..g_p^(1) | a)."""
        h = self.h

        def fn(x):
            gs, g, slots = x[:p], x[p], x[p + 1:]
            out = {}
            for terms, c in expand([h.coproduct(v) for v in gs]).items():
                s = h.S(h.product_seq(tuple(t[0] for t in terms)))
                g0 = h.mul_elems(_unit(g), s)
                parts = [g0] + [_unit(t[1]) for t in terms] + [_unit(v) for v in slots]
                accumulate(out, c, parts)
            return out
        return self._cached(("gamma", p, q), lambda: map_on_basis(
            self.level(p, q), self.level(p, q), fn, self.F))

    # conjugated operators ---------------------------------------------------

    def conjugated(self, name, i, p, q):
        """beta o op o gamma for op one of d, s, t, D (dbar), S (sbar), T (tbar)."""
        c = self.cyl
        if name == "d":
            op, tgt = c.face(i, p, q), (p, q - 1)
        elif name == "s":
            op, tgt = c.degeneracy(i, p, q), (p, q + 1)
        elif name == "t":
            op, tgt = c.cyclic(p, q), (p, q)
        elif name == "D":
            op, tgt = c.vface(i, p, q), (p - 1, q)
        elif name == "S":
            op, tgt = c.vdegeneracy(i, p, q), (p + 1, q)
        elif name == "T":
            op, tgt = c.vcyclic(p, q), (p, q)
        else:
            raise ValueError(name)
        return self.beta(*tgt) @ op @ self.gamma(p, q)

    # closed forms -----------------------------------------------------------

    def closed(self, name, i, p, q):
        fn = {"d": self._d, "s": self._s, "t": self._t,
              "D": self._D, "S": self._S, "T": self._T}[name]
        return fn(i, p, q)

    def _X(self, g1, gterms):
        """g^(1) S(g_1^(0)..g_p^(0)) g_1^(2)..g_p^(2) from Delta^2 legs."""
        h = self.h
        s = h.S(h.product_seq(tuple(t[0] for t in gterms)))
        right = h.product_seq(tuple(t[2] for t in gterms))
        return h.mul_elems(h.mul_elems(_unit(g1), s), right)

    def _t_or_dq(self, p, q, merge):
        h, m, a_alg = self.h, self.m, self.m.algebra

        def fn(x):
            gs, g, slots = x[:p], x[p], x[p + 1:]
            a = list(reversed(slots))
            out = {}
            for gt, c in expand([h.coproduct_n(v, 2) for v in gs]).items():
                for (g0, g1), c2 in h.coproduct(g).items():
                    sa = m.act_elem(h.S(self._X(g1, gt)), _unit(a[q]))
                    if merge:
                        new = [a_alg.mul_elems(_unit(a[0]), sa)] + [_unit(v) for v in a[1:q]]
                    else:
                        new = [sa] + [_unit(v) for v in a[:q]]
                    parts = [_unit(t[1]) for t in gt] + [_unit(g0)] + list(reversed(new))
                    accumulate(out, c * c2, parts)
            return out
        return fn

    def _t(self, i, p, q):
        L = self.level(p, q)
        return map_on_basis(L, L, self._t_or_dq(p, q, False), self.F)

    def _d(self, i, p, q):
        if i == q:
            fn = self._t_or_dq(p, q, True)
        else:
            alg = self.m.algebra

            def fn(x):
                head, a = x[:p + 1], list(reversed(x[p + 1:]))
                new = [_unit(v) for v in a[:i]] + [alg.product(a[i + 1], a[i])] + \
                      [_unit(v) for v in a[i + 2:]]
                return expand([_unit(v) for v in head] + list(reversed(new)))
        return map_on_basis(self.level(p, q), self.level(p, q - 1), fn, self.F)

    def _s(self, i, p, q):
        unit = self.m.algebra.unit_dict()

        def fn(x):
            head, a = x[:p + 1], list(reversed(x[p + 1:]))
            new = [_unit(v) for v in a[:i + 1]] + [unit] + [_unit(v) for v in a[i + 1:]]
            return expand([_unit(v) for v in head] + list(reversed(new)))
        return map_on_basis(self.level(p, q), self.level(p, q + 1), fn, self.F)

    def _D(self, i, p, q):
        """dbar_0 = eps(g_1)(g_2..), dbar_i merges g_i g_{i+1}, dbar_p = g_p.(g | a)."""
        h, m = self.h, self.m

        def fn(x):
            gs, g, slots = x[:p], x[p], x[p + 1:]
            if i == 0 and p >= 2:
                e = h.eps(gs[0])
                return {gs[1:] + (g,) + slots: e} if e else {}
            if 0 < i < p:
                parts = [_unit(v) for v in gs[:i - 1]] + [h.algebra.product(gs[i - 1], gs[i])] + \
                    [_unit(v) for v in gs[i + 1:]] + [_unit(g)] + [_unit(s) for s in slots]
                return expand(parts)
            if i == 0:  # p == 1: dbar_0 = eps(g_1)(g | a)
                e = h.eps(gs[0])
                return {(g,) + slots: e} if e else {}
            # i == p: act with g_p on (g | a) through the adjoint action
            a = list(reversed(slots))
            out = {}
            for cs, c in h.coproduct_n(gs[p - 1], q + 2).items():
                new_g = h.mul_elems(h.algebra.product(cs[1], g), h.S(_unit(cs[0])))
                acted = [m.act(cs[q + 2 - j], a[j]) for j in range(q + 1)]
                parts = [_unit(v) for v in gs[:p - 1]] + [new_g] + list(reversed(acted))
                accumulate(out, c, parts)
            return out
        return map_on_basis(self.level(p, q), self.level(p - 1, q), fn, self.F)

    def _S(self, i, p, q):
        unit = self.h.unit_dict()

        def fn(x):
            gs, rest = x[:p], x[p:]
            return expand([_unit(v) for v in gs[:i]] + [unit] + [_unit(v) for v in gs[i:]] +
                          [_unit(v) for v in rest])
        return map_on_basis(self.level(p, q), self.level(p + 1, q), fn, self.F)

    def _T(self, i, p, q):
        h, m = self.h, self.m

        def fn(x):
            gs, g, slots = x[:p], x[p], x[p + 1:]
            a = list(reversed(slots))
            out = {}
            if p == 0:
                for cs, c in h.coproduct_n(g, q + 1).items():
                    acted = [m.act(cs[q + 1 - j], a[j]) for j in range(q + 1)]
                    accumulate(out, c, [_unit(cs[0])] + list(reversed(acted)))
                return out
            legs = [h.coproduct(v) for v in gs[:p - 1]] + [h.coproduct_n(gs[p - 1], q + 3)]
            for terms, c in expand(legs).items():
                last = terms[p - 1]
                firsts = tuple(t[0] for t in terms)
                s = h.S(h.product_seq(firsts))
                for (g0, g1), c2 in h.coproduct(g).items():
                    head = h.mul_elems(_unit(g1), s)
                    mid = h.mul_elems(h.algebra.product(last[2], g0), h.S(_unit(last[1])))
                    acted = [m.act(last[q + 3 - j], a[j]) for j in range(q + 1)]
                    parts = [head] + [_unit(t[1]) for t in terms[:p - 1]] + [mid] + \
                        list(reversed(acted))
                    accumulate(out, c * c2, parts)
            return out
        L = self.level(p, q)
        return map_on_basis(L, L, fn, self.F)


def beta_gamma(m, cylinder=None):
    return Transport(m, cylinder)


def _transport_ops(p, q, p_max, q_max):
    ops = [("t", 0, (p, q)), ("T", 0, (p, q))]
    if q >= 1:
        ops += [("d", i, (p, q - 1)) for i in range(q + 1)]
    if q + 1 <= q_max:
        ops += [("s", i, (p, q + 1)) for i in range(q + 1)]
    if p >= 1:
        ops += [("D", i, (p - 1, q)) for i in range(p + 1)]
    if p + 1 <= p_max:
        ops += [("S", i, (p + 1, q)) for i in range(p + 1)]
    return ops


_OP_NAMES = {"d": "d", "s": "s", "t": "t", "D": "dbar", "S": "sbar", "T": "tbar"}


def verify_transport(m, p_max, q_max, transport=None):
    """beta gamma = gamma beta = id and closed forms = conjugated operators."""
    tr = transport or Transport(m)
    rep = Report("beta/gamma %s" % m.name)
    for p in range(p_max + 1):
        for q in range(q_max + 1):
            ident = SparseMap.identity(tr.level(p, q), m.field)
            b, g = tr.beta(p, q), tr.gamma(p, q)
            check_maps_equal(rep, "beta gamma = id @(%d,%d)" % (p, q), b @ g, ident)
            check_maps_equal(rep, "gamma beta = id @(%d,%d)" % (p, q), g @ b, ident)
            for name, i, _ in _transport_ops(p, q, p_max, q_max):
                label = _OP_NAMES[name] + ("" if name in "tT" else str(i))
                check_maps_equal(rep, "closed %s = conjugated @(%d,%d)" % (label, p, q),
                                 tr.closed(name, i, p, q), tr.conjugated(name, i, p, q))
    return rep


# ----------------------------------------------------------------------------
# chi


def chi_map(m, n, form="s_inv_form", invariants=None, coinv=None):
    """chi : C_n(A^H) -> coinvariant level n, (a_0..a_n) |-> class of (1 | a_0..a_n).

    For form="cop_form" the source is C_n((A^H)^op) and the image is the class
    of (1 | a_n, .., a_0) in the written layout.
    """
    sub, incl = invariants or invariant_subalgebra(m)
    coinv = coinv or coinvariant_module(m, form)
    h, F = m.hopf, m.field
    src_alg = sub if form == "s_inv_form" else opposite_algebra(sub)
    src = tensor_space(*([src_alg.space] * (n + 1)))
    L = coinv.base.level(n)
    one = h.unit_dict()

    def fn(x):
        parts = [incl.cols[v] for v in x]
        if form == "cop_form":
            parts = list(reversed(parts))
        return expand([one] + parts)

    raw = map_on_basis(src, L, fn, F)
    proj = coinv.quotient(n).projection()
    return proj @ raw


def verify_chi(m, n_max, form="s_inv_form"):
    rep = Report("chi %s %s" % (form, m.name))
    sub, incl = invariant_subalgebra(m)
    coinv = coinvariant_module(m, form)
    src_alg = sub if form == "s_inv_form" else opposite_algebra(sub)
    C = cyclic_module_of_algebra(src_alg)
    Q = coinv.module
    chis = {n: chi_map(m, n, form, (sub, incl), coinv) for n in range(n_max + 1)}
    for n in range(n_max + 1):
        chi = chis[n]
        check_maps_equal(rep, "chi t = t chi @%d" % n, chi @ C.cyclic(n), Q.cyclic(n) @ chi)
        if n >= 1:
            for i in range(n + 1):
                check_maps_equal(rep, "chi d%d = d%d chi @%d" % (i, i, n),
                                 chis[n - 1] @ C.face(i, n), Q.face(i, n) @ chi)
        if n + 1 <= n_max:
            for i in range(n + 1):
                check_maps_equal(rep, "chi s%d = s%d chi @%d" % (i, i, n),
                                 chis[n + 1] @ C.degeneracy(i, n), Q.degeneracy(i, n) @ chi)
    return rep
