"""
Paracyclic, cyclic and cylindrical modules over based spaces.

A module is given by callables producing its levels and structure maps;
every map is materialized as a SparseMap on first use and cached, so each
identity below is a finite matrix equation.

Conventions
-----------
* faces d_i : X_n -> X_{n-1}, degeneracies s_i : X_n -> X_{n+1} (0 <= i <= n),
  cyclic operator t_n : X_n -> X_n.
* extra degeneracy s = t_{n+1} s_n : X_n -> X_{n+1}; it satisfies
  t_{n+1} s = s_0 t_n.
* b = sum (-1)^i d_i,  N = sum (-1)^(i n) t^i,  B = (1 - (-1)^(n+1) t) s N,
  T = 1 - (bB + Bb); on the unnormalized chains T = t^(n+1).
* for a cylinder X(p, q) the horizontal operators (d, s, t) act on q and the
  vertical ones (d-bar, s-bar, t-bar) on p.  Cylindricity is
  tbar^(p+1) t^(q+1) = t^(q+1) tbar^(p+1) = id.
* Tot(b) = bbar + (-1)^p b and Tot(B) = (-1)^p B + T Bbar on the (p, q)
  summand, where T = t^(q+1).
"""

import itertools

from hopfcyclic.fields import QQ
from hopfcyclic.linalg import (
    ZERO_SPACE, LinalgError, Quotient, SparseMap, axpy, block_map,
    direct_sum, indexer_for, induced_map, descends,
)
from hopfcyclic.report import Report, check_maps_equal, check_zero


class UnverifiedError(ValueError):
    """An operation needs a verified cylindrical module."""


# ----------------------------------------------------------------------------
# basis-level map construction


def factor_dims(space):
    if space.factors:
        return tuple(f.dim for f in space.factors)
    return (space.dim,)


def map_on_basis(source, target, fn, field=QQ):
    """SparseMap whose column j is fn(index tuple of j) -> {target tuple: c}."""
    sidx = indexer_for(*factor_dims(source))
    tidx = indexer_for(*factor_dims(target))
    cols = []
    for j in range(source.dim):
        col = {}
        for key, c in fn(sidx.decode(j)).items():
            if c:
                axpy(col, c, {tidx.encode(key): 1})
        cols.append(col)
    return SparseMap(source, target, cols, field)


def expand(parts):
    """Multiply out a list of element dicts {index: c} into {tuple: c}."""
    out = {(): 1}
    for part in parts:
        nxt = {}
        for key, c in out.items():
            for i, d in part.items():
                k = key + (i,)
                v = c * d
                x = nxt.get(k)
                nxt[k] = v if x is None else x + v
        out = {k: v for k, v in nxt.items() if v}
    return out


def accumulate(out, c, parts):
    """out += c * expand(parts)."""
    axpy(out, c, expand(parts))


# ----------------------------------------------------------------------------
# paracyclic modules


class ParacyclicModule:
    """Levels X_n with faces, degeneracies and a cyclic operator.

    level(n) -> BasedSpace; face(i, n), degeneracy(i, n), cyclic(n) -> SparseMap.
    """

    def __init__(self, level, face, degeneracy, cyclic, field=QQ, name=""):
        self._level = level
        self._face = face
        self._degen = degeneracy
        self._cyclic = cyclic
        self.field = field
        self.name = name
        self._cache = {}

    def _get(self, key, make):
        hit = self._cache.get(key)
        if hit is None:
            hit = make()
            self._cache[key] = hit
        return hit

    def level(self, n):
        return self._get(("X", n), lambda: self._level(n))

    def face(self, i, n):
        if not (n >= 1 and 0 <= i <= n):
            raise LinalgError("face d_%d undefined at level %d" % (i, n))
        return self._get(("d", i, n), lambda: self._face(i, n))

    def degeneracy(self, i, n):
        if not 0 <= i <= n:
            raise LinalgError("degeneracy s_%d undefined at level %d" % (i, n))
        return self._get(("s", i, n), lambda: self._degen(i, n))

    def cyclic(self, n):
        return self._get(("t", n), lambda: self._cyclic(n))

    def identity(self, n):
        return self._get(("id", n), lambda: SparseMap.identity(self.level(n), self.field))

    def __repr__(self):
        return "ParacyclicModule(%s)" % self.name


def verify_paracyclic(m, n_max, require_cyclic=False):
    """Simplicial and paracyclic identities at levels <= n_max."""
    rep = Report("paracyclic %s" % m.name)
    d, s, t = m.face, m.degeneracy, m.cyclic
    for n in range(n_max + 1):
        # d_i d_j = d_{j-1} d_i  (i < j), on level n
        if n >= 2:
            for j in range(n + 1):
                for i in range(j):
                    check_maps_equal(rep, "d%d d%d = d%d d%d @%d" % (i, j, j - 1, i, n),
                                     d(i, n - 1) @ d(j, n), d(j - 1, n - 1) @ d(i, n))
        # s_i s_j = s_{j+1} s_i  (i <= j), from level n to n+2
        if n + 2 <= n_max:
            for j in range(n + 1):
                for i in range(j + 1):
                    check_maps_equal(rep, "s%d s%d = s%d s%d @%d" % (i, j, j + 1, i, n),
                                     s(i, n + 1) @ s(j, n), s(j + 1, n + 1) @ s(i, n))
        # d_i s_j on level n (s_j : n -> n+1, d_i : n+1 -> n)
        if n + 1 <= n_max:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = d(i, n + 1) @ s(j, n)
                    if i < j:
                        rhs = s(j - 1, n - 1) @ d(i, n)
                    elif i in (j, j + 1):
                        rhs = m.identity(n)
                    else:
                        rhs = s(j, n - 1) @ d(i - 1, n)
                    check_maps_equal(rep, "d%d s%d @%d" % (i, j, n), lhs, rhs)
        # d_i t_n = t_{n-1} d_{i-1} (1 <= i <= n), d_0 t_n = d_n
        if n >= 1:
            for i in range(1, n + 1):
                check_maps_equal(rep, "d%d t = t d%d @%d" % (i, i - 1, n),
                                 d(i, n) @ t(n), t(n - 1) @ d(i - 1, n))
            check_maps_equal(rep, "d0 t = d%d @%d" % (n, n), d(0, n) @ t(n), d(n, n))
        # s_i t_n = t_{n+1} s_{i-1} (1 <= i <= n), s_0 t_n = t_{n+1}^2 s_n
        if n + 1 <= n_max:
            for i in range(1, n + 1):
                check_maps_equal(rep, "s%d t = t s%d @%d" % (i, i - 1, n),
                                 s(i, n) @ t(n), t(n + 1) @ s(i - 1, n))
            check_maps_equal(rep, "s0 t = t^2 s%d @%d" % (n, n),
                             s(0, n) @ t(n), t(n + 1) @ t(n + 1) @ s(n, n))
            # extra degeneracy s = t s_n satisfies t s = s_0 t
            sx = extra_degeneracy(m, n)
            check_maps_equal(rep, "t s = s0 t (extra degeneracy) @%d" % n,
                             t(n + 1) @ sx, s(0, n) @ t(n))
        if require_cyclic:
            check_maps_equal(rep, "t^%d = id @%d" % (n + 1, n),
                             t(n).power(n + 1), m.identity(n))
    return rep


def is_cyclic_at(m, n):
    return m.cyclic(n).power(n + 1) == m.identity(n)


def verify_cyclic(m, n_max):
    return verify_paracyclic(m, n_max, require_cyclic=True)


# ----------------------------------------------------------------------------
# b, B, N, T


def b_operator(m, n):
    """b = sum (-1)^i d_i : X_n -> X_{n-1}; zero map to 0 at n = 0."""
    if n == 0:
        return SparseMap.zero(m.level(0), ZERO_SPACE, m.field)
    out = m.face(0, n)
    for i in range(1, n + 1):
        f = m.face(i, n)
        out = out - f if i % 2 else out + f
    return out


def extra_degeneracy(m, n):
    return m.cyclic(n + 1) @ m.degeneracy(n, n)


def norm_operator(m, n):
    t = m.cyclic(n)
    out = m.identity(n)
    power = m.identity(n)
    for i in range(1, n + 1):
        power = t @ power
        out = out - power if (i * n) % 2 else out + power
    return out


def B_operator(m, n):
    """B = (1 - (-1)^(n+1) t_{n+1}) s N : X_n -> X_{n+1}."""
    t1 = m.cyclic(n + 1)
    lam = t1 if (n + 1) % 2 == 0 else -t1
    return (m.identity(n + 1) - lam) @ extra_degeneracy(m, n) @ norm_operator(m, n)


def T_operator(m, n):
    """1 - (bB + Bb) at level n (unnormalized)."""
    bB = b_operator(m, n + 1) @ B_operator(m, n)
    if n == 0:
        return m.identity(0) - bB
    return m.identity(n) - bB - B_operator(m, n - 1) @ b_operator(m, n)


# ----------------------------------------------------------------------------
# parachain complexes


class Parachain:
    """Graded spaces with b (degree -1) and B (degree +1), lazily built.

    space(n), b(n) : V_n -> V_{n-1}, B(n) : V_n -> V_{n+1}.  For negative n
    the space is zero.
    """

    def __init__(self, space, b, B, field=QQ, name=""):
        self._space = space
        self._b = b
        self._B = B
        self.field = field
        self.name = name
        self._cache = {}

    def _get(self, key, make):
        hit = self._cache.get(key)
        if hit is None:
            hit = make()
            self._cache[key] = hit
        return hit

    def space(self, n):
        if n < 0:
            return ZERO_SPACE
        return self._get(("V", n), lambda: self._space(n))

    def b(self, n):
        if n <= 0:
            return SparseMap.zero(self.space(n), ZERO_SPACE, self.field)
        return self._get(("b", n), lambda: self._b(n))

    def B(self, n):
        return self._get(("B", n), lambda: self._B(n))

    def T(self, n):
        ident = SparseMap.identity(self.space(n), self.field)
        out = ident - self.b(n + 1) @ self.B(n)
        if n > 0:
            out = out - self.B(n - 1) @ self.b(n)
        return out

    def __repr__(self):
        return "Parachain(%s)" % self.name


def parachain(m):
    """Unnormalized parachain complex of a paracyclic module."""
    return Parachain(m.level, lambda n: b_operator(m, n), lambda n: B_operator(m, n),
                     m.field, "C(%s)" % m.name)


def verify_parachain(c, n_max, mixed=False):
    """b^2 = 0, B^2 = 0 and T invertible (T = id when mixed) up to n_max."""
    from hopfcyclic.linalg import rank
    rep = Report("parachain %s" % c.name)
    for n in range(n_max + 1):
        if n >= 2:
            check_zero(rep, "b^2 = 0 @%d" % n, c.b(n - 1) @ c.b(n))
        check_zero(rep, "B^2 = 0 @%d" % n, c.B(n + 1) @ c.B(n))
        T = c.T(n)
        if mixed:
            check_maps_equal(rep, "T = id @%d" % n, T,
                             SparseMap.identity(c.space(n), c.field))
        else:
            r = rank(T)
            rep.add("T invertible @%d" % n, r == c.space(n).dim,
                    "rank %d < %d" % (r, c.space(n).dim))
    return rep


# ----------------------------------------------------------------------------
# normalized chains


class NormalizedModule:
    """Quotients N_n = X_n / sum im(s_i) with projections."""

    def __init__(self, m):
        self.module = m
        self.field = m.field
        self._q = {}

    def quotient(self, n):
        q = self._q.get(n)
        if q is None:
            gens = []
            if n >= 1:
                for i in range(n):
                    gens.extend(c for c in self.module.degeneracy(i, n - 1).cols if c)
            q = Quotient(self.module.level(n), gens, self.field,
                         name="N%d(%s)" % (n, self.module.name))
            self._q[n] = q
        return q

    def descend(self, op, n_src, n_tgt, what="map"):
        """Induced map on quotients; raises if op does not preserve degenerates."""
        qs, qt = self.quotient(n_src), self.quotient(n_tgt)
        bad = descends(op, qs, qt)
        if bad is not None:
            raise LinalgError("%s does not descend to normalized chains" % what)
        return induced_map(op, qs, qt)


def normalized_complex(m):
    """Normalized parachain complex (N(X), b, B) with induced operators."""
    norm = NormalizedModule(m)

    def space(n):
        return norm.quotient(n).quotient_space

    def b(n):
        return norm.descend(b_operator(m, n), n, n - 1, "b")

    def B(n):
        return norm.descend(B_operator(m, n), n, n + 1, "B")

    c = Parachain(space, b, B, m.field, "N(%s)" % m.name)
    c.normalization = norm
    return c


# ----------------------------------------------------------------------------
# cylindrical modules


class CylindricalModule:
    """Bigraded X(p, q) with horizontal (d, s, t on q) and vertical
    (dbar, sbar, tbar on p) operators, each a callable returning a SparseMap.
    """

    def __init__(self, level, face, degeneracy, cyclic, vface, vdegeneracy, vcyclic,
                 field=QQ, name=""):
        self._fns = {"X": level, "d": face, "s": degeneracy, "t": cyclic,
                     "D": vface, "S": vdegeneracy, "T": vcyclic}
        self.field = field
        self.name = name
        self.verified = None
        self._cache = {}

    def _get(self, key):
        hit = self._cache.get(key)
        if hit is None:
            hit = self._fns[key[0]](*key[1:])
            self._cache[key] = hit
        return hit

    def level(self, p, q):
        return self._get(("X", p, q))

    def face(self, i, p, q):
        return self._get(("d", i, p, q))

    def degeneracy(self, i, p, q):
        return self._get(("s", i, p, q))

    def cyclic(self, p, q):
        return self._get(("t", p, q))

    def vface(self, i, p, q):
        return self._get(("D", i, p, q))

    def vdegeneracy(self, i, p, q):
        return self._get(("S", i, p, q))

    def vcyclic(self, p, q):
        return self._get(("T", p, q))

    def identity(self, p, q):
        key = ("id", p, q)
        hit = self._cache.get(key)
        if hit is None:
            hit = SparseMap.identity(self.level(p, q), self.field)
            self._cache[key] = hit
        return hit

    def row(self, p):
        """The paracyclic module q |-> X(p, q)."""
        return ParacyclicModule(
            lambda n: self.level(p, n), lambda i, n: self.face(i, p, n),
            lambda i, n: self.degeneracy(i, p, n), lambda n: self.cyclic(p, n),
            self.field, "%s row p=%d" % (self.name, p))

    def column(self, q):
        """The paracyclic module p |-> X(p, q)."""
        return ParacyclicModule(
            lambda n: self.level(n, q), lambda i, n: self.vface(i, n, q),
            lambda i, n: self.vdegeneracy(i, n, q), lambda n: self.vcyclic(n, q),
            self.field, "%s column q=%d" % (self.name, q))

    def __repr__(self):
        return "CylindricalModule(%s)" % self.name


def _horizontal_ops(c, p, q, q_max):
    """(name, map, target q) for horizontal operators out of (p, q)."""
    ops = [("t", c.cyclic(p, q), q)]
    if q >= 1:
        ops += [("d%d" % i, c.face(i, p, q), q - 1) for i in range(q + 1)]
    if q + 1 <= q_max:
        ops += [("s%d" % i, c.degeneracy(i, p, q), q + 1) for i in range(q + 1)]
    return ops


def verify_cylindrical(c, p_max, q_max, exponents="cylindrical"):
    """Rows, columns, commutation of horizontal with vertical operators, and
    the cylindrical condition.

    exponents="cylindrical" checks tbar^(p+1) t^(q+1) = id; exponents="swapped"
    checks tbar^(q+1) t^(p+1) = id instead (the two agree when p = q).
    """
    rep = Report("cylindrical %s" % c.name)
    for p in range(p_max + 1):
        rep.extend(verify_paracyclic(c.row(p), q_max), "row p=%d: " % p)
    for q in range(q_max + 1):
        rep.extend(verify_paracyclic(c.column(q), p_max), "column q=%d: " % q)
    for p in range(p_max + 1):
        for q in range(q_max + 1):
            # every horizontal operator X at (p, q) against every vertical Y
            vert = [("tbar", lambda pp, qq: c.vcyclic(pp, qq), p)]
            if p >= 1:
                vert += [("dbar%d" % j, (lambda j: lambda pp, qq: c.vface(j, pp, qq))(j), p - 1)
                         for j in range(p + 1)]
            if p + 1 <= p_max:
                vert += [("sbar%d" % j,
                          (lambda j: lambda pp, qq: c.vdegeneracy(j, pp, qq))(j), p + 1)
                         for j in range(p + 1)]
            for hname, _, q2 in _horizontal_ops(c, p, q, q_max):
                for vname, vfn, p2 in vert:
                    h_at = _horizontal_at(c, hname)
                    lhs = h_at(p2, q) @ vfn(p, q)
                    rhs = vfn(p, q2) @ h_at(p, q)
                    check_maps_equal(rep, "%s %s = %s %s @(%d,%d)" % (hname, vname, vname,
                                                                      hname, p, q), lhs, rhs)
            t = c.cyclic(p, q)
            tb = c.vcyclic(p, q)
            if exponents == "cylindrical":
                e_bar, e = p + 1, q + 1
            else:
                e_bar, e = q + 1, p + 1
            lhs = tb.power(e_bar) @ t.power(e)
            rhs = t.power(e) @ tb.power(e_bar)
            ident = c.identity(p, q)
            check_maps_equal(rep, "tbar^%d t^%d = id @(%d,%d)" % (e_bar, e, p, q), lhs, ident)
            check_maps_equal(rep, "t^%d tbar^%d = id @(%d,%d)" % (e, e_bar, p, q), rhs, ident)
    if rep.ok and exponents == "cylindrical":
        c.verified = (p_max, q_max)
    return rep


def _horizontal_at(c, name):
    if name == "t":
        return lambda p, q: c.cyclic(p, q)
    i = int(name[1:])
    if name[0] == "d":
        return lambda p, q: c.face(i, p, q)
    return lambda p, q: c.degeneracy(i, p, q)


def diagonal(c, require_verified=True):
    """The paracyclic module n |-> X(n, n) with composite operators."""
    if require_verified and c.verified is None:
        raise UnverifiedError("diagonal of an unverified cylindrical module")
    return ParacyclicModule(
        lambda n: c.level(n, n),
        lambda i, n: c.vface(i, n, n - 1) @ c.face(i, n, n),
        lambda i, n: c.vdegeneracy(i, n, n + 1) @ c.degeneracy(i, n, n),
        lambda n: c.vcyclic(n, n) @ c.cyclic(n, n),
        c.field, "diag(%s)" % c.name)


# ----------------------------------------------------------------------------
# Tot and the shuffle map


class BiNormalized:
    """Quotients of X(p, q) by horizontal and vertical degeneracies."""

    def __init__(self, c):
        self.cyl = c
        self._q = {}

    def quotient(self, p, q):
        key = (p, q)
        hit = self._q.get(key)
        if hit is None:
            c = self.cyl
            gens = []
            for i in range(q):
                gens.extend(col for col in c.degeneracy(i, p, q - 1).cols if col)
            for j in range(p):
                gens.extend(col for col in c.vdegeneracy(j, p - 1, q).cols if col)
            hit = Quotient(c.level(p, q), gens, c.field, name="N(%d,%d)" % (p, q))
            self._q[key] = hit
        return hit

    def descend(self, op, src, tgt, what="map"):
        qs, qt = self.quotient(*src), self.quotient(*tgt)
        if descends(op, qs, qt) is not None:
            raise LinalgError("%s does not descend to normalized chains" % what)
        return induced_map(op, qs, qt)


def _row_B(c, p, q):
    return B_operator(c.row(p), q)


def _col_B(c, p, q):
    return B_operator(c.column(q), p)


def tot_parachain(c, normalized=True):
    """Tot of a cylindrical module: Tot_n = sum_{p+q=n} X(p, q).

    Tot(b) = bbar + (-1)^p b and Tot(B) = (-1)^p B + T Bbar with T = t^(q+1).
    """
    F = c.field
    norm = BiNormalized(c) if normalized else None

    def piece(p, q):
        return norm.quotient(p, q).quotient_space if normalized else c.level(p, q)

    def keys(n):
        return [(p, n - p) for p in range(n + 1)]

    def space(n):
        ks = keys(n)
        return direct_sum(ks, [piece(*k) for k in ks], "Tot%d(%s)" % (n, c.name))[0]

    def lower(op, src, tgt):
        return norm.descend(op, src, tgt) if normalized else op

    def b(n):
        src, tgt = keys(n), keys(n - 1)
        blocks = {}
        for p, q in src:
            if q >= 1:
                hb = b_operator(c.row(p), q)
                blocks[((p, q - 1), (p, q))] = lower(hb if p % 2 == 0 else -hb,
                                                     (p, q), (p, q - 1))
            if p >= 1:
                vb = b_operator(c.column(q), p)
                blocks[((p - 1, q), (p, q))] = lower(vb, (p, q), (p - 1, q))
        return block_map(src, [piece(*k) for k in src], tgt, [piece(*k) for k in tgt],
                         blocks, F, source=tot.space(n), target=tot.space(n - 1))

    def B(n):
        src, tgt = keys(n), keys(n + 1)
        blocks = {}
        for p, q in src:
            hB = _row_B(c, p, q)
            blocks[((p, q + 1), (p, q))] = lower(hB if p % 2 == 0 else -hB,
                                                 (p, q), (p, q + 1))
            Tq = c.cyclic(p + 1, q).power(q + 1)
            blocks[((p + 1, q), (p, q))] = lower(Tq @ _col_B(c, p, q), (p, q), (p + 1, q))
        return block_map(src, [piece(*k) for k in src], tgt, [piece(*k) for k in tgt],
                         blocks, F, source=tot.space(n), target=tot.space(n + 1))

    tot = Parachain(space, b, B, F, "Tot(%s)" % c.name)
    tot.keys = keys
    tot.normalization = norm
    return tot


def shuffles(p, q):
    """(p, q)-shuffles as (mu, nu, sign): mu, nu increasing, disjoint, covering
    0..p+q-1; sign is the sign of the permutation (mu, nu)."""
    n = p + q
    out = []
    for mu in itertools.combinations(range(n), p):
        nu = tuple(i for i in range(n) if i not in mu)
        inv = sum(1 for a in mu for b in nu if a > b)
        out.append((mu, nu, -1 if inv % 2 else 1))
    return out


def shuffle_component(c, p, q):
    """f0 on X(p, q) -> X(n, n), n = p + q, unnormalized.

    sum over shuffles of sign * sbar_{nu_q}..sbar_{nu_1} s_{mu_p}..s_{mu_1}.
    """
    n = p + q
    F = c.field
    total = SparseMap.zero(c.level(p, q), c.level(n, n), F)
    for mu, nu, sign in shuffles(p, q):
        op = c.identity(p, q)
        qq = q
        for i in mu:                       # horizontal: q -> q + p
            op = c.degeneracy(i, p, qq) @ op
            qq += 1
        pp = p
        for j in nu:                       # vertical: p -> p + q
            op = c.vdegeneracy(j, pp, qq) @ op
            pp += 1
        total = total + op if sign > 0 else total - op
    return total


def shuffle_f0(c, n, normalized=True):
    """f0 : Tot_n -> Delta_n on (normalized) chains, as one block row."""
    tot = tot_parachain(c, normalized)
    diag = diagonal(c, require_verified=False)
    src = tot.keys(n)
    blocks = {}
    if normalized:
        qt = NormalizedModule(diag).quotient(n)
        target = qt.quotient_space
        pieces = [tot.normalization.quotient(*k).quotient_space for k in src]
        for k in src:
            blocks[("diag", k)] = induced_map(shuffle_component(c, *k),
                                              tot.normalization.quotient(*k), qt)
    else:
        target = diag.level(n)
        pieces = [c.level(*k) for k in src]
        for k in src:
            blocks[("diag", k)] = shuffle_component(c, *k)
    return block_map(src, pieces, ["diag"], [target], blocks, c.field,
                     source=tot.space(n), target=target)


def shuffle_descends(c, n):
    """Check that f0 sends degenerate chains of Tot to degenerate chains."""
    diag = diagonal(c, require_verified=False)
    qt = NormalizedModule(diag).quotient(n)
    norm = BiNormalized(c)
    for p in range(n + 1):
        q = n - p
        f = shuffle_component(c, p, q)
        if descends(f, norm.quotient(p, q), qt) is not None:
            return False
    return True
