"""
Exact sparse linear algebra over QQ or F_p.

Based spaces carry an ordered tuple of basis labels.  Linear maps are stored
column-sparse: column j is a dict {row: nonzero scalar} giving the image of
the j-th source basis vector.  Tensor products of based spaces use a fixed
lexicographic order with the rightmost factor varying fastest.

Row reduction uses a deterministic pivot rule: columns are processed in
order and the pivot of a reduced vector is its largest nonzero row index.
"""

import itertools
from contextlib import contextmanager
from functools import lru_cache

from hopfcyclic.fields import QQ

DEFAULT_SIZE_CAP = 200_000
_size_cap = [DEFAULT_SIZE_CAP]


class SizeGuardError(RuntimeError):
    """Raised when a space would exceed the configured dimension cap."""


class LinalgError(ValueError):
    """Dimension mismatch or an inconsistent request."""


def get_size_cap():
    return _size_cap[0]


def set_size_cap(n):
    _size_cap[0] = int(n)


@contextmanager
def size_cap(n):
    old = _size_cap[0]
    _size_cap[0] = int(n)
    try:
        yield
    finally:
        _size_cap[0] = old


def check_size(n, what="space"):
    if n > _size_cap[0]:
        raise SizeGuardError(
            "%s of dimension %d exceeds the size cap %d" % (what, n, _size_cap[0]))


# ----------------------------------------------------------------------------
# spaces


class BasedSpace:
    """A finite-dimensional vector space with an ordered, labelled basis."""

    __slots__ = ("labels", "name", "factors", "_index", "_hash")

    def __init__(self, labels, name="", factors=None):
        labels = tuple(labels)
        check_size(len(labels), "space %s" % (name or "?"))
        self.labels = labels
        self.name = name
        self.factors = factors
        self._index = None
        self._hash = None

    @property
    def dim(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def index(self, label):
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
            if len(self._index) != len(self.labels):
                raise LinalgError("duplicate basis labels in %s" % self.name)
        return self._index[label]

    def label(self, i):
        return self.labels[i]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BasedSpace):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.labels)
        return self._hash

    def __repr__(self):
        return "BasedSpace(%s, dim=%d)" % (self.name or "?", self.dim)


def make_space(labels, name=""):
    space = BasedSpace(labels, name)
    if space.labels:
        space.index(space.labels[0])  # builds the index, rejecting duplicates
    return space


ZERO_SPACE = BasedSpace((), "0")


class TensorBasisIndexer:
    """Bijection between index tuples and flat indices, rightmost fastest."""

    def __init__(self, dims):
        self.dims = tuple(int(d) for d in dims)
        strides = []
        s = 1
        for d in reversed(self.dims):
            strides.append(s)
            s *= d
        self.strides = tuple(reversed(strides))
        self.size = s

    def encode(self, idx):
        flat = 0
        for i, s in zip(idx, self.strides):
            flat += i * s
        return flat

    def decode(self, flat):
        out = []
        for s in self.strides:
            q, flat = divmod(flat, s)
            out.append(q)
        return tuple(out)

    def __iter__(self):
        return itertools.product(*[range(d) for d in self.dims])

    def __len__(self):
        return self.size


def tensor_space(*factors):
    """The tensor product of based spaces; labels are tuples of factor labels.

    Nested tensor products are flattened, so (A(x)B)(x)C and A(x)(B(x)C) are
    the same space.
    """
    flat = []
    for f in factors:
        if f.factors:
            flat.extend(f.factors)
        else:
            flat.append(f)
    return _tensor_space(*flat)


@lru_cache(maxsize=None)
def _tensor_space(*factors):
    size = 1
    for f in factors:
        size *= f.dim
    name = "(x)".join(f.name or "?" for f in factors)
    check_size(size, "tensor space %s" % name)
    labels = tuple(itertools.product(*[f.labels for f in factors]))
    return BasedSpace(labels, name, factors=tuple(factors))


@lru_cache(maxsize=None)
def indexer_for(*dims):
    return TensorBasisIndexer(dims)


def direct_sum(keys, spaces, name=""):
    """Direct sum with labels (key, label); returns (space, offsets dict)."""
    labels = []
    offsets = {}
    for k, s in zip(keys, spaces):
        offsets[k] = len(labels)
        labels.extend((k, lab) for lab in s.labels)
    return BasedSpace(labels, name), offsets


# ----------------------------------------------------------------------------
# vectors


class SparseVector:
    """A vector in a based space, stored as {index: nonzero scalar}."""

    __slots__ = ("space", "entries")

    def __init__(self, space, entries):
        self.space = space
        self.entries = {i: c for i, c in entries.items() if c}
        for i in self.entries:
            if not 0 <= i < space.dim:
                raise LinalgError("index %d out of range for %r" % (i, space))

    def __eq__(self, other):
        return (isinstance(other, SparseVector) and self.space == other.space
                and self.entries == other.entries)

    def __repr__(self):
        terms = ["%s*%s" % (c, self.space.labels[i])
                 for i, c in sorted(self.entries.items())]
        return "SparseVector(%s)" % (" + ".join(terms) or "0")

    def by_label(self):
        return {self.space.labels[i]: c for i, c in self.entries.items()}


def axpy(acc, c, vec):
    """acc += c * vec, in place, dropping zeros."""
    for i, v in vec.items():
        x = acc.get(i)
        x = c * v if x is None else x + c * v
        if x:
            acc[i] = x
        elif i in acc:
            del acc[i]


# ----------------------------------------------------------------------------
# maps


class SparseMap:
    """A linear map source -> target given by sparse columns."""

    __slots__ = ("source", "target", "cols", "field")

    def __init__(self, source, target, cols, field=QQ, check=False):
        self.source = source
        self.target = target
        self.field = field
        cols = tuple(cols)
        if len(cols) != source.dim:
            raise LinalgError("expected %d columns, got %d" % (source.dim, len(cols)))
        if check:
            n = target.dim
            for col in cols:
                for r, c in col.items():
                    if not 0 <= r < n:
                        raise LinalgError("row %d out of range" % r)
                    if not c:
                        raise LinalgError("explicit zero entry")
        self.cols = cols

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, source, target, field=QQ):
        return cls(source, target, [{} for _ in range(source.dim)], field)

    @classmethod
    def identity(cls, space, field=QQ):
        one = field.one
        return cls(space, space, [{i: one} for i in range(space.dim)], field)

    @classmethod
    def from_dense(cls, rows, source=None, target=None, field=QQ):
        rows = [[field(x) for x in row] for row in rows]
        m = len(rows)
        n = len(rows[0]) if rows else (source.dim if source else 0)
        source = source or BasedSpace(range(n))
        target = target or BasedSpace(range(m))
        cols = [{i: rows[i][j] for i in range(m) if rows[i][j]} for j in range(n)]
        return cls(source, target, cols, field)

    @classmethod
    def from_function(cls, source, target, fn, field=QQ):
        """Build the map whose j-th column is fn(j) -> {row: scalar}."""
        cols = []
        for j in range(source.dim):
            col = fn(j)
            cols.append({r: c for r, c in col.items() if c})
        return cls(source, target, cols, field)

    # inspection -------------------------------------------------------------

    @property
    def shape(self):
        return (self.target.dim, self.source.dim)

    def entries(self):
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                yield i, j, c

    @property
    def nnz(self):
        return sum(len(c) for c in self.cols)

    def is_zero(self):
        return all(not c for c in self.cols)

    def to_dense(self):
        m, n = self.shape
        rows = [[self.field.zero] * n for _ in range(m)]
        for i, j, c in self.entries():
            rows[i][j] = c
        return rows

    def column_vector(self, j):
        return SparseVector(self.target, self.cols[j])

    def __repr__(self):
        return "SparseMap(%r -> %r, nnz=%d)" % (self.source, self.target, self.nnz)

    # algebra --------------------------------------------------------------

    def apply(self, vec):
        """Apply to a dict {source index: scalar}; returns a dict."""
        out = {}
        for j, c in vec.items():
            axpy(out, c, self.cols[j])
        return out

    def __call__(self, vec):
        if isinstance(vec, SparseVector):
            return SparseVector(self.target, self.apply(vec.entries))
        return self.apply(vec)

    def compose(self, g):
        """self o g."""
        if self.source.dim != g.target.dim or self.source != g.target:
            raise LinalgError("cannot compose %r after %r" % (self, g))
        return SparseMap(g.source, self.target,
                         [self.apply(col) for col in g.cols], self.field)

    __matmul__ = compose

    def __add__(self, other):
        self._check_same_shape(other)
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            axpy(c, 1, b)
            cols.append(c)
        return SparseMap(self.source, self.target, cols, self.field)

    def __sub__(self, other):
        self._check_same_shape(other)
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            axpy(c, -1, b)
            cols.append(c)
        return SparseMap(self.source, self.target, cols, self.field)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        s = self.field(s)
        if not s:
            return SparseMap.zero(self.source, self.target, self.field)
        return SparseMap(self.source, self.target,
                         [{i: s * c for i, c in col.items()} for col in self.cols],
                         self.field)

    def power(self, k):
        if self.source != self.target:
            raise LinalgError("power of a non-endomorphism")
        out = SparseMap.identity(self.source, self.field)
        for _ in range(k):
            out = self.compose(out)
        return out

    def _check_same_shape(self, other):
        if self.source != other.source or self.target != other.target:
            raise LinalgError("shape mismatch: %r vs %r" % (self, other))

    def __eq__(self, other):
        if not isinstance(other, SparseMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.cols == other.cols)

    __hash__ = None

    def first_difference(self, other):
        """First (row, col) where the two maps differ, or None."""
        self._check_same_shape(other)
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                rows = set(a) | set(b)
                for i in sorted(rows):
                    if a.get(i, 0) != b.get(i, 0):
                        return i, j
        return None

    def restrict_rows(self, keep, target):
        """Keep only rows in `keep` (a list of old row indices, in order)."""
        pos = {r: k for k, r in enumerate(keep)}
        cols = [{pos[r]: c for r, c in col.items() if r in pos} for col in self.cols]
        return SparseMap(self.source, target, cols, self.field)


def compose(f, g):
    """f o g, with the dimension check of the contract."""
    return f.compose(g)


def tensor_map(fs):
    """Kronecker product of maps, respecting the tensor basis order."""
    if not fs:
        raise LinalgError("tensor_map of an empty list")
    field = fs[0].field
    source = tensor_space(*[f.source for f in fs])
    target = tensor_space(*[f.target for f in fs])
    tindex = indexer_for(*[f.target.dim for f in fs])
    sindex = indexer_for(*[f.source.dim for f in fs])
    cols = []
    for idx in sindex:
        parts = [f.cols[j] for f, j in zip(fs, idx)]
        col = {}
        for combo in itertools.product(*[p.items() for p in parts]):
            c = field.one
            rows = []
            for r, v in combo:
                c = c * v
                rows.append(r)
            if c:
                key = tindex.encode(rows)
                x = col.get(key)
                col[key] = c if x is None else x + c
        cols.append({k: v for k, v in col.items() if v})
    return SparseMap(source, target, cols, field)


def block_map(source_keys, source_spaces, target_keys, target_spaces, blocks,
              field=QQ, source=None, target=None):
    """Assemble a map between direct sums from blocks {(tkey, skey): map}."""
    if source is None:
        source, soff = direct_sum(source_keys, source_spaces)
    else:
        soff = _offsets(source_keys, source_spaces)
    if target is None:
        target, toff = direct_sum(target_keys, target_spaces)
    else:
        toff = _offsets(target_keys, target_spaces)
    cols = [dict() for _ in range(source.dim)]
    for (tk, sk), m in blocks.items():
        if sk not in soff or tk not in toff:
            continue
        so, to = soff[sk], toff[tk]
        for j, col in enumerate(m.cols):
            axpy(cols[so + j], 1, {to + i: c for i, c in col.items()})
    return SparseMap(source, target, cols, field)


def _offsets(keys, spaces):
    out, n = {}, 0
    for k, s in zip(keys, spaces):
        out[k] = n
        n += s.dim
    return out


# ----------------------------------------------------------------------------
# elimination


class Echelon:
    """Incremental echelon basis of a subspace of k^n.

    Every stored vector remembers how it was built from the generators that
    were added (``combo``), so reduction can express a vector in terms of
    those generators.
    """

    def __init__(self, field=QQ):
        self.field = field
        self.pivots = {}   # pivot row -> (vector dict, combo dict)
        self.order = []    # pivot rows in insertion order

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec, track=False):
        """Fully reduce vec; returns (remainder, combo)."""
        rem = dict(vec)
        combo = {} if track else None
        pivots = self.pivots
        while True:
            hits = [r for r in rem if r in pivots]
            if not hits:
                break
            r = max(hits)
            b, bc = pivots[r]
            c = rem[r] / b[r]
            axpy(rem, -c, b)
            if track:
                axpy(combo, c, bc)
        return rem, combo

    def add(self, vec, gen=None):
        """Add vec (tagged as generator `gen`); returns True if independent."""
        rem, combo = self.reduce(vec, track=True)
        if not rem:
            return False
        if gen is not None:
            combo = {k: -v for k, v in combo.items()}
            axpy(combo, 1, {gen: self.field.one})
        else:
            combo = {}
        r = max(rem)
        self.pivots[r] = (rem, combo)
        self.order.append(r)
        return True

    def contains(self, vec):
        rem, _ = self.reduce(vec)
        return not rem

    def vectors(self):
        return [self.pivots[r][0] for r in self.order]


def rank_and_kernel(m):
    """Rank of m and a basis of its kernel (list of SparseVector)."""
    ech = Echelon(m.field)
    kernel = []
    one = m.field.one
    for j, col in enumerate(m.cols):
        rem, combo = ech.reduce(col, track=True)
        if not rem:
            vec = {k: -v for k, v in combo.items()}
            axpy(vec, 1, {j: one})
            kernel.append(SparseVector(m.source, vec))
        else:
            new_combo = {k: -v for k, v in combo.items()}
            axpy(new_combo, 1, {j: one})
            r = max(rem)
            ech.pivots[r] = (rem, new_combo)
            ech.order.append(r)
    return ech.rank, kernel


def rank(m):
    ech = Echelon(m.field)
    for col in m.cols:
        if col:
            ech.add(col)
    return ech.rank


def span_rank(vectors, field=QQ):
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech.rank


class BrokenComplexError(AssertionError):
    """d_out o d_in is not zero."""


def homology_dimension(d_in, d_out):
    """dim ker(d_out) - rank(d_in) at the middle space of d_in, d_out."""
    if d_in.target != d_out.source:
        raise LinalgError("d_in.target must equal d_out.source")
    if not d_out.compose(d_in).is_zero():
        raise BrokenComplexError("boundary squared is nonzero")
    r_out, ker = rank_and_kernel(d_out)
    return len(ker) - rank(d_in)


# ----------------------------------------------------------------------------
# quotients and subquotients


class Quotient:
    """V / U for U = span(generators), with a complement basis of V.

    The complement basis is the set of standard basis vectors of V at the
    non-pivot rows of the echelon form of U.
    """

    def __init__(self, space, generators, field=QQ, name=""):
        self.space = space
        self.field = field
        self.echelon = Echelon(field)
        for g in generators:
            self.echelon.add(g)
        self.keep = [i for i in range(space.dim) if i not in self.echelon.pivots]
        self._pos = {r: k for k, r in enumerate(self.keep)}
        self.quotient_space = BasedSpace(
            [space.labels[i] for i in self.keep], name or ("%s/~" % space.name))

    @property
    def dim(self):
        return len(self.keep)

    def project(self, vec):
        """Coordinates of the class of vec in the complement basis."""
        rem, _ = self.echelon.reduce(vec)
        return {self._pos[r]: c for r, c in rem.items()}

    def lift(self, k):
        return {self.keep[k]: self.field.one}

    def contains(self, vec):
        return self.echelon.contains(vec)

    def projection(self):
        return SparseMap.from_function(
            self.space, self.quotient_space,
            lambda j: self.project({j: self.field.one}), self.field)

    def section(self):
        return SparseMap(self.quotient_space, self.space,
                         [self.lift(k) for k in range(self.dim)], self.field)


def induced_map(op, qsrc, qtgt):
    """The map between quotients induced by op (descent is not checked)."""
    return SparseMap.from_function(
        qsrc.quotient_space, qtgt.quotient_space,
        lambda k: qtgt.project(op.apply(qsrc.lift(k))), op.field)


def descends(op, qsrc, qtgt):
    """True if op maps the subspace of qsrc into the subspace of qtgt.

    Returns the index of the first offending generator, or None if it descends.
    """
    for n, r in enumerate(qsrc.echelon.order):
        v = qsrc.echelon.pivots[r][0]
        if not qtgt.contains(op.apply(v)):
            return n
    return None


class Subquotient:
    """ker(d_out) / im(d_in) with representative cycles.

    ``reps`` are cycle vectors (dicts in the middle space) whose classes form
    a basis of the homology.  ``coords(z)`` expresses the class of a cycle z.
    """

    def __init__(self, space, cycles, boundaries, field=QQ):
        self.space = space
        self.field = field
        self.echelon = Echelon(field)
        for n, b in enumerate(boundaries):
            self.echelon.add(b, gen=("b", n))
        self.reps = []
        for z in cycles:
            if self.echelon.add(z, gen=("z", len(self.reps))):
                self.reps.append(z)
        self.quotient_space = BasedSpace(range(len(self.reps)), "H")

    @property
    def dim(self):
        return len(self.reps)

    def coords(self, z):
        rem, combo = self.echelon.reduce(z, track=True)
        if rem:
            raise LinalgError("vector is not in the cycle space")
        return {k[1]: c for k, c in combo.items() if k[0] == "z" and c}

    def solve_boundary(self, z):
        """Coefficients on the boundary generators if z is a boundary, else None."""
        rem, combo = self.echelon.reduce(z, track=True)
        if rem or any(k[0] == "z" for k in combo):
            return None
        return {k[1]: c for k, c in combo.items()}


def homology(d_in, d_out, check=True):
    """Subquotient ker(d_out)/im(d_in) with representative cycles."""
    if check and not d_out.compose(d_in).is_zero():
        raise BrokenComplexError("boundary squared is nonzero")
    _, ker = rank_and_kernel(d_out)
    return Subquotient(d_out.source, [k.entries for k in ker],
                       [c for c in d_in.cols if c], d_out.field)


def solve(m, vec):
    """Some x with m x = vec, as a dict, or None when vec is not in the image."""
    ech = Echelon(m.field)
    for j, col in enumerate(m.cols):
        if col:
            ech.add(col, gen=j)
    rem, combo = ech.reduce(vec, track=True)
    if rem:
        return None
    return combo
