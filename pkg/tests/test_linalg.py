import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfcyclic.fields import GF, QQ, Mod, field_from_descriptor
from hopfcyclic.linalg import (
    BasedSpace, BrokenComplexError, Echelon, LinalgError, Quotient, SizeGuardError,
    SparseMap, TensorBasisIndexer, compose, homology, homology_dimension, make_space,
    rank, rank_and_kernel, size_cap, solve, tensor_map, tensor_space,
)


def dense(rows, field=QQ):
    return SparseMap.from_dense(rows, field=field)


# --- fields -------------------------------------------------------------------

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 10**6)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (QQ.one / a) == QQ.one


@given(st.sampled_from([2, 3, 5, 7, 13]), st.integers(-100, 100), st.integers(-100, 100))
def test_prime_field_axioms(p, x, y):
    F = GF(p)
    a, b = F(x), F(y)
    assert a + b == F(x + y)
    assert a * b == F(x * y)
    assert a - a == F.zero
    if a:
        assert a * (F.one / a) == F.one


def test_field_descriptors():
    assert field_from_descriptor("Q") is QQ
    assert field_from_descriptor("Fp:7") == GF(7)
    assert field_from_descriptor("GF(5)").characteristic == 5
    with pytest.raises(ValueError):
        field_from_descriptor("Fp:6")


def test_mod_round_trip():
    F = GF(7)
    assert F.parse("1/2") * F(2) == F.one
    assert F.format(F(-1)) == "6"
    assert isinstance(F(3), Mod)


# --- compose / tensor -----------------------------------------------------------


def test_compose_identity_and_zero():
    f = dense([[1, 2], [3, 4], [5, 6]])
    assert compose(SparseMap.identity(f.target), f) == f
    z = SparseMap.zero(BasedSpace(range(4)), f.source)
    assert compose(f, z).is_zero()


def test_compose_over_f2():
    F = GF(2)
    m = dense([[1, 1], [0, 1]], F)
    assert (m @ m).to_dense() == [[F(1), F(0)], [F(0), F(1)]]


def test_compose_mismatch():
    with pytest.raises(LinalgError):
        compose(dense([[1, 2]]), dense([[1, 2]]))


def test_tensor_identity_and_zero():
    A, B = make_space(["a", "b"], "A"), make_space(["u", "v", "w"], "B")
    idA, idB = SparseMap.identity(A), SparseMap.identity(B)
    assert tensor_map([idA, idB]) == SparseMap.identity(tensor_space(A, B))
    assert tensor_map([idA, SparseMap.zero(B, B)]).is_zero()


small_matrix = st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
                        min_size=2, max_size=2)


@given(small_matrix, small_matrix)
def test_tensor_matches_brute_kronecker(a, b):
    # oracle: entry ((i,k),(j,l)) of a (x) b is a[i][j] * b[k][l]
    m = tensor_map([dense(a), dense(b)]).to_dense()
    for i, j, k, l in itertools.product(range(2), repeat=4):
        assert m[2 * i + k][2 * j + l] == a[i][j] * b[k][l]


@given(small_matrix, small_matrix, small_matrix)
def test_tensor_associative(a, b, c):
    fa, fb, fc = dense(a), dense(b), dense(c)
    left = tensor_map([tensor_map([fa, fb]), fc])
    right = tensor_map([fa, tensor_map([fb, fc])])
    assert left.to_dense() == right.to_dense()
    assert left.source == right.source


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.data())
def test_indexer_bijection(dims, data):
    ix = TensorBasisIndexer(dims)
    flat = data.draw(st.integers(0, ix.size - 1))
    assert ix.encode(ix.decode(flat)) == flat
    assert list(ix)[flat] == ix.decode(flat)


# --- rank / kernel / homology ---------------------------------------------------


def test_rank_kernel_examples():
    z = SparseMap.zero(BasedSpace(range(3)), BasedSpace(range(3)))
    assert rank_and_kernel(z)[0] == 0 and len(rank_and_kernel(z)[1]) == 3
    i = SparseMap.identity(BasedSpace(range(3)))
    assert rank_and_kernel(i) == (3, [])
    r, ker = rank_and_kernel(dense([[1, 2], [2, 4]]))
    assert r == 1 and len(ker) == 1
    v = ker[0].entries
    # kernel spanned by (-2, 1)
    assert v[0] / v[1] == Fraction(-2)


matrices = st.integers(1, 5).flatmap(lambda n: st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(st.integers(-2, 2), min_size=k, max_size=k),
                       min_size=n, max_size=n)))


@given(matrices)
def test_rank_nullity(rows):
    m = dense(rows)
    r, ker = rank_and_kernel(m)
    assert r + len(ker) == m.source.dim
    for v in ker:
        assert m.apply(v.entries) == {}
    # kernel vectors are independent
    e = Echelon(QQ)
    assert all(e.add(v.entries) for v in ker)


@given(matrices)
def test_rank_over_fp_bounded_by_rank_over_q(rows):
    assert rank(dense(rows, GF(3))) <= rank(dense(rows))


def test_homology_dimension_trivial_cases():
    V = BasedSpace(range(4))
    z = SparseMap.zero(V, V)
    assert homology_dimension(z, z) == 4
    i = SparseMap.identity(V)
    assert homology_dimension(i, SparseMap.zero(V, BasedSpace(range(1)))) == 0


def test_homology_dimension_of_bar_degree_one():
    # HH_1 of Q[Z/2] from the unnormalized Hochschild boundaries b1, b2
    from hopfcyclic.constructions import cyclic_module_of_algebra
    from hopfcyclic.cyclic import b_operator
    from hopfcyclic.hopf import AlgebraData
    a = AlgebraData.from_table(["1", "g"], {(0, 0): {0: 1}, (0, 1): {1: 1},
                                            (1, 0): {1: 1}, (1, 1): {0: 1}}, {0: 1})
    c = cyclic_module_of_algebra(a)
    assert homology_dimension(b_operator(c, 2), b_operator(c, 1)) == 0


def test_broken_complex_reported():
    d = dense([[1]])
    with pytest.raises(BrokenComplexError):
        homology_dimension(d, d)


def test_homology_representatives():
    # C_1 = Q^2 -> C_0 = Q, (x, y) |-> x - y; no incoming boundary
    d1 = dense([[1, -1]])
    d2 = SparseMap.zero(BasedSpace(range(1)), d1.source)
    h = homology(d2, d1)
    assert h.dim == 1
    assert d1.apply(h.reps[0]) == {}


def test_quotient_and_solve():
    V = BasedSpace(range(3))
    q = Quotient(V, [{0: 1, 1: 1}], QQ)
    assert q.dim == 2
    assert q.contains({0: 2, 1: 2})
    # e0 and -e1 differ by the generator, so they have the same class
    assert q.project({0: 1}) == q.project({1: -1})
    m = dense([[1, 0], [0, 2], [0, 0]])
    x = solve(m, {1: 4})
    assert m.apply(x) == {1: 4}
    assert solve(m, {2: 1}) is None


def test_size_guard():
    A = make_space(range(10), "A")
    with size_cap(50):
        with pytest.raises(SizeGuardError):
            tensor_space(A, A, make_space(range(3), "B"))
