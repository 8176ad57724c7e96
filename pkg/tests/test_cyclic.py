from math import comb

import pytest
from hypothesis import given, strategies as st

from hopfcyclic.constructions import cyclic_module_of_algebra, natural_cylinder
from hopfcyclic.cyclic import (
    B_operator, NormalizedModule, ParacyclicModule, UnverifiedError, b_operator,
    diagonal, is_cyclic_at, normalized_complex, parachain, shuffle_descends, shuffle_f0,
    shuffles, tot_parachain, verify_cyclic, verify_cylindrical, verify_paracyclic,
    verify_parachain,
)
from hopfcyclic.homology import ChainComplex, hochschild
from hopfcyclic.linalg import SparseMap

from conftest import preset


def group_algebra_module(z2):
    return cyclic_module_of_algebra(z2.hopf.algebra)


def vec(space, label):
    return {list(space.labels).index(label): 1}


# --- cyclic modules of algebras -----------------------------------------------------


def test_cyclic_module_of_group_algebra_is_cyclic(z2):
    assert verify_cyclic(group_algebra_module(z2), 3).ok


def test_rotation_and_last_face(z2):
    c = group_algebra_module(z2)
    X1, X0 = c.level(1), c.level(0)
    # t(a (x) b) = b (x) a, d_1(a (x) b) = b a
    assert c.cyclic(1).apply(vec(X1, ("1", "g"))) == vec(X1, ("g", "1"))
    assert c.face(1, 1).apply(vec(X1, ("g", "g"))) == vec(X0, ("1",))


def test_connes_B_in_degree_zero(z2):
    c = group_algebra_module(z2)
    # unnormalized B(a) = 1 (x) a + a (x) 1 on C_0
    got = B_operator(c, 0).apply(vec(c.level(0), ("g",)))
    want = {**vec(c.level(1), ("1", "g")), **vec(c.level(1), ("g", "1"))}
    assert got == want


def test_corrupted_cyclic_operator_has_witness(z2):
    c = group_algebra_module(z2)
    bad = ParacyclicModule(c.level, c.face, c.degeneracy, c.identity, c.field, "bad")
    rep = verify_paracyclic(bad, 2)
    names = [f.name for f in rep.failures()]
    assert "d0 t = d2 @2" in names
    assert rep.failures()[0].witness.startswith("on basis")


def test_algebra_parachain_is_mixed(sign):
    from hopfcyclic.hopf import crossed_product
    c = cyclic_module_of_algebra(crossed_product(sign))
    assert verify_parachain(parachain(c), 2, mixed=True).ok
    assert verify_parachain(normalized_complex(c), 2, mixed=True).ok


def test_normalized_degree_one(z2):
    # C_1 / im s_0 has dimension 4 - 2
    n = NormalizedModule(group_algebra_module(z2))
    assert n.quotient(0).dim == 2
    assert n.quotient(1).dim == 2


@pytest.mark.parametrize("name", ["group-z2", "group-sign-z2", "trivial-k"])
def test_normalized_and_unnormalized_hh_agree(name):
    from hopfcyclic.hopf import crossed_product
    c = cyclic_module_of_algebra(crossed_product(preset(name)))
    assert hochschild(c, 2) == hochschild(c, 2, normalized=False)


def test_hh_of_ground_field(trivial):
    k = trivial.hopf.algebra
    assert k.dim == 1
    assert hochschild(cyclic_module_of_algebra(k), 3) == [1, 0, 0, 0]


# --- cylinders ----------------------------------------------------------------------


def test_sign_cylinder_rows_are_not_cyclic(sign):
    c = natural_cylinder(sign)
    row = c.row(1)
    assert verify_paracyclic(row, 2).ok
    assert not any(is_cyclic_at(row, n) for n in range(3))


def test_sign_cylinder_p_q_one(sign):
    c = natural_cylinder(sign)
    assert c.level(1, 1).dim == 16
    t, tb = c.cyclic(1, 1), c.vcyclic(1, 1)
    assert tb.power(2) @ t.power(2) == c.identity(1, 1)
    assert t.power(2) != c.identity(1, 1)


def test_sweedler_cylinder_holds_without_involutive_antipode(sweedler):
    S = sweedler.hopf.antipode
    assert S @ S != SparseMap.identity(S.source)
    assert verify_cylindrical(natural_cylinder(sweedler), 1, 1).ok


def test_swapped_exponents_fail(sign):
    # tbar^(q+1) t^(p+1) = id is false off the diagonal
    rep = verify_cylindrical(natural_cylinder(sign), 1, 2, exponents="swapped")
    assert not rep.ok
    assert all("@(0,1)" in f.name or "@(0,2)" in f.name or "@(1,0)" in f.name
               or "@(1,2)" in f.name for f in rep.failures())


def test_diagonal_requires_verification(sign):
    with pytest.raises(UnverifiedError):
        diagonal(natural_cylinder(sign))


@pytest.mark.parametrize("name, n", [("group-sign-z2", 2), ("sweedler4-dual-numbers", 2),
                                     ("group-z3", 1)])
def test_diagonal_is_cyclic(name, n):
    d = diagonal(natural_cylinder(preset(name)), require_verified=False)
    assert verify_cyclic(d, n).ok


# --- Tot and shuffles ---------------------------------------------------------------


def test_normalized_tot_is_mixed(sign):
    tot = tot_parachain(natural_cylinder(sign), normalized=True)
    assert verify_parachain(tot, 2, mixed=True).ok


def test_unnormalized_tot_has_b_squared_zero(sign):
    tot = tot_parachain(natural_cylinder(sign), normalized=False)
    assert ChainComplex(tot.space, tot.b, sign.field).check_squares(3).ok


@pytest.mark.parametrize("name", ["group-sign-z2", "trivial-k"])
def test_shuffle_is_chain_map(name):
    m = preset(name)
    c = natural_cylinder(m)
    tot = tot_parachain(c)
    nd = normalized_complex(diagonal(c, require_verified=False))
    for n in (1, 2):
        assert nd.b(n) @ shuffle_f0(c, n) == shuffle_f0(c, n - 1) @ tot.b(n)
        assert shuffle_descends(c, n)


def test_tot_and_diagonal_hh_agree(sign):
    c = natural_cylinder(sign)
    tot = tot_parachain(c)
    d = diagonal(c, require_verified=False)
    assert ChainComplex(tot.space, tot.b, sign.field).dims(2) == hochschild(d, 2)


@given(st.integers(0, 4), st.integers(0, 4))
def test_shuffle_enumeration(p, q):
    sh = shuffles(p, q)
    assert len(sh) == comb(p + q, p)
    for mu, nu, sign in sh:
        perm = list(mu) + list(nu)
        assert sorted(perm) == list(range(p + q))
        # sign by counting inversions of the concatenation directly
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                  if perm[i] > perm[j])
        assert sign == (-1) ** inv


@given(st.integers(0, 3), st.data())
def test_b_squared_zero_on_random_chains(n, data):
    c = cyclic_module_of_algebra(preset("sweedler4-dual-numbers").algebra)
    X = c.level(n + 2)
    x = {i: data.draw(st.integers(-2, 2)) for i in range(X.dim)}
    x = {i: v for i, v in x.items() if v}
    assert b_operator(c, n + 1).apply(b_operator(c, n + 2).apply(x)) == {}
