import pytest
from hypothesis import given, strategies as st

from hopfcyclic.constructions import (
    CoinvariantModule, Transport, coinvariant_module, coinvariant_spans_agree,
    crossed_cyclic_module, cyclic_module_of_algebra, natural_cylinder, phi_map,
    printed_op_cop_cyclic, psi_map, verify_chi, verify_phi_psi, verify_printed_s_inv,
    verify_transport,
)
from hopfcyclic.cyclic import verify_cyclic, verify_cylindrical
from hopfcyclic.hopf import MissingAntipodeInverse, crossed_product
from hopfcyclic.linalg import SparseMap
from hopfcyclic.report import Report, check_maps_equal

from conftest import preset


def vec(space, label):
    return {list(space.labels).index(label): 1}


# --- C(A) ------------------------------------------------------------------------


def test_cyclic_module_of_ground_field(trivial):
    c = cyclic_module_of_algebra(trivial.hopf.algebra)
    for n in range(3):
        assert c.level(n).dim == 1
        assert c.cyclic(n) == c.identity(n)
    assert verify_cyclic(c, 2).ok


def test_crossed_product_module_is_cyclic(sign):
    assert verify_cyclic(cyclic_module_of_algebra(crossed_product(sign)), 3).ok


# --- the natural cylinder ---------------------------------------------------------


def test_ground_hopf_cylinder_rotates(trivial):
    c = natural_cylinder(trivial)
    L = c.level(1, 1)
    # stored as (g_0, g_1 | a_1, a_0); t moves a_1 to the end, tbar is the identity
    assert c.cyclic(1, 1).apply(vec(L, ("1", "1", "1", "y"))) == vec(L, ("1", "1", "y", "1"))
    for p in range(3):
        for q in range(3):
            assert c.vcyclic(p, q) == c.identity(p, q)


@pytest.mark.parametrize("name, n", [("group-sign-z2", 2), ("sweedler4-dual-numbers", 1)])
def test_op_cop_cylinder(name, n):
    assert verify_cylindrical(natural_cylinder(preset(name), "op_cop"), n, n).ok


def test_op_cop_needs_inverse(sweedler):
    from hopfcyclic.hopf import HopfAlgebraData, ModuleAlgebraData
    h = sweedler.hopf
    bare = HopfAlgebraData(h.algebra, h.comul, h.counit, h.antipode, None, "H")
    m = ModuleAlgebraData(bare, sweedler.algebra, sweedler.action, "bare")
    with pytest.raises(MissingAntipodeInverse):
        natural_cylinder(m, "op_cop")
    with pytest.raises(MissingAntipodeInverse):
        coinvariant_module(m, "s_inv_form")


@pytest.mark.parametrize("name", ["group-sign-z2", "sweedler4-dual-numbers"])
def test_printed_op_cop_operators(name):
    m = preset(name)
    c = natural_cylinder(m, "op_cop")
    rep = Report("printed")
    for p in range(2):
        for q in range(2):
            tau, taubar = printed_op_cop_cyclic(m, p, q)
            check_maps_equal(rep, "t", tau, c.cyclic(p, q))
            check_maps_equal(rep, "tbar", taubar, c.vcyclic(p, q))
    assert rep.ok


# --- phi and psi ------------------------------------------------------------------


def test_phi_on_group_likes_in_degree_zero(z3):
    phi = phi_map(z3, 0)
    src = crossed_cyclic_module(z3).level(0)
    tgt = natural_cylinder(z3).level(0, 0)
    h, a = z3.hopf, z3.algebra
    inv = {"1": "1", "g": "g2", "g2": "g"}
    for g in h.labels:
        for x in a.labels:
            acted = z3.act(h.labels.index(inv[g]), a.labels.index(x))
            (y, c), = acted.items()
            assert phi.apply(vec(src, ((x, g),))) == {tgt.labels.index((g, a.labels[y])): c}


def test_phi_is_identity_for_ground_hopf(trivial):
    # a permutation of basis tensors: the a-slots are only reversed
    phi = phi_map(trivial, 1)
    assert all(len(col) == 1 and list(col.values()) == [1] for col in phi.cols)
    assert len({next(iter(col)) for col in phi.cols}) == phi.source.dim
    assert phi @ psi_map(trivial, 1) == SparseMap.identity(phi.target, trivial.field)


@pytest.mark.parametrize("name, n", [("group-sign-z2", 2), ("sweedler4-dual-numbers", 1),
                                     ("group-z3", 1)])
def test_phi_psi_inverse_and_equivariant(name, n):
    assert verify_phi_psi(preset(name), n).ok


@pytest.mark.parametrize("name", ["group-sign-z2", "sweedler4-dual-numbers"])
def test_phi_readings_coincide(name):
    m = preset(name)
    for n in range(2):
        assert phi_map(m, n, "proof") == phi_map(m, n, "statement")


@pytest.mark.parametrize("name", ["group-sign-z2", "sweedler4-dual-numbers"])
def test_printed_s_inverse_forms(name):
    assert verify_printed_s_inv(preset(name), 1).ok


# --- coinvariants -----------------------------------------------------------------


def test_sign_coinvariants_degree_zero(sign):
    cm = coinvariant_module(sign)
    assert len(cm.span(0)) <= 8
    assert cm.quotient(0).dim == 2


def test_trivial_coinvariants_are_cyclic_module_of_algebra(trivial):
    cm = coinvariant_module(trivial)
    ca = cyclic_module_of_algebra(trivial.algebra)
    for n in range(3):
        assert cm.quotient(n).dim == ca.level(n).dim


@pytest.mark.parametrize("name", ["group-sign-z2", "sweedler4-dual-numbers", "group-z3",
                                  "trivial-k"])
@pytest.mark.parametrize("form", ["cop_form", "s_inv_form"])
def test_coinvariant_module_is_cyclic(name, form):
    assert coinvariant_module(preset(name), form).verify(2).ok


def test_unknown_coinvariant_form(sign):
    with pytest.raises(ValueError):
        CoinvariantModule(sign, "nope")


@pytest.mark.parametrize("name", ["group-sign-z2", "sweedler4-dual-numbers"])
def test_two_coinvariant_spans_agree(name):
    for n in range(3):
        same, r1, r2 = coinvariant_spans_agree(preset(name), n)
        assert same and r1 == r2


# --- beta / gamma -----------------------------------------------------------------


def test_beta_gamma_trivial_at_p_zero(sign):
    tr = Transport(sign)
    for q in range(3):
        ident = SparseMap.identity(tr.level(0, q), sign.field)
        assert tr.beta(0, q) == ident and tr.gamma(0, q) == ident


@pytest.mark.parametrize("name, n", [("group-sign-z2", 2), ("sweedler4-dual-numbers", 1)])
def test_transport_closed_forms(name, n):
    assert verify_transport(preset(name), n, n).ok


@given(st.integers(0, 2), st.integers(0, 2), st.data())
def test_beta_gamma_inverse_on_random_vectors(p, q, data):
    tr = Transport(preset("sweedler4-dual-numbers"))
    L = tr.level(p, q)
    x = {data.draw(st.integers(0, L.dim - 1)): 1}
    assert tr.gamma(p, q).apply(tr.beta(p, q).apply(x)) == x


# --- chi --------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["group-sign-z2", "group-z3", "sweedler4-dual-numbers"])
@pytest.mark.parametrize("form", ["cop_form", "s_inv_form"])
def test_chi_is_cyclic_map(name, form):
    assert verify_chi(preset(name), 2, form).ok
