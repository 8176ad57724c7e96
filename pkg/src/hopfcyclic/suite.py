"""Grouped verification runs shared by the command line and the tests."""

from hopfcyclic.constructions import (
    natural_cylinder, verify_phi_psi, verify_printed_s_inv,
)
from hopfcyclic.cyclic import diagonal, verify_cyclic, verify_cylindrical
from hopfcyclic.hopf import AxiomError, verify_module_algebra
from hopfcyclic.report import Report


def variants(m):
    return ["generic", "op_cop"] if m.hopf.has_antipode_inverse else ["generic"]


def cylinder_suite(m, p_max, q_max):
    """Cylindrical identities for A # H (and A^op # H^cop when S^-1 exists)."""
    rep = Report("cylinder %s" % m.name)
    for v in variants(m):
        c = natural_cylinder(m, v)
        rep.extend(verify_cylindrical(c, p_max, q_max), "%s: " % v)
    return rep


def diagonal_suite(m, n_max):
    """(tbar t)^(n+1) = id on the diagonal, n <= n_max."""
    rep = Report("diagonal %s" % m.name)
    for v in variants(m):
        c = natural_cylinder(m, v)
        rep.extend(verify_cyclic(diagonal(c, require_verified=False), n_max), "%s: " % v)
    return rep


def phi_psi_suite(m, n_max):
    """phi/psi under both exponent readings, plus the S-invertible printed forms."""
    rep = Report("phi/psi %s" % m.name)
    c = natural_cylinder(m)
    for reading in ("statement", "proof"):
        try:
            rep.extend(verify_phi_psi(m, n_max, c, reading), "%s: " % reading)
        except AxiomError as exc:
            # the crossed product of the input is not an algebra
            rep.add("%s: crossed product is an algebra" % reading, False,
                    str(exc).splitlines()[1].strip())
    if m.hopf.has_antipode_inverse:
        rep.extend(verify_printed_s_inv(m, n_max), "printed S^-1 forms: ")
    return rep


def structural_suite(m, p_max, q_max, n_max, axioms=True):
    """Axioms, cylinder, diagonal and phi/psi in one report."""
    rep = Report("structure %s" % m.name)
    if axioms:
        rep.extend(verify_module_algebra(m), "axioms: ")
    rep.extend(cylinder_suite(m, p_max, q_max), "")
    rep.extend(diagonal_suite(m, n_max), "")
    rep.extend(phi_psi_suite(m, n_max), "")
    return rep

