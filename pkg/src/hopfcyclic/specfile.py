"""
Spec files: a versioned JSON document describing a Hopf algebra H, an
algebra A and an action H (x) A -> A by sparse structure-constant lists.

Layout (version 1)::

    {
      "version": 1,
      "name": "group-sign-z2",
      "field": "Q",                       # or "Fp:7"
      "hopf": {
        "basis": ["1", "t"],
        "mul":      [[x, y, z, c], ...],  # x*y  += c z
        "unit":     [[z, c], ...],
        "comul":    [[x, y, z, c], ...],  # D(x) += c y(x)z
        "counit":   [[x, c], ...],
        "antipode": [[x, y, c], ...],     # S(x) += c y
        "antipode_inverse": [[x, y, c], ...]      (optional)
      },
      "algebra": {"basis": [...], "mul": [...], "unit": [...]},
      "action": [[h, a, b, c], ...],      # h.a  += c b
      "caps": {"max_degree": 2, "max_p": 2, "max_q": 2}   (optional)
    }

Scalars are written as integers or exact fractions "p/q" (residues over F_p).
"""

import json

from hopfcyclic.fields import field_from_descriptor
from hopfcyclic.hopf import (
    K_SPACE, AlgebraData, HopfAlgebraData, ModuleAlgebraData, require_ok,
    verify_module_algebra,
)
from hopfcyclic.linalg import BasedSpace, SparseMap, tensor_space

SPEC_VERSION = 1


class SpecError(ValueError):
    """Malformed spec file."""


def _index(labels, lab, where):
    try:
        return labels.index(lab)
    except ValueError:
        raise SpecError("unknown basis label %r in %s" % (lab, where)) from None


def _scalar(F, c, where):
    try:
        return F.parse(c)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError("bad scalar %r in %s: %s" % (c, where, exc)) from None


def _accumulate(col, k, v):
    x = col.get(k)
    x = v if x is None else x + v
    if x:
        col[k] = x
    else:
        col.pop(k, None)


def _algebra(F, d, name):
    try:
        labels = [str(x) for x in d["basis"]]
    except KeyError:
        raise SpecError("%s: missing basis" % name) from None
    if not labels:
        raise SpecError("%s: empty basis" % name)
    if len(set(labels)) != len(labels):
        raise SpecError("%s: duplicate basis labels" % name)
    space = BasedSpace(labels, name)
    n = len(labels)
    cols = [dict() for _ in range(n * n)]
    for entry in d.get("mul", []):
        if len(entry) != 4:
            raise SpecError("%s.mul entries need 4 fields" % name)
        x, y, z, c = entry
        i = _index(labels, str(x), name + ".mul")
        j = _index(labels, str(y), name + ".mul")
        k = _index(labels, str(z), name + ".mul")
        _accumulate(cols[i * n + j], k, _scalar(F, c, name + ".mul"))
    mul = SparseMap(tensor_space(space, space), space, cols, F)
    unit = {}
    for entry in d.get("unit", []):
        z, c = entry
        _accumulate(unit, _index(labels, str(z), name + ".unit"),
                    _scalar(F, c, name + ".unit"))
    return AlgebraData(space, mul, unit, F, name)


def _linear_map(F, entries, src, tgt, where):
    cols = [dict() for _ in range(src.dim)]
    for entry in entries:
        if len(entry) != 3:
            raise SpecError("%s entries need 3 fields" % where)
        x, y, c = entry
        i = _index(list(src.labels), str(x), where)
        k = _index(list(tgt.labels), str(y), where)
        _accumulate(cols[i], k, _scalar(F, c, where))
    return SparseMap(src, tgt, cols, F)


def build(spec):
    """Build ModuleAlgebraData from a spec dict (no axiom verification)."""
    if not isinstance(spec, dict):
        raise SpecError("spec must be a JSON object")
    if spec.get("version") != SPEC_VERSION:
        raise SpecError("unsupported spec version %r" % spec.get("version"))
    try:
        F = field_from_descriptor(spec.get("field", "Q"))
    except ValueError as exc:
        raise SpecError(str(exc)) from None
    try:
        hd = spec["hopf"]
        ad = spec["algebra"]
    except KeyError as exc:
        raise SpecError("missing section %s" % exc) from None
    halg = _algebra(F, hd, "H")
    H = halg.space
    n = H.dim
    cols = [dict() for _ in range(n)]
    for entry in hd.get("comul", []):
        if len(entry) != 4:
            raise SpecError("hopf.comul entries need 4 fields")
        x, y, z, c = entry
        i = _index(list(H.labels), str(x), "hopf.comul")
        j = _index(list(H.labels), str(y), "hopf.comul")
        k = _index(list(H.labels), str(z), "hopf.comul")
        _accumulate(cols[i], j * n + k, _scalar(F, c, "hopf.comul"))
    comul = SparseMap(H, tensor_space(H, H), cols, F)
    cols = [dict() for _ in range(n)]
    for entry in hd.get("counit", []):
        x, c = entry
        _accumulate(cols[_index(list(H.labels), str(x), "hopf.counit")], 0,
                    _scalar(F, c, "hopf.counit"))
    counit = SparseMap(H, K_SPACE, cols, F)
    antipode = None
    if "antipode" in hd:
        antipode = _linear_map(F, hd["antipode"], H, H, "hopf.antipode")
    inverse = None
    if hd.get("antipode_inverse") is not None:
        inverse = _linear_map(F, hd["antipode_inverse"], H, H, "hopf.antipode_inverse")
    hopf = HopfAlgebraData(halg, comul, counit, antipode, inverse, "H")
    alg = _algebra(F, ad, "A")
    A = alg.space
    da = A.dim
    cols = [dict() for _ in range(n * da)]
    for entry in spec.get("action", []):
        if len(entry) != 4:
            raise SpecError("action entries need 4 fields")
        h, a, b, c = entry
        i = _index(list(H.labels), str(h), "action")
        j = _index(list(A.labels), str(a), "action")
        k = _index(list(A.labels), str(b), "action")
        _accumulate(cols[i * da + j], k, _scalar(F, c, "action"))
    action = SparseMap(tensor_space(H, A), A, cols, F)
    return ModuleAlgebraData(hopf, alg, action, spec.get("name", "spec"))


def load(spec, verify=True):
    """Build and (by default) verify; raises AxiomError with the report."""
    m = build(spec)
    if verify:
        require_ok(verify_module_algebra(m))
    return m


def caps_of(spec):
    return dict(spec.get("caps", {}))


def parse_text(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("invalid JSON: %s" % exc) from None


def read(path):
    with open(path) as fh:
        return parse_text(fh.read())


def dumps(spec):
    return json.dumps(spec, indent=2, sort_keys=False) + "\n"


# ----------------------------------------------------------------------------
# serialization of in-memory data


def _algebra_dict(a, fmt):
    labels = list(a.labels)
    mul = [[labels[i], labels[j], labels[k], fmt(c)]
           for (i, j), k, c in a.structure_triples()]
    unit = [[labels[k], fmt(c)] for k, c in sorted(a.unit.entries.items())]
    return {"basis": labels, "mul": mul, "unit": unit}


def _map_entries(m, src_labels, tgt_labels, fmt):
    return [[src_labels[j], tgt_labels[i], fmt(c)]
            for j, col in enumerate(m.cols) for i, c in sorted(col.items())]


def to_spec(m, name=None, caps=None):
    """Serialize ModuleAlgebraData into a spec dict."""
    F = m.field
    fmt = F.format
    h, a = m.hopf, m.algebra
    hl, al = list(h.labels), list(a.labels)
    n = h.dim
    hd = _algebra_dict(h.algebra, fmt)
    hd["comul"] = [[hl[j], hl[k // n], hl[k % n], fmt(c)]
                   for j, col in enumerate(h.comul.cols) for k, c in sorted(col.items())]
    hd["counit"] = [[hl[j], fmt(c)] for j, col in enumerate(h.counit.cols)
                    for _, c in sorted(col.items())]
    if h.antipode is not None:
        hd["antipode"] = _map_entries(h.antipode, hl, hl, fmt)
    if h.antipode_inverse is not None:
        hd["antipode_inverse"] = _map_entries(h.antipode_inverse, hl, hl, fmt)
    da = a.dim
    action = [[hl[j // da], al[j % da], al[k], fmt(c)]
              for j, col in enumerate(m.action.cols) for k, c in sorted(col.items())]
    spec = {
        "version": SPEC_VERSION,
        "name": name or m.name,
        "field": F.name,
        "hopf": hd,
        "algebra": _algebra_dict(a, fmt),
        "action": action,
    }
    if caps:
        spec["caps"] = dict(caps)
    return spec
