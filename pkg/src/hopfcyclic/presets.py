"""
Built-in presets, each a spec dict (see specfile).

  trivial-k               H = k acting on the dual numbers k[y]/(y^2)
  group-z2                Q[Z/2] acting trivially on Q
  group-z3                Q[Z/3] acting on Q^3 = functions on Z/3 by translation
  group-s3                Q[S_3] acting trivially on Q
  group-sign-z2           Q[Z/2] acting on Q[Z/2] by s |-> -s
  sweedler4-dual-numbers  Sweedler's H_4 acting on Q[y]/(y^2), g.y=-y, x.y=1
  taft-3                  Taft algebra T_3 over F_7 (q = 2) acting on F_7[y]/(y^3)
"""

import itertools
from fractions import Fraction

from hopfcyclic.fields import GF
from hopfcyclic.specfile import SPEC_VERSION


def _s(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _group_hopf(elements, mult, inverse):
    """Group algebra of a finite group: elements are labels."""
    return {
        "basis": list(elements),
        "mul": [[a, b, mult(a, b), "1"] for a in elements for b in elements],
        "unit": [[elements[0], "1"]],
        "comul": [[g, g, g, "1"] for g in elements],
        "counit": [[g, "1"] for g in elements],
        "antipode": [[g, inverse(g), "1"] for g in elements],
        "antipode_inverse": [[g, inverse(g), "1"] for g in elements],
    }


def _cyclic_group(n, gen="g"):
    names = ["1"] + [gen if k == 1 else "%s%d" % (gen, k) for k in range(1, n)]
    idx = {x: k for k, x in enumerate(names)}
    return names, (lambda a, b: names[(idx[a] + idx[b]) % n]), \
        (lambda a: names[(-idx[a]) % n])


def _ground_algebra():
    return {"basis": ["1"], "mul": [["1", "1", "1", "1"]], "unit": [["1", "1"]]}


def _trivial_action(hopf, alg):
    counit = {x: c for x, c in hopf["counit"]}
    return [[h, a, a, counit[h]] for h in hopf["basis"] if h in counit
            for a in alg["basis"]]


def _truncated_poly(n, var="y"):
    """k[y]/(y^n) with basis 1, y, y2, ..."""
    names = ["1"] + [var if k == 1 else "%s%d" % (var, k) for k in range(1, n)]
    mul = [[names[i], names[j], names[i + j], "1"]
           for i in range(n) for j in range(n) if i + j < n]
    return names, {"basis": names, "mul": mul, "unit": [["1", "1"]]}


def trivial_k():
    hopf = {"basis": ["1"], "mul": [["1", "1", "1", "1"]], "unit": [["1", "1"]],
            "comul": [["1", "1", "1", "1"]], "counit": [["1", "1"]],
            "antipode": [["1", "1", "1"]], "antipode_inverse": [["1", "1", "1"]]}
    _, alg = _truncated_poly(2)
    return _spec("trivial-k", "Q", hopf, alg, _trivial_action(hopf, alg),
                 {"max_degree": 3, "max_p": 2, "max_q": 2})


def group_z2():
    names, mult, inv = _cyclic_group(2)
    hopf = _group_hopf(names, mult, inv)
    alg = _ground_algebra()
    return _spec("group-z2", "Q", hopf, alg, _trivial_action(hopf, alg),
                 {"max_degree": 3, "max_p": 3, "max_q": 3})


def group_z3():
    names, mult, inv = _cyclic_group(3)
    hopf = _group_hopf(names, mult, inv)
    idem = ["e0", "e1", "e2"]
    alg = {"basis": idem, "mul": [[e, e, e, "1"] for e in idem],
           "unit": [[e, "1"] for e in idem]}
    action = [[g, idem[i], idem[(i + k) % 3], "1"]
              for k, g in enumerate(names) for i in range(3)]
    return _spec("group-z3", "Q", hopf, alg, action,
                 {"max_degree": 2, "max_p": 2, "max_q": 2})


def group_s3():
    perms = list(itertools.permutations(range(3)))
    names = ["".join(map(str, p)) for p in perms]
    lookup = dict(zip(perms, names))
    rev = dict(zip(names, perms))

    def mult(a, b):
        pa, pb = rev[a], rev[b]
        return lookup[tuple(pa[pb[i]] for i in range(3))]

    def inv(a):
        pa = rev[a]
        out = [0] * 3
        for i, x in enumerate(pa):
            out[x] = i
        return lookup[tuple(out)]

    hopf = _group_hopf(names, mult, inv)
    alg = _ground_algebra()
    return _spec("group-s3", "Q", hopf, alg, _trivial_action(hopf, alg),
                 {"max_degree": 2, "max_p": 2, "max_q": 2})


def group_sign_z2():
    names, mult, inv = _cyclic_group(2, "t")
    hopf = _group_hopf(names, mult, inv)
    alg = {"basis": ["1", "s"],
           "mul": [["1", "1", "1", "1"], ["1", "s", "s", "1"],
                   ["s", "1", "s", "1"], ["s", "s", "1", "1"]],
           "unit": [["1", "1"]]}
    action = [["1", "1", "1", "1"], ["1", "s", "s", "1"],
              ["t", "1", "1", "1"], ["t", "s", "s", "-1"]]
    return _spec("group-sign-z2", "Q", hopf, alg, action,
                 {"max_degree": 3, "max_p": 2, "max_q": 2})


def _taft(n, q, p):
    """Taft algebra T_n over F_p with primitive n-th root q: g^n=1, x^n=0, xg=q gx.

    Basis g^i x^j labelled "g^i x^j"; Delta g = g(x)g, Delta x = x(x)1 + g(x)x.
    """
    F = GF(p)

    def lab(i, j):
        parts = []
        if i:
            parts.append("g" if i == 1 else "g%d" % i)
        if j:
            parts.append("x" if j == 1 else "x%d" % j)
        return "".join(parts) or "1"

    basis = [(i, j) for i in range(n) for j in range(n)]
    labels = [lab(i, j) for i, j in basis]

    def mul(a, b):
        # (g^i x^j)(g^k x^l) = q^(j k) g^(i+k) x^(j+l)
        (i, j), (k, l) = a, b
        if j + l >= n:
            return None
        return (i + k) % n, j + l, F(q) ** (j * k)

    # q-binomial coefficients for Delta(x^j) = sum_k [j,k]_q g^(j-k) x^k (x) x^(j-k)
    def qint(m):
        return sum((F(q) ** t for t in range(m)), F(0))

    def qfact(m):
        out = F(1)
        for t in range(1, m + 1):
            out = out * qint(t)
        return out

    def qbinom(m, k):
        return qfact(m) / (qfact(k) * qfact(m - k))

    mul_entries, comul, counit, antipode = [], [], [], []
    for a in basis:
        for b in basis:
            r = mul(a, b)
            if r:
                mul_entries.append([lab(*a), lab(*b), lab(r[0], r[1]), F.format(r[2])])
    for i, j in basis:
        # Delta(g^i x^j) = (g^i (x) g^i) Delta(x)^j, and with u = x(x)1, v = g(x)x
        # one has u v = q v u, so Delta(x)^j = sum_k [j,k]_q v^k u^(j-k)
        for k in range(j + 1):
            c = qbinom(j, k)
            if c:
                comul.append([lab(i, j), lab((i + k) % n, j - k), lab(i, k), F.format(c)])
        if j == 0:
            counit.append([lab(i, j), "1"])
    # S(g) = g^-1, S(x) = -g^-1 x; S anti-multiplicative:
    # S(g^i x^j) = S(x)^j S(g)^i
    def mul_elems(x, y):
        out = {}
        for a, c in x.items():
            for b, d in y.items():
                r = mul(a, b)
                if r:
                    key = (r[0], r[1])
                    out[key] = out.get(key, F(0)) + c * d * r[2]
        return {k: v for k, v in out.items() if v}

    def power(x, e):
        out = {(0, 0): F(1)}
        for _ in range(e):
            out = mul_elems(out, x)
        return out

    Sg = {((n - 1) % n, 0): F(1)}
    Sx = {((n - 1) % n, 1): F(-1)}
    for i, j in basis:
        s = mul_elems(power(Sx, j), power(Sg, i))
        for key, c in sorted(s.items()):
            antipode.append([lab(i, j), lab(*key), F.format(c)])
    hopf = {"basis": labels, "mul": mul_entries, "unit": [["1", "1"]],
            "comul": comul, "counit": counit, "antipode": antipode}
    return hopf, labels, mul_elems, power, F


def taft_3():
    n, q, p = 3, 2, 7
    hopf, labels, mul_elems, power, F = _taft(n, q, p)
    # S^-1 by inverting the matrix of S
    from hopfcyclic.specfile import build
    from hopfcyclic.hopf import invert
    tmp = _spec("taft-3", "Fp:%d" % p, hopf, _truncated_poly(n)[1], [], {})
    H = build(tmp).hopf
    inv = invert(H.antipode)
    hopf["antipode_inverse"] = [[labels[j], labels[i], F.format(c)]
                                for j, col in enumerate(inv.cols)
                                for i, c in sorted(col.items())]
    ynames, alg = _truncated_poly(n)
    # g.y^k = q^k y^k ; x.y^k = (1 + q + ... + q^(k-1)) y^(k-1)
    action = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # (g^i x^j) . y^k = g^i . (x^j . y^k)
                c = F(1)
                kk = k
                ok = True
                for _ in range(j):
                    if kk == 0:
                        ok = False
                        break
                    c = c * sum((F(q) ** t for t in range(kk)), F(0))
                    kk -= 1
                if not ok:
                    continue
                c = c * F(q) ** (i * kk)
                if c:
                    action.append([labels[i * n + j], ynames[k], ynames[kk], F.format(c)])
    return _spec("taft-3", "Fp:%d" % p, hopf, alg, action,
                 {"max_degree": 1, "max_p": 1, "max_q": 1})


def sweedler4_dual_numbers():
    # basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx
    labels = ["1", "g", "x", "gx"]
    table = {
        ("1", "1"): {"1": 1}, ("1", "g"): {"g": 1}, ("1", "x"): {"x": 1}, ("1", "gx"): {"gx": 1},
        ("g", "1"): {"g": 1}, ("g", "g"): {"1": 1}, ("g", "x"): {"gx": 1}, ("g", "gx"): {"x": 1},
        ("x", "1"): {"x": 1}, ("x", "g"): {"gx": -1}, ("x", "x"): {}, ("x", "gx"): {},
        ("gx", "1"): {"gx": 1}, ("gx", "g"): {"x": -1}, ("gx", "x"): {}, ("gx", "gx"): {},
    }
    mul = [[a, b, c, _s(v)] for (a, b), out in table.items() for c, v in out.items()]
    comul = [["1", "1", "1", "1"], ["g", "g", "g", "1"],
             ["x", "x", "1", "1"], ["x", "g", "x", "1"],
             ["gx", "gx", "g", "1"], ["gx", "1", "gx", "1"]]
    counit = [["1", "1"], ["g", "1"]]
    antipode = [["1", "1", "1"], ["g", "g", "1"], ["x", "gx", "-1"], ["gx", "x", "1"]]
    # S^2 = conjugation by g (x -> -x, gx -> -gx), so S^-1 = S^3
    antipode_inverse = [["1", "1", "1"], ["g", "g", "1"], ["x", "gx", "1"], ["gx", "x", "-1"]]
    hopf = {"basis": labels, "mul": mul, "unit": [["1", "1"]], "comul": comul,
            "counit": counit, "antipode": antipode, "antipode_inverse": antipode_inverse}
    _, alg = _truncated_poly(2)
    action = [["1", "1", "1", "1"], ["1", "y", "y", "1"],
              ["g", "1", "1", "1"], ["g", "y", "y", "-1"],
              ["x", "y", "1", "1"],
              ["gx", "y", "1", "1"]]
    return _spec("sweedler4-dual-numbers", "Q", hopf, alg, action,
                 {"max_degree": 2, "max_p": 1, "max_q": 1})


def _spec(name, field, hopf, alg, action, caps):
    return {"version": SPEC_VERSION, "name": name, "field": field,
            "hopf": hopf, "algebra": alg, "action": action, "caps": caps}


PRESETS = {
    "trivial-k": trivial_k,
    "group-z2": group_z2,
    "group-z3": group_z3,
    "group-s3": group_s3,
    "group-sign-z2": group_sign_z2,
    "sweedler4-dual-numbers": sweedler4_dual_numbers,
    "taft-3": taft_3,
}


class UnknownPreset(KeyError):
    pass


def names():
    return list(PRESETS)


def get(name):
    try:
        return PRESETS[name]()
    except KeyError:
        raise UnknownPreset(name) from None


def load(name, verify=True):
    from hopfcyclic import specfile
    return specfile.load(get(name), verify=verify)
