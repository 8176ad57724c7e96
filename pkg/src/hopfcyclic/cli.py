"""
Command line interface.

    hopfcyclic presets list
    hopfcyclic presets dump NAME [--out FILE]
    hopfcyclic verify SPEC [--max-p P] [--max-q Q]
    hopfcyclic homology SPEC --theory hh|hc --target crossed|diagonal|coinvariant|invariant
    hopfcyclic compare SPEC [--max-degree N]
    hopfcyclic spectral SPEC [--max-p P] [--max-q Q] [--theory hh|hc]

SPEC is a preset name or a path to a JSON spec file.  Common flags:
--field overrides the field of the spec, --json switches to a single JSON
document, --out writes the report to a file.

Exit status: 0 all checks passed, 1 a check failed, 2 usage/parse error or
an input the requested construction does not support, 3 size guard.
"""

import argparse
import json
import os
import sys
import time

from hopfcyclic import presets, specfile
from hopfcyclic.constructions import (
    CoinvariantModule, crossed_cyclic_module, cyclic_module_of_algebra,
    natural_cylinder,
)
from hopfcyclic.cyclic import diagonal
from hopfcyclic.homology import (
    NotCyclicError, NotSemisimpleError, crossed_vs_coinvariant, cyclic_homology,
    hochschild, spectral_pages,
)
from hopfcyclic.hopf import (
    AxiomError, DegenerateInputError, MissingAntipodeInverse, crossed_product,
    find_right_integral, invariant_subalgebra, verify_module_algebra,
)
from hopfcyclic.linalg import SizeGuardError
from hopfcyclic.report import Report
from hopfcyclic.suite import cylinder_suite, diagonal_suite, phi_psi_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


class Refusal(Exception):
    """The requested computation does not apply to this input."""


# ----------------------------------------------------------------------------
# input


def load_spec(source, field=None):
    """Spec dict from a preset name or a file path; field overrides the descriptor."""
    if os.path.exists(source):
        spec = specfile.read(source)
        origin = "file"
    else:
        try:
            spec = presets.get(source)
        except presets.UnknownPreset:
            raise specfile.SpecError("no preset or file named %r" % source) from None
        origin = "preset"
    if field:
        spec = dict(spec)
        spec["field"] = field
    return spec, origin


def caps(spec, args, key, fallback=2):
    val = getattr(args, key, None)
    if val is not None:
        return val
    return specfile.caps_of(spec).get(key, fallback)


# ----------------------------------------------------------------------------
# output


def _grid(rows, row_name, col_name):
    if not rows:
        return "(empty)"
    width = max(len(str(x)) for r in rows for x in r) + 1
    ncol = len(rows[0])
    head = "%s\\%s " % (row_name, col_name) + "".join(str(j).rjust(width) for j in range(ncol))
    lines = [head]
    for i, r in enumerate(rows):
        lines.append(str(i).rjust(len(row_name) + len(col_name) + 1) + " " +
                     "".join(("-" if x is None else str(x)).rjust(width) for x in r))
    return "\n".join(lines)


class Document:
    def __init__(self, command, argv, spec, origin):
        self.data = {
            "command": command,
            "argv": list(argv),
            "input": {"name": spec.get("name"), "source": origin,
                      "field": spec.get("field", "Q")},
            "reports": [],
            "tables": {},
            "notes": [],
        }
        self.text = []
        self.ok = True
        self.t0 = time.perf_counter()

    def report(self, rep):
        self.ok = self.ok and rep.ok
        self.data["reports"].append(rep.to_dict())
        passed = sum(1 for c in rep.checks if c.ok)
        self.text.append("%s: %s (%d/%d checks)" % (rep.title, "ok" if rep.ok else "FAILED",
                                                    passed, len(rep.checks)))
        for c in rep.failures():
            self.text.append("  FAIL %s: %s" % (c.name, c.witness))

    def table(self, name, value, text=None):
        self.data["tables"][name] = value
        self.text.append(text if text is not None else "%s: %s" % (name, value))

    def note(self, msg):
        self.data["notes"].append(msg)
        self.text.append("note: " + msg)

    def render(self, as_json):
        self.data["ok"] = self.ok
        if as_json:
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        lines = ["%s  [%s, field %s]" % (self.data["command"], self.data["input"]["name"],
                                         self.data["input"]["field"])]
        lines += self.text
        lines.append("result: %s   (%.2f s)" % ("ok" if self.ok else "FAILED",
                                               time.perf_counter() - self.t0))
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# commands


def cmd_verify(args, doc, spec):
    m = specfile.build(spec)
    axioms = verify_module_algebra(m)
    doc.report(axioms)
    if not axioms.ok:
        return
    p_max, q_max = caps(spec, args, "max_p"), caps(spec, args, "max_q")
    doc.report(cylinder_suite(m, p_max, q_max))
    doc.report(diagonal_suite(m, min(p_max, q_max)))


def homology_target(m, target, theory):
    """The cyclic module whose HH/HC is requested."""
    if target == "crossed":
        return cyclic_module_of_algebra(crossed_product(m))
    if target == "diagonal":
        return diagonal(natural_cylinder(m), require_verified=False)
    if target == "coinvariant":
        return CoinvariantModule(m, "cop_form").module
    if target == "invariant":
        sub, _ = invariant_subalgebra(m)
        return cyclic_module_of_algebra(sub)
    raise Refusal("unknown target %r" % target)


def cmd_homology(args, doc, spec):
    m = specfile.load(spec)
    n_max = caps(spec, args, "max_degree")
    mod = homology_target(m, args.target, args.theory)
    if args.theory == "hc":
        dims = cyclic_homology(mod, n_max)
    else:
        dims = hochschild(mod, n_max)
    doc.table("%s(%s)" % (args.theory.upper(), args.target), dims)


def cmd_compare(args, doc, spec):
    m = specfile.load(spec)
    n_max = caps(spec, args, "max_degree")
    doc.report(phi_psi_suite(m, n_max))
    diag = diagonal(natural_cylinder(m), require_verified=False)
    cross = crossed_cyclic_module(m)
    doc.table("HH(diagonal)", hochschild(diag, n_max))
    doc.table("HH(A^op><H^cop)", hochschild(cross, n_max))
    try:
        rep = crossed_vs_coinvariant(m, n_max, "hc")
    except (NotSemisimpleError, MissingAntipodeInverse) as exc:
        doc.note("crossed product vs coinvariants: unsupported (%s)" % exc)
        return
    doc.report(rep)
    for k, v in rep.table.items():
        doc.table("HC(%s)" % k, v)


def cmd_spectral(args, doc, spec):
    m = specfile.load(spec)
    p_max, q_max = caps(spec, args, "max_p"), caps(spec, args, "max_q")
    sp = spectral_pages(m, p_max, q_max)
    d = sp.to_dict()
    for page in ("E0", "E1", "E2"):
        doc.table(page, d[page], "%s (rows p = A-degree, columns q = Hopf degree)\n%s"
                  % (page, _grid(d[page], "p", "q")))
    doc.table("d1_rank", d["d1_rank"])
    doc.table("d2_rank", d["d2_rank"])
    n_cap = min(p_max, q_max)
    hh = hochschild(crossed_cyclic_module(m), n_cap)
    doc.table("E2_totals", d["E2_totals"])
    doc.table("total_homology", d["total_homology"])
    doc.table("HH(A^op><H^cop)", hh)
    if find_right_integral(m.hopf) is not None:
        rep = Report("semisimple collapse")
        for p in range(p_max + 1):
            for q in range(1, q_max + 1):
                rep.add("E1[%d][%d] = 0" % (p, q), sp.e1[p][q] == 0, "dim %d" % sp.e1[p][q])
        doc.report(rep)
    if args.theory == "hc":
        ce2 = sp.cyclic_e2()
        doc.table("E2_cyclic", ce2, "E2 cyclic (HC of the rows H_q(H, C_*))\n%s"
                  % _grid(ce2, "p", "q"))
        try:
            hc = cyclic_homology(crossed_cyclic_module(m), n_cap)
            doc.table("HC(A^op><H^cop)", hc)
        except NotCyclicError as exc:
            doc.note(str(exc))


def cmd_presets(args):
    if args.action == "list":
        return "".join(n + "\n" for n in presets.names())
    if not args.name:
        raise Refusal("presets dump needs a preset name")
    return specfile.dumps(presets.get(args.name))


# ----------------------------------------------------------------------------
# parser


def build_parser():
    parser = argparse.ArgumentParser(prog="hopfcyclic", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=False, pq=False, theory=False):
        p.add_argument("spec", help="preset name or JSON spec file")
        p.add_argument("--field", help="override the field: Q or Fp:<p>")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write the report to this file")
        if degree:
            p.add_argument("--max-degree", type=int, dest="max_degree")
        if pq:
            p.add_argument("--max-p", type=int, dest="max_p")
            p.add_argument("--max-q", type=int, dest="max_q")
        if theory:
            p.add_argument("--theory", choices=["hh", "hc"], default="hh")

    common(sub.add_parser("verify", help="axioms and cylindrical identities"), pq=True)
    h = sub.add_parser("homology", help="HH or HC dimensions")
    common(h, degree=True, theory=True)
    h.add_argument("--target", choices=["crossed", "diagonal", "coinvariant", "invariant"],
                   default="crossed")
    common(sub.add_parser("compare", help="phi/psi and crossed vs coinvariant"), degree=True)
    common(sub.add_parser("spectral", help="spectral sequence pages"), pq=True, theory=True)
    pr = sub.add_parser("presets", help="list or dump built-in presets")
    pr.add_argument("action", choices=["list", "dump"])
    pr.add_argument("name", nargs="?")
    pr.add_argument("--out")
    return parser


COMMANDS = {"verify": cmd_verify, "homology": cmd_homology, "compare": cmd_compare,
            "spectral": cmd_spectral}


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "presets":
            _emit(cmd_presets(args), args.out)
            return EXIT_OK
        spec, origin = load_spec(args.spec, args.field)
        doc = Document(args.command, argv, spec, origin)
        if str(spec.get("field", "Q")) != "Q":
            doc.note("finite field: dimensions may differ from those over Q")
        COMMANDS[args.command](args, doc, spec)
    except (presets.UnknownPreset, specfile.SpecError, DegenerateInputError, Refusal,
            MissingAntipodeInverse, NotCyclicError, NotSemisimpleError, OSError) as exc:
        sys.stderr.write("error: %s\n" % (exc.args[0] if exc.args else exc))
        return EXIT_USAGE
    except AxiomError as exc:
        sys.stderr.write("%s\n" % exc.report)
        return EXIT_FAILED
    except SizeGuardError as exc:
        sys.stderr.write("size guard: %s\n" % exc)
        return EXIT_SIZE
    _emit(doc.render(args.json), args.out)
    return EXIT_OK if doc.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
