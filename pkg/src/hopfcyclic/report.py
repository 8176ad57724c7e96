"""Verification reports: an ordered list of named checks with witnesses."""

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    witness: str = None


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, name, ok, witness=None):
        self.checks.append(Check(name, bool(ok), None if ok else witness))
        return ok

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))
        return other.ok

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_dict(self):
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "witness": c.witness}
                       for c in self.checks],
        }

    def __str__(self):
        lines = ["%s: %s" % (self.title, "ok" if self.ok else "FAILED")]
        for c in self.checks:
            if c.ok:
                continue
            lines.append("  FAIL %s: %s" % (c.name, c.witness))
        return "\n".join(lines)


def check_maps_equal(report, name, lhs, rhs, row_labels=None, col_labels=None):
    """Record whether two maps have identical matrices (labels ignored)."""
    if lhs.shape != rhs.shape:
        return report.add(name, False, "shape %s vs %s" % (lhs.shape, rhs.shape))
    for j, (a, b) in enumerate(zip(lhs.cols, rhs.cols)):
        if a != b:
            rows = sorted(set(a) | set(b))
            i = next(r for r in rows if a.get(r, 0) != b.get(r, 0))
            cl = (col_labels or lhs.source.labels)[j]
            rl = (row_labels or lhs.target.labels)[i]
            return report.add(
                name, False,
                "on basis %s, coefficient of %s: %s != %s"
                % (_fmt(cl), _fmt(rl), a.get(i, 0), b.get(i, 0)))
    return report.add(name, True)


def check_zero(report, name, m):
    for j, col in enumerate(m.cols):
        if col:
            i = min(col)
            return report.add(
                name, False, "on basis %s, coefficient of %s is %s"
                % (_fmt(m.source.labels[j]), _fmt(m.target.labels[i]), col[i]))
    return report.add(name, True)


def _fmt(label):
    if isinstance(label, tuple):
        return "(" + ",".join(_fmt(x) for x in label) + ")"
    return str(label)
