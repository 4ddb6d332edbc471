"""Property deciders for modules and split complexes.

Two independent routes are provided for the derived properties: a
module-category route (per-projective approximation sequences inside a single
homology slice, with a kernel-membership test) and a derived route (mapping
cones of the approximation sequence of the shifted projective).  Their
agreement is part of the test suite.

Precondition failures (non-basic object, endomorphism algebra not
hereditary) are reported as "not applicable" -- false for classification
purposes but distinguished from a genuine condition failure.
"""

from dataclasses import dataclass, field

from .derived import DerivedObject, cone
from .endalg import (
    corner_decomposition,
    end_of,
    is_hereditary,
    PreconditionError,
)
from .approx import (
    is_exact_at_middle,
    is_exact_sequence_with_zero,
    is_injective,
    min_left_approx_sequence,
    to_rep_morphism,
)
from .quiver import Algebra, Interval
from . import reps


@dataclass
class ProjectiveReport:
    vertex: int
    degrees_found: list
    approx_summands: list = field(default_factory=list)
    kernel_intervals: dict = field(default_factory=dict)
    exact: bool = None
    verdict: bool = False

    def as_dict(self):
        return {
            "vertex": self.vertex,
            "degrees_found": list(self.degrees_found),
            "approx_summands": [
                {"a": iv.a, "b": iv.b, "shift": s}
                for iv, s in self.approx_summands
            ],
            "kernel_intervals": {
                "X(%d,%d)" % (iv.a, iv.b): m
                for iv, m in sorted(self.kernel_intervals.items())
            },
            "exact": self.exact,
            "verdict": self.verdict,
        }


@dataclass
class DeciderReport:
    name: str
    verdict: bool
    applicable: bool = True
    reasons: list = field(default_factory=list)
    projectives: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict

    def as_dict(self):
        return {
            "check": self.name,
            "verdict": self.verdict,
            "applicable": self.applicable,
            "reasons": list(self.reasons),
            "projectives": [p.as_dict() for p in self.projectives],
        }


def _basic_support(multiset):
    """The distinct intervals of a multiset (add-closure representative)."""
    return sorted(iv for iv, m in multiset.items() if m > 0)


def _module_object(alg, intervals, shift=0):
    return DerivedObject(alg, [(iv, shift) for iv in intervals])


def _degrees_supporting(x, vertex):
    return sorted({s for iv, s in x.summands if iv.a <= vertex <= iv.b})


def check_module_dcp(alg, multiset):
    """A module has the double centraliser property iff the minimal left
    approximation f of the regular module is injective and the induced
    sequence is exact at the middle term."""
    support = _basic_support(multiset)
    report = DeciderReport("dcp", False)
    if not support:
        report.reasons.append("zero module cannot approximate the algebra")
        return report
    t = _module_object(alg, support)
    y = _module_object(alg, [alg.projective(i) for i in range(1, alg.n + 1)])
    seq = min_left_approx_sequence(y, t)
    f = to_rep_morphism(seq.f)
    g = to_rep_morphism(seq.g)
    inj = is_injective(f)
    exact = is_exact_at_middle(f, g)
    report.verdict = inj and exact
    if not inj:
        report.reasons.append("approximation of the regular module not injective")
    if not exact:
        report.reasons.append("sequence not exact at the middle term")
    return report


def check_tilting_module(alg, multiset):
    """Tilting test for a module whose endomorphism algebra is hereditary:
    the minimal sequence 0 -> A -> M0 -> M1 -> 0 must be exact throughout."""
    support = _basic_support(multiset)
    report = DeciderReport("tilting-module", False)
    if not support:
        report.applicable = False
        report.reasons.append("zero module")
        return report
    t = _module_object(alg, support)
    if not is_hereditary(end_of(t)):
        report.applicable = False
        report.reasons.append("endomorphism algebra is not hereditary")
        return report
    y = _module_object(alg, [alg.projective(i) for i in range(1, alg.n + 1)])
    seq = min_left_approx_sequence(y, t)
    f = to_rep_morphism(seq.f)
    g = to_rep_morphism(seq.g)
    inj = is_injective(f)
    exact = is_exact_sequence_with_zero(f, g)
    report.verdict = inj and exact
    if not inj:
        report.reasons.append("approximation of the regular module not injective")
    if not exact:
        report.reasons.append("sequence not exact (middle or surjectivity)")
    return report


def _preconditions(x, name):
    report = DeciderReport(name, False)
    if x.is_zero():
        report.applicable = False
        report.reasons.append("zero object")
        return report, None
    if not x.is_basic():
        report.applicable = False
        report.reasons.append("object is not basic")
        return report, None
    algebra = end_of(x)
    if not is_hereditary(algebra):
        report.applicable = False
        report.reasons.append("endomorphism algebra is not hereditary")
        return report, None
    return report, algebra


def check_ddcp(x):
    """Module-category route: for every indecomposable projective P(e),
    a unique supporting shift i; the minimal left approximation of P(e) by
    the shift-i slice is exact at the middle, with kernel inside the additive
    closure of the shift-(i+1) slice."""
    alg = x.alg
    report, _ = _preconditions(x, "ddcp")
    if not report.applicable:
        return report
    ok = True
    for e in range(1, alg.n + 1):
        pr = ProjectiveReport(e, _degrees_supporting(x, e))
        report.projectives.append(pr)
        if len(pr.degrees_found) != 1:
            ok = False
            continue
        i = pr.degrees_found[0]
        slice_i = _basic_support(x.slice(i))
        slice_next = set(_basic_support(x.slice(i + 1)))
        t = _module_object(alg, slice_i)
        y = _module_object(alg, [alg.projective(e)])
        seq = min_left_approx_sequence(y, t)
        pr.approx_summands = list(seq.t0.summands)
        f = to_rep_morphism(seq.f)
        g = to_rep_morphism(seq.g)
        pr.exact = is_exact_at_middle(f, g)
        ker, _ = reps.kernel(f)
        pr.kernel_intervals = reps.interval_decompose(ker)
        in_add = all(iv in slice_next for iv in pr.kernel_intervals)
        pr.verdict = pr.exact and in_add
        ok = ok and pr.verdict
    report.verdict = ok
    return report


def check_ddcp_derived(x):
    """Derived route: the mapping cone of g in the minimal left add-x
    approximation sequence of P(e)[i] must have shift-(i+1) slice exactly
    {P(e)}."""
    alg = x.alg
    report, algebra = _preconditions(x, "ddcp-derived")
    if not report.applicable:
        return report
    ok = True
    for e in range(1, alg.n + 1):
        pr = ProjectiveReport(e, _degrees_supporting(x, e))
        report.projectives.append(pr)
        if len(pr.degrees_found) != 1:
            ok = False
            continue
        i = pr.degrees_found[0]
        y = DerivedObject(alg, [(alg.projective(e), i)])
        seq = min_left_approx_sequence(y, x, algebra)
        pr.approx_summands = list(seq.t0.summands)
        c = cone(seq.g)
        pr.kernel_intervals = dict(c.slice(i + 1))
        pr.verdict = pr.kernel_intervals == {alg.projective(e): 1}
        ok = ok and pr.verdict
    report.verdict = ok
    return report


def check_tilting_complex(x, route="derived"):
    """Two-sided tilting test.

    Derived route: the approximation sequence of P(e)[i] completes to a
    triangle, i.e. cone(g) is exactly P(e)[i+1].  Module route: the in-slice
    sequence P(e) -> X0 -> X1 -> 0 is exact with kernel of f in the additive
    closure of the next slice."""
    alg = x.alg
    report, algebra = _preconditions(x, "tilting-" + route)
    if not report.applicable:
        return report
    ok = True
    for e in range(1, alg.n + 1):
        pr = ProjectiveReport(e, _degrees_supporting(x, e))
        report.projectives.append(pr)
        if len(pr.degrees_found) != 1:
            ok = False
            continue
        i = pr.degrees_found[0]
        if route == "derived":
            y = DerivedObject(alg, [(alg.projective(e), i)])
            seq = min_left_approx_sequence(y, x, algebra)
            pr.approx_summands = list(seq.t0.summands)
            c = cone(seq.g)
            pr.verdict = c == DerivedObject(
                alg, [(alg.projective(e), i + 1)]
            )
        elif route == "module":
            slice_i = _basic_support(x.slice(i))
            slice_next = set(_basic_support(x.slice(i + 1)))
            t = _module_object(alg, slice_i)
            y = _module_object(alg, [alg.projective(e)])
            seq = min_left_approx_sequence(y, t)
            pr.approx_summands = list(seq.t0.summands)
            f = to_rep_morphism(seq.f)
            g = to_rep_morphism(seq.g)
            pr.exact = is_exact_sequence_with_zero(f, g)
            ker, _ = reps.kernel(f)
            pr.kernel_intervals = reps.interval_decompose(ker)
            in_add = all(iv in slice_next for iv in pr.kernel_intervals)
            pr.verdict = pr.exact and in_add
        else:
            raise ValueError("unknown route %r" % route)
        ok = ok and pr.verdict
    report.verdict = ok
    return report


def _restrict_to_corner(alg, intervals, verts):
    """Reindex interval modules supported on a vertex subset to the corner
    algebra on those vertices (isomorphic to the chain algebra of their
    count).  Raises PreconditionError when support leaks outside."""
    pos = {v: i + 1 for i, v in enumerate(sorted(verts))}
    out = {}
    for iv, mult in intervals.items():
        if not all(v in pos for v in iv.support):
            raise PreconditionError(
                "summand %r not supported inside corner vertices %r"
                % (iv, sorted(verts))
            )
        riv = Interval(pos[iv.a], pos[iv.b])
        out[riv] = out.get(riv, 0) + mult
    return out


def verify_homology_corners(x, tilting=None):
    """Every homology slice, viewed over the corner algebra of its projective
    group, must itself have the double centraliser property; and be tilting
    when the object is two-sided tilting.

    tilting defaults to check_tilting_complex(x)."""
    report = DeciderReport("corners", False)
    ddcp = check_ddcp(x)
    if not ddcp:
        report.applicable = False
        report.reasons.append("object does not have the derived property")
        return report
    if tilting is None:
        tilting = bool(check_tilting_complex(x))
    alg = x.alg
    ok = True
    try:
        groups = corner_decomposition(x)
    except PreconditionError as exc:
        report.applicable = False
        report.reasons.append(str(exc))
        return report
    for i, verts, _ in groups:
        corner_alg = Algebra(len(verts))
        try:
            restricted = _restrict_to_corner(alg, x.slice(i), verts)
        except PreconditionError as exc:
            report.reasons.append(str(exc))
            ok = False
            continue
        dcp = check_module_dcp(corner_alg, restricted)
        entry = "shift %d over chain algebra of %d: dcp=%s" % (
            i,
            len(verts),
            bool(dcp),
        )
        ok = ok and bool(dcp)
        if tilting:
            tilt = check_tilting_module(corner_alg, restricted)
            entry += " tilting=%s" % bool(tilt)
            ok = ok and bool(tilt)
        report.reasons.append(entry)
    report.verdict = ok
    return report
