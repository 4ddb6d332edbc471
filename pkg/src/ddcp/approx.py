"""Minimal left approximation sequences.

For a target object t with endomorphism algebra E, the graded Hom space
Hom(y, t) is a left E-module by post-composition, and the additive category
add t is dual to the projective E-modules.  A minimal projective presentation
of Hom(y, t) therefore transports to a minimal left add-t-approximation
sequence y -> T0 -> T1, with explicit scalar components.

The deciders evaluate the minimal sequence even where only existence of an
exact approximation sequence is demanded; this is sound because the minimal
sequence is a direct summand of every approximation sequence, so exactness
and kernel membership transfer.
"""

from fractions import Fraction

from .exactmat import IncrementalSpan, Mat, nullspace, rank, solve
from .quiver import HOM, InputError
from .derived import (
    DerivedMorphism,
    DerivedObject,
    compose,
    graded_hom,
    make_object,
)
from .endalg import SCModule, end_of, module_generators
from . import reps


def hom_module(y, t, algebra=None):
    """Hom(y, t) as a left module over end_of(t), acting by post-composition.

    The underlying space has one coordinate per canonical generator y -> t;
    returns (SCModule, generator list)."""
    alg = y.alg
    if algebra is None:
        algebra = end_of(t)
    gens = graded_hom(alg, y, t)
    gen_index = {g: i for i, g in enumerate(gens)}
    d = len(gens)
    actions = []
    for lab in algebra.basis:
        m = Mat(d, d)
        if lab[0] == "e":
            for g, i in gen_index.items():
                if g[1] == lab[1]:
                    m[i, i] = 1
        else:
            _, asrc, atgt, adeg = lab
            for (k, l, deg), i in gen_index.items():
                if l != asrc or deg + adeg > 1:
                    continue
                # composite of canonical generators is canonical or zero;
                # nonzero exactly when the composite space has a generator
                j = gen_index.get((k, atgt, deg + adeg))
                if j is not None:
                    m[j, i] = 1
        actions.append(m)
    return SCModule(algebra, d, actions), gens


class ApproxSequence:
    """Minimal left add-t-approximation sequence y -> T0 -> T1."""

    def __init__(self, y, t, t0, f, t1, g):
        self.y = y
        self.t = t
        self.t0 = t0
        self.f = f
        self.t1 = t1
        self.g = g


def min_left_approx_sequence(y, t, algebra=None):
    """Construct the minimal sequence by projective presentation transport."""
    alg = y.alg
    if not t.is_basic():
        raise InputError("approximation target must be basic")
    if algebra is None:
        algebra = end_of(t)
    m, gens = hom_module(y, t, algebra)

    # Generators of Hom(y, t) grouped by summand of t: the cover is by the
    # projectives E e_l, dual to the summands t_l themselves.
    top0 = module_generators(m)  # list of (idempotent l, vector in m)
    t0_pairs = [t.summands[l] for l, _ in top0]
    t0, perm0 = _make_with_perm(alg, t0_pairs)

    f_entries = {}
    for pos, (l, vec) in enumerate(top0):
        for gi, (k, l2, deg) in enumerate(gens):
            if vec[gi]:
                assert l2 == l
                key = (k, perm0[pos])
                f_entries[key] = f_entries.get(key, Fraction(0)) + vec[gi]
    f = DerivedMorphism(y, t0, f_entries)

    # Q0 = direct sum of projectives E e_l, basis (cover position, algebra
    # basis element with source l); cover matrix has columns beta . vec.
    q0_basis = []
    for pos, (l, vec) in enumerate(top0):
        for bi in range(algebra.dim):
            if algebra.src(bi) == l:
                q0_basis.append((pos, bi))
    cover_cols = []
    for pos, bi in q0_basis:
        vec = top0[pos][1]
        col = m.act(bi) @ Mat.from_cols([vec], nrows=m.dim)
        cover_cols.append(col.column(0))
    cover = (
        Mat.from_cols(cover_cols, nrows=m.dim)
        if q0_basis
        else Mat(m.dim, 0)
    )
    kbasis = nullspace(cover)  # kernel inside Q0 coordinates

    # Q0 as an SCModule in the (pos, beta) basis, restricted to the kernel.
    q0_index = {pb: i for i, pb in enumerate(q0_basis)}
    k_actions = []
    for ai in range(algebra.dim):
        act = Mat(len(q0_basis), len(q0_basis))
        for (pos, bi), col in q0_index.items():
            p = algebra.mul(ai, bi)
            if p is not None:
                act[q0_index[(pos, p)], col] = 1
        restricted = solve(kbasis, act @ kbasis)
        if restricted is None:
            raise AssertionError("kernel not stable under the algebra action")
        k_actions.append(restricted)
    kmod = SCModule(algebra, kbasis.ncols, k_actions)

    top1 = module_generators(kmod)
    t1_pairs = [t.summands[l] for l, _ in top1]
    t1, perm1 = _make_with_perm(alg, t1_pairs)

    g_entries = {}
    for pos1, (l1, vec) in enumerate(top1):
        kappa = kbasis @ Mat.from_cols([vec], nrows=kbasis.ncols)
        for i, (pos0, bi) in enumerate(q0_basis):
            c = kappa[i, 0]
            if not c:
                continue
            key = (perm0[pos0], perm1[pos1])
            g_entries[key] = g_entries.get(key, Fraction(0)) + c
    g = DerivedMorphism(t0, t1, g_entries)
    return ApproxSequence(y, t, t0, f, t1, g)


def _make_with_perm(alg, pairs):
    return make_object(alg, pairs)


def to_rep_morphism(f):
    """Convert a shift-homogeneous derived morphism to a module morphism."""
    shifts = set(s for _, s in f.src.summands) | set(
        s for _, s in f.tgt.summands
    )
    if len(shifts) > 1:
        raise InputError("morphism is not concentrated in a single shift")
    alg = f.alg
    src_ivs = [iv for iv, _ in f.src.summands]
    tgt_ivs = [iv for iv, _ in f.tgt.summands]
    return reps.rep_morphism(alg, src_ivs, tgt_ivs, f.entries)


def is_exact_at_middle(f, g):
    """g after f vanishes and image(f) = kernel(g), vertex by vertex."""
    if not reps.compose_rep(f, g).is_zero():
        return False
    img, _ = reps.image(f)
    ker, _ = reps.kernel(g)
    return img.dims == ker.dims


def is_exact_sequence_with_zero(f, g):
    """Exact at the middle with g surjective."""
    if not is_exact_at_middle(f, g):
        return False
    cok, _ = reps.cokernel(g)
    return cok.total_dim() == 0


def is_injective(f):
    ker, _ = reps.kernel(f)
    return ker.total_dim() == 0


def approximation_matrix(f, t):
    """Matrix of composing with f: Hom(T0, t) -> Hom(y, t), in the canonical
    generator bases."""
    alg = f.alg
    cols = graded_hom(alg, f.tgt, t)
    rows = graded_hom(alg, f.src, t)
    row_index = {r: i for i, r in enumerate(rows)}
    m = Mat(len(rows), len(cols))
    for j, (k, l, deg) in enumerate(cols):
        h = DerivedMorphism(f.tgt, t, {(k, l): 1})
        comp = compose(f, h)
        for (k2, l2), c in comp.entries.items():
            sp = f.src.summands[k2]
            tp = t.summands[l2]
            m[row_index[(k2, l2, tp[1] - sp[1])], j] = c
    return m


def is_left_approximation(f, t):
    """True iff every morphism from the source into add t factors through f."""
    alg = f.alg
    m = approximation_matrix(f, t)
    return rank(m) == len(graded_hom(alg, f.src, t))


def minimality_check(f, t):
    """f is a left approximation and dropping any target summand breaks it."""
    if not is_left_approximation(f, t):
        return False
    nt = len(f.tgt.summands)
    for drop in range(nt):
        kept = [p for i, p in enumerate(f.tgt.summands) if i != drop]
        sub = DerivedObject(f.alg, kept)
        remap = {}
        new_index = {}
        taken = [False] * len(kept)
        for old, p in enumerate(f.tgt.summands):
            if old == drop:
                continue
            for ni, q in enumerate(sub.summands):
                if not taken[ni] and q == p:
                    taken[ni] = True
                    new_index[old] = ni
                    break
        for (k, l), c in f.entries.items():
            if l != drop:
                remap[(k, new_index[l])] = c
        fsub = DerivedMorphism(f.src, sub, remap)
        if is_left_approximation(fsub, t):
            return False
    return True
