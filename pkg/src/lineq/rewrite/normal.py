"""The four normal-form passes: development, r-normality, delta-sigma purge, s-normality.

Every pass first brings its input into a right-associated developed chain

    F1 o (F2 o (... o (Fn o id{A})))

whose factors are beta-terms, and then moves one factor at a time past its
neighbour.  A move groups the two factors, pushes the composition inside the
conjunctions both heads live under, rewrites there, and pulls the result back out
into chain form.  Every elementary change is a schema step recorded by the
underlying :class:`Rewriter`.
"""

from __future__ import annotations

from typing import Callable

from ..proofterm import (
    ArrowTerm, BBwd, BFwd, Compose, Cong, DeltaBwd, DeltaFwd, Id, Inv, Path, Refl, SigmaBwd,
    SigmaFwd, Step, Sym, Tensor, Theory, Trans, infer_type,
)
from ..syntax import TOP, Conj, contains_top
from .derivation import Derivation, Rewriter
from .equations import Direction, RewriteError, get_schema
from .lemmas import LEMMAS
from .shapes import head, is_delta_sigma_less, is_developed, is_diversified_type, is_r_less, is_s_normal

L2R, R2L = Direction.L2R, Direction.R2L
CL, CR, TL, TR = Step.CL, Step.CR, Step.TL, Step.TR


class PreconditionError(RewriteError):
    """The input is outside the domain a pass is defined on."""


class PreconditionTopInType(PreconditionError):
    pass


class PreconditionNotRLess(PreconditionError):
    pass


class PreconditionNotDiversified(PreconditionError):
    pass


class PreconditionCongConsumesR(PreconditionError):
    """A congruence arrow consumes an ``r`` factor, so no r-factorized prefix exists."""


class NormalizationStuck(RewriteError):
    """The strategy met a configuration it has no rule for."""


def _tidy(f: ArrowTerm) -> bool:
    return head(f) is not None


def _chain(f: ArrowTerm, closed: bool = True) -> bool:
    """Right-associated composite of beta-terms ending in ``id`` (closed) or a beta-term."""
    while isinstance(f, Compose):
        if not _tidy(f.g):
            return False
        f = f.f
    return isinstance(f, Id) or (not closed and _tidy(f))


def head_path(f: ArrowTerm) -> Path:
    out = []
    while isinstance(f, Tensor):
        if isinstance(f.f, Id):
            out.append(TR)
            f = f.g
        else:
            out.append(TL)
            f = f.f
    return tuple(out)


def chain_factors(f: ArrowTerm) -> list[ArrowTerm]:
    out = []
    while isinstance(f, Compose):
        out.append(f.g)
        f = f.f
    return out


class _Chain:
    """Chain manipulations on top of a :class:`Rewriter`."""

    def __init__(self, rw: Rewriter):
        self.rw = rw

    def at(self, p: Path) -> ArrowTerm:
        return self.rw.at(p)

    # -- development ---------------------------------------------------------

    def dev(self, p: Path) -> None:
        rw = self.rw
        t = rw.at(p)
        if _chain(t):
            return
        if isinstance(t, Compose):
            if not _chain(t.g, closed=False):
                self.dev(p + (CL,))
            if not _chain(t.f):
                self.dev(p + (CR,))
            self.concat(p)
        elif _tidy(t):
            rw.r2l("cat1R", p)
        elif isinstance(t, Tensor):
            self.dev(p + (TL,))
            self.dev(p + (TR,))
            q = p
            while True:
                t = rw.at(q)
                if isinstance(t.f, Compose):
                    rw.r2l("cat1L", q + (TR,))
                elif isinstance(t.g, Compose):
                    rw.r2l("cat1L", q + (TL,))
                else:
                    rw.l2r("and1", q)
                    break
                rw.l2r("and2", q)
                q += (CR,)
        # remaining primitives are identities, which are closed chains already

    def concat(self, q: Path) -> None:
        """``(G1 o ... ) o chain`` to a single right-associated chain."""
        rw = self.rw
        while isinstance(rw.at(q).g, Compose):
            rw.l2r("cat2", q)
            q += (CR,)
        if isinstance(rw.at(q).g, Id):
            rw.l2r("cat1L", q)

    # -- moving factors ------------------------------------------------------

    def meet(self, i: int) -> tuple[Path, Path, Path, Path]:
        """Group factors ``i`` and ``i+1`` and push their composite down to where the
        head paths part.  Returns (base, site, upper rest path, lower rest path)."""
        rw = self.rw
        base = (CR,) * i
        fs = chain_factors(rw.term)
        pu, pl = head_path(fs[i]), head_path(fs[i + 1])
        rw.r2l("cat2", base)
        site = base + (CL,)
        k = 0
        while k < len(pu) and k < len(pl) and pu[k] == pl[k]:
            rw.r2l("and2", site)
            rw.l2r("cat1L", site + ((TR if pu[k] is TL else TL),))
            site += (pu[k],)
            k += 1
        return base, site, pu[k:], pl[k:]

    def swap(self, site: Path, pu: Path) -> None:
        """Exchange two factors whose heads sit on different sides of a conjunction."""
        rw = self.rw
        rw.r2l("and2", site)
        if pu[0] is TL:
            rw.l2r("cat1R", site + (TL,))
            rw.l2r("cat1L", site + (TR,))
            rw.r2l("cat1L", site + (TL,))
            rw.r2l("cat1R", site + (TR,))
        else:
            rw.l2r("cat1L", site + (TL,))
            rw.l2r("cat1R", site + (TR,))
            rw.r2l("cat1R", site + (TL,))
            rw.r2l("cat1L", site + (TR,))
        rw.l2r("and2", site)

    def shape(self, p: Path, pattern) -> None:
        """Split identities on conjunctions wherever ``pattern`` expects a tensor."""
        t = self.rw.at(p)
        if isinstance(pattern, Tensor):
            if isinstance(t, Id) and isinstance(t.a, Conj):
                self.rw.r2l("and1", p)
                t = self.rw.at(p)
            if isinstance(t, Tensor):
                self.shape(p + (TL,), pattern.f)
                self.shape(p + (TR,), pattern.g)
        elif isinstance(pattern, Compose) and isinstance(t, Compose):
            self.shape(p + (CL,), pattern.g)
            self.shape(p + (CR,), pattern.f)

    def rule(self, site: Path, name: str, direction: Direction) -> None:
        lem = LEMMAS.get(name)
        if lem is not None:
            self.shape(site, lem.lhs if direction is L2R else lem.rhs)
            lem.apply(self.rw, site, direction)
        else:
            self.shape(site, get_schema(name, self.rw.theory).sides(direction)[0])
            self.rw.apply(name, site, direction)

    def finish(self, base: Path, site: Path) -> None:
        """Pull the rewritten site back out and splice it into the chain."""
        rw = self.rw
        if not _chain(rw.at(site), closed=False):
            self.dev(site)
        while len(site) > len(base) + 1:
            parent, side = site[:-1], site[-1]
            other = TR if side is TL else TL
            q = parent
            while True:
                t = rw.at(q)
                inner = t.f if side is TL else t.g
                if isinstance(inner, Compose):
                    rw.r2l("cat1L", q + (other,))
                    rw.l2r("and2", q)
                    q += (CR,)
                else:
                    if isinstance(inner, Id):
                        rw.l2r("and1", q)
                    break
            site = parent
        self.concat(base)


def _rewriter(f: ArrowTerm, theory: Theory, budget: int | None) -> Rewriter:
    infer_type(f, theory)
    return Rewriter(f, theory, budget)


def develop(f: ArrowTerm, theory: Theory, budget: int | None = None) -> tuple[ArrowTerm, Derivation]:
    """A developed term equal to ``f``; developed inputs come back untouched."""
    rw = _rewriter(f, theory, budget)
    if not is_developed(f):
        _Chain(rw).dev(())
    return rw.term, rw.derivation


# -- rule tables -------------------------------------------------------------

# structural head above a factor living strictly inside its source: move the factor up
_PULL_UP = {
    BFwd: "b nat", BBwd: "b< nat", DeltaFwd: "delta nat", SigmaFwd: "sigma nat",
    DeltaBwd: "delta< nat", SigmaBwd: "sigma< nat", Sym: "c nat",
}
# the same naturality squares read the other way: move the upper factor down
_PUSH_DOWN = {
    BFwd: ("b nat", L2R), BBwd: ("b< nat", L2R), DeltaFwd: ("delta nat", L2R),
    SigmaFwd: ("sigma nat", L2R), DeltaBwd: ("delta< nat", L2R),
    SigmaBwd: ("sigma< nat", L2R), Sym: ("c nat", L2R),
}


def _drive(rw: Rewriter, pick: Callable[[list[ArrowTerm]], int | None],
           decide: Callable[[ArrowTerm, ArrowTerm, Path, Path], tuple[str, Direction] | None]):
    """Repeatedly move the pair (``i``, ``i+1``) chosen by ``pick``.

    ``decide`` gets the two heads and the remaining head paths at the meeting point
    and names the rule to apply there; disjoint heads are always swapped.
    """
    ch = _Chain(rw)
    ch.dev(())
    while True:
        fs = chain_factors(rw.term)
        i = pick(fs)
        if i is None:
            return ch
        upper, lower = head(fs[i]), head(fs[i + 1])
        base, site, pu, pl = ch.meet(i)
        if pu and pl:
            ch.swap(site, pu)
        else:
            choice = decide(upper, lower, pu, pl)
            if choice is None:
                raise NormalizationStuck(
                    f"no rule for {type(upper).__name__} over {type(lower).__name__}")
            ch.rule(site, *choice)
        ch.finish(base, site)


# -- r-normality -------------------------------------------------------------

def _r_pick(fs: list[ArrowTerm]) -> int | None:
    k = 0
    while k < len(fs) and isinstance(head(fs[k]), Refl):
        k += 1
    for j in range(k + 1, len(fs)):
        if isinstance(head(fs[j]), Refl):
            return j - 1
    return None


def _r_decide(x: ArrowTerm, _r: ArrowTerm, pu: Path, pl: Path):
    if pu:
        return None
    if pl:
        if isinstance(x, Trans):
            return ("rtdelta", L2R) if pl == (TR,) else ("rtsigma", L2R)
        if isinstance(x, Cong):
            raise PreconditionCongConsumesR("a congruence arrow consumes an r factor")
        name = _PULL_UP.get(type(x))
        return None if name is None else (name, R2L)
    if isinstance(x, Inv):
        return ("rs", L2R)
    if isinstance(x, (DeltaBwd, SigmaBwd)):
        return (_PULL_UP[type(x)], R2L)
    return None


def r_normal(f: ArrowTerm, theory: Theory,
             budget: int | None = None) -> tuple[ArrowTerm, ArrowTerm, Derivation]:
    """Split ``f`` as ``f_r o f'`` with every ``r`` in the prefix ``f_r``."""
    rw = _rewriter(f, theory, budget)
    _drive(rw, _r_pick, _r_decide)
    fs = chain_factors(rw.term)
    k = 0
    while k < len(fs) and isinstance(head(fs[k]), Refl):
        k += 1
    if k == 0:
        rw.r2l("cat1L", ())
    for m in range(k - 2, -1, -1):
        rw.r2l("cat2", (CR,) * m)
    return rw.term.g, rw.term.f, rw.derivation


# -- delta-sigma purge -------------------------------------------------------

_CREATORS = (DeltaBwd, SigmaBwd)


def _ds_pick(fs: list[ArrowTerm]) -> int | None:
    for j, g in enumerate(fs):
        if isinstance(head(g), _CREATORS):
            if j == 0:
                raise NormalizationStuck("a unit is created at the top of the chain")
            return j - 1
    return None


# (upper head, creator) meeting exactly on the created conjunction
_ANNIHILATE = {
    (DeltaFwd, DeltaBwd): "deltadelta2", (SigmaFwd, DeltaBwd): "sigma> delta<",
    (BBwd, DeltaBwd): "b< delta< split", (Sym, DeltaBwd): "c delta<",
    (SigmaFwd, SigmaBwd): "sigmasigma2", (DeltaFwd, SigmaBwd): "delta> sigma<",
    (BFwd, SigmaBwd): "b> sigma< split", (Sym, SigmaBwd): "c sigma<",
}
# (upper head, creator, side of the creator under the associator) transfers
_TRANSFER = {
    (BFwd, DeltaBwd, TR): "b> delta<", (BFwd, SigmaBwd, TR): "b> sigma<",
    (BBwd, DeltaBwd, TL): "b< delta<", (BBwd, SigmaBwd, TL): "b< sigma<",
}


def _ds_decide(x: ArrowTerm, c: ArrowTerm, pu: Path, pl: Path):
    if pu:
        return ("delta< nat" if isinstance(c, DeltaBwd) else "sigma< nat", L2R)
    if not pl:
        name = _ANNIHILATE.get((type(x), type(c)))
        return None if name is None else (name, L2R)
    if len(pl) == 1 and (type(x), type(c), pl[0]) in _TRANSFER:
        return (_TRANSFER[type(x), type(c), pl[0]], L2R)
    name = _PULL_UP.get(type(x))
    return None if name is None or isinstance(x, _CREATORS) else (name, R2L)


def delta_sigma_purge(f: ArrowTerm, theory: Theory,
                      budget: int | None = None) -> tuple[ArrowTerm, Derivation]:
    """Remove every delta and sigma from an r-less term whose type is T-free or T |- T."""
    ty = infer_type(f, theory)
    if not is_r_less(f):
        raise PreconditionNotRLess("the term contains r")
    if not (ty.source == ty.target == TOP) and (contains_top(ty.source) or contains_top(ty.target)):
        raise PreconditionTopInType(f"T occurs in the type {ty}")
    rw = Rewriter(f, theory, budget)
    if not is_delta_sigma_less(f):
        _drive(rw, _ds_pick, _ds_decide)
    return rw.term, rw.derivation


# -- s-normality -------------------------------------------------------------

def _s_key(g: ArrowTerm):
    h = head(g)
    return frozenset((h.t1, h.t2)) if isinstance(h, Inv) else None


def _s_pick(fs: list[ArrowTerm]) -> int | None:
    best = None
    last: dict = {}
    for j, g in enumerate(fs):
        key = _s_key(g)
        if key is None:
            continue
        if key in last:
            i = last[key]
            if best is None or j - i <= best[1] - best[0]:
                best = (i, j)
        last[key] = j
    if best is None:
        return None
    i, j = best
    if j == i + 1 and head_path(fs[i])[:1] != head_path(fs[j])[:1] and _disjoint(fs[i], fs[j]):
        raise NormalizationStuck("two s factors on the same variables act on different atoms")
    return i


def _disjoint(u: ArrowTerm, l: ArrowTerm) -> bool:
    pu, pl = head_path(u), head_path(l)
    k = 0
    while k < len(pu) and k < len(pl) and pu[k] == pl[k]:
        k += 1
    return k < len(pu) and k < len(pl)


def _s_decide(_s: ArrowTerm, y: ArrowTerm, pu: Path, pl: Path):
    if pl:
        return None
    if not pu:
        if isinstance(y, Inv):
            return ("ss", L2R)
        if isinstance(y, Refl):
            return ("rs", L2R)
        if isinstance(y, (DeltaFwd, SigmaFwd)):
            return _PUSH_DOWN[type(y)]
        return None
    return _PUSH_DOWN.get(type(y))


def s_normal(f: ArrowTerm, theory: Theory,
             budget: int | None = None) -> tuple[ArrowTerm, Derivation]:
    """A developed s-normal term equal to the diversified term ``f``."""
    if not theory.has_s:
        raise PreconditionError(f"{theory.value} has no s")
    ty = infer_type(f, theory)
    if not is_diversified_type(ty):
        raise PreconditionNotDiversified(f"type {ty} is not diversified")
    rw = Rewriter(f, theory, budget)
    _drive(rw, _s_pick, _s_decide)
    if not is_s_normal(rw.term):
        raise NormalizationStuck("result is not s-normal")
    return rw.term, rw.derivation
