"""Per-Schubert-cell nonemptiness and dimension for B(X, H), and aggregates.

Every cell X_w meets B(X, H) in an affine space (or not at all), so the
Betti numbers are just counts of cell dimensions.  The five element kinds
use these root-set criteria, with (y, v) the decomposition of w against
the Levi of the semisimple part:

=================  ===============================  ====================================================
kind               nonempty iff                     dimension
=================  ===============================  ====================================================
regular nilpotent  Delta <= w(Phi_H)                |Phi_w & w(Phi_H^-)|
nilpotent in Levi  Phi_N <= w(Phi_H)                l(w) - |Phi(V) - w(Phi_H)|
semisimple         always                           l(y) + |y(Phi_v) & w(Phi_H^-)|
regular            Delta_M <= y(Phi_{H_v})          |Phi_y & y(Phi_{H_v}^-)| + |y(Phi_v) & w(Phi_H^-)|
general            inner cell in M nonempty         inner dim + |y(Phi_v) & w(Phi_H^-)|
=================  ===============================  ====================================================

For a nilpotent in a Levi the cells are those of B(v1.N, H), which is
isomorphic to B(N, H) by left translation; Betti data is unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from hesspave.hess import HessenbergSpace, restrict_to_levi
from hesspave.nilp import CocharacterData, normalize
from hesspave.rootset import RootSet
from hesspave.rootsys import RootSubsystem, RootSystem, _check_simple_indices, subsystem
from hesspave.weyl import WeylElement, enumerate_elements, from_word, identity, parabolic_decompose

KINDS = ("regular_nilpotent", "nilpotent_levi", "semisimple", "regular", "general")


class ElementSpecError(ValueError):
    pass


@dataclass(frozen=True)
class ElementSpec:
    """Which element X = S + N to pave, in standard position.

    ``levi`` is Delta_M: the Levi of N for ``nilpotent_levi``, and the Levi
    Z_G(S) otherwise.  ``levi_n`` (``general`` only) is the standard Levi of
    m in which N is regular.
    """

    kind: str
    levi: frozenset = field(default_factory=frozenset)
    levi_n: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ElementSpecError(f"unknown element kind {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "levi", frozenset(self.levi))
        object.__setattr__(self, "levi_n", frozenset(self.levi_n))
        if self.kind != "general" and self.levi_n:
            raise ElementSpecError("levi_n is only meaningful for the general kind")
        if self.kind == "regular_nilpotent" and self.levi:
            raise ElementSpecError("regular_nilpotent takes no Levi")
        if not self.levi_n <= self.levi:
            raise ElementSpecError(f"levi_n {sorted(self.levi_n)} is not contained in levi {sorted(self.levi)}")

    @classmethod
    def regular_nilpotent(cls):
        return cls("regular_nilpotent")

    @classmethod
    def nilpotent_levi(cls, delta_M: Iterable[int]):
        return cls("nilpotent_levi", frozenset(delta_M))

    @classmethod
    def semisimple(cls, delta_M: Iterable[int]):
        return cls("semisimple", frozenset(delta_M))

    @classmethod
    def regular(cls, delta_M: Iterable[int]):
        return cls("regular", frozenset(delta_M))

    @classmethod
    def general(cls, delta_M: Iterable[int], delta_m: Iterable[int]):
        return cls("general", frozenset(delta_M), frozenset(delta_m))

    def validate(self, rs: RootSystem) -> "ElementSpec":
        try:
            _check_simple_indices(rs, self.levi)
        except ValueError as exc:
            raise ElementSpecError(str(exc)) from None
        return self

    def describe(self) -> dict:
        return {"kind": self.kind, "levi": sorted(self.levi), "levi_n": sorted(self.levi_n)}


@dataclass(frozen=True)
class CellReport:
    w: WeylElement
    y: WeylElement
    v: WeylElement
    nonempty: bool
    dimension: int | None

    def __post_init__(self):
        if self.nonempty != (self.dimension is not None):
            raise ValueError("dimension must be given exactly for nonempty cells")


def _empty_or(w, y, v, nonempty, dim):
    return CellReport(w, y, v, nonempty, dim if nonempty else None)


def cell_regular_nilpotent(rs: RootSystem, H: HessenbergSpace, w: WeylElement) -> CellReport:
    nonempty = rs.simple_set <= w.image(H.phi_H)
    dim = len(w.inversion_set() & w.image(H.negatives)) if nonempty else None
    return CellReport(w, identity(rs), w, nonempty, dim)


def cell_nilpotent_levi(rs: RootSystem, delta_M: Iterable[int], H: HessenbergSpace, w: WeylElement,
                        cd: CocharacterData | None = None) -> CellReport:
    cd = normalize(rs, delta_M) if cd is None else cd
    wH = w.image(H.phi_H)
    nonempty = cd.phi_N <= wH
    dim = w.length - len(cd.phi_script_V - wH) if nonempty else None
    return CellReport(w, identity(rs), w, nonempty, dim)


def _outer_term(y: WeylElement, v: WeylElement, w: WeylElement, H: HessenbergSpace) -> int:
    """|y(Phi_v) & w(Phi_H^-)|."""
    return len(y.image(v.inversion_set()) & w.image(H.negatives))


def cell_semisimple(rs: RootSystem, delta_M: Iterable[int], H: HessenbergSpace, w: WeylElement) -> CellReport:
    y, v = parabolic_decompose(rs, w, delta_M)
    return CellReport(w, y, v, True, y.length + _outer_term(y, v, w, H))


def _levi_part(rs: RootSystem, H: HessenbergSpace, v: WeylElement, sub: RootSubsystem) -> RootSet:
    """v(Phi_H) & Phi_M in parent indexing, validated as a Hessenberg space of m."""
    if sub.delta_M:
        restrict_to_levi(rs, H, v, sub)
    return v.image(H.phi_H) & sub.phi_M


def cell_regular(rs: RootSystem, delta_M: Iterable[int] | RootSubsystem, H: HessenbergSpace, w: WeylElement,
                 _hv_cache: dict | None = None) -> CellReport:
    sub = delta_M if isinstance(delta_M, RootSubsystem) else subsystem(rs, delta_M)
    y, v = parabolic_decompose(rs, w, sub.delta_M)
    if _hv_cache is None:
        hv = _levi_part(rs, H, v, sub)
    else:
        key = (v.perm, H.phi_H)
        hv = _hv_cache.get(key)
        if hv is None:
            hv = _hv_cache[key] = _levi_part(rs, H, v, sub)
    y_hv = y.image(hv)
    delta_set = RootSet.from_indices(rs.size, (rs.simple[i - 1] for i in sub.delta_M))
    nonempty = delta_set <= y_hv
    if not nonempty:
        return _empty_or(w, y, v, False, None)
    inner = len(y.inversion_set() & y.image(hv & rs.negative))
    return CellReport(w, y, v, True, inner + _outer_term(y, v, w, H))


class _LeviContext:
    """Subsystem data reused across the cells of a general-element report."""

    def __init__(self, rs: RootSystem, delta_M, delta_m, tie_break="lowest"):
        self.sub = subsystem(rs, delta_M)
        delta_m = _check_simple_indices(rs, delta_m)
        if not delta_m <= self.sub.delta_M:
            raise ElementSpecError(f"levi_n {sorted(delta_m)} is not contained in levi {sorted(self.sub.delta_M)}")
        self.m = self.sub.as_root_system()
        self.inner_delta = frozenset(self.sub.sub_index(i) for i in delta_m)
        self.cd = normalize(self.m, self.inner_delta, tie_break=tie_break) if self.m is not None else None
        self.hv = {}

    def to_inner(self, rs: RootSystem, y: WeylElement) -> WeylElement:
        y_m = from_word(self.m, [self.sub.sub_index(i) for i in y.word])
        if self.sub.lift(y_m.inversion_set()) != y.inversion_set():
            raise AssertionError(f"inversion set of {y!r} differs inside the Levi")
        return y_m


def cell_general(rs: RootSystem, delta_M: Iterable[int], delta_m: Iterable[int], H: HessenbergSpace,
                 w: WeylElement, ctx: _LeviContext | None = None) -> CellReport:
    ctx = _LeviContext(rs, delta_M, delta_m) if ctx is None else ctx
    if not ctx.inner_delta:
        raise ElementSpecError("general element needs a nonempty levi_n; use the semisimple kind")
    y, v = parabolic_decompose(rs, w, ctx.sub.delta_M)
    key = (v.perm, H.phi_H)
    hv = ctx.hv.get(key)
    if hv is None:
        hv = ctx.hv[key] = restrict_to_levi(rs, H, v, ctx.sub)
    inner = cell_nilpotent_levi(ctx.m, ctx.inner_delta, hv, ctx.to_inner(rs, y), ctx.cd)
    if not inner.nonempty:
        return _empty_or(w, y, v, False, None)
    return CellReport(w, y, v, True, inner.dimension + _outer_term(y, v, w, H))


@dataclass
class PavingReport:
    rs: RootSystem
    spec: ElementSpec
    hessenberg: HessenbergSpace
    cells: list
    betti: list
    euler: int

    @property
    def poincare(self) -> list[int]:
        """Coefficients of q^0, q^1, ... (one per complex dimension)."""
        return list(self.betti)

    def poincare_string(self) -> str:
        return format_poincare(self.betti)

    @property
    def nonempty_cells(self) -> list:
        return [c for c in self.cells if c.nonempty]


def format_poincare(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = "q" if k == 1 else f"q^{k}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


def betti_numbers(cells) -> list[int]:
    dims = [c.dimension for c in cells if c.nonempty]
    if not dims:
        return []
    betti = [0] * (max(dims) + 1)
    for d in dims:
        betti[d] += 1
    return betti


def cell_function(rs: RootSystem, spec: ElementSpec, H: HessenbergSpace, tie_break: str = "lowest"):
    """A one-argument cell evaluator w -> CellReport with per-report data precomputed."""
    spec.validate(rs)
    kind = spec.kind
    if kind == "regular_nilpotent":
        return lambda w: cell_regular_nilpotent(rs, H, w)
    if kind == "nilpotent_levi":
        cd = normalize(rs, spec.levi, tie_break=tie_break)
        return lambda w: cell_nilpotent_levi(rs, spec.levi, H, w, cd)
    if kind == "semisimple" or (kind == "general" and not spec.levi_n):
        return lambda w: cell_semisimple(rs, spec.levi, H, w)
    if kind == "regular":
        sub = subsystem(rs, spec.levi)
        cache = {}
        return lambda w: cell_regular(rs, sub, H, w, cache)
    ctx = _LeviContext(rs, spec.levi, spec.levi_n, tie_break=tie_break)
    return lambda w: cell_general(rs, spec.levi, spec.levi_n, H, w, ctx)


def paving_report(rs: RootSystem, spec: ElementSpec, H: HessenbergSpace, max_order: int | None = None,
                  tie_break: str = "lowest") -> PavingReport:
    """Evaluate every Schubert cell and aggregate Betti numbers.

    >>> from hesspave.rootsys import build_root_system
    >>> from hesspave.hess import peterson
    >>> rs = build_root_system("A", 2)
    >>> paving_report(rs, ElementSpec.regular_nilpotent(), peterson(rs)).betti
    [1, 2, 1]
    """
    if H.rs is not rs:
        raise ValueError("Hessenberg space belongs to a different root system")
    elements = enumerate_elements(rs, max_order)
    evaluate = cell_function(rs, spec, H, tie_break)
    cells = [evaluate(w) for w in elements]
    betti = betti_numbers(cells)
    return PavingReport(rs, spec, H, cells, betti, sum(betti))
