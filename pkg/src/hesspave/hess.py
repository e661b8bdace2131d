"""Hessenberg spaces as root subsets.

A Hessenberg space H is recorded by its root set Phi_H: it must contain
every positive root and be closed under adding positive roots.  Only the
negative part Psi = Phi_H & Phi^- is free.

Type-A encoding (``from_hessenberg_function``): the positive root
e_i - e_j (i < j) sits at matrix position (i, j), and H contains position
(i, j) iff i <= h(j).  For n = 3 and h = (2, 3, 3)::

    * * *      (1,1) (1,2) (1,3)
    * * *      (2,1) (2,2) (2,3)      (3,1) is missing: 3 > h(1) = 2
    . * *      (3,1) (3,2) (3,3)

so Psi = {-alpha_1, -alpha_2}.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Sequence

from hesspave.rootset import RootSet
from hesspave.rootsys import RootSubsystem, RootSystem, subsystem
from hesspave.weyl import WeylElement


class HessenbergError(ValueError):
    """Invalid Hessenberg data."""


def closure_witness(rs: RootSystem, phi: RootSet, positive: RootSet | None = None):
    """First pair (gamma, alpha) with gamma in phi, alpha positive, gamma+alpha a root outside phi.

    ``positive`` restricts the roots that may be added (defaults to Phi^+).
    Returns ``None`` when phi is closed.
    """
    positive = rs.positive if positive is None else positive
    roots, index = rs.roots, rs.index
    # simple roots in node order first, so witnesses read naturally
    adders = sorted(positive, key=lambda k: (rs.heights[k], [-c for c in roots[k]]))
    for g in phi:
        gr = roots[g]
        for a in adders:
            s = tuple(x + y for x, y in zip(gr, roots[a]))
            k = index.get(s)
            if k is not None and k not in phi:
                return g, a
    return None


class HessenbergSpace:
    """A validated Hessenberg root set Phi_H over ``rs``."""

    __slots__ = ("rs", "phi_H", "negatives")

    def __init__(self, rs: RootSystem, phi_H: RootSet):
        if not rs.positive <= phi_H:
            missing = rs.roots_of(rs.positive - phi_H)
            raise HessenbergError(f"Hessenberg root set misses positive roots {missing}")
        w = closure_witness(rs, phi_H)
        if w is not None:
            g, a = w
            gr, ar = rs.roots[g], rs.roots[a]
            s = tuple(x + y for x, y in zip(gr, ar))
            raise HessenbergError(
                f"not closed under positive roots: {format_root(gr)} + {format_root(ar)} = {format_root(s)} is missing"
            )
        self.rs = rs
        self.phi_H = phi_H
        self.negatives = phi_H & rs.negative

    @property
    def psi(self) -> list[tuple[int, ...]]:
        return self.rs.roots_of(self.negatives)

    def __eq__(self, other):
        if not isinstance(other, HessenbergSpace):
            return NotImplemented
        return self.rs is other.rs and self.phi_H == other.phi_H

    def __hash__(self):
        return hash(self.phi_H)

    def __repr__(self):
        return f"HessenbergSpace({self.rs.name}, psi=[{', '.join(format_root(r) for r in self.psi)}])"

    def describe(self) -> str:
        """``negroots:`` form accepted by :func:`parse_hessenberg`."""
        return "negroots:" + ",".join(format_root(r) for r in self.psi)


def format_root(root: Sequence[int]) -> str:
    """Coefficient syntax: ``-a1-2a2``, ``a1+a3``."""
    out = []
    for i, c in enumerate(root, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        out.append(f"{sign}{mag}a{i}")
    return "".join(out) or "0"


def parse_root(text: str, rank: int) -> tuple[int, ...]:
    """Inverse of :func:`format_root`."""
    s = text.replace(" ", "")
    if not s:
        raise HessenbergError("empty root expression")
    coeffs = [0] * rank
    pos = 0
    for m in re.finditer(r"([+-]?)(\d*)\*?a(\d+)", s):
        if m.start() != pos:
            break
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        i = int(m.group(3))
        if not 1 <= i <= rank:
            raise HessenbergError(f"simple index a{i} out of range in {text!r}")
        coeffs[i - 1] += sign * mag
        pos = m.end()
    if pos != len(s):
        raise HessenbergError(f"cannot parse root {text!r}")
    return tuple(coeffs)


def from_negative_roots(rs: RootSystem, psi: RootSet | Iterable[Sequence[int]]) -> HessenbergSpace:
    """H with Phi_H = Phi^+ | Psi, for a set Psi of negative roots."""
    if not isinstance(psi, RootSet):
        psi = rs.rootset(psi)
    if not psi <= rs.negative:
        raise HessenbergError(f"{rs.roots_of(psi - rs.negative)} are not negative roots")
    return HessenbergSpace(rs, rs.positive | psi)


def borel(rs: RootSystem) -> HessenbergSpace:
    return HessenbergSpace(rs, rs.positive)


def full(rs: RootSystem) -> HessenbergSpace:
    return HessenbergSpace(rs, rs.full())


def peterson(rs: RootSystem) -> HessenbergSpace:
    """Psi = -Delta."""
    return from_negative_roots(rs, RootSet.from_indices(rs.size, (rs.neg[k] for k in rs.simple)))


def from_hessenberg_function(rs: RootSystem, h: Sequence[int]) -> HessenbergSpace:
    """Type-A Hessenberg space from h(1..n), with rs of type A and rank n-1."""
    n = rs.rank + 1
    if rs.type_label != "A":
        raise HessenbergError("Hessenberg functions describe type A only")
    h = list(h)
    if len(h) != n:
        raise HessenbergError(f"Hessenberg function needs {n} values for A{n - 1}, got {len(h)}")
    for i, v in enumerate(h, start=1):
        if not i <= v <= n:
            raise HessenbergError(f"h({i}) = {v} must satisfy {i} <= h({i}) <= {n}")
        if i > 1 and v < h[i - 2]:
            raise HessenbergError(f"h is not nondecreasing at position {i}")
    psi = []
    for j in range(1, n + 1):
        for i in range(j + 1, h[j - 1] + 1):
            # e_i - e_j with i > j is -(alpha_j + ... + alpha_{i-1})
            psi.append(tuple(-1 if j <= k < i else 0 for k in range(1, n)))
    return from_negative_roots(rs, psi)


def parse_hessenberg(rs: RootSystem, text: str) -> HessenbergSpace:
    """``full`` | ``borel`` | ``peterson`` | ``function:h1,...,hn`` | ``negroots:r1,r2,...``."""
    kind, _, arg = text.strip().partition(":")
    kind = kind.lower()
    if kind == "full":
        return full(rs)
    if kind == "borel":
        return borel(rs)
    if kind == "peterson":
        return peterson(rs)
    if kind == "function":
        try:
            h = [int(x) for x in arg.split(",")]
        except ValueError:
            raise HessenbergError(f"malformed Hessenberg function {arg!r}") from None
        return from_hessenberg_function(rs, h)
    if kind == "negroots":
        terms = [t for t in arg.split(",") if t.strip()]
        roots = [parse_root(t, rs.rank) for t in terms]
        missing = [t for t, r in zip(terms, roots) if r not in rs.index]
        if missing:
            raise HessenbergError(f"not roots of {rs.name}: {missing}")
        return from_negative_roots(rs, roots)
    raise HessenbergError(f"unknown Hessenberg source {text!r}")


def transform(rs: RootSystem, w: WeylElement, H: HessenbergSpace) -> RootSet:
    """w(Phi_H)."""
    return w.image(H.phi_H)


def restrict_to_levi(rs: RootSystem, H: HessenbergSpace, v: WeylElement, delta_M: Iterable[int] | RootSubsystem) -> HessenbergSpace:
    """H_v = v.H meet m, as a Hessenberg space of the standalone Levi system.

    Its root set is v(Phi_H) & Phi_M, re-indexed into ``sub.as_root_system()``.
    """
    sub = delta_M if isinstance(delta_M, RootSubsystem) else subsystem(rs, delta_M)
    if not v.inversion_set().isdisjoint(sub.phi_M):
        raise HessenbergError(f"{v!r} is not a minimal coset representative for delta_M={sorted(sub.delta_M)}")
    m = sub.as_root_system()
    if m is None:
        raise HessenbergError("the torus Levi has no roots")
    return HessenbergSpace(m, sub.restrict(v.image(H.phi_H)))


def enumerate_all(rs: RootSystem) -> list[HessenbergSpace]:
    """All Hessenberg spaces, ordered by (|Psi|, sorted root indices)."""
    if rs.rank > 4:
        raise HessenbergError(f"enumerate_all is limited to rank <= 4 (got rank {rs.rank})")
    found = _power_set_sweep(rs) if rs.rank <= 3 else _ideal_search(rs)
    found.sort(key=lambda s: (len(s), s.indices()))
    return [HessenbergSpace(rs, rs.positive | psi) for psi in found]


def _power_set_sweep(rs: RootSystem) -> list[RootSet]:
    neg = rs.negative.indices()
    out = []
    for r in range(len(neg) + 1):
        for combo in combinations(neg, r):
            psi = RootSet.from_indices(rs.size, combo)
            if closure_witness(rs, rs.positive | psi) is None:
                out.append(psi)
    return out


def _saturate(rs: RootSystem, psi: RootSet) -> RootSet:
    while True:
        w = closure_witness(rs, rs.positive | psi)
        if w is None:
            return psi
        g, a = w
        s = tuple(x + y for x, y in zip(rs.roots[g], rs.roots[a]))
        psi = psi | RootSet.from_indices(rs.size, [rs.index[s]])


def _ideal_search(rs: RootSystem) -> list[RootSet]:
    start = rs.empty()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for psi in frontier:
            for k in rs.negative - psi:
                grown = _saturate(rs, psi | RootSet.from_indices(rs.size, [k]))
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return list(seen)
