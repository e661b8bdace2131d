"""Weyl group elements as permutations of the root list.

An element is stored as the permutation it induces on root indices, which
makes the action on roots a table lookup and composition a tuple gather.
Reduced words are canonical: the last letter of a word is always the
lowest-indexed right descent of the element.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from hesspave.rootset import RootSet
from hesspave.rootsys import Root, RootSystem, _check_simple_indices

DEFAULT_MAX_WEYL = 10**6

__all__ = [
    "RootSet",
    "WeylElement",
    "WeylGuardError",
    "act",
    "enumerate_elements",
    "from_word",
    "identity",
    "inversion_set",
    "longest_element",
    "make_dominant",
    "minimal_reps",
    "parabolic_decompose",
]


class WeylGuardError(RuntimeError):
    """The Weyl group is larger than the configured enumeration guard."""

    def __init__(self, rs: RootSystem, order: int, guard: int):
        super().__init__(f"|W({rs.name})| = {order} exceeds the enumeration guard {guard} "
                         f"(raise it with max_order= or HESSPAVE_MAX_WEYL)")
        self.order = order
        self.guard = guard


def default_max_weyl() -> int:
    env = os.environ.get("HESSPAVE_MAX_WEYL")
    return int(env) if env else DEFAULT_MAX_WEYL


class WeylElement:
    """An element of W acting on the roots of ``rs``.

    Equality and hashing go through the root permutation, which is
    equivalent to comparing the simple images w(alpha_i).
    """

    __slots__ = ("rs", "perm", "_word", "_inv", "_inversions")

    def __init__(self, rs: RootSystem, perm: Sequence[int], word: Sequence[int] | None = None):
        self.rs = rs
        self.perm = tuple(perm)
        self._word = None if word is None else tuple(word)
        self._inv = None
        self._inversions = None

    @property
    def word(self) -> tuple[int, ...]:
        """A reduced word in 1-based simple indices."""
        if self._word is None:
            self._word = _canonical_word(self.rs, self.perm)
        return self._word

    @property
    def length(self) -> int:
        if self._word is not None:
            return len(self._word)
        return len(self.inversion_set())

    @property
    def simple_images(self) -> tuple[Root, ...]:
        return tuple(self.rs.roots[self.perm[k]] for k in self.rs.simple)

    @property
    def inverse_perm(self) -> tuple[int, ...]:
        if self._inv is None:
            inv = [0] * len(self.perm)
            for k, p in enumerate(self.perm):
                inv[p] = k
            self._inv = tuple(inv)
        return self._inv

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, self.inverse_perm)

    def __call__(self, k: int) -> int:
        """Image of the root with index ``k``."""
        return self.perm[k]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in other.perm))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def is_identity(self) -> bool:
        return all(p == k for k, p in enumerate(self.perm))

    def image(self, s: RootSet) -> RootSet:
        """w(S) for a root set S."""
        return s.map(self.perm)

    def inversion_set(self) -> RootSet:
        """Phi_w = {gamma > 0 : w^{-1}(gamma) < 0}."""
        if self._inversions is None:
            inv = self.inverse_perm
            h = self.rs.heights
            self._inversions = RootSet.from_indices(
                self.rs.size, (k for k in self.rs.positive if h[inv[k]] < 0)
            )
        return self._inversions

    def left_simple(self, i: int) -> "WeylElement":
        """s_i * w."""
        refl = self.rs.reflections[i - 1]
        return WeylElement(self.rs, tuple(refl[p] for p in self.perm))

    def __repr__(self):
        if not self.word:
            return "e"
        return "".join(f"s{i}" for i in self.word)


def _canonical_word(rs: RootSystem, perm: Sequence[int]) -> tuple[int, ...]:
    perm = list(perm)
    heights = rs.heights
    letters = []
    while True:
        for i, k in enumerate(rs.simple):
            if heights[perm[k]] < 0:
                break
        else:
            break
        refl = rs.reflections[i]
        perm = [perm[j] for j in refl]
        letters.append(i + 1)
    return tuple(reversed(letters))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, range(rs.size), ())


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """The product s_{i1} s_{i2} ... s_{ik}; the word need not be reduced."""
    perm = list(range(rs.size))
    for i in word:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"simple index {i} out of range 1..{rs.rank}")
        refl = rs.reflections[i - 1]
        perm = [perm[j] for j in refl]
    return WeylElement(rs, perm)


def longest_element(rs: RootSystem) -> WeylElement:
    """w0, found by descending through negative simple images."""
    perm = list(range(rs.size))
    heights = rs.heights
    while True:
        for i, k in enumerate(rs.simple):
            if heights[perm[k]] > 0:
                refl = rs.reflections[i]
                perm = [perm[j] for j in refl]
                break
        else:
            return WeylElement(rs, perm)


def enumerate_elements(rs: RootSystem, max_order: int | None = None) -> list[WeylElement]:
    """All of W, identity first, in order of increasing length.

    Raises :class:`WeylGuardError` if |W| exceeds ``max_order`` (default
    10**6, or ``HESSPAVE_MAX_WEYL``).
    """
    guard = default_max_weyl() if max_order is None else max_order
    order = rs.weyl_order()
    if order > guard:
        raise WeylGuardError(rs, order, guard)
    return list(_enumerate(rs))


@lru_cache(maxsize=32)
def _enumerate(rs: RootSystem) -> tuple[WeylElement, ...]:
    simple = rs.simple
    refl = rs.reflections
    heights = rs.heights
    layer = [identity(rs)]
    out = list(layer)
    while layer:
        nxt = []
        for w in layer:
            p = w.perm
            for i in range(rs.rank):
                # u = w s_i goes up iff w(alpha_i) > 0; keep it only when i is
                # u's lowest right descent so each element is produced once
                if heights[p[simple[i]]] < 0:
                    continue
                ri = refl[i]
                if any(heights[p[ri[simple[j]]]] < 0 for j in range(i)):
                    continue
                u = WeylElement(rs, [p[k] for k in ri], w.word + (i + 1,))
                nxt.append(u)
        out.extend(nxt)
        layer = nxt
    if len(out) != rs.weyl_order():
        raise AssertionError(f"enumerated {len(out)} elements, expected {rs.weyl_order()}")
    return tuple(out)


def act(rs: RootSystem, w: WeylElement, gamma: Iterable[int]) -> Root:
    return rs.roots[w.perm[rs.root_index(gamma)]]


def inversion_set(rs: RootSystem, w: WeylElement) -> RootSet:
    return w.inversion_set()


def parabolic_decompose(rs: RootSystem, w: WeylElement, delta_M: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """Split w = y v with y in W_M and v a minimal coset representative.

    Repeatedly strips the lowest-indexed alpha in delta_M with
    v^{-1}(alpha) < 0 from the left of v.
    """
    delta = sorted(_check_simple_indices(rs, delta_M))
    heights = rs.heights
    v = list(w.perm)
    inv = list(w.inverse_perm)
    y_letters = []
    while True:
        for i in delta:
            if heights[inv[rs.simple[i - 1]]] < 0:
                break
        else:
            break
        refl = rs.reflections[i - 1]
        # v <- s_i v ; v^{-1} <- v^{-1} s_i
        v = [refl[p] for p in v]
        inv = [inv[j] for j in refl]
        y_letters.append(i)
    y = from_word(rs, y_letters)
    return y, WeylElement(rs, v)


def minimal_reps(rs: RootSystem, delta_M: Iterable[int], max_order: int | None = None) -> list[WeylElement]:
    """W^M = {v : Phi_v contained in Phi(u_Q)}, in enumeration order."""
    from hesspave.rootsys import subsystem

    sub = subsystem(rs, delta_M)
    return [v for v in enumerate_elements(rs, max_order) if v.inversion_set().isdisjoint(sub.phi_M)]


def coweight_pairings(rs: RootSystem, coweight: Sequence[Fraction]) -> list[Fraction]:
    """<alpha_i, lambda> for lambda = sum_j c_j alpha_j^vee, one per simple i."""
    A = rs.cartan
    return [sum((Fraction(coweight[j]) * A[j][i] for j in range(rs.rank)), Fraction(0)) for i in range(rs.rank)]


def make_dominant(rs: RootSystem, coweight: Sequence, tie_break: str = "lowest") -> tuple[WeylElement, tuple[Fraction, ...]]:
    """Move a rational coweight into the dominant chamber.

    Returns ``(w1, lam)`` with ``lam = w1 . coweight`` dominant.  While some
    simple pairing is negative, reflect in it; ``tie_break`` picks the
    lowest (default) or highest such index.
    """
    if tie_break not in ("lowest", "highest"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    if len(coweight) != rs.rank:
        raise ValueError(f"coweight has {len(coweight)} coordinates, rank is {rs.rank}")
    lam = [Fraction(c) for c in coweight]
    letters = []
    while True:
        pairs = coweight_pairings(rs, lam)
        neg = [i for i, p in enumerate(pairs) if p < 0]
        if not neg:
            break
        i = neg[0] if tie_break == "lowest" else neg[-1]
        lam[i] -= pairs[i]
        letters.append(i + 1)
    # w1 = s_{last} ... s_{first}
    w1 = from_word(rs, reversed(letters))
    return w1, tuple(lam)
