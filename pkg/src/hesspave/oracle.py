"""Independent recomputation of paving reports.

The oracle realizes each root system in Euclidean coordinates (types A-D,
F4 and G2), builds Weyl elements from reflections of its own root vectors, and evaluates
every cell through the orbit description U.X = X + V:

    nonempty  iff  Phi_N <= w(Phi_H)
    dim       =    |Phi_w| - |Phi(V) \\ w(Phi_H)|

with Phi(V) assembled from scratch for each element kind.  It shares no
set or Weyl-group code with the main modules; only the matching of its
roots to ``RootSystem`` indices reads the Cartan pairings.  E-types and
bare Cartan matrices fall back to simple-root coordinates with a
symmetrized Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

import sympy

from hesspave.rootsys import RootSystem

F0 = Fraction(0)


def _vec(*xs):
    return tuple(Fraction(x) for x in xs)


def _rat(x: Fraction):
    return sympy.Rational(x.numerator, x.denominator)


def _unit(n, i, c=1):
    v = [F0] * n
    v[i] = Fraction(c)
    return tuple(v)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(c, a):
    return tuple(c * x for x in a)


def _coordinate_model(type_label: str, n: int):
    """(roots, simple roots, Gram matrix) in R^d."""
    if type_label == "A":
        d = n + 1
        roots = [_add(_unit(d, i), _unit(d, j, -1)) for i in range(d) for j in range(d) if i != j]
        simple = [_add(_unit(d, i), _unit(d, i + 1, -1)) for i in range(n)]
    elif type_label in "BCD":
        d = n
        roots = []
        for i in range(d):
            for j in range(i + 1, d):
                for si, sj in product((1, -1), repeat=2):
                    roots.append(_add(_unit(d, i, si), _unit(d, j, sj)))
        long_or_short = {"B": 1, "C": 2, "D": 0}[type_label]
        if long_or_short:
            roots += [_unit(d, i, s * long_or_short) for i in range(d) for s in (1, -1)]
        simple = [_add(_unit(d, i), _unit(d, i + 1, -1)) for i in range(n - 1)]
        if type_label == "B":
            simple.append(_unit(d, n - 1))
        elif type_label == "C":
            simple.append(_unit(d, n - 1, 2))
        else:
            simple.append(_add(_unit(d, n - 2), _unit(d, n - 1)))
    elif type_label == "G":
        d = 3
        roots = []
        for i in range(3):
            for j in range(3):
                if i != j:
                    roots.append(_add(_unit(3, i), _unit(3, j, -1)))
            for s in (1, -1):
                k = [x for x in range(3) if x != i]
                roots.append(_scale(s, _add(_unit(3, i, 2), _add(_unit(3, k[0], -1), _unit(3, k[1], -1)))))
        simple = [_vec(1, -1, 0), _vec(-2, 1, 1)]
    elif type_label == "F":
        d = 4
        roots = [_unit(4, i, s) for i in range(4) for s in (1, -1)]
        for i in range(4):
            for j in range(i + 1, 4):
                for si, sj in product((1, -1), repeat=2):
                    roots.append(_add(_unit(4, i, si), _unit(4, j, sj)))
        half = Fraction(1, 2)
        roots += [tuple(half * s for s in signs) for signs in product((1, -1), repeat=4)]
        simple = [_vec(0, 1, -1, 0), _vec(0, 0, 1, -1), _vec(0, 0, 0, 1), _vec(half, -half, -half, -half)]
    else:
        return None
    gram = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    return roots, simple, gram


def _gram_from_cartan(cartan):
    """(alpha_i, alpha_j) from a Cartan matrix, component by component."""
    n = len(cartan)
    length = [None] * n
    for start in range(n):
        if length[start] is not None:
            continue
        length[start] = Fraction(2)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and length[j] is None:
                    # |a_j|^2 / |a_i|^2 = A[i][j] / A[j][i]
                    length[j] = length[i] * Fraction(cartan[i][j], cartan[j][i])
                    stack.append(j)
    return [[Fraction(cartan[i][j]) * length[i] / 2 for j in range(n)] for i in range(n)]


class OracleRootModel:
    """Roots, reflections and Weyl elements realized in coordinates."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        model = _coordinate_model(rs.type_label, rs.rank) if rs.type_label else None
        self.independent = model is not None
        if model is None:
            roots = [tuple(Fraction(c) for c in r) for r in rs.roots]
            simple = [tuple(Fraction(int(i == j)) for j in range(rs.rank)) for i in range(rs.rank)]
            gram = _gram_from_cartan(rs.cartan)
        else:
            roots, simple, gram = model
        self.gram = gram
        self.dim = len(gram)
        self.simple = simple
        self.roots = sorted(set(roots))
        self.lookup = {r: k for k, r in enumerate(self.roots)}
        if len(self.roots) != rs.size:
            raise AssertionError(f"oracle model has {len(self.roots)} roots, RootSystem has {rs.size}")

        self.positive = frozenset(k for k, r in enumerate(self.roots) if self._is_positive(r))
        self.simple_idx = [self.lookup[a] for a in simple]
        self.coroots = [_scale(2 / self.ip(a, a), a) for a in simple]

        # match with RootSystem indices through <gamma, alpha_i^vee>
        sig = {}
        for k, r in enumerate(self.roots):
            sig[tuple(int(self.ip(r, c)) for c in self.coroots)] = k
        self.to_oracle = {}
        for k in range(rs.size):
            key = tuple(rs.pairings[i][k] for i in range(rs.rank))
            self.to_oracle[k] = sig[key]
        self.from_oracle = {v: k for k, v in self.to_oracle.items()}
        if len(self.from_oracle) != rs.size:
            raise AssertionError("oracle/RootSystem root matching is not a bijection")
        for k in range(rs.size):
            if (self.to_oracle[k] in self.positive) != (rs.heights[k] > 0):
                raise AssertionError("oracle and RootSystem disagree on positivity")
        # a simple reflection as a permutation of the oracle's own root list
        self.reflection_perms = [tuple(self.lookup[self.reflect_vec(a, r)] for r in self.roots) for a in simple]
        self._elements = {}
        self._group = {}
        self._cosets = {}

    def ip(self, a, b):
        g = self.gram
        return sum((a[i] * g[i][j] * b[j] for i in range(self.dim) for j in range(self.dim) if g[i][j]), F0)

    def _is_positive(self, r):
        # express r in the simple basis by solving Gram equations
        coeffs = self._simple_coords(r)
        return all(c >= 0 for c in coeffs) and any(c > 0 for c in coeffs)

    def _simple_coords(self, r):
        if not hasattr(self, "_gram_inv"):
            G = sympy.Matrix([[_rat(self.ip(a, b)) for b in self.simple] for a in self.simple])
            self._gram_inv = G.inv()
        rhs = sympy.Matrix([_rat(self.ip(r, a)) for a in self.simple])
        sol = self._gram_inv * rhs
        return [Fraction(int(x.p), int(x.q)) for x in sol]

    def reflect_vec(self, a, x):
        return _add(x, _scale(-2 * self.ip(x, a) / self.ip(a, a), a))

    def act_vec(self, word, x):
        """s_{i1} ... s_{ik} applied to the vector x."""
        for i in reversed(word):
            x = self.reflect_vec(self.simple[i - 1], x)
        return x

    def element(self, word):
        """Oracle element for a word in 1-based simple indices."""
        word = tuple(word)
        e = self._elements.get(word)
        if e is None:
            perm = tuple(range(len(self.roots)))
            for i in word:
                r = self.reflection_perms[i - 1]
                perm = tuple(perm[k] for k in r)
            e = self._elements[word] = OracleElement(self, perm, word)
        return e

    def group(self, delta):
        """All elements of the parabolic subgroup generated by ``delta`` (BFS)."""
        delta = tuple(sorted(delta))
        if delta not in self._group:
            start = self.element(())
            seen = {start.perm: start}
            frontier = [start]
            while frontier:
                nxt = []
                for g in frontier:
                    for i in delta:
                        r = self.reflection_perms[i - 1]
                        h = OracleElement(self, tuple(g.perm[k] for k in r), g.word + (i,))
                        if h.perm not in seen:
                            seen[h.perm] = h
                            nxt.append(h)
                frontier = nxt
            self._group[delta] = list(seen.values())
        return self._group[delta]

    def levi_roots(self, delta):
        """Roots in the span of the simple roots in ``delta``."""
        keep = set(i - 1 for i in delta)
        return frozenset(k for k, r in enumerate(self.roots)
                         if all(c == 0 for j, c in enumerate(self._coords_cached(k)) if j not in keep))

    def _coords_cached(self, k):
        if not hasattr(self, "_coords"):
            self._coords = [self._simple_coords(r) for r in self.roots]
        return self._coords[k]

    def decompose(self, w, delta):
        """(y, v): v the shortest element of the coset W_M w, y = w v^{-1}."""
        delta = tuple(sorted(delta))
        table = self._cosets.get(delta)
        if table is None:
            table = self._cosets[delta] = self._coset_table(delta)
        y_perm, v_perm = table[w.perm]
        return OracleElement(self, y_perm), OracleElement(self, v_perm)

    def _coset_table(self, delta):
        W_M = self.group(delta)
        table = {}
        for w in self.group(range(1, self.rs.rank + 1)):
            if w.perm in table:
                continue
            coset = [OracleElement(self, tuple(g.perm[k] for k in w.perm)) for g in W_M]
            shortest = min(c.length for c in coset)
            best = [c for c in coset if c.length == shortest]
            if len(best) != 1:
                raise AssertionError("coset has no unique shortest element")
            v = best[0]
            vinv = _invert(v.perm)
            for c in coset:
                table[c.perm] = (tuple(c.perm[k] for k in vinv), v.perm)
        return table


def _invert(perm):
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return tuple(inv)


class OracleElement:
    __slots__ = ("model", "perm", "word", "length")

    def __init__(self, model: OracleRootModel, perm, word=None):
        self.model = model
        self.perm = perm
        self.word = word
        pos = model.positive
        self.length = sum(1 for k in pos if perm[k] not in pos)

    def image(self, s):
        return frozenset(self.perm[k] for k in s)

    def inversions(self):
        """Positive gamma with w^{-1} gamma negative."""
        pos = self.model.positive
        inv = _invert(self.perm)
        return frozenset(k for k in pos if inv[k] not in pos)


@dataclass(frozen=True)
class Discrepancy:
    word: tuple
    field: str
    expected: object
    got: object

    def __str__(self):
        w = "".join(f"s{i}" for i in self.word) or "e"
        return f"{w}: {self.field} expected {self.expected!r}, got {self.got!r}"


class _NilpotentInLevi:
    """Root data of N regular in the Levi of ``inner`` inside the Levi M of ``outer``."""

    def __init__(self, model: OracleRootModel, outer, inner):
        self.model = model
        outer = tuple(sorted(outer))
        inner = tuple(sorted(inner))
        phi_M = model.levi_roots(outer)
        if inner:
            coroots = [model.coroots[i - 1] for i in inner]
            G = sympy.Matrix([[_rat(model.ip(model.simple[j - 1], c)) for c in coroots] for j in inner])
            sol = G.LUsolve(sympy.Matrix([2] * len(inner)))
            h = tuple(F0 for _ in range(model.dim))
            for x, c in zip(sol, coroots):
                h = _add(h, _scale(Fraction(int(x.p), int(x.q)), c))
        else:
            h = tuple(F0 for _ in range(model.dim))
        W_M = model.group(outer)

        def dominant(vec):
            return all(model.ip(model.simple[i - 1], vec) >= 0 for i in outer)

        images = [(g, model.act_vec(g.word, h)) for g in W_M]
        h_dom = next(img for g, img in images if dominant(img))
        v1 = min((g for g, img in images if img == h_dom), key=lambda g: g.length)
        self.h = h_dom
        self.weights = {k: model.ip(r, h_dom) for k, r in enumerate(model.roots)}
        if any(x.denominator != 1 for x in self.weights.values()):
            raise AssertionError("non-integral weights")
        self.phi_N = frozenset(v1.perm[model.simple_idx[i - 1]] for i in inner)
        phi_L = frozenset(k for k in phi_M if self.weights[k] == 0)
        pos = model.positive
        V_plus = set()
        for a in self.phi_N:
            for b in phi_L & pos:
                s = _add(model.roots[a], model.roots[b])
                k = model.lookup.get(s)
                if k is not None and k in pos and k in phi_M:
                    V_plus.add(k)
        script_V_N = frozenset(V_plus) | frozenset(k for k in phi_M if self.weights[k] >= 3)
        u_Q = pos - phi_M
        self.script_V = script_V_N | u_Q


def _levi_pair(rs: RootSystem, spec) -> tuple:
    """(Delta_M, Delta_N): Levi of the semisimple part and Levi where N is regular."""
    full = tuple(range(1, rs.rank + 1))
    if spec.kind == "regular_nilpotent":
        return full, full
    if spec.kind == "nilpotent_levi":
        return full, tuple(sorted(spec.levi))
    if spec.kind == "semisimple":
        return tuple(sorted(spec.levi)), ()
    if spec.kind == "regular":
        return tuple(sorted(spec.levi)), tuple(sorted(spec.levi))
    return tuple(sorted(spec.levi)), tuple(sorted(spec.levi_n))


_MODELS = {}


def model_for(rs: RootSystem) -> OracleRootModel:
    m = _MODELS.get(id(rs))
    if m is None or m.rs is not rs:
        m = _MODELS[id(rs)] = OracleRootModel(rs)
    return m


def oracle_cells(rs: RootSystem, spec, H, words):
    """Oracle (nonempty, dim, y, v) for each word; y, v are oracle elements."""
    model = model_for(rs)
    outer, inner = _levi_pair(rs, spec)
    nil = _NilpotentInLevi(model, outer, inner)
    phi_H = frozenset(model.to_oracle[k] for k in H.phi_H.indices())
    out = []
    for word in words:
        w = model.element(word)
        wH = w.image(phi_H)
        nonempty = nil.phi_N <= wH
        dim = len(w.inversions()) - len(nil.script_V - wH) if nonempty else None
        if spec.kind in ("regular_nilpotent", "nilpotent_levi"):
            y, v = model.element(()), w
        else:
            y, v = model.decompose(w, outer)
        out.append((nonempty, dim, y, v))
    return out


def verify_report(rs: RootSystem, spec, H, report) -> list[Discrepancy]:
    """Recompute every cell of ``report``; an empty list means full agreement."""
    if rs.rank > 3 and rs.weyl_order() > 1152:
        raise ValueError(f"oracle verification is limited to rank <= 3 or |W| <= 1152 ({rs.name})")
    model = model_for(rs)
    words = [c.w.word for c in report.cells]
    found = []
    expected = oracle_cells(rs, spec, H, words)
    seen_perms = set()
    for cell, (nonempty, dim, y, v) in zip(report.cells, expected):
        w = model.element(cell.w.word)
        seen_perms.add(w.perm)
        if cell.nonempty != nonempty:
            found.append(Discrepancy(cell.w.word, "nonempty", nonempty, cell.nonempty))
        if cell.dimension != dim:
            found.append(Discrepancy(cell.w.word, "dim", dim, cell.dimension))
        if model.element(cell.y.word).perm != y.perm:
            found.append(Discrepancy(cell.w.word, "y", "different element", cell.y.word))
        if model.element(cell.v.word).perm != v.perm:
            found.append(Discrepancy(cell.w.word, "v", "different element", cell.v.word))
        if cell.w.length != w.length:
            found.append(Discrepancy(cell.w.word, "length", w.length, cell.w.length))
    if len(seen_perms) != len(model.group(range(1, rs.rank + 1))) or len(report.cells) != len(seen_perms):
        found.append(Discrepancy((), "cells", "one cell per Weyl group element", len(report.cells)))
    dims = [d for ne, d, _, _ in expected if ne]
    betti = [sum(1 for d in dims if d == k) for k in range(max(dims) + 1)] if dims else []
    if list(report.betti) != betti:
        found.append(Discrepancy((), "betti", betti, list(report.betti)))
    if report.euler != len(dims):
        found.append(Discrepancy((), "euler", len(dims), report.euler))
    return found


@dataclass(frozen=True)
class FixtureResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""


def _flag_poincare(model: OracleRootModel):
    lengths = [g.length for g in model.group(range(1, model.rs.rank + 1))]
    return [lengths.count(k) for k in range(max(lengths) + 1)]


def known_variety_checks(rs: RootSystem, max_order: int | None = None) -> list[FixtureResult]:
    """Closed-form fixtures for classically known Hessenberg varieties."""
    from hesspave import hess
    from hesspave.paving import ElementSpec, paving_report

    model = model_for(rs)
    order = len(model.group(range(1, rs.rank + 1)))
    B, G, P = hess.borel(rs), hess.full(rs), hess.peterson(rs)
    every = range(1, rs.rank + 1)
    results = []

    def check(name, spec, H, expected):
        rep = paving_report(rs, spec, H, max_order=max_order)
        bad = verify_report(rs, spec, H, rep)
        ok = list(rep.betti) == list(expected) and not bad
        detail = f"betti {list(rep.betti)}, expected {list(expected)}"
        if bad:
            detail += f"; {len(bad)} oracle discrepancies, first: {bad[0]}"
        results.append(FixtureResult(name, "pass" if ok else "fail", detail))

    check("springer point (regular nilpotent, H=b)", ElementSpec.regular_nilpotent(), B, [1])
    check("|W| points (regular semisimple, H=b)", ElementSpec.semisimple(()), B, [order])
    flag = _flag_poincare(model)
    for spec in (ElementSpec.regular_nilpotent(), ElementSpec.nilpotent_levi({1}), ElementSpec.semisimple(()),
                 ElementSpec.regular(every), ElementSpec.general(every, {1})):
        check(f"flag variety ({spec.kind}, H=g)", spec, G, flag)
    check("Peterson (1+q)^rank", ElementSpec.regular_nilpotent(), P, [comb(rs.rank, k) for k in range(rs.rank + 1)])

    if rs.type_label == "A" and rs.rank == 2:
        check("permutohedral surface (regular semisimple, Peterson)", ElementSpec.semisimple(()), P, [1, 4, 1])
        check("minimal nilpotent Springer fiber in sl3", ElementSpec.nilpotent_levi({1}), B, [1, 2])
    else:
        results.append(FixtureResult("permutohedral surface", "skip", f"A2 only, not {rs.name}"))
        results.append(FixtureResult("minimal nilpotent Springer fiber in sl3", "skip", f"A2 only, not {rs.name}"))

    if rs.type_label == "A" and rs.rank == 1:
        table = {
            "regular_nilpotent": ([1], [1, 1]),
            "semisimple": ([2], [1, 1]),
            "regular": ([1], [1, 1]),
            "nilpotent_levi": ([1, 1], [1, 1]),
        }
        specs = {
            "regular_nilpotent": ElementSpec.regular_nilpotent(),
            "semisimple": ElementSpec.semisimple(()),
            "regular": ElementSpec.regular({1}),
            "nilpotent_levi": ElementSpec.nilpotent_levi(()),
        }
        for kind, (on_b, on_g) in table.items():
            check(f"A1 {kind}, H=b", specs[kind], B, on_b)
            check(f"A1 {kind}, H=g", specs[kind], G, on_g)
    return results
