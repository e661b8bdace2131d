"""Cocharacter data for a nilpotent that is regular in a standard Levi.

For N = sum of the simple root vectors of Delta_M, the associated
cocharacter is the unique coweight in the coroot span of Delta_M pairing to
2 with every alpha in Delta_M.  It is moved into the dominant chamber by
w1 = y1 v1 (y1 in W_L, v1 in W^L); everything downstream reads off the
integer weights <gamma, lambda> of the dominant coweight and the root set
Phi_N = v1(Delta_M).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from hesspave.rootset import RootSet
from hesspave.rootsys import RootSystem, _check_simple_indices, subsystem
from hesspave.weyl import WeylElement, make_dominant, parabolic_decompose


class NormalizationError(AssertionError):
    """An internal invariant of the cocharacter construction failed."""


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square system exactly by Gauss-Jordan elimination over Q."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NormalizationError("singular Cartan submatrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def levi_cocharacter(rs: RootSystem, delta_M: Iterable[int]) -> tuple[Fraction, ...]:
    """Coroot-basis coefficients c of lambda~ = sum_{i in Delta_M} c_i alpha_i^vee.

    Solves <alpha_j, lambda~> = 2 for j in Delta_M.  Empty Delta_M gives 0.
    """
    delta = sorted(_check_simple_indices(rs, delta_M))
    A = rs.cartan
    # <alpha_j, alpha_i^vee> = A[i][j]
    system = [[A[i - 1][j - 1] for i in delta] for j in delta]
    sol = solve_exact(system, [2] * len(delta)) if delta else []
    c = [Fraction(0)] * rs.rank
    for i, x in zip(delta, sol):
        c[i - 1] = x
    return tuple(c)


def root_weights(rs: RootSystem, coweight: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """<gamma, lambda> for every root, in root-index order."""
    A = rs.cartan
    simple_w = [sum((Fraction(coweight[j]) * A[j][k] for j in range(rs.rank)), Fraction(0)) for k in range(rs.rank)]
    return tuple(sum((g * s for g, s in zip(r, simple_w)), Fraction(0)) for r in rs.roots)


@dataclass(frozen=True)
class CocharacterData:
    rs: RootSystem
    delta_M: frozenset
    c: tuple  # lambda~ on the coroot basis
    lam: tuple  # dominant lambda on the coroot basis
    weights: tuple[int, ...]  # <gamma, lambda> by root index
    w1: WeylElement
    y1: WeylElement
    v1: WeylElement
    delta_L: frozenset
    phi_N: RootSet
    phi_L: RootSet
    phi_V_plus: RootSet
    phi_V_minus: RootSet
    phi_script_V: RootSet

    def weight(self, root: Iterable[int]) -> int:
        return self.weights[self.rs.root_index(root)]

    def weight_count(self, i: int) -> int:
        return sum(1 for x in self.weights if x == i)


def _sums(rs: RootSystem, left: RootSet, right: RootSet, within: RootSet) -> RootSet:
    """{gamma in within : gamma = a + b, a in left, b in right}."""
    roots, index = rs.roots, rs.index
    out = []
    for a in left:
        ar = roots[a]
        for b in right:
            k = index.get(tuple(x + y for x, y in zip(ar, roots[b])))
            if k is not None and k in within:
                out.append(k)
    return RootSet.from_indices(rs.size, out)


def normalize(rs: RootSystem, delta_M: Iterable[int], tie_break: str = "lowest") -> CocharacterData:
    """Build the dominant cocharacter package for N regular in the Levi of ``delta_M``."""
    delta = _check_simple_indices(rs, delta_M)
    c = levi_cocharacter(rs, delta)
    w1, lam = make_dominant(rs, c, tie_break=tie_break)

    raw = root_weights(rs, lam)
    if any(x.denominator != 1 for x in raw):
        raise NormalizationError(f"non-integral root weights for delta_M={sorted(delta)}")
    weights = tuple(int(x) for x in raw)

    delta_L = frozenset(i for i in rs.simple_indices if weights[rs.simple[i - 1]] == 0)
    phi_L = RootSet.from_indices(rs.size, (k for k, x in enumerate(weights) if x == 0))
    if phi_L != subsystem(rs, delta_L).phi_M:
        raise NormalizationError("zero-weight roots are not the parabolic subsystem of their simple roots")

    y1, v1 = parabolic_decompose(rs, w1, delta_L)
    tilde = root_weights(rs, c)
    inv = v1.inverse_perm
    if any(weights[k] != tilde[inv[k]] for k in range(rs.size)):
        raise NormalizationError("v1 does not carry lambda~ to the dominant coweight")

    phi_N = RootSet.from_indices(rs.size, (v1.perm[rs.simple[i - 1]] for i in delta))
    if not phi_N <= rs.positive or any(weights[k] != 2 for k in phi_N):
        raise NormalizationError("Phi_N must consist of positive roots of weight 2")
    phi_M = subsystem(rs, delta).phi_M
    if not phi_L.isdisjoint(v1.image(phi_M)):
        raise NormalizationError("Phi_L meets v1(Phi_M)")

    phi_L_plus = phi_L & rs.positive
    phi_L_minus = phi_L & rs.negative
    V_plus = _sums(rs, phi_N, phi_L_plus, rs.positive)
    V_minus = _sums(rs, phi_N, phi_L_minus, rs.positive)
    two = RootSet.from_indices(rs.size, (k for k in rs.positive if weights[k] == 2))
    pieces = (V_minus, phi_N, V_plus)
    if not (V_minus.isdisjoint(phi_N) and V_plus.isdisjoint(phi_N) and V_plus.isdisjoint(V_minus)) \
            or (V_minus | phi_N | V_plus) != two:
        raise NormalizationError(f"weight-2 roots do not split as V- + Phi_N + V+: {pieces}")

    cd = CocharacterData(
        rs=rs, delta_M=delta, c=c, lam=lam, weights=weights, w1=w1, y1=y1, v1=v1,
        delta_L=delta_L, phi_N=phi_N, phi_L=phi_L, phi_V_plus=V_plus, phi_V_minus=V_minus,
        phi_script_V=rs.empty(),
    )
    script_V = orbit_roots(rs, cd)
    if not script_V.isdisjoint(phi_N) or not script_V <= rs.positive:
        raise NormalizationError("orbit roots must be positive and avoid Phi_N")
    return replace(cd, phi_script_V=script_V)


def orbit_roots(rs: RootSystem, cd: CocharacterData) -> RootSet:
    """Phi(V) for U.N = N + V: the roots of V+ and every root of weight >= 3."""
    high = RootSet.from_indices(rs.size, (k for k, x in enumerate(cd.weights) if x >= 3))
    return cd.phi_V_plus | high


def trivial(rs: RootSystem) -> CocharacterData:
    """Data for N = 0 (empty Delta_M)."""
    return normalize(rs, ())


__all__ = ["CocharacterData", "NormalizationError", "levi_cocharacter", "normalize",
           "orbit_roots", "root_weights", "solve_exact", "trivial"]
