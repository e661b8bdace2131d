"""Finite crystallographic root systems in the simple-root basis.

Roots are integer coefficient tuples over the simple roots, so every
reflection and pairing is exact integer arithmetic.  Cartan matrices follow
the convention ``A[i][j] = <alpha_j, alpha_i^vee>`` with Bourbaki node
numbering; simple indices are 1-based in the public API.

Explicit rank-2 matrices for reference::

    B2: [[ 2, -1],      C2: [[ 2, -2],      G2: [[ 2, -3],
         [-2,  2]]           [-1,  2]]           [-1,  2]]

(B: alpha_n short; C: alpha_n long; G2: alpha_1 short.)
"""

from __future__ import annotations

from collections import deque
from math import factorial
from typing import Iterable, Sequence

from hesspave.rootset import RootSet

Root = tuple[int, ...]

TYPE_LABELS = "ABCDEFG"

#: classical root counts |Phi| by (type, rank)
ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

WEYL_ORDERS = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2**n * factorial(n),
    "C": lambda n: 2**n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


class RootSystemError(ValueError):
    """Raised for an invalid (type, rank) pair or malformed Cartan data."""


def valid_pair(type_label: str, rank: int) -> bool:
    if not isinstance(rank, int) or rank < 1:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }.get(type_label, False)


def cartan_matrix(type_label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of an irreducible type, Bourbaki numbering."""
    if not valid_pair(type_label, rank):
        raise RootSystemError(f"invalid root system type/rank pair ({type_label!r}, {rank!r})")
    n = rank
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2

    def link(i, j):
        # 1-based nodes, simple bond
        A[i - 1][j - 1] = -1
        A[j - 1][i - 1] = -1

    if type_label in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if type_label == "B":
            A[n - 1][n - 2] = -2
        elif type_label == "C":
            A[n - 2][n - 1] = -2
    elif type_label == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif type_label == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif type_label == "F":
        link(1, 2)
        link(2, 3)
        link(3, 4)
        A[2][1] = -2
    elif type_label == "G":
        A[0][1] = -3
        A[1][0] = -1
    return tuple(tuple(row) for row in A)


def _check_cartan(A: Sequence[Sequence[int]]) -> None:
    n = len(A)
    for i in range(n):
        if len(A[i]) != n:
            raise RootSystemError("Cartan matrix must be square")
        if A[i][i] != 2:
            raise RootSystemError(f"Cartan diagonal entry A[{i + 1}][{i + 1}] != 2")
        for j in range(n):
            if i != j and (A[i][j] > 0 or (A[i][j] == 0) != (A[j][i] == 0)):
                raise RootSystemError(f"Cartan entries A[{i + 1}][{j + 1}], A[{j + 1}][{i + 1}] are inconsistent")


def _height_key(root: Root):
    return (sum(root), root)


class RootSystem:
    """An immutable finite root system built by reflection closure.

    Roots are stored in a fixed order, sorted by ``(height, coefficients)``;
    a root's position is its bit in every :class:`RootSet`.
    """

    def __init__(self, cartan: Sequence[Sequence[int]], type_label: str | None = None):
        _check_cartan(cartan)
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = len(self.cartan)
        self.type_label = type_label
        n = self.rank

        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            gamma = queue.popleft()
            for i in range(n):
                beta = self._reflect_coeffs(gamma, i)
                if beta not in seen:
                    if len(seen) > 10_000:
                        raise RootSystemError("reflection closure does not terminate; Cartan matrix is not of finite type")
                    seen.add(beta)
                    queue.append(beta)
        for gamma in seen:
            if any(c > 0 for c in gamma) and any(c < 0 for c in gamma):
                raise RootSystemError("Cartan matrix is not of finite type (mixed-sign root)")

        self.roots: tuple[Root, ...] = tuple(sorted(seen, key=_height_key))
        self.index: dict[Root, int] = {r: k for k, r in enumerate(self.roots)}
        self.size = len(self.roots)
        self.neg = tuple(self.index[tuple(-c for c in r)] for r in self.roots)
        self.heights = tuple(sum(r) for r in self.roots)
        self.simple: tuple[int, ...] = tuple(self.index[r] for r in simple)
        self.positive = RootSet.from_indices(self.size, (k for k, h in enumerate(self.heights) if h > 0))
        self.negative = RootSet.from_indices(self.size, (k for k, h in enumerate(self.heights) if h < 0))
        self.simple_set = RootSet.from_indices(self.size, self.simple)
        # pairings[i][k] = <root_k, alpha_{i+1}^vee>
        self.pairings = tuple(
            tuple(sum(c * a for c, a in zip(r, self.cartan[i])) for r in self.roots) for i in range(n)
        )
        # reflections[i][k] = index of s_{i+1}(root_k)
        self.reflections = tuple(
            tuple(self.index[self._reflect_coeffs(r, i)] for r in self.roots) for i in range(n)
        )

    def _reflect_coeffs(self, gamma: Root, i: int) -> Root:
        p = sum(c * a for c, a in zip(gamma, self.cartan[i]))
        if p == 0:
            return gamma
        out = list(gamma)
        out[i] -= p
        return tuple(out)

    def __repr__(self):
        label = f"{self.type_label}{self.rank}" if self.type_label else f"rank {self.rank}"
        return f"RootSystem({label}, {self.size} roots)"

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}" if self.type_label else f"cartan{self.cartan}"

    @property
    def simple_indices(self) -> tuple[int, ...]:
        """Simple indices 1..rank."""
        return tuple(range(1, self.rank + 1))

    def root_index(self, root: Iterable[int]) -> int:
        key = tuple(root)
        try:
            return self.index[key]
        except KeyError:
            raise RootSystemError(f"{key} is not a root of {self!r}") from None

    def is_positive(self, k: int) -> bool:
        return self.heights[k] > 0

    def simple_root(self, i: int) -> Root:
        return self.roots[self.simple[i - 1]]

    def rootset(self, roots: Iterable[Iterable[int]]) -> RootSet:
        return RootSet.from_indices(self.size, (self.root_index(r) for r in roots))

    def roots_of(self, s: RootSet) -> list[Root]:
        return [self.roots[k] for k in s]

    def full(self) -> RootSet:
        return RootSet(self.size, (1 << self.size) - 1)

    def empty(self) -> RootSet:
        return RootSet(self.size, 0)

    def weyl_order(self) -> int:
        """|W| from the classification of the Dynkin components."""
        order = 1
        for comp in dynkin_components(self.cartan):
            order *= WEYL_ORDERS[classify_component(self.cartan, comp)[0]](len(comp))
        return order


def dynkin_components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    """Connected components of the Dynkin diagram, as sorted 0-based index lists."""
    n = len(cartan)
    left = set(range(n))
    comps = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in comp and cartan[i][j] != 0:
                    comp.add(j)
                    stack.append(j)
        left -= comp
        comps.append(sorted(comp))
    return comps


def classify_component(cartan: Sequence[Sequence[int]], comp: Sequence[int]) -> tuple[str, int]:
    """Type label of one connected component (B and C are told apart by bond direction)."""
    r = len(comp)
    entries = [cartan[i][j] for i in comp for j in comp if i != j]
    if -3 in entries:
        return "G", 2
    degrees = [sum(1 for j in comp if j != i and cartan[i][j] != 0) for i in comp]
    if -2 in entries:
        ((i, j),) = [(i, j) for i in comp for j in comp if cartan[i][j] == -2]
        ends = [k for k, d in zip(comp, degrees) if d == 1]
        if r == 2:
            return "B", 2
        if i not in ends and j not in ends:
            return "F", 4
        # the -2 sits on the short root's row; B has its short root at the end
        return ("B", r) if i in ends else ("C", r)
    if max(degrees, default=0) <= 2:
        return "A", r
    if r in (6, 7, 8):
        # E has arms of length 1, 2, r-4 off the branch node; D has 1, 1, r-3
        branch = [i for i, d in zip(comp, degrees) if d == 3][0]
        short_arms = sum(1 for j in comp if j != branch and cartan[branch][j] != 0
                         and sum(1 for k in comp if k != j and cartan[j][k] != 0) == 1)
        return ("D", r) if short_arms >= 2 else ("E", r)
    return "D", r


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Irreducible root system of the given type and rank.

    >>> build_root_system("A", 2).size
    6
    """
    rs = RootSystem(cartan_matrix(type_label, rank), type_label=type_label)
    expected = ROOT_COUNTS[type_label](rank)
    if rs.size != expected:
        raise RootSystemError(f"{type_label}{rank}: built {rs.size} roots, expected {expected}")
    return rs


def pairing(rs: RootSystem, gamma: Iterable[int], i: int) -> int:
    """<gamma, alpha_i^vee> for a root gamma and a 1-based simple index."""
    return rs.pairings[i - 1][rs.root_index(gamma)]


def reflect(rs: RootSystem, gamma: Iterable[int], i: int) -> Root:
    """s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i."""
    return rs.roots[rs.reflections[i - 1][rs.root_index(gamma)]]


def _check_simple_indices(rs: RootSystem, delta: Iterable[int]) -> frozenset[int]:
    out = frozenset(delta)
    bad = [i for i in out if not (isinstance(i, int) and 1 <= i <= rs.rank)]
    if bad:
        raise RootSystemError(f"simple indices {sorted(bad)} out of range 1..{rs.rank}")
    return out


class RootSubsystem:
    """Levi subsystem Phi_M spanned by the simple roots in ``delta_M``.

    ``as_root_system()`` gives the standalone root system of M (own Cartan
    matrix, own root order); ``to_parent`` maps its root indices into the
    parent's root indices.
    """

    def __init__(self, parent: RootSystem, delta_M: Iterable[int]):
        self.parent = parent
        self.delta_M = _check_simple_indices(parent, delta_M)
        self.order = tuple(sorted(self.delta_M))
        off = [i - 1 for i in range(1, parent.rank + 1) if i not in self.delta_M]
        self.phi_M = RootSet.from_indices(
            parent.size, (k for k, r in enumerate(parent.roots) if all(r[j] == 0 for j in off))
        )
        self.positive = self.phi_M & parent.positive
        self.negative = self.phi_M & parent.negative
        self.phi_uQ = parent.positive - self.positive
        self.cartan_M = tuple(tuple(parent.cartan[i - 1][j - 1] for j in self.order) for i in self.order)
        self._standalone = None

    def __repr__(self):
        return f"RootSubsystem({self.parent!r}, delta_M={sorted(self.delta_M)})"

    def as_root_system(self) -> RootSystem:
        if self._standalone is None:
            sub = RootSystem(self.cartan_M) if self.order else None
            if sub is not None:
                emb = []
                for r in sub.roots:
                    full = [0] * self.parent.rank
                    for c, i in zip(r, self.order):
                        full[i - 1] = c
                    emb.append(self.parent.index[tuple(full)])
                self.to_parent = tuple(emb)
                self.from_parent = {p: k for k, p in enumerate(emb)}
                if len(emb) != len(self.phi_M):
                    raise RootSystemError("subsystem root count disagrees with parent support count")
            self._standalone = sub
        return self._standalone

    def sub_index(self, i: int) -> int:
        """Parent simple index -> 1-based index inside the standalone subsystem."""
        return self.order.index(i) + 1

    def lift(self, s: RootSet) -> RootSet:
        """Root set of the standalone subsystem -> root set of the parent."""
        self.as_root_system()
        return RootSet.from_indices(self.parent.size, (self.to_parent[k] for k in s))

    def restrict(self, s: RootSet) -> RootSet:
        """Parent root set (inside Phi_M) -> root set of the standalone subsystem."""
        sub = self.as_root_system()
        return RootSet.from_indices(sub.size, (self.from_parent[k] for k in s & self.phi_M))


def subsystem(rs: RootSystem, delta_M: Iterable[int]) -> RootSubsystem:
    return RootSubsystem(rs, delta_M)
