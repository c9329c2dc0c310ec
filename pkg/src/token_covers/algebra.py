"""Finite cyclic groups, subgroups, right cosets, and vertex permutations.

Only cyclic groups are implemented: every construction in this package
voltages over Z_m, and for abelian groups the left/right coset distinction
vanishes.  The coset type keeps a small arithmetic surface (translate,
intersect) so covering-lift edge rules never materialize member sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class CyclicGroup:
    """Z_m with elements 0..m-1 under addition mod m."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.modulus)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def negate(self, a: int) -> int:
        return (-a) % self.modulus

    def subgroup(self, generator: int) -> "Subgroup":
        return Subgroup(self, generator)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.modulus)

    def subgroups(self):
        """All subgroups, one per divisor of the modulus."""
        m = self.modulus
        return [Subgroup(self, d) for d in range(1, m + 1) if m % d == 0]


@dataclass(frozen=True)
class Subgroup:
    """The subgroup dZ_m = {0, d, 2d, ...} of Z_m; requires d | m.

    The index [Z_m : dZ_m] equals d, and the trivial subgroup {0} is the
    case d = m.
    """

    group: CyclicGroup
    generator: int

    def __post_init__(self):
        m = self.group.modulus
        if not (1 <= self.generator <= m) or m % self.generator != 0:
            raise ValueError(f"generator {self.generator} must divide modulus {m}")

    @property
    def index(self) -> int:
        return self.generator

    @property
    def size(self) -> int:
        return self.group.modulus // self.generator

    @property
    def is_trivial(self) -> bool:
        return self.generator == self.group.modulus

    def members(self) -> range:
        return range(0, self.group.modulus, self.generator)

    def contains(self, x: int) -> bool:
        return x % self.generator == 0

    def cosets(self):
        return [Coset(self, r) for r in range(self.generator)]

    def coset_of(self, x: int) -> "Coset":
        return Coset(self, x)


@dataclass(frozen=True)
class Coset:
    """Right coset rep + dZ_m, canonicalized to 0 <= rep < d."""

    subgroup: Subgroup
    rep: int

    def __post_init__(self):
        object.__setattr__(self, "rep", self.rep % self.subgroup.generator)

    def members(self) -> range:
        return range(self.rep, self.subgroup.group.modulus, self.subgroup.generator)

    def contains(self, x: int) -> bool:
        return x % self.subgroup.generator == self.rep

    def translate(self, v: int) -> "Coset":
        return Coset(self.subgroup, self.rep + v)

    def intersects(self, other: "Coset") -> bool:
        """Whether the two cosets (of possibly different subgroups of the
        same group) share an element: solvable congruence test, no sets."""
        if self.subgroup.group != other.subgroup.group:
            raise ValueError("cosets live in different groups")
        d = gcd(self.subgroup.generator, other.subgroup.generator)
        return (self.rep - other.rep) % d == 0


def cosets(H: Subgroup):
    """All [G:H] cosets of H, sorted by canonical representative."""
    return H.cosets()


def coset_translate(K: Coset, v: int) -> Coset:
    """The set-wise translate K + v with recanonicalized representative."""
    return K.translate(v)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """A permutation of 0..n-1, stored as its image tuple."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not (isinstance(x, int) and 0 <= x < n) or seen[x]:
                raise ValueError("images do not define a permutation")
            seen[x] = True

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(p * q)(x) = p(q(x))."""
        if self.degree != other.degree:
            raise ValueError("composing permutations of different degrees")
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def orbits(self):
        """All cycles including fixed points, each starting at its minimum
        and listed in cycle order, sorted by minimum element."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycles(self):
        """Nontrivial cycles only (fixed points omitted)."""
        return [c for c in self.orbits() if len(c) > 1]

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.orbits())) if self.images else 1

    def fixed_points(self):
        return [i for i, x in enumerate(self.images) if i == x]


def permutation_order(p: Permutation) -> int:
    """Least t >= 1 with p^t = identity (lcm of cycle lengths)."""
    return p.order()


@dataclass(frozen=True)
class Closure:
    """Result of a capped group closure; ``len(elements)`` is always a
    lower bound on the group order, exact when ``complete``."""

    elements: frozenset
    complete: bool

    @property
    def order_lower_bound(self) -> int:
        return len(self.elements)


def group_closure(gens: Sequence[Permutation], cap: int = 10**6, *,
                  degree: Optional[int] = None) -> Closure:
    """Breadth-first closure of the generated permutation group.

    Stops once more than ``cap`` elements would be collected and returns the
    partial set with ``complete=False`` (a recoverable overflow signal, not
    an error).
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    gens = list(gens)
    if degree is None:
        degree = gens[0].degree if gens else 0
    if any(g.degree != degree for g in gens):
        raise ValueError("generators act on inconsistent domains")
    ident = Permutation.identity(degree)
    known = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in known:
                    if len(known) >= cap:
                        return Closure(frozenset(known), False)
                    known.add(q)
                    new.append(q)
        frontier = new
    return Closure(frozenset(known), True)
