"""
Riemann-Hurwitz arithmetic for A5 covers, degenerations of generating tuples,
the signed homology character and the binary icosahedral group.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, List, Sequence, Tuple

from .characters import (ClassFunction, a5_table, decompose, signed_orbit_character, sym_cube)
from .exactfield import ConstructionError, CycloNum, golden_ratio
from .hurwitz import GenTuple
from .perm import closure

GROUP_ORDER = 60
# Orders of nontrivial cyclic subgroups of A5.
CYCLIC_ORDERS = (2, 3, 5)


@dataclass(frozen=True)
class OrbSignature:
    genus: int
    orders: Tuple[int, ...]

    def __post_init__(self):
        if self.genus < 0 or any(o < 2 for o in self.orders):
            raise ValueError(f"invalid orbifold signature ({self.genus}; {self.orders})")

    def __str__(self):
        return f"({self.genus};" + ",".join(str(o) for o in self.orders) + ")"


def alpha_value(stabilizer_order: int, group_order: int = GROUP_ORDER) -> int:
    """Ramification contributed by one branch orbit: |G| - |G|/|stab|."""
    if stabilizer_order not in (1,) + CYCLIC_ORDERS:
        raise ValueError(f"{stabilizer_order} is not the order of a cyclic subgroup of A5")
    return group_order - group_order // stabilizer_order


def signature_solutions(cover_genus: int = 10, group_order: int = GROUP_ORDER,
                        max_points: int = None) -> List[OrbSignature]:
    """All (g; orders) with 2*cover_genus - 2 = |G|(2g - 2) + sum of alpha values."""
    total = 2 * cover_genus - 2 + 2 * group_order
    alphas = {alpha_value(o, group_order): o for o in CYCLIC_ORDERS}
    smallest = min(alphas)
    solutions = []
    for g in range(total // (2 * group_order) + 1):
        remainder = total - 2 * group_order * g
        limit = remainder // smallest if max_points is None else max_points
        for size in range(limit + 1):
            for combo in _multisets(sorted(alphas, reverse=True), size):
                if sum(combo) == remainder:
                    orders = tuple(sorted((alphas[a] for a in combo), reverse=True))
                    solutions.append(OrbSignature(g, orders))
    return solutions


def _multisets(values: Sequence[int], size: int):
    if size == 0:
        yield ()
        return
    if not values:
        return
    head, rest = values[0], values[1:]
    for k in range(size, -1, -1):
        for tail in _multisets(rest, size - k):
            yield (head,) * k + tail


def regular_cover_genus(group_order: int, branch_orders: Sequence[int], base_genus: int = 0) -> int:
    """Genus g from 2g - 2 = N(2b - 2) + sum N(1 - 1/o)."""
    for o in branch_orders:
        if o < 1 or group_order % o:
            raise ValueError(f"branch order {o} does not divide {group_order}")
    euler = Fraction(group_order * (2 * base_genus - 2))
    for o in branch_orders:
        euler += group_order * (1 - Fraction(1, o))
    genus = (euler + 2) / 2
    if genus.denominator != 1 or genus < 0:
        raise ValueError(f"non-integral or negative genus {genus}")
    return int(genus)


@dataclass
class DegenerationReport:
    n: int
    nodes: int
    components: int
    component_genus: int
    arithmetic_genus: int
    subgroup_order: int

    @property
    def node_stabilizer_order(self) -> int:
        return 2 * self.n

    def as_triple(self) -> Tuple[int, int, int]:
        return self.nodes, self.components, self.component_genus

    def to_dict(self) -> Dict[str, int]:
        return {"n": self.n, "nodes": self.nodes, "components": self.components,
                "component_genus": self.component_genus, "arithmetic_genus": self.arithmetic_genus}


# Node count of each degeneration type and the singular pencil member it resembles.
MEMBER_BY_NODES = {15: "infinity", 10: "27/5", 6: "-1"}


def degeneration_report(t: GenTuple, group_order: int = GROUP_ORDER) -> DegenerationReport:
    """Coalesce the last two branch points: n = ord(g3 g4), H = <g1, g2, g3 g4>."""
    g1, g2, g3, g4 = t.entries
    coalesced = t.mul(g3, g4)
    n = coalesced.order()
    if n not in CYCLIC_ORDERS:
        raise ValueError(f"g3 g4 has order {n}, expected one of {CYCLIC_ORDERS}")
    nodes = group_order // (2 * n)
    subgroup = closure([g1, g2, coalesced])
    components = group_order // subgroup.order
    genus = regular_cover_genus(subgroup.order, [g1.order(), g2.order(), n])
    arithmetic = components * genus + 1 - components + nodes
    return DegenerationReport(n, nodes, components, genus, arithmetic, subgroup.order)


@dataclass
class HomologyCheck:
    passed: bool
    character: ClassFunction
    decomposition: Dict[str, int]
    doubled: Dict[str, int]
    equals_sym_cube: bool


def homology_character_check() -> HomologyCheck:
    chi_l = signed_orbit_character()
    decomposition = decompose(chi_l)
    doubled = decompose(chi_l + chi_l.conjugate())
    matches = chi_l == sym_cube(a5_table()["I"])
    passed = (decomposition == {"I": 1, "I'": 1, "V": 1}
              and doubled == {"I": 2, "I'": 2, "V": 2}
              and chi_l.is_real() and matches)
    return HomologyCheck(passed, chi_l, decomposition, doubled, matches)


class Quaternion:
    """a + b i + c j + d k with cyclotomic components."""

    __slots__ = ("parts",)

    def __init__(self, a, b, c, d):
        self.parts = tuple(CycloNum.from_rational(5, x) if not isinstance(x, CycloNum) else x
                           for x in (a, b, c, d))

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        a1, b1, c1, d1 = self.parts
        a2, b2, c2, d2 = other.parts
        return Quaternion(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    def __neg__(self):
        return Quaternion(*(-x for x in self.parts))

    def conjugate(self) -> "Quaternion":
        a, b, c, d = self.parts
        return Quaternion(a, -b, -c, -d)

    def norm(self) -> CycloNum:
        return sum((x * x for x in self.parts), CycloNum.zero(5))

    def inverse(self) -> "Quaternion":
        n = self.norm()
        return Quaternion(*(x / n for x in self.conjugate().parts))

    def is_one(self) -> bool:
        return self == Quaternion(1, 0, 0, 0)

    def sort_key(self):
        return tuple(x.sort_key() for x in self.parts)

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Quaternion(" + ", ".join(str(x) for x in self.parts) + ")"


def _even_permutations(size: int = 4) -> List[Tuple[int, ...]]:
    out = []
    for p in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if p[i] > p[j])
        if inversions % 2 == 0:
            out.append(p)
    return out


def binary_icosahedral_elements() -> List[Quaternion]:
    """Hurwitz units plus even permutations of (0, +-1, +-1/phi, +-phi)/2."""
    half = Fraction(1, 2)
    units = []
    for i in range(4):
        for s in (1, -1):
            parts = [0, 0, 0, 0]
            parts[i] = s
            units.append(Quaternion(*parts))
    for signs in product((half, -half), repeat=4):
        units.append(Quaternion(*signs))
    phi = golden_ratio()
    base = [CycloNum.zero(5), CycloNum.one(5) * half, (phi - 1) * half, phi * half]
    for signs in product((1, -1), repeat=3):
        values = [base[0], base[1] * signs[0], base[2] * signs[1], base[3] * signs[2]]
        for p in _even_permutations():
            parts = [None] * 4
            for position, source in enumerate(p):
                parts[position] = values[source]
            units.append(Quaternion(*parts))
    return units


def _quaternion_closure(generators: Sequence[Quaternion]) -> set:
    identity = Quaternion(1, 0, 0, 0)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def generating_set(elements: Sequence[Quaternion]) -> List[Quaternion]:
    """Greedy generators taken in sort_key order, so the result ignores the order of `elements`."""
    total = len(set(elements))
    generators: List[Quaternion] = []
    span = {Quaternion(1, 0, 0, 0)}
    for q in sorted(elements, key=Quaternion.sort_key):
        if len(span) == total:
            break
        if q not in span:
            generators.append(q)
            span = _quaternion_closure(generators)
    return generators


def derived_subgroup(elements: Sequence[Quaternion]) -> set:
    """Normal closure of the commutators of a generating set."""
    generators = generating_set(elements)
    commutators = {x * y * x.inverse() * y.inverse() for x in generators for y in generators}
    conjugates = {g * c * g.inverse() for g in elements for c in commutators}
    return _quaternion_closure(sorted(conjugates, key=Quaternion.sort_key))


@dataclass
class BinaryIcosahedralReport:
    order: int
    closed: bool
    all_units: bool
    center_order: int
    abelianization_order: int
    quotient_class_sizes: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.order == 120 and self.closed and self.all_units and self.center_order == 2
                and self.abelianization_order == 1 and self.quotient_class_sizes == [1, 12, 12, 15, 20])


def binary_icosahedral_checks() -> BinaryIcosahedralReport:
    elements = binary_icosahedral_elements()
    group = set(elements)
    if len(group) != len(elements):
        raise ConstructionError("duplicate quaternions in the icosian list")
    closed = all(x * y in group for x in elements for y in elements)
    all_units = all(x.norm() == 1 for x in elements)
    center = [z for z in elements if all(z * x == x * z for x in elements)]
    derived = derived_subgroup(elements)
    sizes = _classes_mod_sign(elements)
    return BinaryIcosahedralReport(len(group), closed, all_units, len(center),
                                   len(group) // len(derived), sizes)


def _classes_mod_sign(elements: Sequence[Quaternion]) -> List[int]:
    """Class sizes of the quotient by {+1, -1}."""

    def key(q: Quaternion):
        return min(q, -q, key=Quaternion.sort_key)

    inverses = [x.inverse() for x in elements]
    seen = set()
    sizes = []
    for q in elements:
        k = key(q)
        if k in seen:
            continue
        cls = {key(x * q * x_inv) for x, x_inv in zip(elements, inverses)}
        seen |= cls
        sizes.append(len(cls))
    return sorted(sizes)
