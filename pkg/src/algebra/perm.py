"""
Permutations of {1..n}, subgroup closure, conjugacy classes and coset actions.

Composition convention: (g*h)(x) = g(h(x)), the right factor acts first.
Groups here have at most 120 elements and are handled as explicit lists.
"""
from __future__ import annotations

import re
from collections import deque
from functools import lru_cache
from math import lcm
from typing import Callable, Dict, Iterable, List, Sequence

# Tag written into every report header.
COMPOSITION_CONVENTION = "rtl"

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Perm:
    """A permutation stored by its image sequence: images[i-1] is the image of i."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        images = list(range(1, degree + 1))
        for cycle in cycles:
            cycle = list(cycle)
            if any(not 1 <= x <= degree for x in cycle):
                raise ValueError(f"cycle {cycle} leaves 1..{degree}")
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int = 5) -> "Perm":
        """Parse cycle notation: '(1 2 3 4 5)', '(1 2)(3 5)', '(12)(35)' or '()'."""
        text = text.strip()
        if not text or text in ("()", "1", "(1)", "id"):
            return cls.identity(degree)
        stripped = _CYCLE_RE.sub("", text).strip()
        if stripped:
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            body = body.strip()
            if "," in body or " " in body:
                points = [int(tok) for tok in re.split(r"[,\s]+", body) if tok]
            else:
                # compact form, single-digit points
                points = [int(ch) for ch in body]
            if len(set(points)) != len(points):
                raise ValueError(f"repeated point in cycle ({body})")
            cycles.append(points)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Perm(inv)

    def __pow__(self, exponent: int) -> "Perm":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = Perm.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, by: "Perm") -> "Perm":
        """by * self * by^-1."""
        return by * self * by.inverse()

    def cycles(self) -> List[tuple]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycle_type(self) -> tuple:
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        return tuple(lengths + [1] * (self.degree - sum(lengths)))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def fixed_points(self) -> int:
        return sum(1 for i, image in enumerate(self.images, start=1) if i == image)

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images, start=1))

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm({format_perm(self)})"

    def __str__(self):
        return format_perm(self)


def format_perm(p: Perm, compact: bool = False) -> str:
    """Cycle notation, '(1 2)(3 5)' or compact '(12)(35)'."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    sep = "" if compact and p.degree < 10 else " "
    return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cycles)


def compose(g: Perm, h: Perm) -> Perm:
    """(g*h)(x) = g(h(x))."""
    if g.degree != h.degree:
        raise ValueError(f"degree mismatch: {g.degree} vs {h.degree}")
    gi = g.images
    return Perm(tuple(gi[x - 1] for x in h.images))


def multiply(g: Perm, h: Perm, convention: str = COMPOSITION_CONVENTION) -> Perm:
    """Product g.h read under the given convention ('rtl': h first; 'ltr': g first)."""
    if convention == "rtl":
        return compose(g, h)
    if convention == "ltr":
        return compose(h, g)
    raise ValueError(f"unknown composition convention {convention!r}")


class GroupTable:
    """Explicit finite permutation group: element list plus index map."""

    def __init__(self, elements: Sequence[Perm], name: str = ""):
        self.elements = tuple(elements)
        self.index: Dict[Perm, int] = {g: i for i, g in enumerate(self.elements)}
        self.name = name
        self.degree = self.elements[0].degree

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g in self.index

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_subgroup_of(self, other: "GroupTable") -> bool:
        return all(g in other for g in self.elements)

    def elements_of_order(self, r: int) -> List[Perm]:
        return [g for g in self.elements if g.order() == r]

    def verify_group(self) -> bool:
        """Closed under composition and inverse, contains the identity."""
        if self.identity() not in self:
            return False
        for g in self.elements:
            if g.inverse() not in self:
                return False
            for h in self.elements:
                if g * h not in self:
                    return False
        return True

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<GroupTable{label} order={self.order}>"


def closure(gens: Sequence[Perm], name: str = "") -> GroupTable:
    """Breadth-first closure of the generators under composition."""
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators have different degrees")
    identity = Perm.identity(degree)
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                order.append(h)
                queue.append(h)
    return GroupTable(order, name)


def conjugacy_classes(group: GroupTable) -> List[List[Perm]]:
    """Partition by conjugation orbits, in order of first appearance."""
    seen = set()
    classes = []
    for g in group.elements:
        if g in seen:
            continue
        orbit = []
        for x in group.elements:
            c = g.conjugate(x)
            if c not in seen:
                seen.add(c)
                orbit.append(c)
        classes.append(sorted(orbit))
    return classes


def class_index(classes: Sequence[Sequence[Perm]]) -> Dict[Perm, int]:
    return {g: i for i, cls in enumerate(classes) for g in cls}


def are_conjugate(group: GroupTable, g: Perm, h: Perm) -> bool:
    return any(g.conjugate(x) == h for x in group.elements)


def centralizer_order(group: GroupTable, g: Perm) -> int:
    return sum(1 for x in group.elements if x * g == g * x)


def left_cosets(group: GroupTable, subgroup: GroupTable) -> List[frozenset]:
    """Left cosets gH, ordered by their least element."""
    if not subgroup.is_subgroup_of(group):
        raise ValueError(f"{subgroup!r} is not a subgroup of {group!r}")
    seen = set()
    cosets = []
    for g in sorted(group.elements):
        if g in seen:
            continue
        coset = frozenset(g * h for h in subgroup.elements)
        seen |= coset
        cosets.append(coset)
    return cosets


def coset_action(group: GroupTable, subgroup: GroupTable) -> Dict[Perm, Perm]:
    """Left multiplication on left cosets, as a map element -> Perm on {1..[G:H]}."""
    cosets = left_cosets(group, subgroup)
    where = {g: i for i, coset in enumerate(cosets, start=1) for g in coset}
    action = {}
    for x in group.elements:
        images = [where[x * min(coset)] for coset in cosets]
        action[x] = Perm(images)
    return action


def core(group: GroupTable, subgroup: GroupTable) -> List[Perm]:
    """Largest normal subgroup of `group` inside `subgroup`."""
    return [h for h in subgroup.elements
            if all(h.conjugate(x) in subgroup for x in group.elements)]


def power_class_map(group: GroupTable, classes: Sequence[Sequence[Perm]], power: int) -> List[int]:
    """For each class, the index of the class containing g^power."""
    where = class_index(classes)
    return [where[cls[0] ** power] for cls in classes]


def orbit(points: Iterable, act: Callable, generators: Sequence) -> List:
    """Orbit of the given starting points under repeated application of act(gen, point)."""
    start = list(points)
    seen = set(start)
    queue = deque(start)
    out = list(start)
    while queue:
        p = queue.popleft()
        for s in generators:
            q = act(s, p)
            if q not in seen:
                seen.add(q)
                out.append(q)
                queue.append(q)
    return out


@lru_cache(maxsize=None)
def alternating_group() -> GroupTable:
    return closure([Perm.parse("(12345)"), Perm.parse("(12)(34)")], name="A5")


@lru_cache(maxsize=None)
def symmetric_group() -> GroupTable:
    return closure([Perm.parse("(12345)"), Perm.parse("(12)")], name="S5")
