"""
Generating tuples of A5 with order profile (5,2,2,2), their classes under
simultaneous conjugation, and Hurwitz (braid) moves on them.

Products are read with perm.multiply under a named convention; "rtl" is the
default everywhere.
"""
from __future__ import annotations

import random
from functools import reduce
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .characters import a5_classes
from .perm import COMPOSITION_CONVENTION, Perm, alternating_group, closure, multiply

PROFILE = (5, 2, 2, 2)
PURE = "pure"
WEIGHTED = "weighted"


def product(perms: Sequence[Perm], convention: str = COMPOSITION_CONVENTION) -> Perm:
    return reduce(lambda g, h: multiply(g, h, convention), perms)


class GenTuple:
    """An ordered tuple (g1, ..., gk) of permutations."""

    __slots__ = ("entries", "convention")

    def __init__(self, entries: Sequence[Perm], convention: str = COMPOSITION_CONVENTION):
        self.entries = tuple(entries)
        self.convention = convention

    @classmethod
    def parse(cls, texts: Sequence[str], convention: str = COMPOSITION_CONVENTION) -> "GenTuple":
        return cls([Perm.parse(t) for t in texts], convention)

    def __getitem__(self, k: int) -> Perm:
        return self.entries[k]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def mul(self, g: Perm, h: Perm) -> Perm:
        return multiply(g, h, self.convention)

    def product(self) -> Perm:
        return product(self.entries, self.convention)

    def orders(self) -> Tuple[int, ...]:
        return tuple(g.order() for g in self.entries)

    def generates(self, order: int = 60) -> bool:
        return closure(self.entries).order == order

    def is_valid(self, profile: Sequence[int] = PROFILE) -> bool:
        return (self.orders() == tuple(profile) and self.product().is_identity()
                and self.generates())

    def r_value(self) -> int:
        """Order of g1 g2."""
        return self.mul(self.entries[0], self.entries[1]).order()

    def conjugate(self, by: Perm) -> "GenTuple":
        return GenTuple([g.conjugate(by) for g in self.entries], self.convention)

    def key(self) -> tuple:
        return tuple(g.images for g in self.entries)

    def inverted(self) -> "GenTuple":
        return GenTuple([g.inverse() for g in self.entries], self.convention)

    def reversed(self) -> "GenTuple":
        return GenTuple(self.entries[::-1], self.convention)

    def __eq__(self, other):
        if not isinstance(other, GenTuple):
            return NotImplemented
        return self.entries == other.entries and self.convention == other.convention

    def __hash__(self):
        return hash((self.entries, self.convention))

    def to_strings(self) -> List[str]:
        return [str(g) for g in self.entries]

    def __repr__(self):
        return "(" + ", ".join(self.to_strings()) + ")"


def canonical(t: GenTuple, group: Iterable[Perm] = None) -> GenTuple:
    """Lexicographically least tuple in the simultaneous-conjugation orbit."""
    group = group if group is not None else alternating_group()
    return min((t.conjugate(x) for x in group), key=GenTuple.key)


class TupleClass:
    """A simultaneous-conjugation class, named by its canonical representative."""

    __slots__ = ("rep",)

    def __init__(self, rep: GenTuple):
        self.rep = rep

    @classmethod
    def of(cls, t: GenTuple) -> "TupleClass":
        return cls(canonical(t))

    @property
    def r(self) -> int:
        return self.rep.r_value()

    @property
    def g1_class(self) -> str:
        """A5 class representative of g1: '(12345)' or '(12354)'."""
        structure = a5_classes()
        return structure.rep_strings[structure.class_of(self.rep[0])]

    def __eq__(self, other):
        if not isinstance(other, TupleClass):
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __lt__(self, other: "TupleClass"):
        return self.rep.key() < other.rep.key()

    def __repr__(self):
        return f"TupleClass{self.rep!r}"


def order_sets() -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for g in alternating_group():
        counts[g.order()] = counts.get(g.order(), 0) + 1
    return {r: counts.get(r, 0) for r in (2, 3, 5)}


class PairOrbit:
    """Orbit of A5 on A5(5) x A5(2) by simultaneous conjugation."""

    def __init__(self, members: Sequence[Tuple[Perm, Perm]], convention: str):
        self.members = list(members)
        self.rep = min(self.members, key=lambda pair: (pair[0].images, pair[1].images))
        self.r = multiply(self.rep[0], self.rep[1], convention).order()
        self.matched: Optional[int] = None

    def __len__(self):
        return len(self.members)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in set(self.members)


def pair_orbits(reference_pairs: Sequence[Sequence[str]] = None,
                convention: str = COMPOSITION_CONVENTION) -> List[PairOrbit]:
    """Orbits of pairs (order 5, order 2); `matched` is the index of the listed pair each one contains."""
    group = alternating_group()
    fives, twos = group.elements_of_order(5), group.elements_of_order(2)
    seen = set()
    orbits = []
    for a in fives:
        for b in twos:
            if (a, b) in seen:
                continue
            members = {(a.conjugate(x), b.conjugate(x)) for x in group}
            seen |= members
            orbits.append(PairOrbit(sorted(members, key=lambda p: (p[0].images, p[1].images)), convention))
    orbits.sort(key=lambda o: (o.rep[0].images, o.rep[1].images))
    if reference_pairs:
        pairs = [(Perm.parse(a), Perm.parse(b)) for a, b in reference_pairs]
        for orbit in orbits:
            hits = [i for i, pair in enumerate(pairs) if pair in orbit]
            orbit.matched = hits[0] if len(hits) == 1 else None
    return orbits


def pair_is_free(pair: Tuple[Perm, Perm]) -> bool:
    a, b = pair
    return sum(1 for x in alternating_group() if a.conjugate(x) == a and b.conjugate(x) == b) == 1


def involution_factorizations(h: Perm, convention: str = COMPOSITION_CONVENTION) -> List[Tuple[Perm, Perm]]:
    """Ordered pairs of involutions (h1, h2) of A5 with h1 h2 = h."""
    if h.order() not in (2, 3, 5):
        raise ValueError(f"{h} has order {h.order()}, expected 2, 3 or 5")
    out = []
    for h1 in alternating_group().elements_of_order(2):
        for h2 in alternating_group().elements_of_order(2):
            if multiply(h1, h2, convention) == h:
                out.append((h1, h2))
    return sorted(out, key=lambda p: (p[0].images, p[1].images))


def factorization_side_condition(h: Perm, pairs: Sequence[Tuple[Perm, Perm]]) -> bool:
    """Order 2: factors commute. Orders 3, 5: one free <h>-orbit under simultaneous conjugation."""
    if h.order() == 2:
        return all(a * b == b * a for a, b in pairs)
    powers = [h ** k for k in range(h.order())]
    start = pairs[0]
    orbit = {(start[0].conjugate(x), start[1].conjugate(x)) for x in powers}
    return len(orbit) == h.order() and orbit == set(pairs)


def enumerate_tuples(convention: str = COMPOSITION_CONVENTION, rng: random.Random = None) -> List[GenTuple]:
    """All tuples in A5(5,2,2,2) with product 1 that generate A5."""
    group = alternating_group()
    fives, twos = list(group.elements_of_order(5)), list(group.elements_of_order(2))
    if rng is not None:
        rng.shuffle(fives)
        rng.shuffle(twos)
    out = []
    for g1 in fives:
        for g2 in twos:
            g12 = multiply(g1, g2, convention)
            for g3 in twos:
                g4 = multiply(g12, g3, convention).inverse()
                if g4.order() == 2:
                    t = GenTuple((g1, g2, g3, g4), convention)
                    if t.generates():
                        out.append(t)
    return out


def enumerate_tuple_classes(convention: str = COMPOSITION_CONVENTION, rng: random.Random = None) -> List[TupleClass]:
    """Classes of A5(5,2,2,2) modulo simultaneous conjugation, sorted by representative."""
    group = alternating_group()
    seen = set()
    classes = []
    for t in enumerate_tuples(convention, rng):
        if t.key() in seen:
            continue
        members = [t.conjugate(x) for x in group]
        seen.update(m.key() for m in members)
        classes.append(TupleClass(min(members, key=GenTuple.key)))
    return sorted(classes)


def split_by(classes: Iterable[TupleClass], attribute: str) -> Dict:
    out: Dict = {}
    for c in classes:
        value = getattr(c, attribute)
        out[value] = out.get(value, 0) + 1
    return dict(sorted(out.items()))


def hurwitz_move(k: int, t: GenTuple, inverse: bool = False) -> GenTuple:
    """sigma_k: (a_k, a_k+1) -> (a_k a_k+1 a_k^-1, a_k); the inverse gives (a_k+1, a_k+1^-1 a_k a_k+1)."""
    if not 1 <= k < len(t):
        raise ValueError(f"move index {k} out of range for a {len(t)}-tuple")
    entries = list(t.entries)
    a, b = entries[k - 1], entries[k]
    if inverse:
        entries[k - 1], entries[k] = b, t.mul(t.mul(b.inverse(), a), b)
    else:
        entries[k - 1], entries[k] = t.mul(t.mul(a, b), a.inverse()), a
    return GenTuple(entries, t.convention)


def conjugate_all(t: GenTuple, c: Perm) -> GenTuple:
    """x -> c x c^-1 on every slot, products read in the tuple's convention."""
    return GenTuple([t.mul(t.mul(c, g), c.inverse()) for g in t.entries], t.convention)


def displayed_move_one(t: GenTuple) -> GenTuple:
    """(a1, a2, (a1a2) a3 (a1a2)^-1, (a1a2) a4 (a1a2)^-1)."""
    c = t.mul(t[0], t[1])
    return GenTuple([t[0], t[1], t.mul(t.mul(c, t[2]), c.inverse()), t.mul(t.mul(c, t[3]), c.inverse())],
                    t.convention)


def displayed_move_two(t: GenTuple) -> GenTuple:
    """(a2^-1 a1 a2, a3 a2 a3^-1, a3, a2^-1 a4 a2)."""
    a1, a2, a3, a4 = t.entries
    inv2 = a2.inverse()
    return GenTuple([t.mul(t.mul(inv2, a1), a2), t.mul(t.mul(a3, a2), a3.inverse()), a3,
                     t.mul(t.mul(inv2, a4), a2)], t.convention)


def move_one_as_word(t: GenTuple) -> GenTuple:
    """sigma_1^-2, then x -> (a1a2) x (a1a2)^-1 with a1, a2 from the original tuple."""
    moved = hurwitz_move(1, hurwitz_move(1, t, inverse=True), inverse=True)
    return conjugate_all(moved, t.mul(t[0], t[1]))


def move_two_as_word(t: GenTuple) -> GenTuple:
    """sigma_2^2, then x -> a2^-1 x a2 with a2 from the original tuple."""
    moved = hurwitz_move(2, hurwitz_move(2, t))
    return conjugate_all(moved, t[1].inverse())


def _generator_moves(generator_set: str):
    if generator_set == PURE:
        return [(1, 2), (2, 2), (3, 2)]
    if generator_set == WEIGHTED:
        return [(2, 1), (3, 1), (1, 2)]
    raise ValueError(f"unknown generator set {generator_set!r}")


def apply_generator(t: GenTuple, k: int, times: int) -> GenTuple:
    for _ in range(times):
        t = hurwitz_move(k, t)
    return t


def braid_orbits(classes: Sequence[TupleClass], generator_set: str = PURE) -> List[List[TupleClass]]:
    """Partition of the classes into orbits of the chosen moves."""
    moves = _generator_moves(generator_set)
    members = set(classes)
    seen = set()
    orbits = []
    for start in sorted(classes):
        if start in seen:
            continue
        block = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for c in frontier:
                for k, times in moves:
                    d = TupleClass.of(apply_generator(c.rep, k, times))
                    if d not in members:
                        raise ValueError(f"move sigma_{k}^{times} left the class set at {c!r}")
                    if d not in block:
                        block.add(d)
                        nxt.append(d)
            frontier = nxt
        seen |= block
        orbits.append(sorted(block))
    return orbits


def partition_by_g1_class(classes: Iterable[TupleClass]) -> List[List[TupleClass]]:
    blocks: Dict[str, List[TupleClass]] = {}
    for c in classes:
        blocks.setdefault(c.g1_class, []).append(c)
    return [sorted(blocks[k]) for k in sorted(blocks)]


def same_partition(a: Sequence[Sequence[TupleClass]], b: Sequence[Sequence[TupleClass]]) -> bool:
    return {frozenset(block) for block in a} == {frozenset(block) for block in b}


# Normalizations tried, in order, when matching a published tuple row.
ROW_NORMALIZATIONS = ("as-is", "inverted")


def validate_table_row(row: Mapping, classes: Sequence[TupleClass],
                       convention: str = COMPOSITION_CONVENTION) -> Tuple[bool, str]:
    """A published row {r, tuple} is a valid tuple class with the stated r; returns (ok, normalization)."""
    t = GenTuple.parse(row["tuple"], convention)
    known = set(classes)
    for name in ROW_NORMALIZATIONS:
        candidate = t if name == "as-is" else t.inverted()
        if candidate.is_valid() and TupleClass.of(candidate) in known and candidate.r_value() == row["r"]:
            return True, name
    return False, "none"


def outer_swap(c: TupleClass, by: str = "(12)") -> TupleClass:
    """Conjugate a class by an odd permutation of S5."""
    return TupleClass.of(c.rep.conjugate(Perm.parse(by)))
