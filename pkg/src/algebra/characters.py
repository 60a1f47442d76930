"""
Class functions on A5 and S5 with cyclotomic values.

Class orderings are fixed:
  A5: (1), (12)(34), (123), (12345), (12354)
  S5: (1), (12), (12)(34), (123), (123)(45), (1234), (12345)
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Sequence, Union

from .exactfield import DEFAULT_CONDUCTOR, ConstructionError, CycloNum, as_cyclo, golden_ratio
from .perm import (GroupTable, Perm, alternating_group, class_index, closure,
                   conjugacy_classes, coset_action, symmetric_group)

A5_CLASS_REPS = ("()", "(12)(34)", "(123)", "(12345)", "(12354)")
S5_CLASS_REPS = ("()", "(12)", "(12)(34)", "(123)", "(123)(45)", "(1234)", "(12345)")

A5_LABELS = ("trivial", "I", "I'", "V", "W")

# Subgroup whose six cosets carry the degree-5 irreducible W.
DIHEDRAL_TEN_GENS = ("(12345)", "(25)(34)")
# Normalizer of <(123)> in A5, used for the signed permutation module.
SYMMETRIC_THREE_GENS = ("(123)", "(12)(45)")


class ClassStructure:
    """Conjugacy classes of a group, sorted into a fixed representative order."""

    def __init__(self, tag: str, group: GroupTable, reps: Sequence[str]):
        self.tag = tag
        self.group = group
        classes = conjugacy_classes(group)
        where = class_index(classes)
        ordered = []
        for text in reps:
            rep = Perm.parse(text, group.degree)
            if rep not in where:
                raise ValueError(f"{text} is not an element of {tag}")
            ordered.append(classes[where[rep]])
        if len(ordered) != len(classes) or len({id(c) for c in ordered}) != len(classes):
            raise ConstructionError(f"representatives {reps} do not cover the classes of {tag}")
        self.reps = tuple(Perm.parse(text, group.degree) for text in reps)
        self.rep_strings = tuple(reps)
        self.classes = tuple(tuple(c) for c in ordered)
        self.sizes = tuple(len(c) for c in ordered)
        self.index = class_index(self.classes)

    @property
    def order(self) -> int:
        return self.group.order

    def __len__(self):
        return len(self.classes)

    def class_of(self, g: Perm) -> int:
        return self.index[g]

    def power_map(self, k: int) -> List[int]:
        """Class index of g^k for each class, by brute force on the representative."""
        return [self.index[rep ** k] for rep in self.reps]

    def centralizer_orders(self) -> List[int]:
        return [self.order // size for size in self.sizes]


@lru_cache(maxsize=None)
def a5_classes() -> ClassStructure:
    return ClassStructure("A5", alternating_group(), A5_CLASS_REPS)


@lru_cache(maxsize=None)
def s5_classes() -> ClassStructure:
    return ClassStructure("S5", symmetric_group(), S5_CLASS_REPS)


def _structure_for(tag: str) -> ClassStructure:
    if tag == "A5":
        return a5_classes()
    if tag == "S5":
        return s5_classes()
    raise ValueError(f"unknown group tag {tag!r}")


class ClassFunction:
    """Values of a class function, one per class in the fixed ordering of its group."""

    __slots__ = ("tag", "values")

    def __init__(self, tag: str, values: Sequence, n: int = DEFAULT_CONDUCTOR):
        structure = _structure_for(tag)
        if len(values) != len(structure):
            raise ValueError(f"{tag} has {len(structure)} classes, got {len(values)} values")
        self.tag = tag
        self.values = tuple(as_cyclo(v, n) for v in values)

    @property
    def structure(self) -> ClassStructure:
        return _structure_for(self.tag)

    def degree(self) -> CycloNum:
        return self.values[0]

    def __call__(self, g: Perm) -> CycloNum:
        return self.values[self.structure.class_of(g)]

    def _check_tag(self, other: "ClassFunction"):
        if self.tag != other.tag:
            raise ValueError(f"class functions on different groups: {self.tag} vs {other.tag}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_tag(other)
        return ClassFunction(self.tag, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_tag(other)
        return ClassFunction(self.tag, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check_tag(other)
            return ClassFunction(self.tag, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.tag, [a * other for a in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.tag, [v.conjugate() for v in self.values])

    def is_real(self) -> bool:
        return all(v == v.conjugate() for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.tag == other.tag and self.values == other.values

    def __hash__(self):
        return hash((self.tag, self.values))

    def to_strings(self) -> List[str]:
        return [str(v) for v in self.values]

    def __repr__(self):
        return f"ClassFunction({self.tag}; " + ", ".join(self.to_strings()) + ")"


def class_function_from(tag: str, func: Callable[[Perm], object]) -> ClassFunction:
    """Evaluate func on each class representative."""
    structure = _structure_for(tag)
    return ClassFunction(tag, [func(rep) for rep in structure.reps])


def permutation_character(tag: str, action: Mapping[Perm, Perm]) -> ClassFunction:
    """Fixed-point count of a permutation action, given as element -> Perm."""
    return class_function_from(tag, lambda g: action[g].fixed_points())


def inner_product(chi: ClassFunction, psi: ClassFunction) -> CycloNum:
    """(1/|G|) sum over classes of size * chi * conj(psi)."""
    chi._check_tag(psi)
    structure = chi.structure
    total = CycloNum.zero(chi.values[0].n)
    for size, a, b in zip(structure.sizes, chi.values, psi.values):
        total = total + a * b.conjugate() * size
    return total / structure.order


def trivial_character(tag: str = "A5") -> ClassFunction:
    return ClassFunction(tag, [1] * len(_structure_for(tag)))


@lru_cache(maxsize=None)
def a5_table() -> Dict[str, ClassFunction]:
    """The five irreducible characters of A5, keyed by label."""
    structure = a5_classes()
    phi = golden_ratio()
    trivial = trivial_character("A5")
    chi_i = ClassFunction("A5", [3, -1, 0, phi, 1 - phi])
    chi_i_prime = ClassFunction("A5", [3, -1, 0, 1 - phi, phi])
    natural = {g: g for g in structure.group}
    chi_v = permutation_character("A5", natural) - trivial
    dihedral = closure([Perm.parse(t) for t in DIHEDRAL_TEN_GENS])
    if dihedral.order != 10:
        raise ConstructionError(f"expected a subgroup of order 10, got {dihedral.order}")
    chi_w = permutation_character("A5", coset_action(structure.group, dihedral)) - trivial
    table = {"trivial": trivial, "I": chi_i, "I'": chi_i_prime, "V": chi_v, "W": chi_w}
    for a in A5_LABELS:
        for b in A5_LABELS:
            expected = 1 if a == b else 0
            if inner_product(table[a], table[b]) != expected:
                raise ConstructionError(f"<{a}, {b}> != {expected}: character table is not orthonormal")
    return table


def column_orthogonality(table: Mapping[str, ClassFunction]) -> bool:
    """Second orthogonality relation against centralizer orders."""
    rows = list(table.values())
    structure = rows[0].structure
    centralizers = structure.centralizer_orders()
    for i in range(len(structure)):
        for j in range(len(structure)):
            total = sum((row.values[i] * row.values[j].conjugate() for row in rows),
                        CycloNum.zero(rows[0].values[0].n))
            if total != (centralizers[i] if i == j else 0):
                return False
    return True


def sym_cube(chi: ClassFunction, power_maps: Sequence[Sequence[int]] = None) -> ClassFunction:
    """Character of the symmetric cube: (chi(g)^3 + 3 chi(g^2) chi(g) + 2 chi(g^3)) / 6.

    power_maps is (squares, cubes), each a class-index list; computed by brute
    force when omitted.
    """
    if power_maps is None:
        structure = chi.structure
        power_maps = (structure.power_map(2), structure.power_map(3))
    squares, cubes = power_maps
    values = []
    for i, x in enumerate(chi.values):
        values.append((x ** 3 + x * chi.values[squares[i]] * 3 + chi.values[cubes[i]] * 2) / 6)
    return ClassFunction(chi.tag, values)


def decompose(chi: ClassFunction, table: Mapping[str, ClassFunction] = None) -> Dict[str, int]:
    """Multiplicities of the irreducibles in chi; raises ValueError if chi is not a character."""
    if chi.tag != "A5":
        raise ValueError(f"decompose works on A5 class functions, got {chi.tag}")
    table = table or a5_table()
    multiplicities = {}
    remainder = chi
    for label, irreducible in table.items():
        m = inner_product(chi, irreducible)
        if not m.is_integer():
            raise ValueError(f"non-integral multiplicity {m} of {label}")
        m = int(m.to_rational())
        if m < 0:
            raise ValueError(f"negative multiplicity {m} of {label}")
        if m:
            multiplicities[label] = m
            remainder = remainder - irreducible * m
    if any(remainder.values):
        raise ValueError("class function is not in the span of the irreducible characters")
    return multiplicities


def induced_character(subgroup: GroupTable, chi_h: Union[Mapping[Perm, object], Callable[[Perm], object]],
                      tag: str = "A5") -> ClassFunction:
    """Ind_H^G chi_h(g) = (1/|H|) * sum over x in G with x g x^-1 in H of chi_h(x g x^-1)."""
    structure = _structure_for(tag)
    if not subgroup.is_subgroup_of(structure.group):
        raise ValueError(f"{subgroup!r} is not a subgroup of {tag}")
    evaluate = chi_h if callable(chi_h) else chi_h.__getitem__
    values = []
    for rep in structure.reps:
        total = CycloNum.zero()
        for x in structure.group:
            c = rep.conjugate(x)
            if c in subgroup:
                total = total + as_cyclo(evaluate(c))
        values.append(total / subgroup.order)
    return ClassFunction(tag, values)


def restricted_sign(points: Sequence[int]) -> Callable[[Perm], int]:
    """Sign of the permutation induced on a stable subset of points."""
    points = tuple(points)

    def sign(g: Perm) -> int:
        images = [g(p) for p in points]
        if sorted(images) != sorted(points):
            raise ValueError(f"{g} does not stabilize {points}")
        inversions = sum(1 for i in range(len(images)) for j in range(i + 1, len(images))
                         if images[i] > images[j])
        return -1 if inversions % 2 else 1

    return sign


@lru_cache(maxsize=None)
def symmetric_three() -> GroupTable:
    return closure([Perm.parse(t) for t in SYMMETRIC_THREE_GENS], name="S3")


def signed_orbit_character() -> ClassFunction:
    """Induced character of the sign of S3 = <(123),(12)(45)>, read on {1,2,3}."""
    return induced_character(symmetric_three(), restricted_sign((1, 2, 3)))


def chi_e() -> ClassFunction:
    """The six-dimensional S5 character (6, 0, -2, 0, 0, 0, 1)."""
    return ClassFunction("S5", [6, 0, -2, 0, 0, 0, 1])


def restrict_to_a5(chi: ClassFunction) -> ClassFunction:
    if chi.tag != "S5":
        raise ValueError(f"restriction expects an S5 class function, got {chi.tag}")
    s5 = s5_classes()
    return class_function_from("A5", lambda g: chi.values[s5.class_of(g)])


def outer_twist(chi: ClassFunction, by: str = "(12)") -> ClassFunction:
    """chi composed with conjugation by an odd permutation of S5."""
    if chi.tag != "A5":
        raise ValueError("outer twist is defined on A5 class functions")
    t = Perm.parse(by)
    if t.sign() != -1:
        raise ValueError(f"{by} is even; conjugation by it is inner")
    return class_function_from("A5", lambda g: chi(g.conjugate(t)))


def class_swap_by(by: str = "(12)") -> List[int]:
    """Image class index of each A5 class under conjugation by an odd permutation."""
    structure = a5_classes()
    t = Perm.parse(by)
    return [structure.class_of(rep.conjugate(t)) for rep in structure.reps]


def format_decomposition(multiplicities: Mapping[str, int]) -> str:
    """e.g. {'V': 2, 'I': 2} -> 'I^2+V^2' in table order."""
    parts = []
    for label in A5_LABELS:
        m = multiplicities.get(label, 0)
        if m:
            parts.append(label if m == 1 else f"{label}^{m}")
    return "+".join(parts) if parts else "0"


def degree_sum_of_squares(table: Mapping[str, ClassFunction]) -> Fraction:
    return sum((chi.degree().to_rational() ** 2 for chi in table.values()), Fraction(0))
