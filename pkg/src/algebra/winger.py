"""
The icosahedral plane: six invariant lines, the matrix group they determine,
its irregular orbits, and the pencil Q^3 + lambda*F with its singular members.

Conventions:
  Q = z0*z1 + z2^2, with Gram matrix A = [[0,1/2,0],[1/2,0,0],[0,0,1]]
  F = z2 * prod_{i=1..5} (eta^i z0 + eta^(4i) z1 + z2)
  a matrix M acts on points by p -> Mp, and maps line i onto line sigma(i)
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .characters import a5_classes, a5_table, ClassFunction
from .exactfield import DEFAULT_CONDUCTOR, ConstructionError, CycloNum, as_cyclo, eta
from .invariants import Poly3, act_on_poly
from .linalg import MatrixF, det, kernel, rank
from .perm import Perm, orbit

INFINITY = "infinity"
# singular_lambda result when both gradients vanish, i.e. every member is singular at p
EVERY = "every"

Lambda = Union[CycloNum, Fraction, int, str]


def gram_matrix(n: int = DEFAULT_CONDUCTOR) -> MatrixF:
    half = Fraction(1, 2)
    return MatrixF.from_rows([[0, half, 0], [half, 0, 0], [0, 0, 1]], n)


def conic_q(n: int = DEFAULT_CONDUCTOR) -> Poly3:
    return Poly3({(1, 1, 0): 1, (0, 0, 2): 1}, n)


def line_coefficients() -> List[Tuple[CycloNum, CycloNum, CycloNum]]:
    """Unnormalized coefficient vectors: z2, then eta^i z0 + eta^(4i) z1 + z2 for i = 1..5."""
    one, zero = CycloNum.one(), CycloNum.zero()
    out = [(zero, zero, one)]
    for i in range(1, 6):
        out.append((eta(i), eta(4 * i), one))
    return out


def winger_sextic() -> Poly3:
    f = Poly3.variable(2)
    for coeffs in line_coefficients()[1:]:
        f = f * Poly3.linear(coeffs)
    return f


class LineForm:
    """A linear form up to scalars, stored with first nonzero coefficient 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = tuple(as_cyclo(c) for c in coeffs)
        if len(coeffs) != 3:
            raise ValueError("a line form has three coefficients")
        lead = next((c for c in coeffs if c), None)
        if lead is None:
            raise ValueError("the zero form is not a line")
        self.coeffs = tuple(c / lead for c in coeffs)

    @property
    def poly(self) -> Poly3:
        return Poly3.linear(self.coeffs)

    def __call__(self, point: Sequence) -> CycloNum:
        return sum((c * x for c, x in zip(self.coeffs, point)), CycloNum.zero())

    def meet(self, other: "LineForm") -> "ProjPoint":
        """Intersection point of two distinct lines."""
        a, b = self.coeffs, other.coeffs
        return ProjPoint((a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]))

    def __eq__(self, other):
        if not isinstance(other, LineForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "LineForm(" + ", ".join(str(c) for c in self.coeffs) + ")"


class ProjPoint:
    """A point of the projective plane, scaled so its last nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(as_cyclo(c) for c in coords)
        if len(coords) != 3:
            raise ValueError("a plane point has three coordinates")
        last = next((c for c in reversed(coords) if c), None)
        if last is None:
            raise ValueError("[0:0:0] is not a projective point")
        self.coords = tuple(c / last for c in coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def moved_by(self, m: MatrixF) -> "ProjPoint":
        return ProjPoint(m.apply(self.coords))

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coords]

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


def six_lines() -> List[LineForm]:
    return [LineForm(c) for c in line_coefficients()]


def lines_product(lines: Sequence[LineForm]) -> Poly3:
    f = Poly3.constant(1)
    for line in lines:
        f = f * line.poly
    return f


def no_three_concurrent(lines: Sequence[LineForm]) -> bool:
    return all(not det(MatrixF.from_rows([a.coeffs, b.coeffs, c.coeffs])).is_zero()
               for a, b, c in combinations(lines, 3))


def _line_equations(lines: Sequence[LineForm], sigma: Sequence[int]) -> MatrixF:
    """Linear conditions on the 9 entries of M for (c_sigma(i) M) x c_i = 0.

    Unknown M[k][j] sits in column 3k + j.
    """
    rows = []
    for i, target in enumerate(sigma):
        a = lines[target].coeffs
        c = lines[i].coeffs
        # component r: r_{p} c_{q} - r_{q} c_{p} for (p, q) cyclic after r
        for p, q in ((1, 2), (2, 0), (0, 1)):
            row = [CycloNum.zero()] * 9
            for k in range(3):
                if a[k]:
                    row[3 * k + p] = row[3 * k + p] + a[k] * c[q]
                    row[3 * k + q] = row[3 * k + q] - a[k] * c[p]
            rows.append(row)
    return MatrixF.from_rows(rows)


def _normalize_orthogonal(m: MatrixF) -> MatrixF:
    """The unique multiple sM with (sM)^T A (sM) = A and det(sM) = 1."""
    a = gram_matrix(m.n)
    c_matrix = m.transpose() * a * m
    c = c_matrix[2, 2]
    if c_matrix != a.scale(c):
        raise ConstructionError("line permutation does not preserve the invariant conic")
    d = det(m)
    if c ** 3 != d ** 2:
        raise ConstructionError(f"rescaling scalar is not in the field (c = {c}, det = {d})")
    return m.scale(c / d)


class IcosaGroup:
    """The 60 normalized matrices with their line permutations and an isomorphism to A5."""

    def __init__(self, matrices: Sequence[MatrixF], line_perms: Sequence[Perm]):
        self.matrices = tuple(matrices)
        self.line_perms = tuple(line_perms)
        self.by_line_perm: Dict[Perm, int] = {p: i for i, p in enumerate(self.line_perms)}
        self.to_a5: List[Perm] = []
        self.from_a5: Dict[Perm, int] = {}
        self.generators: Tuple[int, int] = (0, 0)

    def __len__(self):
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def __getitem__(self, i: int) -> MatrixF:
        return self.matrices[i]

    def multiply(self, i: int, j: int) -> int:
        return self.by_line_perm[self.line_perms[i] * self.line_perms[j]]

    def identity_index(self) -> int:
        return self.by_line_perm[Perm.identity(6)]

    def order(self, i: int) -> int:
        return self.line_perms[i].order()

    def indices_of_order(self, r: int) -> List[int]:
        return [i for i in range(len(self)) if self.order(i) == r]

    def find(self, m: MatrixF) -> Optional[int]:
        return next((i for i, x in enumerate(self.matrices) if x == m), None)

    def matrix_for(self, g: Perm) -> MatrixF:
        return self.matrices[self.from_a5[g]]

    def generator_matrices(self) -> List[MatrixF]:
        return [self.matrices[i] for i in self.generators]

    def verify_closure(self) -> bool:
        """Every matrix product lands on the element predicted by the line permutations."""
        for i, m in enumerate(self.matrices):
            for j, n in enumerate(self.matrices):
                if m * n != self.matrices[self.multiply(i, j)]:
                    return False
        return self.matrices[self.identity_index()].is_identity()

    def class_sizes(self) -> List[int]:
        """Conjugacy class sizes, computed on the line permutations."""
        seen = set()
        sizes = []
        for p in self.line_perms:
            if p in seen:
                continue
            cls = {p.conjugate(x) for x in self.line_perms}
            seen |= cls
            sizes.append(len(cls))
        return sorted(sizes)

    def build_isomorphism(self):
        """Send an order-5 a and an involution b with ab of order 3 to (12345) and (12)(34)."""
        target_a, target_b = Perm.parse("(12345)"), Perm.parse("(12)(34)")
        a = self.indices_of_order(5)[0]
        b = next((j for j in self.indices_of_order(2) if self.order(self.multiply(a, j)) == 3), None)
        if b is None:
            raise ConstructionError("no involution b with ab of order 3")
        image = {self.identity_index(): Perm.identity(5)}
        frontier = [self.identity_index()]
        while frontier:
            nxt = []
            for i in frontier:
                for gen, perm in ((a, target_a), (b, target_b)):
                    j = self.multiply(i, gen)
                    p = image[i] * perm
                    if j in image:
                        if image[j] != p:
                            raise ConstructionError("generator images do not extend to a homomorphism")
                    else:
                        image[j] = p
                        nxt.append(j)
            frontier = nxt
        if len(image) != len(self) or len(set(image.values())) != len(self):
            raise ConstructionError(f"generators reach {len(image)} of {len(self)} elements")
        self.to_a5 = [image[i] for i in range(len(self))]
        self.from_a5 = {p: i for i, p in enumerate(self.to_a5)}
        self.generators = (a, b)

    def is_homomorphism(self) -> bool:
        return all(self.to_a5[self.multiply(i, j)] == self.to_a5[i] * self.to_a5[j]
                   for i in range(len(self)) for j in range(len(self)))

    def trace_character(self) -> ClassFunction:
        structure = a5_classes()
        return ClassFunction("A5", [self.matrix_for(rep).trace() for rep in structure.reps])

    def identified_row(self) -> Optional[str]:
        """Which character ('I' or "I'") the traces match, or None."""
        chi = self.trace_character()
        table = a5_table()
        for label in ("I", "I'"):
            if chi == table[label]:
                return label
        return None

    def stabilizer(self, point: ProjPoint) -> List[int]:
        return [i for i, m in enumerate(self.matrices) if point.moved_by(m) == point]

    def line_stabilizer(self, line_index: int) -> List[int]:
        return [i for i, p in enumerate(self.line_perms) if p(line_index + 1) == line_index + 1]

    def orbit_of(self, point: ProjPoint) -> List[ProjPoint]:
        return orbit([point], lambda m, p: p.moved_by(m), self.generator_matrices())

    def with_corrupted_entry(self, element: int = 1, row: int = 0, col: int = 0) -> "IcosaGroup":
        """Copy with one matrix entry shifted by 1; used to exercise failure paths."""
        matrices = list(self.matrices)
        m = matrices[element]
        matrices[element] = m.with_entry(row, col, m[row, col] + 1)
        twin = IcosaGroup(matrices, self.line_perms)
        twin.to_a5, twin.from_a5, twin.generators = self.to_a5, self.from_a5, self.generators
        return twin


def solve_line_permutation(lines: Sequence[LineForm], sigma: Sequence[int]) -> Optional[MatrixF]:
    """Normalized matrix sending line i to line sigma(i), or None if no projectivity does."""
    basis = kernel(_line_equations(lines, sigma))
    if not basis:
        return None
    if len(basis) > 1:
        raise ConstructionError(f"line permutation {sigma} has a {len(basis)}-dimensional solution space")
    m = MatrixF(3, 3, basis[0])
    if det(m).is_zero():
        return None
    return _normalize_orthogonal(m)


def search_line_permutations(lines: Sequence[LineForm]) -> IcosaGroup:
    matrices, perms = [], []
    for sigma in permutations(range(len(lines))):
        m = solve_line_permutation(lines, sigma)
        if m is not None:
            matrices.append(m)
            perms.append(Perm([s + 1 for s in sigma]))
    if len(matrices) != 60:
        raise ConstructionError(f"line-permutation search found {len(matrices)} matrices, expected 60")
    group = IcosaGroup(matrices, perms)
    group.build_isomorphism()
    return group


@lru_cache(maxsize=None)
def reconstruct_group() -> IcosaGroup:
    return search_line_permutations(six_lines())


def preserves_form(m: MatrixF) -> bool:
    a = gram_matrix(m.n)
    return m.transpose() * a * m == a and det(m) == 1


def fixed_point(m: MatrixF, eigenvalue=1) -> ProjPoint:
    """The unique eigenvector of m for the given eigenvalue."""
    basis = kernel(m - MatrixF.identity(3, m.n).scale(as_cyclo(eigenvalue, m.n)))
    if len(basis) != 1:
        raise ConstructionError(f"eigenspace for {eigenvalue} has dimension {len(basis)}")
    return ProjPoint(basis[0])


def irregular_orbits(group: IcosaGroup = None) -> Dict[int, List[ProjPoint]]:
    """Orbits of fixed points of elements of order 5, 3 and 2, plus the 12 points on the conic."""
    group = group or reconstruct_group()
    out = {}
    for r, size in ((5, 6), (3, 10), (2, 15)):
        points = group.orbit_of(fixed_point(group[group.indices_of_order(r)[0]]))
        if len(points) != size:
            raise ConstructionError(f"orbit of an order-{r} fixed point has {len(points)} points, expected {size}")
        out[size] = sorted(points, key=ProjPoint.sort_key)
    rotation = group.find(MatrixF.diagonal([eta(1), eta(4), 1]))
    if rotation is None:
        raise ConstructionError("diag(eta, eta^4, 1) is missing from the group")
    points = group.orbit_of(fixed_point(group[rotation], eta(1)))
    if len(points) != 12:
        raise ConstructionError(f"conic orbit has {len(points)} points, expected 12")
    out[12] = sorted(points, key=ProjPoint.sort_key)
    return out


class WingerPencil:
    """The pencil Q^3 + lambda*F for a given conic and sextic."""

    def __init__(self, q: Poly3 = None, f: Poly3 = None):
        self.q = q if q is not None else conic_q()
        self.f = f if f is not None else winger_sextic()
        self.q_cubed = self.q ** 3
        self._grad_q3 = self.q_cubed.gradient()
        self._grad_f = self.f.gradient()

    def member(self, lam: Lambda) -> Poly3:
        if lam == INFINITY:
            return self.f
        return self.q_cubed + self.f.scale(as_cyclo(lam))

    def singular_lambda(self, p: ProjPoint) -> Union[CycloNum, str, None]:
        """lambda with grad(Q^3)(p) + lambda*grad(F)(p) = 0, INFINITY, EVERY or None."""
        g = [d(p.coords) for d in self._grad_q3]
        f = [d(p.coords) for d in self._grad_f]
        if not any(f):
            return EVERY if not any(g) else INFINITY
        j = next(i for i, x in enumerate(f) if x)
        lam = -g[j] / f[j]
        if all((a + lam * b).is_zero() for a, b in zip(g, f)):
            return lam
        return None

    def hessian(self, lam: Lambda, p: ProjPoint) -> MatrixF:
        member = self.member(lam)
        first = member.gradient()
        return MatrixF.from_rows([[first[i].derivative(j)(p.coords) for j in range(3)] for i in range(3)])

    def node_check(self, lam: Lambda, p: ProjPoint) -> bool:
        """p is an ordinary double point of the member: the Hessian there has rank 2."""
        return rank(self.hessian(lam, p)) == 2

    def is_singular_at(self, lam: Lambda, p: ProjPoint) -> bool:
        return all(d(p.coords).is_zero() for d in self.member(lam).gradient())


@lru_cache(maxsize=None)
def default_pencil() -> WingerPencil:
    return WingerPencil()


def pencil_member(lam: Lambda) -> Poly3:
    return default_pencil().member(lam)


def singular_lambda(p: ProjPoint):
    if all(c.is_zero() for c in p.coords):
        raise ValueError("[0:0:0] is not a point")
    return default_pencil().singular_lambda(p)


def node_check(lam: Lambda, p: ProjPoint) -> bool:
    return default_pencil().node_check(lam, p)


def format_lambda(lam) -> str:
    if lam is None:
        return "none"
    if isinstance(lam, str):
        return lam
    return str(as_cyclo(lam))


def group_invariance(group: IcosaGroup, f: Poly3) -> List[int]:
    """Indices of elements that do not fix f."""
    return [i for i, m in enumerate(group) if act_on_poly(m, f) != f]
