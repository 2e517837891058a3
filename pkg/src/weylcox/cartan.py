"""Dynkin types, Cartan matrices, Kac labels, diagram automorphisms, folding.

Conventions.  The Cartan matrix is A[i][j] = <alpha_i, alphacheck_j>; node
numbering of the built-in tables follows the Bourbaki plates.  The affine
matrix appends node 0 for the negative highest root; its row and column are
computed from the highest root rather than hard-coded, so the tables and the
root generator cross-validate each other.  Alternative numberings (used by
some of the regression data) enter through `cartan_from_finite`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import exact
from .errors import DomainError, StructuralError

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_BOUNDS = {"A": (1, None), "B": (3, None), "C": (2, None), "D": (4, None)}

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        n = self.rank
        if self.family in _RANK_BOUNDS:
            low, _ = _RANK_BOUNDS[self.family]
            if not isinstance(n, int) or n < low:
                raise DomainError(f"{self.family}_{n} is not admissible (rank >= {low})")
        elif self.family == "E" and n not in (6, 7, 8):
            raise DomainError(f"E_{n} is not admissible")
        elif self.family == "F" and n != 4:
            raise DomainError(f"F_{n} is not admissible")
        elif self.family == "G" and n != 2:
            raise DomainError(f"G_{n} is not admissible")

    def __str__(self):
        return f"{self.family}_{self.rank}"


@dataclass(frozen=True)
class CartanData:
    type: DynkinType
    finite_matrix: tuple
    affine_matrix: tuple

    @property
    def rank(self) -> int:
        return self.type.rank


@dataclass(frozen=True)
class KacLabels:
    marks: tuple
    comarks: tuple


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Permutation of the affine node indices 0..r preserving the matrix."""

    permutation: tuple
    order: int

    def __call__(self, i: int) -> int:
        return self.permutation[i]

    def orbits(self) -> tuple:
        seen = set()
        out = []
        for i in range(len(self.permutation)):
            if i in seen:
                continue
            orb = [i]
            seen.add(i)
            j = self.permutation[i]
            while j != i:
                orb.append(j)
                seen.add(j)
                j = self.permutation[j]
            out.append(tuple(orb))
        return tuple(out)

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.permutation))


@dataclass(frozen=True)
class FoldedDiagram:
    """Folded affine matrix over automorphism orbits (the orbit Lie algebra)."""

    matrix: tuple
    orbits: tuple
    degenerate: bool


def _perm_order(perm: tuple) -> int:
    order = 1
    current = perm
    ident = tuple(range(len(perm)))
    while current != ident:
        current = tuple(perm[i] for i in current)
        order += 1
        if order > len(perm) + 1:
            raise StructuralError("permutation order exceeded node count")
    return order


def diagram_automorphism(c: CartanData, permutation) -> DiagramAutomorphism:
    """Wrap a node permutation, checking it preserves the affine matrix."""
    perm = tuple(permutation)
    n = len(c.affine_matrix)
    if sorted(perm) != list(range(n)):
        raise DomainError("not a permutation of the affine nodes")
    a = c.affine_matrix
    for i in range(n):
        for j in range(n):
            if a[perm[i]][perm[j]] != a[i][j]:
                raise DomainError("permutation does not preserve the affine matrix")
    return DiagramAutomorphism(perm, _perm_order(perm))


def compose_automorphisms(a: DiagramAutomorphism, b: DiagramAutomorphism) -> DiagramAutomorphism:
    perm = tuple(a.permutation[b.permutation[i]] for i in range(len(a.permutation)))
    return DiagramAutomorphism(perm, _perm_order(perm))


def automorphism_power(a: DiagramAutomorphism, k: int) -> DiagramAutomorphism:
    n = len(a.permutation)
    result = DiagramAutomorphism(tuple(range(n)), 1)
    for _ in range(k % a.order if a.order else 0):
        result = compose_automorphisms(result, a)
    return result


def _chain(n: int) -> list[list[int]]:
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = -1
    return m


def finite_cartan_matrix(t: DynkinType) -> tuple:
    """Bourbaki-plate finite Cartan matrix for an admissible type."""
    n = t.rank
    m = _chain(n)
    if t.family == "B":
        m[n - 2][n - 1] = -2          # alpha_n short
    elif t.family == "C":
        m[n - 1][n - 2] = -2          # alpha_n long
    elif t.family == "D":
        m[n - 2][n - 1] = m[n - 1][n - 2] = 0
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
    elif t.family == "E":
        # Bourbaki: chain 1-3-4-...-n with node 2 hanging off node 4.
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            m[a][b] = m[b][a] = -1
        m[1][3] = m[3][1] = -1
    elif t.family == "F":
        m[1][2] = -2                  # alpha_1, alpha_2 long
    elif t.family == "G":
        m = [[2, -1], [-3, 2]]        # alpha_1 short
    return exact.mat(m)


def _affine_from_theta(finite: tuple, theta: tuple, theta_coroot: tuple) -> tuple:
    """Affine matrix with node 0 attached via the negative highest root."""
    r = len(finite)
    pair_row = exact.mat_vec(exact.transpose(finite), theta)  # <theta, coroot_j>
    affine = [[0] * (r + 1) for _ in range(r + 1)]
    affine[0][0] = 2
    for j in range(r):
        affine[0][j + 1] = -pair_row[j]
        affine[j + 1][0] = -theta_coroot[j]
        for k in range(r):
            affine[j + 1][k + 1] = finite[j][k]
    return exact.mat(affine)


def _validate_cartan(c: CartanData):
    fin, aff = c.finite_matrix, c.affine_matrix
    for m in (fin, aff):
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                if i == j:
                    if x != 2:
                        raise StructuralError("diagonal entry != 2")
                elif x not in (0, -1, -2, -3):
                    raise StructuralError(f"off-diagonal entry {x} out of range")
                if (x == 0) != (m[j][i] == 0):
                    raise StructuralError("zero pattern not symmetric")
    if not exact.leading_minors_positive(fin):
        raise StructuralError("finite matrix is not positive definite")
    if exact.rank(aff) != len(aff) - 1:
        raise StructuralError("affine matrix does not have corank 1")


def cartan_from_finite(t: DynkinType, finite) -> CartanData:
    """Build CartanData from an explicit finite matrix (any node numbering)."""
    from . import roots as _roots

    finite = exact.mat(finite)
    rs = _roots.root_system(finite, t)
    theta = rs.highest
    affine = _affine_from_theta(finite, theta, rs.coroot(theta))
    c = CartanData(t, finite, affine)
    _validate_cartan(c)
    return c


@lru_cache(maxsize=None)
def cartan_matrix(t: DynkinType) -> CartanData:
    """Finite and untwisted-affine Cartan matrices in Bourbaki numbering."""
    return cartan_from_finite(t, finite_cartan_matrix(t))


def _affine_of(c) -> tuple:
    if isinstance(c, CartanData):
        return c.affine_matrix
    if isinstance(c, FoldedDiagram):
        return c.matrix
    return exact.mat(c)


def kac_labels(c) -> KacLabels:
    """Marks and comarks: primitive positive left/right null vectors.

    With A[i][j] = <alpha_i, alphacheck_j>, the marks a_i (coefficients of
    the primitive imaginary root) satisfy sum_i a_i A[i][j] = 0 and the
    comarks (coefficients of the canonical central element over the simple
    coroots) satisfy sum_j A[i][j] a^vee_j = 0.
    """
    a = _affine_of(c)
    n = len(a)
    if exact.rank(a) != n - 1:
        raise StructuralError("matrix does not have corank 1")
    right = exact.nullspace(a)
    left = exact.nullspace(exact.transpose(a))
    if len(right) != 1 or len(left) != 1:
        raise StructuralError("null space is not one-dimensional")
    try:
        marks = exact.primitive_positive(left[0])
        comarks = exact.primitive_positive(right[0])
    except ValueError as e:
        raise StructuralError(f"null vector is not strictly signed: {e}") from None
    if isinstance(c, CartanData) and (marks[0] != 1 or comarks[0] != 1):
        raise StructuralError("label at the affine node is not 1")
    return KacLabels(marks, comarks)


def pi1_automorphisms(c: CartanData) -> list[DiagramAutomorphism]:
    """Affine-diagram automorphisms realized by the coweight/coroot quotient.

    One generator per node j >= 1 with mark 1: the alcove-stabilizing
    element translating by the j-th fundamental coweight.  The identity is
    included; the result is closed under composition and its size equals
    the determinant of the finite Cartan matrix.
    """
    from . import roots as _roots

    labels = kac_labels(c)
    n = len(c.affine_matrix)
    autos = [DiagramAutomorphism(tuple(range(n)), 1)]
    for j in range(1, n):
        if labels.marks[j] != 1:
            continue
        x = _roots.alcove_element(c, j)
        perm = _roots.affine_simple_action(c, x)
        if perm is None:
            raise StructuralError(f"alcove element at node {j} does not stabilize the alcove")
        autos.append(DiagramAutomorphism(perm, _perm_order(perm)))
    perms = {a.permutation for a in autos}
    for a in autos:
        for b in autos:
            if compose_automorphisms(a, b).permutation not in perms:
                raise StructuralError("alcove automorphisms are not closed under composition")
    if exact.det(c.finite_matrix) % len(autos) != 0:
        raise StructuralError("automorphism count does not divide the connection index")
    return autos


def fold(c, sigma: DiagramAutomorphism) -> FoldedDiagram:
    """Fold the affine matrix over automorphism orbits.

    Entry over orbits I, J is s_I * sum_{j in J} A[i][j] for a fixed
    representative i in I, with s_I = 2 when I contains adjacent nodes and
    1 otherwise.  A single all-adjacent orbit folds to the 1x1 zero matrix,
    returned with the degenerate flag set.
    """
    a = _affine_of(c)
    n = len(a)
    perm = sigma.permutation
    if len(perm) != n:
        raise DomainError("automorphism size does not match the affine matrix")
    for i in range(n):
        for j in range(n):
            if a[perm[i]][perm[j]] != a[i][j]:
                raise DomainError("not an automorphism of the affine matrix")
    orbits = sigma.orbits()
    folded = []
    for orbit_i in orbits:
        rep = orbit_i[0]
        s_i = 2 if any(a[p][q] != 0 for p in orbit_i for q in orbit_i if p != q) else 1
        folded.append(
            tuple(s_i * sum(a[rep][j] for j in orbit_j) for orbit_j in orbits)
        )
    folded = exact.mat(folded)
    degenerate = folded == ((0,),)
    return FoldedDiagram(folded, orbits, degenerate)
