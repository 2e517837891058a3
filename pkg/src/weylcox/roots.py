"""Finite root systems with exact coordinates and the extended affine Weyl group.

Coordinates.  Roots live in the simple-root basis (integer tuples); coweights
live in the fundamental-coweight basis (integer or Fraction tuples), chosen so
that the natural pairing <alpha, mucheck> is a plain dot product.  A Weyl
element stores both its action on root coordinates and the contragredient
action on coweight coordinates, so inverses and pairing-preservation are
cheap and exact.

An extended affine element is a pair (translation coweight, finite element)
representing t_mu . w, with multiplication
(t_mu, w)(t_nu, v) = (t_{mu + w(nu)}, w v).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exact
from .cartan import CartanData, DiagramAutomorphism, DynkinType, ROOT_COUNTS
from .errors import DomainError, StructuralError

RootVector = tuple
CoweightVector = tuple


def pairing(alpha: RootVector, mu: CoweightVector):
    """<alpha, mu> for a root in alpha-coordinates and a coweight in
    fundamental-coweight coordinates: the exact dot product."""
    if len(alpha) != len(mu):
        raise DomainError(f"dimension mismatch: {len(alpha)} vs {len(mu)}")
    return exact.dot(alpha, mu)


@dataclass(frozen=True)
class WeylElement:
    root_mat: tuple      # action on simple-root coordinates
    coweight_mat: tuple  # contragredient action on coweight coordinates

    @property
    def rank(self) -> int:
        return len(self.root_mat)

    @property
    def is_identity(self) -> bool:
        return self.root_mat == exact.identity(self.rank)


def identity_weyl(rank: int) -> WeylElement:
    eye = exact.identity(rank)
    return WeylElement(eye, eye)


def compose(w: WeylElement, v: WeylElement) -> WeylElement:
    """w . v (v acts first)."""
    return WeylElement(
        exact.mat_mul(w.root_mat, v.root_mat),
        exact.mat_mul(w.coweight_mat, v.coweight_mat),
    )


def w_inverse(w: WeylElement) -> WeylElement:
    # coweight_mat is the inverse transpose of root_mat, so both inverses
    # come for free as transposes.
    return WeylElement(exact.transpose(w.coweight_mat), exact.transpose(w.root_mat))


def act_on_root(w: WeylElement, alpha: RootVector) -> RootVector:
    return exact.mat_vec(w.root_mat, alpha)


def act_on_coweight(w: WeylElement, mu: CoweightVector) -> CoweightVector:
    return exact.mat_vec(w.coweight_mat, mu)


def order(w: WeylElement, cap: int = 10000) -> int:
    current = w
    for k in range(1, cap + 1):
        if current.is_identity:
            return k
        current = compose(current, w)
    raise StructuralError(f"element order exceeds {cap}")


def char_poly(w: WeylElement) -> tuple:
    """Characteristic polynomial of the root-coordinate action, leading-first."""
    return exact.char_poly(w.root_mat)


class RootSet:
    """All roots of a finite Cartan matrix, closed under simple reflections."""

    def __init__(self, finite_matrix: tuple, dtype: DynkinType | None = None):
        self.cartan = exact.mat(finite_matrix)
        self.type = dtype
        self.rank = len(self.cartan)
        self._generate()
        self._symmetrize()
        self._coroots: dict = {}
        self._longest: dict = {}

    def _generate(self):
        r = self.rank
        simples = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        cols = exact.transpose(self.cartan)
        seen = set(simples)
        work = list(simples)
        while work:
            beta = work.pop()
            for i in range(r):
                p = exact.dot(beta, cols[i])
                if p == 0:
                    continue
                img = list(beta)
                img[i] -= p
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    work.append(img)
        for root in seen:
            if not (all(x >= 0 for x in root) or all(x <= 0 for x in root)):
                raise StructuralError(f"root {root} has mixed signs")
        self.roots = tuple(sorted(seen))
        self.positive = tuple(sorted(v for v in seen if all(x >= 0 for x in v)))
        self.highest = max(self.positive, key=lambda v: (sum(v), v))
        if sum(1 for v in self.positive if sum(v) == sum(self.highest)) != 1:
            raise StructuralError("highest root is not unique")
        if self.type is not None:
            expected = ROOT_COUNTS[self.type.family](self.type.rank)
            if len(self.roots) != expected:
                raise StructuralError(
                    f"{self.type}: {len(self.roots)} roots, expected {expected}"
                )
        self._members = seen

    def _symmetrize(self):
        # d_i with d_i A[i][j] = d_j A[j][i]; gives (alpha_i, alpha_j) = d_j A[i][j].
        r = self.rank
        d = [None] * r
        d[0] = Fraction(1)
        queue = [0]
        while queue:
            i = queue.pop()
            for j in range(r):
                if self.cartan[i][j] != 0 and i != j and d[j] is None:
                    # d_j A[i][j] = d_i A[j][i] keeps the form symmetric
                    d[j] = d[i] * Fraction(self.cartan[j][i], self.cartan[i][j])
                    queue.append(j)
        if any(x is None for x in d):
            raise StructuralError("Cartan matrix is not connected")
        self._sym = tuple(d)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._members

    def form(self, u: RootVector, v: RootVector):
        """The Weyl-invariant symmetric form (u, v)."""
        return exact.intify(
            sum(
                u[i] * v[j] * self._sym[j] * self.cartan[i][j]
                for i in range(self.rank)
                for j in range(self.rank)
                if self.cartan[i][j] != 0 and u[i] != 0
            )
        )

    def coroot(self, alpha: RootVector) -> CoweightVector:
        """alphacheck in coweight coordinates; <alpha, alphacheck> = 2."""
        alpha = tuple(alpha)
        if alpha not in self._members:
            raise DomainError(f"{alpha} is not a root")
        cached = self._coroots.get(alpha)
        if cached is None:
            norm = self.form(alpha, alpha)
            cached = tuple(
                exact.intify(Fraction(2) * self.form(self._simple(j), alpha) / norm)
                for j in range(self.rank)
            )
            if any(not isinstance(x, int) for x in cached):
                raise StructuralError(f"coroot of {alpha} is not integral")
            self._coroots[alpha] = cached
        return cached

    def _simple(self, i: int) -> RootVector:
        return tuple(int(i == j) for j in range(self.rank))

    def reflection(self, alpha: RootVector) -> WeylElement:
        """Reflection s_alpha as a Weyl element."""
        alpha = tuple(alpha)
        if alpha not in self._members:
            raise DomainError(f"{alpha} is not a root")
        ac = self.coroot(alpha)
        r = self.rank
        root_mat = tuple(
            tuple((1 if i == j else 0) - ac[j] * alpha[i] for j in range(r))
            for i in range(r)
        )
        cw_mat = tuple(
            tuple((1 if i == j else 0) - alpha[j] * ac[i] for j in range(r))
            for i in range(r)
        )
        return WeylElement(exact.mat(root_mat), exact.mat(cw_mat))

    def simple_reflection(self, i: int) -> WeylElement:
        return self.reflection(self._simple(i))

    def longest_element(self, subset=None) -> WeylElement:
        """Longest element of the parabolic generated by the given simple
        indices (all of them by default), via the antidominance algorithm."""
        idx = frozenset(range(self.rank) if subset is None else subset)
        cached = self._longest.get(idx)
        if cached is None:
            mu = [Fraction(1) if i in idx else Fraction(0) for i in range(self.rank)]
            w = identity_weyl(self.rank)
            while True:
                i = next((i for i in idx if mu[i] > 0), None)
                if i is None:
                    break
                s = self.simple_reflection(i)
                mu = list(act_on_coweight(s, tuple(mu)))
                w = compose(s, w)
            cached = w
            self._longest[idx] = cached
        return cached


@lru_cache(maxsize=None)
def root_system(finite_matrix: tuple, dtype: DynkinType | None = None) -> RootSet:
    return RootSet(finite_matrix, dtype)


def generate_roots(c: CartanData) -> RootSet:
    """Complete root set for the finite matrix of a Cartan datum."""
    return root_system(c.finite_matrix, c.type)


@dataclass(frozen=True)
class ExtAffineElement:
    """t_mu . w in the extended affine Weyl group (coweight lattice x W)."""

    translation: CoweightVector
    finite: WeylElement

    @property
    def rank(self) -> int:
        return self.finite.rank


def ext_identity(rank: int) -> ExtAffineElement:
    return ExtAffineElement(tuple([0] * rank), identity_weyl(rank))


def ext_compose(x: ExtAffineElement, y: ExtAffineElement) -> ExtAffineElement:
    return ExtAffineElement(
        exact.vec_add(x.translation, act_on_coweight(x.finite, y.translation)),
        compose(x.finite, y.finite),
    )


def ext_inverse(x: ExtAffineElement) -> ExtAffineElement:
    winv = w_inverse(x.finite)
    return ExtAffineElement(
        exact.vec_neg(act_on_coweight(winv, x.translation)), winv
    )


def ext_power(x: ExtAffineElement, k: int) -> ExtAffineElement:
    """x^k for k >= 0, by repeated squaring."""
    if k < 0:
        raise DomainError("negative powers: invert first")
    result = ext_identity(x.rank)
    base = x
    while k:
        if k & 1:
            result = ext_compose(result, base)
        base = ext_compose(base, base)
        k >>= 1
    return result


def translation_element(mu: CoweightVector) -> ExtAffineElement:
    return ExtAffineElement(tuple(mu), identity_weyl(len(mu)))


def affine_reflection_zero(rs: RootSet) -> ExtAffineElement:
    """The reflection in the wall <theta, .> = 1, i.e. (t_thetacheck, s_theta)."""
    return ExtAffineElement(rs.coroot(rs.highest), rs.reflection(rs.highest))


def affine_simple_action(c: CartanData, x: ExtAffineElement):
    """Permutation induced by x on the affine simple roots, or None.

    Affine roots are pairs (finite root, delta coefficient); t_mu . w sends
    (beta, m) to (w(beta), m - <w(beta), mu>).  Returns the node permutation
    when the image of the affine simple set is itself, None otherwise.
    """
    rs = generate_roots(c)
    r = rs.rank
    simples = [(exact.vec_neg(rs.highest), 1)]
    simples += [(rs._simple(i), 0) for i in range(r)]
    index = {s: i for i, s in enumerate(simples)}
    perm = []
    for beta, m in simples:
        img_root = act_on_root(x.finite, beta)
        img = (img_root, exact.intify(m - pairing(img_root, x.translation)))
        j = index.get(img)
        if j is None:
            return None
        perm.append(j)
    if sorted(perm) != list(range(r + 1)):
        return None
    return tuple(perm)


def alcove_element(c: CartanData, j: int) -> ExtAffineElement:
    """(t_omegacheck_j, w_{0,J} w_0) for J = all simple nodes but j.

    For j with mark 1 this stabilizes the fundamental alcove and induces a
    diagram automorphism sending node 0 to node j.  Node index j is 1-based
    (affine numbering); the caller validates the induced permutation.
    """
    rs = generate_roots(c)
    if not 1 <= j <= rs.rank:
        raise DomainError(f"node {j} out of range")
    w0 = rs.longest_element()
    w0j = rs.longest_element(frozenset(range(rs.rank)) - {j - 1})
    omega = tuple(int(i == j - 1) for i in range(rs.rank))
    return ExtAffineElement(omega, compose(w0j, w0))


def sigma_representative(c: CartanData, sigma: DiagramAutomorphism) -> ExtAffineElement:
    """Extended affine element realizing a pi1-induced diagram automorphism.

    The candidate for the permutation sending node 0 to j is the alcove
    element at j; the contract is the validation through
    affine_simple_action, not the construction formula.
    """
    rs = generate_roots(c)
    if sigma.is_identity:
        return ext_identity(rs.rank)
    j = sigma.permutation[0]
    candidates = [j] + [k for k in range(1, rs.rank + 1) if k != j]
    for k in candidates:
        try:
            x = alcove_element(c, k)
        except DomainError:
            continue
        if affine_simple_action(c, x) == sigma.permutation:
            return x
    raise StructuralError(
        f"no alcove element realizes the permutation {sigma.permutation}"
    )
