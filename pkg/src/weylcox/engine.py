"""The Coxeter-element pipeline: orbits, degrees, parabolic, automorphism data.

Given a Cartan datum and a diagram automorphism coming from the fundamental
group, the pipeline builds the twisted Coxeter element as an extended affine
element, extracts the invariant coweight left over after killing the finite
part, decomposes the root system into orbits of the finite part with their
bundle degrees, reads off the Harder-Narasimhan style partition, certifies
the Levi and the vanishing of sections over zero-degree orbits, and reports
the weighted-projective moduli weights.

Normal forms.  The element is kept in left normal form t_mu . w; the degree
of an orbit O is sum_{alpha in O} <alpha, mu>, cross-checked at runtime
against (|O| / m) <alpha_0, b> for every base point alpha_0, where m is the
order of w and b the invariant coweight.  The right normal form translation
w^{-1}(mu) drives the zero-orbit section certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import exact
from .cartan import CartanData, DiagramAutomorphism, FoldedDiagram, fold, kac_labels
from .errors import DomainError, StructuralError
from .roots import (
    CoweightVector,
    ExtAffineElement,
    RootSet,
    RootVector,
    WeylElement,
    act_on_coweight,
    act_on_root,
    affine_reflection_zero,
    ext_compose,
    ext_identity,
    ext_power,
    generate_roots,
    order,
    pairing,
    sigma_representative,
    w_inverse,
)

POSITIVE, ZERO, NEGATIVE = "positive", "zero", "negative"


@dataclass(frozen=True)
class OrbitData:
    """One orbit of the finite part on the roots, in cyclic order."""

    roots: tuple
    size: int
    degree: int
    sign_class: str


@dataclass(frozen=True)
class LeviData:
    base: tuple
    rank: int
    maximal: bool
    coxeter_verdict: bool
    char_actual: tuple
    char_expected: tuple


@dataclass(frozen=True)
class CoxeterAnalysis:
    cartan: CartanData
    automorphism: DiagramAutomorphism
    reps: tuple
    cox: ExtAffineElement
    m: int
    b_check: CoweightVector
    orbits: tuple
    partition: tuple            # (|R+|, |R0|, |R-|)
    levi: LeviData
    parabolic_root: RootVector | None
    parabolic_sign: int | None
    dim_aut_plus: int
    fixed_space_dim: int
    step2: tuple                # ((p, e mod p), ...) over zero-degree orbits
    step2_pass: bool
    sigma_orbit_count: int      # s + 1
    moduli_weights: tuple
    discrepancy_flags: tuple


@dataclass(frozen=True)
class BundleReport:
    gluing: ExtAffineElement
    verdict: str                # "semistable-candidate" | "unstable"
    m: int
    b_check: CoweightVector
    orbits: tuple | None = None
    partition: tuple | None = None
    levi_base: tuple | None = None
    levi_rank: int | None = None
    levi_maximal: bool | None = None
    parabolic_root: RootVector | None = None
    parabolic_sign: int | None = None
    dim_aut_plus: int | None = None


def affine_simple_element(c: CartanData, node: int) -> ExtAffineElement:
    """Affine simple reflection as an extended element: node 0 carries the
    highest-coroot translation, the others are finite reflections."""
    rs = generate_roots(c)
    if node == 0:
        return affine_reflection_zero(rs)
    if not 1 <= node <= rs.rank:
        raise DomainError(f"affine node {node} out of range")
    return ExtAffineElement(tuple([0] * rs.rank), rs.simple_reflection(node - 1))


def twisted_coxeter(c: CartanData, sigma: DiagramAutomorphism, reps) -> ExtAffineElement:
    """Product of one affine simple reflection per automorphism orbit, in the
    given order, followed by the representative of the automorphism."""
    reps = tuple(reps)
    orbits = sigma.orbits()
    by_node = {}
    for orbit in orbits:
        for node in orbit:
            by_node[node] = orbit
    if len(set(reps)) != len(reps):
        raise DomainError("repeated node in transversal")
    hit = {by_node[node] for node in reps if node in by_node}
    if any(node not in by_node for node in reps) or len(hit) != len(orbits) or len(reps) != len(orbits):
        raise DomainError("reps must contain exactly one node per automorphism orbit")
    x = ext_identity(c.rank)
    for node in reps:
        x = ext_compose(x, affine_simple_element(c, node))
    return ext_compose(x, sigma_representative(c, sigma))


def invariant_coweight(x: ExtAffineElement) -> tuple[int, CoweightVector]:
    """(m, b): m is the order of the finite part and x^m = (t_b, id)."""
    m = order(x.finite)
    power = ext_power(x, m)
    if not power.finite.is_identity:
        raise StructuralError("power by the finite order did not kill the finite part")
    b = power.translation
    if act_on_coweight(x.finite, b) != b:
        raise StructuralError("invariant coweight is not fixed by the finite part")
    return m, b


def orbit_decomposition(
    phi: WeylElement, mu: CoweightVector, rs: RootSet, b: CoweightVector
) -> tuple:
    """Orbits of phi on the roots with degrees and sign classes.

    The degree is summed against mu and must agree, exactly, with
    (size / m) <alpha, b> for every orbit element; any mismatch aborts.
    """
    if act_on_coweight(phi, b) != b:
        raise DomainError("b is not fixed by the permuting element")
    m = order(phi)
    seen = set()
    out = []
    for start in rs.roots:
        if start in seen:
            continue
        cycle = [start]
        current = act_on_root(phi, start)
        while current != start:
            if tuple(current) not in rs:
                raise DomainError("element does not permute the root set")
            cycle.append(current)
            current = act_on_root(phi, current)
            if len(cycle) > len(rs.roots):
                raise DomainError("element does not permute the root set")
        k = cycle.index(min(cycle))
        cycle = cycle[k:] + cycle[:k]
        seen.update(cycle)
        p = len(cycle)
        degree = exact.intify(sum(pairing(alpha, mu) for alpha in cycle))
        if not isinstance(degree, int):
            raise StructuralError(f"orbit degree {degree} is not an integer")
        values = [pairing(alpha, b) for alpha in cycle]
        for v in values:
            if p * v != m * degree:
                raise StructuralError(
                    "degree formulas disagree: "
                    f"orbit sum {degree} vs p*<alpha,b>/m = {p * v}/{m}"
                )
        signs = {(v > 0) - (v < 0) for v in values}
        if len(signs) != 1:
            raise StructuralError("sign of <alpha, b> is not constant on an orbit")
        sign = signs.pop()
        sign_class = POSITIVE if sign > 0 else NEGATIVE if sign < 0 else ZERO
        out.append(OrbitData(tuple(cycle), p, degree, sign_class))
    return tuple(out)


def partition_roots(rs: RootSet, b: CoweightVector) -> tuple:
    """Trichotomy of the roots by the sign of <alpha, b>."""
    pos, zero, neg = [], [], []
    for alpha in rs.roots:
        v = pairing(alpha, b)
        (pos if v > 0 else neg if v < 0 else zero).append(alpha)
    return tuple(pos), tuple(zero), tuple(neg)


_GENERIC_BASE = 997  # exceeds any root coefficient, so the functional never vanishes


def _generic(alpha: RootVector) -> int:
    acc = 0
    for x in alpha:
        acc = acc * _GENERIC_BASE + x
    return acc


def _simple_system(roots) -> tuple:
    """Simple elements of a positive system: not sums of two positives."""
    pos = set(roots)
    base = []
    for p in roots:
        if not any(tuple(exact.vec_sub(p, q)) in pos for q in roots if q != p):
            base.append(p)
    return tuple(sorted(base))


def _zero_simple_system(zero_roots) -> tuple:
    return _simple_system([a for a in zero_roots if _generic(a) > 0])


def adapted_base(rs: RootSet, b: CoweightVector) -> tuple:
    """Simple system for the positivity graded by <., b> first (generic
    functional as tie-break); its zero part is a Levi base and the rest
    pairs strictly positively with b."""
    def positive(alpha):
        v = pairing(alpha, b)
        return v > 0 or (v == 0 and _generic(alpha) > 0)

    return _simple_system([a for a in rs.roots if positive(a)])


def _components(base, rs: RootSet):
    """Connected components of a base under nonvanishing Cartan pairing."""
    base = list(base)
    coroots = [rs.coroot(beta) for beta in base]
    remaining = set(range(len(base)))
    comps = []
    while remaining:
        stack = [remaining.pop()]
        comp = [stack[0]]
        while stack:
            i = stack.pop()
            linked = [j for j in remaining if pairing(base[i], coroots[j]) != 0]
            for j in linked:
                remaining.remove(j)
                comp.append(j)
                stack.append(j)
        comps.append(sorted(comp))
    return comps


def _component_coxeter(cartan_sub) -> tuple:
    """Coxeter element of an abstract finite Cartan matrix, in root coords."""
    k = len(cartan_sub)
    w = exact.identity(k)
    for j in range(k):
        refl = tuple(
            tuple((1 if i == jj else 0) - (cartan_sub[i][j] if jj == j else 0)
                  for jj in range(k))
            for i in range(k)
        )
        w = exact.mat_mul(refl, w)
    return w


def _matrix_order(m: tuple, cap: int = 1000) -> int:
    eye = exact.identity(len(m))
    current = m
    for k in range(1, cap + 1):
        if current == eye:
            return k
        current = exact.mat_mul(current, m)
    raise StructuralError("matrix order exceeded cap")


def levi_analysis(zero_roots, phi: WeylElement, rs: RootSet) -> LeviData:
    """Base, rank and Coxeter certificate of the zero-pairing subsystem.

    The verdict is the criterion: phi fixes the annihilator of the span
    pointwise, its restricted characteristic polynomial is the product of
    the component Coxeter polynomials, and its order is the lcm of the
    component Coxeter numbers.
    """
    zero_set = set(zero_roots)
    if {act_on_root(phi, a) for a in zero_roots} != zero_set:
        raise StructuralError("zero subsystem is not stable under the element")
    base = _zero_simple_system(zero_roots)
    span_rank = exact.rank(zero_roots) if zero_roots else 0
    if len(base) != span_rank:
        raise StructuralError("simple system does not span the zero subsystem")
    maximal = span_rank == rs.rank - 1

    # Restrict phi to the span of the base, in base coordinates.
    cols = exact.transpose(exact.mat(base)) if base else ()
    restricted = []
    for beta in base:
        coeffs = exact.solve(cols, act_on_root(phi, beta))
        if coeffs is None:
            raise StructuralError("image of a Levi base root left the span")
        restricted.append(coeffs)
    restricted_t = exact.transpose(exact.mat(restricted)) if restricted else ()
    char_actual = exact.char_poly(restricted_t)

    char_expected = (1,)
    comp_orders = []
    for comp in _components(base, rs):
        sub = exact.mat(
            tuple(tuple(pairing(base[i], rs.coroot(base[j])) for j in comp) for i in comp)
        )
        cox = _component_coxeter(sub)
        char_expected = exact.poly_mul(char_expected, exact.char_poly(cox))
        comp_orders.append(_matrix_order(cox))

    annihilator = exact.nullspace(exact.mat(base)) if base else exact.nullspace(
        tuple((tuple([0] * rs.rank),))
    )
    fixes_complement = all(act_on_coweight(phi, v) == v for v in annihilator)
    order_ok = order(phi) == lcm(*comp_orders) if comp_orders else order(phi) == 1
    verdict = fixes_complement and char_actual == char_expected and order_ok
    return LeviData(base, span_rank, maximal, verdict, char_actual, char_expected)


def aut_plus_dimension(orbits) -> int:
    """Dimension of the unipotent automorphism part: sum of positive degrees."""
    return sum(o.degree for o in orbits if o.sign_class == POSITIVE)


def step2_certificates(zero_orbits, nu: CoweightVector) -> tuple:
    """(p, e mod p) per zero-degree orbit, e = sum (p - i) <beta_i, nu>.

    The exponent e is computed along the stored cyclic order; e mod p != 0
    for p > 1 certifies that the section equation has no solution.  Size-1
    orbits are exempt (empty sum).
    """
    out = []
    for orbit in zero_orbits:
        if orbit.degree != 0:
            raise DomainError("certificate requested for an orbit of nonzero degree")
        p = orbit.size
        e = exact.intify(
            sum((p - i) * pairing(beta, nu) for i, beta in enumerate(orbit.roots, start=1))
        )
        if not isinstance(e, int):
            raise StructuralError("certificate exponent is not an integer")
        out.append((p, e % p))
    return tuple(out)


def moduli_weights(c: CartanData, sigma: DiagramAutomorphism) -> tuple:
    """Weighted-projective weights of the moduli component.

    Identity: the affine comarks.  Otherwise: comarks of the folded diagram
    (the orbit Lie algebra); a degenerate folding leaves a single weight 1,
    the moduli space being a point.
    """
    if sigma.is_identity:
        return kac_labels(c).comarks
    folded = fold(c, sigma)
    if folded.degenerate:
        return (1,)
    return kac_labels(folded).comarks


def default_reps(sigma: DiagramAutomorphism) -> tuple:
    """Smallest node per automorphism orbit, ascending."""
    return tuple(sorted(min(orbit) for orbit in sigma.orbits()))


def _fixed_space_dim(phi: WeylElement) -> int:
    n = phi.rank
    eye = exact.identity(n)
    diff = tuple(
        tuple(phi.coweight_mat[i][j] - eye[i][j] for j in range(n)) for i in range(n)
    )
    return n - exact.rank(diff)


def analyze(c: CartanData, sigma: DiagramAutomorphism, reps=None) -> CoxeterAnalysis:
    """Run the full pipeline for the twisted Coxeter element of (c, sigma)."""
    rs = generate_roots(c)
    if reps is None:
        reps = default_reps(sigma)
    reps = tuple(reps)
    cox = twisted_coxeter(c, sigma, reps)
    m, b = invariant_coweight(cox)
    if exact.is_zero(b):
        raise StructuralError("invariant coweight vanishes: element has finite order")
    phi = cox.finite
    orbits = orbit_decomposition(phi, cox.translation, rs, b)
    pos, zero, neg = partition_roots(rs, b)
    levi = levi_analysis(zero, phi, rs)

    parabolic_root = None
    parabolic_sign = None
    if levi.maximal:
        outside = [a for a in adapted_base(rs, b) if pairing(a, b) != 0]
        if len(outside) != 1:
            raise StructuralError("maximal parabolic without a unique extra node")
        parabolic_root = outside[0]
        parabolic_sign = 1

    dim_plus = aut_plus_dimension(orbits)
    nu = act_on_coweight(w_inverse(phi), cox.translation)
    zero_orbits = tuple(o for o in orbits if o.sign_class == ZERO)
    step2 = step2_certificates(zero_orbits, nu)
    step2_pass = all(e != 0 for p, e in step2 if p > 1)

    s_plus_1 = len(sigma.orbits())
    flags = []
    if dim_plus != s_plus_1 - 1:
        flags.append(
            f"dim_aut_plus={dim_plus} differs from s={s_plus_1 - 1}; "
            "the prose value is s but tabulated values follow s+1"
        )
    if any(o.size == 1 for o in zero_orbits):
        flags.append("zero-degree orbit of size 1 (fixed root); certificate not applicable")

    return CoxeterAnalysis(
        cartan=c,
        automorphism=sigma,
        reps=reps,
        cox=cox,
        m=m,
        b_check=b,
        orbits=orbits,
        partition=(len(pos), len(zero), len(neg)),
        levi=levi,
        parabolic_root=parabolic_root,
        parabolic_sign=parabolic_sign,
        dim_aut_plus=dim_plus,
        fixed_space_dim=_fixed_space_dim(phi),
        step2=step2,
        step2_pass=step2_pass,
        sigma_orbit_count=s_plus_1,
        moduli_weights=moduli_weights(c, sigma),
        discrepancy_flags=tuple(flags),
    )


def analyze_gluing(c: CartanData, x: ExtAffineElement) -> BundleReport:
    """Stability verdict for an arbitrary gluing element of the extended
    affine Weyl group, with full instability data when applicable."""
    rs = generate_roots(c)
    m, b = invariant_coweight(x)
    if exact.is_zero(b):
        return BundleReport(gluing=x, verdict="semistable-candidate", m=m, b_check=b)
    orbits = orbit_decomposition(x.finite, x.translation, rs, b)
    pos, zero, neg = partition_roots(rs, b)
    base = _zero_simple_system(zero)
    span_rank = exact.rank(zero) if zero else 0
    maximal = span_rank == rs.rank - 1
    parabolic_root = None
    parabolic_sign = None
    if maximal:
        outside = [a for a in adapted_base(rs, b) if pairing(a, b) != 0]
        if len(outside) == 1:
            parabolic_root = outside[0]
            parabolic_sign = 1
    return BundleReport(
        gluing=x,
        verdict="unstable",
        m=m,
        b_check=b,
        orbits=orbits,
        partition=(len(pos), len(zero), len(neg)),
        levi_base=base,
        levi_rank=span_rank,
        levi_maximal=maximal,
        parabolic_root=parabolic_root,
        parabolic_sign=parabolic_sign,
        dim_aut_plus=aut_plus_dimension(orbits),
    )
