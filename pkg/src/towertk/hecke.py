"""
The tower of 0-Hecke algebras H_n(0).

Elements are sparse combinations of the basis T_sigma. Products of basis
elements are always a single signed basis element, computed by folding a
reduced word through T_i T_pi = T_{s_i pi} (length goes up) or -T_pi.
Simple modules C_I are one-dimensional and the projective modules M_I are
left ideals H_N(0) nu_I on the basis {T_sigma box_{alpha(conj(mirror I))}}.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from . import linalg
from .algebra import AlgebraPresentation
from .combinatorics import (Composition, Permutation, Word, alpha, compositions, conjugate,
                            descent_class, direct_sum, min_coset_reps,
                            mirror, omega, permutations, shuffle)
from .config import get_config
from .errors import InconclusiveError, StructureError
from .hopf import GradedHopfData, GrothendieckVector, dual_hopf_data
from .linalg import SparseVector
from .modules import ModuleRep, eigen_filtration, hom_space, left_ideal_module, module_on_basis
from .tower import Tower, induce, restrict

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _basis_product(sigma: Permutation, tau: Permutation) -> Tuple[int, Permutation]:
    """T_sigma T_tau = sign * T_pi."""
    sign, current = 1, tau
    for i in reversed(sigma.reduced_word()):
        if current.left_length_increases(i):
            current = current.left_multiply_simple(i)
        else:
            sign = -sign
    return sign, current


class HeckeElement:
    """A sparse element sum c_sigma T_sigma of H_n(0)."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Optional[Mapping[Permutation, Scalar]] = None):
        self.degree = degree
        self.terms: Dict[Permutation, Fraction] = {}
        for sigma, c in (terms or {}).items():
            if sigma.n != degree:
                raise StructureError(f"T[{sigma}] is not in H_{degree}(0)")
            if c:
                self.terms[sigma] = self.terms.get(sigma, Fraction(0)) + Fraction(c)
        self.terms = {s: c for s, c in self.terms.items() if c}

    @classmethod
    def T(cls, sigma: Permutation) -> "HeckeElement":
        return cls(sigma.n, {sigma: 1})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls.T(Permutation.identity(n))

    @classmethod
    def generator(cls, n: int, i: int) -> "HeckeElement":
        """T_i in H_n(0)."""
        return cls.T(Permutation.simple(n, i))

    @classmethod
    def box(cls, n: int, i: int) -> "HeckeElement":
        """box_i = 1 + T_i."""
        return cls.one(n) + cls.generator(n, i)

    def items(self) -> List[Tuple[Permutation, Fraction]]:
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        _same_degree(self, other)
        terms = dict(self.terms)
        for sigma, c in other.terms.items():
            terms[sigma] = terms.get(sigma, Fraction(0)) + c
        return HeckeElement(self.degree, terms)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.degree, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_multiply(self, other)
        return HeckeElement(self.degree, {s: c * other for s, c in self.terms.items()})

    def __rmul__(self, scalar: Scalar) -> "HeckeElement":
        return HeckeElement(self.degree, {s: scalar * c for s, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def to_vector(self, algebra: AlgebraPresentation) -> SparseVector:
        return {algebra.index(sigma): c for sigma, c in self.terms.items()}

    @classmethod
    def from_vector(cls, algebra: AlgebraPresentation, vector: Mapping[int, Fraction]) -> "HeckeElement":
        return cls(algebra.degree, {algebra.labels[i]: c for i, c in vector.items()})

    def to_json(self) -> Dict[str, str]:
        return {f"T[{sigma}]": str(c) for sigma, c in self.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for sigma, c in self.items():
            coefficient = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coefficient}T[{sigma}]")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"HeckeElement({self})"


def _same_degree(x: HeckeElement, y: HeckeElement) -> None:
    if x.degree != y.degree:
        raise StructureError(f"Elements of H_{x.degree}(0) and H_{y.degree}(0) do not combine")


def hecke_multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Bilinear product in H_n(0)."""
    _same_degree(x, y)
    terms: Dict[Permutation, Fraction] = {}
    for sigma, a in x.terms.items():
        for tau, b in y.terms.items():
            sign, pi = _basis_product(sigma, tau)
            terms[pi] = terms.get(pi, Fraction(0)) + sign * a * b
    return HeckeElement(x.degree, terms)


def product_of(n: int, factors: Iterable[HeckeElement]) -> HeckeElement:
    result = HeckeElement.one(n)
    for factor in factors:
        result = result * factor
    return result


def box_element(sigma: Permutation) -> HeckeElement:
    """box_sigma = box_{i_1} ... box_{i_r} along a reduced word of sigma."""
    return product_of(sigma.n, (HeckeElement.box(sigma.n, i) for i in sigma.reduced_word()))


def eta(I: Composition) -> HeckeElement:
    """eta_I = T_{omega(mirror I)} box_{alpha(conj I)}, generating the simple ideal C_I."""
    return HeckeElement.T(omega(mirror(I))) * box_element(alpha(conjugate(I)))


def nu(I: Composition) -> HeckeElement:
    """nu_I = T_{alpha(I)} box_{alpha(conj(mirror I))}, generating the projective M_I."""
    return HeckeElement.T(alpha(I)) * box_element(alpha(conjugate(mirror(I))))


def anti_involution(x: HeckeElement) -> HeckeElement:
    """The linear antimorphism T_sigma -> T_{sigma^-1}."""
    return HeckeElement(x.degree, {sigma.inverse(): c for sigma, c in x.terms.items()})


def box_involution(x: HeckeElement) -> HeckeElement:
    """The automorphism T_i -> -box_i = -1 - T_i."""
    n = x.degree
    result = HeckeElement(n)
    for sigma, c in x.terms.items():
        image = product_of(n, (-HeckeElement.box(n, i) for i in sigma.reduced_word()))
        result = result + c * image
    return result


def hecke_algebra(n: int) -> AlgebraPresentation:
    """H_n(0) on the basis T_sigma, permutations in lexicographic order."""
    perms = permutations(n)
    index = {p: i for i, p in enumerate(perms)}

    def product(i: int, j: int) -> SparseVector:
        sign, pi = _basis_product(perms[i], perms[j])
        return {index[pi]: Fraction(sign)}

    generators = [(f"T{i}", {index[Permutation.simple(n, i)]: Fraction(1)}) for i in range(1, n)]
    words = [tuple(i - 1 for i in p.reduced_word()) for p in perms]
    return AlgebraPresentation(f"H_{n}(0)", n, perms, product,
                               {index[Permutation.identity(n)]: Fraction(1)}, generators, words)


def descent_eigenvalues(I: Composition) -> List[Fraction]:
    """Action of T_1 .. T_{n-1} on C_I: -1 on the descents of I, 0 elsewhere."""
    descents = set(I.descent_set())
    return [Fraction(-1 if i in descents else 0) for i in range(1, I.weight)]


def simple_module(I: Composition, algebra: AlgebraPresentation) -> ModuleRep:
    """The one-dimensional module C_I."""
    if not algebra.generators:
        return ModuleRep.trivial_action(algebra, 1, label=I)
    actions = [linalg.matrix([[value]]) for value in descent_eigenvalues(I)]
    return ModuleRep(algebra, actions, label=I)


def projective_basis(I: Composition) -> List[HeckeElement]:
    """T_sigma box_{alpha(conj(mirror I))} for sigma in the descent class of I."""
    right = box_element(alpha(conjugate(mirror(I))))
    return [HeckeElement.T(sigma) * right for sigma in descent_class(I)]


def projective_module(I: Composition, algebra: AlgebraPresentation) -> ModuleRep:
    """M_I = H_N(0) nu_I on the descent-class basis; ModuleError if that basis is not one."""
    basis = [x.to_vector(algebra) for x in projective_basis(I)]
    if not algebra.generators:
        return ModuleRep.trivial_action(algebra, len(basis), label=I)
    return module_on_basis(algebra, basis, label=I)


def _patterns(degrees: Iterable[int]) -> List[Tuple[object, List[Fraction]]]:
    options = [compositions(d) for d in degrees]
    patterns = []
    for labels in itertools.product(*options):
        values = [v for I in labels for v in descent_eigenvalues(I)]
        patterns.append((labels[0] if len(labels) == 1 else tuple(labels), values))
    patterns.sort(key=lambda p: p[1])
    return patterns


def composition_factors(module: ModuleRep) -> GrothendieckVector:
    """Composition factors by repeatedly splitting off joint eigenspaces of the T_i."""
    degrees = [f.degree for f in module.algebra.factors]
    return GrothendieckVector(eigen_filtration(module, _patterns(degrees)))


def g0_product_shuffle(I: Composition, J: Composition) -> GrothendieckVector:
    """[C_I][C_J] = sum of [C_{C(w)}] over shuffles w of words with descents I and J."""
    m = I.weight
    u = Word(alpha(I).window)
    v = Word(alpha(J).shifted(m))
    counts: Dict[Composition, int] = {}
    for w in shuffle(u, v):
        label = Composition.from_descents(w.descents(), len(w))
        counts[label] = counts.get(label, 0) + 1
    return GrothendieckVector(counts)


def split_composition(I: Composition, k: int) -> Tuple[Composition, Composition]:
    """Labels of the restriction of C_I to H_k(0) (x) H_{n-k}(0)."""
    n = I.weight
    descents = I.descent_set()
    head = Composition.from_descents([d for d in descents if d < k], k)
    tail = Composition.from_descents([d - k for d in descents if d > k], n - k)
    return head, tail


def g0_coproduct(I: Composition) -> GrothendieckVector:
    return GrothendieckVector({split_composition(I, k): 1 for k in range(I.weight + 1)})


def module_isomorphic(M: ModuleRep, N: ModuleRep, limit: Optional[int] = None) -> bool:
    """Decide M = N by searching Hom(M, N) for an invertible intertwiner.

    det(sum c_i F_i) over a Hom basis F_i is a polynomial of degree at most
    d = dim M in each c_i, so it vanishes on the grid {0..d}^r only if it is
    zero. Raises InconclusiveError if the grid exceeds the search limit before
    a certificate turns up.
    """
    if M.dimension != N.dimension:
        return False
    if M.dimension == 0:
        return True
    if composition_factors(M) != composition_factors(N):
        return False
    basis = [linalg.to_rows(F) for F in hom_space(M, N)]
    if not basis:
        return False
    limit = get_config().isomorphism_search_limit if limit is None else limit
    d, r = M.dimension, len(basis)

    def determinant(point: Tuple[int, ...]) -> Fraction:
        rows = [[sum((c * F[i][j] for c, F in zip(point, basis) if c), Fraction(0))
                 for j in range(d)] for i in range(d)]
        return linalg.determinant(linalg.matrix(rows, d))

    first = [tuple(int(i == j) for i in range(r)) for j in range(r)] + [(1,) * r]
    for evaluations, point in enumerate(itertools.chain(first, itertools.product(range(d + 1),
                                                                                 repeat=r))):
        if evaluations >= limit:
            raise InconclusiveError(
                f"No invertible intertwiner among {evaluations} evaluations; the grid has "
                f"{(d + 1) ** r} points"
            )
        if determinant(point):
            logger.debug(f"Invertible intertwiner found at {point}")
            return True
    return False


def ideal_module(x: HeckeElement, algebra: AlgebraPresentation, label=None) -> ModuleRep:
    """The left ideal H_n(0) x."""
    return left_ideal_module(algebra, x.to_vector(algebra), label=label)


def inverse_ideal_isomorphic(I: Composition, algebra: AlgebraPresentation,
                             limit: Optional[int] = None) -> bool:
    """H_n(0) nu_I and H_n(0) nu_I^-1 are isomorphic, nu_I^-1 the image under T_sigma -> T_{sigma^-1}."""
    x = nu(I)
    return module_isomorphic(ideal_module(x, algebra), ideal_module(anti_involution(x), algebra),
                             limit)


def reversed_factors_isomorphic(I: Composition, algebra: AlgebraPresentation,
                                limit: Optional[int] = None) -> bool:
    """H_n(0) T_{alpha(I)} box_J and H_n(0) box_J T_{alpha(I)} are isomorphic, J = conj(mirror I)."""
    T = HeckeElement.T(alpha(I))
    box = box_element(alpha(conjugate(mirror(I))))
    return module_isomorphic(ideal_module(T * box, algebra), ideal_module(box * T, algebra),
                             limit)


class HeckeTower(Tower):
    """H_n(0) with rho_{m,n}(T_sigma (x) T_tau) = T_{sigma (+) tau}."""

    name = "hecke0"

    def __init__(self, config=None):
        super().__init__(config)
        self._perm_index: Dict[int, Dict[Permutation, int]] = {}

    def build_algebra(self, n: int) -> AlgebraPresentation:
        return hecke_algebra(n)

    def _index(self, n: int) -> Dict[Permutation, int]:
        with self._lock:
            if n not in self._perm_index:
                self._perm_index[n] = {p: i for i, p in enumerate(self.algebra(n).labels)}
            return self._perm_index[n]

    def embed_basis(self, m: int, n: int, a: int, b: int) -> SparseVector:
        sigma, tau = self.algebra(m).labels[a], self.algebra(n).labels[b]
        return {self._index(m + n)[direct_sum(sigma, tau)]: Fraction(1)}

    def labels(self, n: int) -> List[Composition]:
        return compositions(n)

    def parse_label(self, text: str) -> Composition:
        return Composition.parse(text)

    def build_simple(self, label: Composition) -> ModuleRep:
        return simple_module(label, self.algebra(label.weight))

    def build_projective(self, label: Composition) -> ModuleRep:
        return projective_module(label, self.algebra(label.weight))

    def coset_representatives(self, m: int, n: int, side: str) -> List[SparseVector]:
        index = self._index(m + n)
        reps = min_coset_reps(m, n)
        if side == "right":
            reps = [r.inverse() for r in reps]
        return [{index[r]: Fraction(1)} for r in reps]

    def composition_factors(self, module: ModuleRep) -> GrothendieckVector:
        return composition_factors(module)

    def k0_module_data(self, N: int) -> GradedHopfData:
        """K0 structure constants from explicit projective modules, degrees <= N."""
        self.config.require_degree(self.name, N, module_level=True)

        def product(I: Composition, J: Composition) -> GrothendieckVector:
            induced = induce(self, I.weight, J.weight,
                             self.projective_module(I), self.projective_module(J))
            return self.projective_decomposition(induced)

        def coproduct(I: Composition) -> GrothendieckVector:
            P = self.projective_module(I)
            return GrothendieckVector.total(
                self.projective_decomposition(restrict(self, k, I.weight - k, P))
                for k in range(I.weight + 1)
            )

        return GradedHopfData.build("K0(hecke0)", N, compositions, product, coproduct)

    def build_hopf_data(self, group: str, N: int) -> GradedHopfData:
        g0 = GradedHopfData.build("G0(hecke0)", N, compositions, g0_product_shuffle, g0_coproduct)
        if group == "g0":
            return g0
        dual = dual_hopf_data(g0, "K0(hecke0)")
        checked = min(N, self.config.condition5_module_degree.get(self.name, 0))
        explicit = self.k0_module_data(checked)
        for g in explicit.all_labels():
            if explicit.coproduct_of_label(g) != dual.coproduct_of_label(g):
                raise StructureError(f"K0 coproduct of [{g}] disagrees with the G0 product")
            for h in explicit.all_labels(checked - g.weight):
                if explicit.product_of_labels(g, h) != dual.product_of_labels(g, h):
                    raise StructureError(
                        f"K0 product [{g}][{h}] disagrees with the G0 coproduct"
                    )
        logger.info(f"K0(hecke0) module-level constants agree with the dual of G0 "
                    f"up to degree {checked}")
        return dual
