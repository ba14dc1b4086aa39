"""
Modules over finite-dimensional algebras, given by exact action matrices.

A ModuleRep stores one dense matrix per distinguished generator of its
acting algebra. Every other algebra element acts through the basis words
of the algebra. Induction is built as an explicit tensor quotient and
restriction acts through an embedding.
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from . import linalg
from .algebra import EmbeddingMap, tensor_algebra
from .errors import DecompositionError, ModuleError
from .linalg import QuotientSpace, SparseVector

logger = logging.getLogger(__name__)


class ModuleRep:
    """A left module: dimension plus one action matrix per algebra generator.

    Args:
        algebra: The acting AlgebraPresentation or TensorAlgebra.
        actions: Dense square matrices, one per generator of the algebra.
        label: Optional isomorphism-class label (e.g. a composition).
        check: Spot-check the defining relations at construction.
    """

    def __init__(self, algebra, actions: Sequence[DomainMatrix],
                 label: Optional[Hashable] = None, check: bool = True):
        self.algebra = algebra
        self.actions: List[DomainMatrix] = [a.to_dense() for a in actions]
        self.label = label
        if len(self.actions) != len(algebra.generators):
            raise ModuleError(
                f"{len(self.actions)} action matrices for {len(algebra.generators)} generators "
                f"of {algebra.name}"
            )
        if self.actions:
            self._dimension = self.actions[0].shape[0]
        else:
            self._dimension = None
        for a in self.actions:
            if a.shape != (self._dimension, self._dimension):
                raise ModuleError(f"Action matrix of shape {a.shape} in a module of "
                                  f"dimension {self._dimension}")
        self._basis_cache: Dict[int, DomainMatrix] = {}
        self._cache_lock = threading.Lock()
        if check:
            self.spot_check()

    @classmethod
    def trivial_action(cls, algebra, dimension: int, label: Optional[Hashable] = None) -> "ModuleRep":
        """A module over an algebra without generators (A_0 or A_1 in most towers)."""
        if algebra.generators:
            raise ModuleError(f"{algebra.name} has generators; give their actions")
        module = cls(algebra, [], label=label, check=False)
        module._dimension = dimension
        return module

    @property
    def dimension(self) -> int:
        return self._dimension if self._dimension is not None else 0

    def action(self, g: int) -> DomainMatrix:
        return self.actions[g]

    def basis_action(self, i: int) -> DomainMatrix:
        """Matrix of the i-th basis element of the algebra."""
        with self._cache_lock:
            if i not in self._basis_cache:
                result = linalg.identity(self.dimension)
                for g in self.algebra.basis_words[i]:
                    result = result.matmul(self.actions[g])
                self._basis_cache[i] = result
            return self._basis_cache[i]

    def act(self, x: SparseVector) -> DomainMatrix:
        """Matrix of an arbitrary algebra element."""
        result = linalg.zeros(self.dimension, self.dimension)
        for i, c in x.items():
            if c:
                result = result + self.basis_action(i).scalarmul(linalg.qq(c))
        return result

    def _relation_failures(self, basis_indices: Sequence[int]) -> Optional[str]:
        algebra = self.algebra
        for g, (gname, gvec) in enumerate(algebra.generators):
            if not linalg.equal(self.act(gvec), self.actions[g]):
                return f"generator {gname} is inconsistent with its basis expansion"
            for b in basis_indices:
                product = algebra.multiply(gvec, {b: Fraction(1)})
                lhs = self.actions[g].matmul(self.basis_action(b))
                if not linalg.equal(lhs, self.act(product)):
                    return f"{gname} * e_{algebra.labels[b]} violates the multiplication table"
        return None

    def spot_check(self) -> None:
        """Check generator * basis element products for short basis words."""
        if self.dimension == 0:
            return
        short = [i for i, w in enumerate(self.algebra.basis_words) if len(w) <= 2]
        problem = self._relation_failures(short)
        if problem:
            raise ModuleError(f"Module over {self.algebra.name}: {problem}")

    def verify(self) -> None:
        """Check generator * basis element products for every basis element."""
        problem = self._relation_failures(range(self.algebra.dimension))
        if problem:
            raise ModuleError(f"Module over {self.algebra.name}: {problem}")

    def trace(self, x: SparseVector) -> Fraction:
        return linalg.trace(self.act(x))

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label is not None else ""
        return f"ModuleRep({self.algebra.name}{name}, dim={self.dimension})"


def _module(algebra, actions: Sequence[DomainMatrix], dimension: int,
            label: Optional[Hashable] = None, check: bool = True) -> ModuleRep:
    if algebra.generators:
        return ModuleRep(algebra, actions, label=label, check=check)
    return ModuleRep.trivial_action(algebra, dimension, label=label)


def tensor_product(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    """The outer tensor product, a module over m.algebra (x) n.algebra."""
    algebra = tensor_algebra(m.algebra, n.algebra)
    eye_m = linalg.identity(m.dimension)
    eye_n = linalg.identity(n.dimension)
    actions = [linalg.kron(a, eye_n) for a in m.actions] + \
        [linalg.kron(eye_m, a) for a in n.actions]
    label = None
    if m.label is not None and n.label is not None:
        label = _flat_label(m) + _flat_label(n)
    return _module(algebra, actions, m.dimension * n.dimension, label=label, check=False)


def _flat_label(m: ModuleRep) -> Tuple:
    if len(m.algebra.factors) == 1 and not isinstance(m.label, tuple):
        return (m.label,)
    return tuple(m.label)


def direct_sum(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    if m.algebra is not n.algebra:
        raise ModuleError("Direct sum of modules over different algebras")
    dm, dn = m.dimension, n.dimension
    actions = []
    for a, b in zip(m.actions, n.actions):
        ra, rb = linalg.to_rows(a), linalg.to_rows(b)
        rows = [row + [Fraction(0)] * dn for row in ra] + [[Fraction(0)] * dm + row for row in rb]
        actions.append(linalg.matrix(rows, dm + dn))
    return _module(m.algebra, actions, dm + dn, check=False)


def restrict_along(m: ModuleRep, embedding: EmbeddingMap) -> ModuleRep:
    """The same space with the source of embedding acting through it."""
    if embedding.target.dimension != m.algebra.dimension:
        raise ModuleError("Embedding target does not match the module's algebra")
    actions = [m.act(embedding.apply(gvec)) for _, gvec in embedding.source.generators]
    return _module(embedding.source, actions, m.dimension, check=False)


def induce_along(v: ModuleRep, embedding: EmbeddingMap,
                 free_rank: Optional[int] = None) -> ModuleRep:
    """target (x)_source V as an explicit quotient of target (x) V.

    The relations a*rho(x) (x) w - a (x) x.w run over basis elements a of
    the target, generators x of the source and basis vectors w of V. When
    free_rank is given the quotient must have dimension free_rank * dim V.
    """
    source, target = embedding.source, embedding.target
    if source.dimension != v.algebra.dimension:
        raise ModuleError("Module is not over the embedding's source algebra")
    d, k = target.dimension, v.dimension
    images = [embedding.apply(gvec) for _, gvec in source.generators]
    actions = [linalg.to_rows(a) for a in v.actions]
    relations: List[Dict[int, Fraction]] = []
    for a in range(d):
        for g, image in enumerate(images):
            shifted = target.multiply({a: Fraction(1)}, image)
            act = actions[g]
            for w in range(k):
                row: Dict[int, Fraction] = {}
                for b, c in shifted.items():
                    row[b * k + w] = row.get(b * k + w, Fraction(0)) + c
                for u in range(k):
                    coefficient = act[u][w]
                    if coefficient:
                        row[a * k + u] = row.get(a * k + u, Fraction(0)) - coefficient
                relations.append({key: val for key, val in row.items() if val})
    quotient = QuotientSpace(d * k, relations)
    if free_rank is not None and quotient.dimension != free_rank * k:
        raise ModuleError(
            f"Induced module has dimension {quotient.dimension}, expected {free_rank * k} "
            f"(free rank {free_rank})"
        )

    def lift(h: SparseVector, vector: SparseVector) -> SparseVector:
        result: Dict[int, Fraction] = {}
        for index, c in vector.items():
            a, w = divmod(index, k)
            for b, coefficient in target.multiply(h, {a: Fraction(1)}).items():
                key = b * k + w
                result[key] = result.get(key, Fraction(0)) + c * coefficient
        return {key: val for key, val in result.items() if val}

    induced = []
    for gname, h in target.generators:
        columns = [quotient.reduce(lift(h, {j: Fraction(1)})) for j in quotient.free]
        for relation in quotient.relation_rows:
            if any(quotient.reduce(lift(h, relation))):
                raise ModuleError(f"Action of {gname} does not descend to the induced module")
        induced.append(linalg.from_columns(columns, quotient.dimension))
    logger.debug(f"Induced a module of dimension {k} from {source.name} to {target.name}: "
                 f"dimension {quotient.dimension}")
    return _module(target, induced, quotient.dimension)


def hom_space(p: ModuleRep, m: ModuleRep) -> List[DomainMatrix]:
    """A basis of Hom(P, M): matrices F with F act_P(g) = act_M(g) F for all g."""
    if p.algebra.dimension != m.algebra.dimension or \
            len(p.algebra.generators) != len(m.algebra.generators):
        raise ModuleError("Hom between modules over different algebras")
    dp, dm = p.dimension, m.dimension
    unknowns = dm * dp
    if unknowns == 0:
        return []
    equations: List[Dict[int, Fraction]] = []
    for a_p, a_m in zip(p.actions, m.actions):
        rp, rm = linalg.to_rows(a_p), linalg.to_rows(a_m)
        for r in range(dm):
            for c in range(dp):
                row: Dict[int, Fraction] = {}
                for t in range(dm):
                    if rm[r][t]:
                        row[t * dp + c] = row.get(t * dp + c, Fraction(0)) + rm[r][t]
                for t in range(dp):
                    if rp[t][c]:
                        row[r * dp + t] = row.get(r * dp + t, Fraction(0)) - rp[t][c]
                equations.append({key: val for key, val in row.items() if val})
    system = linalg.from_sparse_rows(equations, unknowns)
    basis = linalg.nullspace(system)
    return [linalg.matrix([vec[r * dp:(r + 1) * dp] for r in range(dm)], dp) for vec in basis]


def dim_hom(p: ModuleRep, m: ModuleRep) -> int:
    """dim Hom(P, M) by exact nullspace."""
    return len(hom_space(p, m))


def module_on_basis(algebra, basis: Sequence[SparseVector],
                    label: Optional[Hashable] = None) -> ModuleRep:
    """The left ideal spanned by basis, acting by left multiplication.

    Raises ModuleError if basis is dependent or its span is not stable.
    """
    d = algebra.dimension
    actions = []
    for _, gvec in algebra.generators:
        products = [algebra.multiply(gvec, b) for b in basis]
        coords = linalg.coordinates(basis, products, d)
        actions.append(linalg.from_columns(coords, len(basis)))
    return _module(algebra, actions, len(basis), label=label)


def left_ideal_module(algebra, x: SparseVector, label: Optional[Hashable] = None) -> ModuleRep:
    """The left ideal A.x on an echelon basis of its spanning set {e_i x}."""
    spanning = [algebra.multiply({i: Fraction(1)}, x) for i in range(algebra.dimension)]
    basis = linalg.row_space_basis(spanning, algebra.dimension)
    return module_on_basis(algebra, basis, label=label)


def regular_module(algebra) -> ModuleRep:
    actions = [algebra.left_multiplication_matrix(gvec) for _, gvec in algebra.generators]
    return _module(algebra, actions, algebra.dimension, label="regular")


def quotient_module(m: ModuleRep, subspace: Sequence[Sequence[Fraction]]) -> ModuleRep:
    """M / W for a submodule W given by spanning vectors."""
    d = m.dimension
    sparse = [{i: Fraction(x) for i, x in enumerate(vec) if x} for vec in subspace]
    quotient = QuotientSpace(d, sparse)
    actions = []
    for a in m.actions:
        rows = linalg.to_rows(a)
        for relation in quotient.relation_rows:
            image = {i: sum((rows[i][j] * c for j, c in relation.items()), Fraction(0))
                     for i in range(d)}
            if any(quotient.reduce(image)):
                raise ModuleError("Subspace is not a submodule")
        columns = [quotient.reduce({i: rows[i][j] for i in range(d)}) for j in quotient.free]
        actions.append(linalg.from_columns(columns, quotient.dimension))
    return _module(m.algebra, actions, quotient.dimension, check=False)


def joint_eigenspace(m: ModuleRep, eigenvalues: Sequence[Fraction]) -> List[List[Fraction]]:
    """Vectors v with g.v = eigenvalues[g] v for every generator g."""
    d = m.dimension
    if not m.actions:
        return [[Fraction(int(i == j)) for i in range(d)] for j in range(d)]
    rows: List[List[Fraction]] = []
    for a, value in zip(m.actions, eigenvalues):
        shifted = linalg.to_rows(a)
        for i in range(d):
            shifted[i][i] -= value
        rows.extend(shifted)
    return linalg.nullspace(linalg.matrix(rows, d))


def eigen_filtration(m: ModuleRep,
                     patterns: Sequence[Tuple[Hashable, Sequence[Fraction]]]) -> Dict[Hashable, int]:
    """Composition factors of a module whose simple modules are all 1-dimensional.

    patterns lists (label, generator eigenvalues) in preference order. At
    every step the first pattern with a nonzero joint eigenspace is taken;
    that eigenspace is a submodule all of whose factors carry the label, and
    it is quotiented out before the next step.
    """
    multiplicities: Dict[Hashable, int] = {}
    current = m
    while current.dimension > 0:
        for label, values in patterns:
            space = joint_eigenspace(current, values)
            if space:
                break
        else:
            raise DecompositionError(
                f"No common eigenvector in a module of dimension {current.dimension}"
            )
        multiplicities[label] = multiplicities.get(label, 0) + len(space)
        current = quotient_module(current, space)
    return multiplicities
