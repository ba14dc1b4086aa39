"""
Finite-dimensional algebras given by an ordered basis and exact structure constants.

An AlgebraPresentation carries a sparse multiplication table, the unit, a
list of distinguished generators and, for every basis element, a word in
those generators whose product is that element. Tensor products of
presentations are TensorAlgebra objects with the same interface, and
algebra maps between them are EmbeddingMap objects.
"""

import itertools
import logging
import threading
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from . import linalg
from .errors import ModuleError, StructureError
from .linalg import SparseVector, sparse_add

logger = logging.getLogger(__name__)

ProductRule = Callable[[int, int], SparseVector]


class AlgebraPresentation:
    """An algebra on an ordered basis with an exact multiplication table.

    Args:
        name: Display name, e.g. 'H_3(0)'.
        degree: Degree of the algebra inside its tower.
        labels: Basis labels in basis order.
        product: Function (i, j) -> sparse vector of e_i * e_j.
        unit: The unit as a sparse vector.
        generators: (name, sparse vector) pairs of distinguished generators.
        basis_words: For each basis element, generator indices whose
            product (left to right) equals that basis element.
    """

    def __init__(self, name: str, degree: int, labels: Sequence[Hashable],
                 product: ProductRule, unit: SparseVector,
                 generators: Sequence[Tuple[str, SparseVector]],
                 basis_words: Sequence[Tuple[int, ...]]):
        self.name = name
        self.degree = degree
        self.labels: List[Hashable] = list(labels)
        self._index = {label: i for i, label in enumerate(self.labels)}
        d = len(self.labels)
        self.table: List[List[SparseVector]] = [
            [{k: Fraction(v) for k, v in product(i, j).items() if v} for j in range(d)] for i in range(d)
        ]
        self.unit: SparseVector = dict(unit)
        self.generators: List[Tuple[str, SparseVector]] = [(g, dict(v)) for g, v in generators]
        self.basis_words: List[Tuple[int, ...]] = [tuple(w) for w in basis_words]
        if len(self.basis_words) != d:
            raise StructureError(f"{name}: {len(self.basis_words)} basis words for dimension {d}")
        logger.debug(f"Built algebra {name} of dimension {d} with {len(self.generators)} generators")

    @property
    def factors(self) -> Tuple["AlgebraPresentation", ...]:
        return (self,)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def basis_vector(self, i: int) -> SparseVector:
        return {i: Fraction(1)}

    def multiply_basis(self, i: int, j: int) -> SparseVector:
        return self.table[i][j]

    def multiply(self, x: SparseVector, y: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for i, a in x.items():
            row = self.table[i]
            for j, b in y.items():
                result = sparse_add(result, row[j], a * b)
        return result

    def generator_vector(self, g: int) -> SparseVector:
        return self.generators[g][1]

    def word_value(self, word: Sequence[int]) -> SparseVector:
        value = dict(self.unit)
        for g in word:
            value = self.multiply(value, self.generator_vector(g))
        return value

    def left_multiplication_matrix(self, x: SparseVector) -> DomainMatrix:
        """Matrix of y -> x * y on the basis."""
        d = self.dimension
        columns = []
        for j in range(d):
            column = self.multiply(x, {j: Fraction(1)})
            columns.append([column.get(i, Fraction(0)) for i in range(d)])
        return linalg.from_columns(columns, d)

    def check_unit(self) -> Optional[str]:
        """Return a description of the first unit violation, or None."""
        for j in range(self.dimension):
            e = {j: Fraction(1)}
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                return f"unit fails on basis element {self.labels[j]}"
        return None

    def check_associativity(self, limit: int) -> Optional[str]:
        """Check (xy)z = x(yz) on basis triples.

        All triples are checked when the dimension is at most limit; above
        it the first factor ranges over the generators only.
        """
        d = self.dimension
        if d <= limit:
            firsts = [{i: Fraction(1)} for i in range(d)]
        else:
            firsts = [v for _, v in self.generators]
        for x in firsts:
            for j in range(d):
                y = {j: Fraction(1)}
                xy = self.multiply(x, y)
                for k in range(d):
                    z = {k: Fraction(1)}
                    if self.multiply(xy, z) != self.multiply(x, self.multiply(y, z)):
                        return f"associativity fails on ({x}, {self.labels[j]}, {self.labels[k]})"
        return None

    def check_basis_words(self) -> Optional[str]:
        for i, word in enumerate(self.basis_words):
            if self.word_value(word) != {i: Fraction(1)}:
                return f"basis word {word} does not evaluate to {self.labels[i]}"
        return None

    def validate(self, associativity_limit: int) -> None:
        """Registration checks; raises StructureError on the first violation."""
        for problem in (self.check_unit(), self.check_basis_words(),
                        self.check_associativity(associativity_limit)):
            if problem is not None:
                raise StructureError(f"{self.name}: {problem}")

    def __repr__(self) -> str:
        return f"AlgebraPresentation({self.name}, dim={self.dimension})"


def _tensor_vectors(vectors: Sequence[SparseVector], dims: Sequence[int]) -> SparseVector:
    result: SparseVector = {}
    for combo in itertools.product(*(v.items() for v in vectors)):
        index = 0
        coefficient = Fraction(1)
        for (i, c), d in zip(combo, dims):
            index = index * d + i
            coefficient *= c
        if coefficient:
            result[index] = result.get(index, Fraction(0)) + coefficient
    return {k: v for k, v in result.items() if v}


class TensorAlgebra:
    """The tensor product of tower algebras A_{d_1} (x) ... (x) A_{d_r}.

    Basis indices are mixed-radix with the last factor varying fastest;
    generators are the factor generators lifted by units elsewhere.
    """

    def __init__(self, factors: Sequence[AlgebraPresentation]):
        self.factors: Tuple[AlgebraPresentation, ...] = tuple(factors)
        self.dims = [f.dimension for f in self.factors]
        self.degrees = tuple(f.degree for f in self.factors)
        self.name = " (x) ".join(f.name for f in self.factors) or "K"
        self.unit = _tensor_vectors([f.unit for f in self.factors], self.dims)
        self.generators: List[Tuple[str, SparseVector]] = []
        self._offsets = []
        for position, factor in enumerate(self.factors):
            self._offsets.append(len(self.generators))
            for gname, gvec in factor.generators:
                parts = [f.unit for f in self.factors]
                parts[position] = gvec
                self.generators.append(
                    (f"{gname}@{position}", _tensor_vectors(parts, self.dims))
                )
        self._cache: Dict[Tuple[int, int], SparseVector] = {}
        self._cache_lock = threading.Lock()
        self._words: Optional[List[Tuple[int, ...]]] = None

    @property
    def dimension(self) -> int:
        result = 1
        for d in self.dims:
            result *= d
        return result

    @property
    def labels(self) -> List[Tuple[Hashable, ...]]:
        return [tuple(combo) for combo in itertools.product(*(f.labels for f in self.factors))]

    def split_index(self, index: int) -> Tuple[int, ...]:
        parts = []
        for d in reversed(self.dims):
            index, r = divmod(index, d)
            parts.append(r)
        return tuple(reversed(parts))

    def join_index(self, parts: Sequence[int]) -> int:
        index = 0
        for i, d in zip(parts, self.dims):
            index = index * d + i
        return index

    def index(self, label: Sequence[Hashable]) -> int:
        return self.join_index([f.index(l) for f, l in zip(self.factors, label)])

    def tensor(self, vectors: Sequence[SparseVector]) -> SparseVector:
        return _tensor_vectors(vectors, self.dims)

    def generator_offset(self, position: int) -> int:
        return self._offsets[position]

    def generator_vector(self, g: int) -> SparseVector:
        return self.generators[g][1]

    @property
    def basis_words(self) -> List[Tuple[int, ...]]:
        if self._words is not None:
            return self._words
        words = []
        for combo in itertools.product(*(range(d) for d in self.dims)):
            word: Tuple[int, ...] = ()
            for position, i in enumerate(combo):
                offset = self._offsets[position]
                word += tuple(offset + g for g in self.factors[position].basis_words[i])
            words.append(word)
        self._words = words
        return words

    def multiply_basis(self, i: int, j: int) -> SparseVector:
        key = (i, j)
        with self._cache_lock:
            if key not in self._cache:
                left, right = self.split_index(i), self.split_index(j)
                self._cache[key] = self.tensor([
                    f.multiply_basis(a, b) for f, a, b in zip(self.factors, left, right)
                ])
            return self._cache[key]

    def multiply(self, x: SparseVector, y: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for i, a in x.items():
            for j, b in y.items():
                result = sparse_add(result, self.multiply_basis(i, j), a * b)
        return result

    def __repr__(self) -> str:
        return f"TensorAlgebra({self.name}, dim={self.dimension})"


def tensor_algebra(*algebras) -> TensorAlgebra:
    """Tensor product of algebras, flattening nested tensor products."""
    factors: List[AlgebraPresentation] = []
    for a in algebras:
        factors.extend(a.factors)
    return TensorAlgebra(factors)


class EmbeddingMap:
    """A linear map between algebras given by the images of source basis elements.

    Args:
        source: The source algebra (usually a TensorAlgebra).
        target: The target algebra.
        images: images[i] is the sparse image of the i-th source basis element.
        degrees: The degrees (m, n) for a tower embedding rho_{m,n}.
    """

    def __init__(self, source, target, images: Sequence[SparseVector],
                 degrees: Tuple[int, ...] = ()):
        if len(images) != source.dimension:
            raise StructureError(f"{len(images)} images for a source of dimension {source.dimension}")
        self.source = source
        self.target = target
        self.images: List[SparseVector] = [dict(v) for v in images]
        self.degrees = tuple(degrees)

    @classmethod
    def from_function(cls, source, target, image: Callable[[int], SparseVector],
                      degrees: Tuple[int, ...] = ()) -> "EmbeddingMap":
        return cls(source, target, [image(i) for i in range(source.dimension)], degrees)

    def apply(self, x: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for i, c in x.items():
            result = sparse_add(result, self.images[i], c)
        return result

    @property
    def matrix(self) -> DomainMatrix:
        """The dim(target) x dim(source) matrix of the map."""
        columns = [
            [img.get(r, Fraction(0)) for r in range(self.target.dimension)]
            for img in self.images
        ]
        return linalg.from_columns(columns, self.target.dimension)

    def is_injective(self) -> bool:
        rank = linalg.rank(linalg.from_sparse_rows(self.images, self.target.dimension))
        return rank == self.source.dimension

    def is_unital(self) -> bool:
        return self.apply(self.source.unit) == self.target.unit

    def multiplicativity_violation(self) -> Optional[Tuple[int, int]]:
        """First basis pair (i, j) with rho(e_i e_j) != rho(e_i) rho(e_j), or None."""
        for i in range(self.source.dimension):
            for j in range(self.source.dimension):
                lhs = self.apply(self.source.multiply_basis(i, j))
                rhs = self.target.multiply(self.images[i], self.images[j])
                if lhs != rhs:
                    return (i, j)
        return None

    def with_swapped_columns(self, i: int, j: int) -> "EmbeddingMap":
        """A copy whose images of basis elements i and j are exchanged."""
        images = list(self.images)
        images[i], images[j] = images[j], images[i]
        return EmbeddingMap(self.source, self.target, images, self.degrees)

    def compose(self, inner: "EmbeddingMap") -> "EmbeddingMap":
        """self o inner."""
        if inner.target.dimension != self.source.dimension:
            raise ModuleError("Cannot compose maps with mismatched dimensions")
        return EmbeddingMap(inner.source, self.target,
                            [self.apply(v) for v in inner.images], inner.degrees)
