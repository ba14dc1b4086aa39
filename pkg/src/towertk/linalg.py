"""
Exact linear algebra over the rationals.

Thin helpers around sympy's DomainMatrix over QQ. Module action matrices
are kept dense; relation systems are assembled sparse and eliminated
with DomainMatrix.rref. No floating point is used anywhere.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import ModuleError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
SparseVector = Dict[int, Fraction]


def qq(value: Scalar):
    """Convert an int or Fraction to an element of QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(int(value))


def fraction(value) -> Fraction:
    """Convert an element of QQ (or an int) back to a Fraction."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def matrix(rows: Sequence[Sequence[Scalar]], ncols: Optional[int] = None) -> DomainMatrix:
    """Dense matrix from nested rows of ints or Fractions."""
    nrows = len(rows)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return DomainMatrix([[qq(x) for x in row] for row in rows], (nrows, width), QQ)


def zeros(nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix.zeros((nrows, ncols), QQ).to_dense()


def identity(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ).to_dense()


def from_sparse_rows(rows: Sequence[Mapping[int, Scalar]], ncols: int) -> DomainMatrix:
    """Sparse matrix whose i-th row has the given nonzero entries."""
    data = {}
    for i, row in enumerate(rows):
        entries = {j: qq(v) for j, v in row.items() if v != 0}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def from_columns(columns: Sequence[Sequence[Scalar]], nrows: int) -> DomainMatrix:
    """Dense matrix with the given columns."""
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
    return matrix(rows, len(columns))


def to_rows(m: DomainMatrix) -> List[List[Fraction]]:
    return [[fraction(x) for x in row] for row in m.to_dense().to_list()]


def sparse_rows(m: DomainMatrix) -> Dict[int, Dict[int, Fraction]]:
    """Nonzero entries of m as {row: {col: value}}."""
    rep = m.to_sparse().rep
    return {
        i: {j: fraction(v) for j, v in row.items() if v}
        for i, row in rep.items()
    }


def entry(m: DomainMatrix, i: int, j: int) -> Fraction:
    return fraction(m.to_dense().to_list()[i][j])


def is_zero(m: DomainMatrix) -> bool:
    return not any(row for row in sparse_rows(m).values())


def equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    if a.shape != b.shape:
        return False
    return is_zero(a.to_dense() - b.to_dense())


def trace(m: DomainMatrix) -> Fraction:
    rows = m.to_dense().to_list()
    return sum((fraction(rows[i][i]) for i in range(min(m.shape))), Fraction(0))


def kron(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """Kronecker product a (x) b, with b's index varying fastest."""
    ra, ca = a.shape
    rb, cb = b.shape
    arows = a.to_dense().to_list()
    brows = b.to_dense().to_list()
    rows = [
        [arows[i][j] * brows[k][l] for j in range(ca) for l in range(cb)]
        for i in range(ra) for k in range(rb)
    ]
    return DomainMatrix(rows, (ra * rb, ca * cb), QQ)


def rank(m: DomainMatrix) -> int:
    if 0 in m.shape:
        return 0
    return len(m.rref()[1])


def rref(m: DomainMatrix) -> Tuple[Dict[int, Dict[int, Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form as sparse rows plus the pivot columns."""
    if 0 in m.shape:
        return {}, ()
    reduced, pivots = m.rref()
    return sparse_rows(reduced), tuple(pivots)


def nullspace(m: DomainMatrix) -> List[List[Fraction]]:
    """A basis of {x : m x = 0}, one vector per free column, from the rref."""
    nrows, ncols = m.shape
    if ncols == 0:
        return []
    if nrows == 0:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -rows.get(r, {}).get(free, Fraction(0))
        basis.append(vector)
    return basis


def row_space_basis(vectors: Sequence[Mapping[int, Scalar]], dim: int) -> List[SparseVector]:
    """Reduced echelon basis of the span of sparse vectors in K^dim."""
    if not vectors:
        return []
    rows, pivots = rref(from_sparse_rows(vectors, dim))
    return [rows[r] for r in range(len(pivots))]


def coordinates(basis: Sequence[Mapping[int, Scalar]], vectors: Sequence[Mapping[int, Scalar]],
                dim: int) -> List[List[Fraction]]:
    """Coordinates of each vector in a linearly independent basis of K^dim.

    Raises ModuleError if the basis is dependent or a vector is outside its span.
    """
    k = len(basis)
    columns: Dict[int, Dict[int, Fraction]] = {}
    for j, vec in enumerate(list(basis) + list(vectors)):
        for i, value in vec.items():
            if value:
                columns.setdefault(i, {})[j] = Fraction(value)
    augmented = from_sparse_rows([columns.get(i, {}) for i in range(dim)], k + len(vectors))
    rows, pivots = rref(augmented)
    if tuple(pivots[:k]) != tuple(range(k)):
        raise ModuleError(f"Basis of size {k} is linearly dependent")
    if len(pivots) > k:
        raise ModuleError("Vector lies outside the span of the basis")
    return [
        [rows.get(r, {}).get(k + j, Fraction(0)) for r in range(k)]
        for j in range(len(vectors))
    ]


def determinant(m: DomainMatrix) -> Fraction:
    return fraction(m.to_dense().det())


class QuotientSpace:
    """K^dim modulo the span of a set of relation vectors.

    Reduction uses the reduced echelon form of the relations; the quotient
    basis is the set of non-pivot coordinates.
    """

    def __init__(self, dim: int, relations: Iterable[Mapping[int, Scalar]]):
        self.dim = dim
        rel = [r for r in relations if any(v for v in r.values())]
        if rel:
            rows, pivots = rref(from_sparse_rows(rel, dim))
        else:
            rows, pivots = {}, ()
        self.pivots = pivots
        self._pivot_rows = {p: rows[r] for r, p in enumerate(pivots)}
        pivot_set = set(pivots)
        self.free = [j for j in range(dim) if j not in pivot_set]
        self._free_index = {j: k for k, j in enumerate(self.free)}
        logger.debug(f"Quotient of dimension {dim} by {len(rel)} relations has dimension "
                     f"{len(self.free)}")

    @property
    def dimension(self) -> int:
        return len(self.free)

    @property
    def relation_rows(self) -> List[SparseVector]:
        return [self._pivot_rows[p] for p in self.pivots]

    def reduce(self, vector: Mapping[int, Scalar]) -> List[Fraction]:
        """Coordinates of the class of vector on the quotient basis."""
        work: Dict[int, Fraction] = {i: Fraction(v) for i, v in vector.items() if v}
        for p in self.pivots:
            c = work.get(p)
            if not c:
                continue
            for j, value in self._pivot_rows[p].items():
                updated = work.get(j, Fraction(0)) - c * value
                if updated:
                    work[j] = updated
                else:
                    work.pop(j, None)
        coords = [Fraction(0)] * len(self.free)
        for j, value in work.items():
            if j in self._free_index:
                coords[self._free_index[j]] = value
            else:
                raise ModuleError(f"Reduction left a pivot coordinate {j} nonzero")
        return coords


def sparse_add(u: Mapping[int, Fraction], v: Mapping[int, Fraction],
               scale: Scalar = 1) -> SparseVector:
    """u + scale * v as a new sparse vector without zero entries."""
    result = dict(u)
    for key, value in v.items():
        total = result.get(key, Fraction(0)) + scale * value
        if total:
            result[key] = total
        else:
            result.pop(key, None)
    return result


def sparse_scale(u: Mapping[int, Fraction], scale: Scalar) -> SparseVector:
    if not scale:
        return {}
    return {key: value * scale for key, value in u.items()}
