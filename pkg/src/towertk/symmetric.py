"""
The tower of symmetric group algebras K[S_n].

Grothendieck-level data comes from exact character theory: irreducible
characters by the Murnaghan-Nakayama rule, class functions on products of
symmetric groups, Frobenius induction and the characteristic map to
power sums. Explicit algebras (permutation basis) and Specht modules back
the module-level cross-checks at small degree.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .algebra import AlgebraPresentation, TensorAlgebra
from .combinatorics import (Partition, Permutation, class_representative, direct_sum,
                            min_coset_reps, partitions, permutations, z_mu)
from .errors import DecompositionError, UsageError
from .hopf import GradedHopfData, GrothendieckVector, antipode
from .linalg import SparseVector
from .modules import ModuleRep, dim_hom
from .report import CheckReport
from .tower import Tower

logger = logging.getLogger(__name__)

ClassKey = Tuple[Partition, ...]


def _beta_set(lam: Partition) -> Tuple[int, ...]:
    length = len(lam.parts)
    return tuple(part + length - 1 - i for i, part in enumerate(lam.parts))


@lru_cache(maxsize=None)
def _mn(beta: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    members = set(beta)
    total = 0
    for b in beta:
        lower = b - r
        if lower < 0 or lower in members:
            continue
        # rim hook of length r; its height is the number of beads jumped over
        height = sum(1 for c in beta if lower < c < b)
        moved = tuple(sorted((lower if c == b else c for c in beta), reverse=True))
        total += (-1) ** height * _mn(moved, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """The irreducible character value chi^lam on the class of cycle type mu."""
    if lam.weight != mu.weight:
        raise UsageError(f"Partitions {lam} and {mu} have different weights")
    return _mn(_beta_set(lam), mu.parts)


@lru_cache(maxsize=None)
def _character_table(n: int) -> Tuple[Tuple[Partition, Tuple[Tuple[Partition, int], ...]], ...]:
    return tuple(
        (lam, tuple((mu, mn_character(lam, mu)) for mu in partitions(n)))
        for lam in partitions(n)
    )


def character_table(n: int) -> Dict[Partition, Dict[Partition, int]]:
    """chi^lam(mu) for all partitions of n, rows and columns in reverse lexicographic order."""
    return {lam: dict(row) for lam, row in _character_table(n)}


def class_sizes(n: int) -> Dict[Partition, int]:
    return {mu: factorial(n) // z_mu(mu) for mu in partitions(n)}


def _domain(degrees: Sequence[int]) -> List[ClassKey]:
    return [tuple(key) for key in itertools.product(*(partitions(d) for d in degrees))]


def _z(key: ClassKey) -> int:
    result = 1
    for mu in key:
        result *= z_mu(mu)
    return result


def _union(parts: Iterable[Partition]) -> Partition:
    result = Partition(())
    for mu in parts:
        result = result.union(mu)
    return result


class ClassFunction:
    """A class function on S_{d_1} x ... x S_{d_r}, keyed by tuples of cycle types.

    Args:
        degrees: The factor degrees (d_1, ..., d_r).
        values: Class tuple -> value; missing classes are 0.
    """

    def __init__(self, degrees: Sequence[int], values: Mapping[ClassKey, Fraction]):
        self.degrees: Tuple[int, ...] = tuple(degrees)
        self.values: Dict[ClassKey, Fraction] = {}
        for key, value in values.items():
            if tuple(mu.weight for mu in key) != self.degrees:
                raise UsageError(f"Class {key} does not match degrees {self.degrees}")
            if value:
                self.values[tuple(key)] = Fraction(value)

    @classmethod
    def irreducible(cls, labels: Sequence[Partition]) -> "ClassFunction":
        """chi^{lam_1} (x) ... (x) chi^{lam_r}."""
        degrees = tuple(lam.weight for lam in labels)
        tables = [character_table(d) for d in degrees]
        values = {}
        for key in _domain(degrees):
            value = 1
            for table, lam, mu in zip(tables, labels, key):
                value *= table[lam][mu]
            values[key] = Fraction(value)
        return cls(degrees, values)

    @classmethod
    def regular(cls, n: int) -> "ClassFunction":
        identity_class = (Partition((1,) * n),)
        return cls((n,), {identity_class: Fraction(factorial(n))})

    def __call__(self, *key: Partition) -> Fraction:
        return self.values.get(tuple(key), Fraction(0))

    @property
    def dimension(self) -> Fraction:
        return self(*(Partition((1,) * d) for d in self.degrees))

    def inner(self, other: "ClassFunction") -> Fraction:
        """sum over classes of phi(c) psi(c) / z_c."""
        if self.degrees != other.degrees:
            raise UsageError(f"Inner product across degrees {self.degrees} and {other.degrees}")
        return sum((v * other.values.get(k, 0) / _z(k) for k, v in self.values.items()),
                   Fraction(0))

    def tensor(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.degrees + other.degrees, {
            a + b: x * y for a, x in self.values.items() for b, y in other.values.items()
        })

    def reorder(self, order: Sequence[int]) -> "ClassFunction":
        """Permute the factors: factor i of the result is factor order[i] of self."""
        return ClassFunction(tuple(self.degrees[i] for i in order), {
            tuple(key[i] for i in order): v for key, v in self.values.items()
        })

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        values = dict(self.values)
        for key, v in other.values.items():
            values[key] = values.get(key, Fraction(0)) + v
        return ClassFunction(self.degrees, values)

    def __mul__(self, scalar) -> "ClassFunction":
        return ClassFunction(self.degrees, {k: v * scalar for k, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.degrees == other.degrees and self.values == other.values

    __hash__ = None

    def to_json(self) -> Dict[str, str]:
        return {
            "|".join(str(mu) for mu in key): str(self(*key)) for key in _domain(self.degrees)
        }

    def __repr__(self) -> str:
        return f"ClassFunction({self.degrees}, {len(self.values)} nonzero classes)"


def induce_class_function(phi: ClassFunction, start: int = 0,
                          stop: Optional[int] = None) -> ClassFunction:
    """Induce from the factors [start, stop) to the symmetric group on their union.

    Ind phi(mu) = z_mu * sum over class tuples whose union is mu of phi / z.
    """
    stop = len(phi.degrees) if stop is None else stop
    degrees = phi.degrees[:start] + (sum(phi.degrees[start:stop]),) + phi.degrees[stop:]
    values: Dict[ClassKey, Fraction] = {}
    for key, value in phi.values.items():
        block = key[start:stop]
        merged = key[:start] + (_union(block),) + key[stop:]
        values[merged] = values.get(merged, Fraction(0)) + value / _z(block)
    return ClassFunction(degrees, {k: v * z_mu(k[start]) for k, v in values.items()})


def restrict_class_function(psi: ClassFunction, k: int, l: int,
                            position: int = 0) -> ClassFunction:
    """Restrict factor `position` (of degree k + l) to S_k x S_l: value psi(mu u nu)."""
    if psi.degrees[position] != k + l:
        raise UsageError(f"Factor {position} has degree {psi.degrees[position]}, not {k + l}")
    degrees = psi.degrees[:position] + (k, l) + psi.degrees[position + 1:]
    values = {}
    for key in _domain(degrees):
        merged = key[:position] + (key[position].union(key[position + 1]),) + key[position + 2:]
        values[key] = psi.values.get(merged, Fraction(0))
    return ClassFunction(degrees, values)


def decompose_into_irreducibles(chi: ClassFunction) -> GrothendieckVector:
    """Multiplicities <chi, chi^lam>; raises DecompositionError unless chi is a character."""
    counts: Dict = {}
    rebuilt: Optional[ClassFunction] = None
    for labels in _domain(chi.degrees):
        irreducible = ClassFunction.irreducible(labels)
        multiplicity = chi.inner(irreducible)
        if multiplicity.denominator != 1 or multiplicity < 0:
            raise DecompositionError(
                f"Multiplicity {multiplicity} of {'|'.join(map(str, labels))} is not a "
                f"nonnegative integer"
            )
        if multiplicity:
            counts[labels[0] if len(labels) == 1 else labels] = int(multiplicity)
            term = irreducible * multiplicity
            rebuilt = term if rebuilt is None else rebuilt + term
    if (rebuilt or ClassFunction(chi.degrees, {})) != chi:
        raise DecompositionError("Irreducible multiplicities do not reconstruct the character")
    return GrothendieckVector(counts)


class SymFunctionP:
    """A symmetric function written on the power sums p_mu."""

    def __init__(self, coefficients: Mapping[Partition, Fraction]):
        self.coefficients: Dict[Partition, Fraction] = {
            mu: Fraction(c) for mu, c in coefficients.items() if c
        }

    def __mul__(self, other: "SymFunctionP") -> "SymFunctionP":
        result: Dict[Partition, Fraction] = {}
        for a, x in self.coefficients.items():
            for b, y in other.coefficients.items():
                key = a.union(b)
                result[key] = result.get(key, Fraction(0)) + x * y
        return SymFunctionP(result)

    def __add__(self, other: "SymFunctionP") -> "SymFunctionP":
        result = dict(self.coefficients)
        for key, c in other.coefficients.items():
            result[key] = result.get(key, Fraction(0)) + c
        return SymFunctionP(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunctionP):
            return NotImplemented
        return self.coefficients == other.coefficients

    __hash__ = None

    def degrees(self) -> List[int]:
        return sorted({mu.weight for mu in self.coefficients})

    def to_json(self) -> Dict[str, str]:
        return {f"p[{mu}]": str(c) for mu, c in sorted(self.coefficients.items())}

    def __repr__(self) -> str:
        terms = [f"{c}*p[{mu}]" for mu, c in sorted(self.coefficients.items())]
        return " + ".join(terms) or "0"


def frobenius_ch(chi: ClassFunction) -> SymFunctionP:
    """ch(chi) = sum_mu chi(mu) / z_mu * p_mu for a class function of one symmetric group."""
    if len(chi.degrees) != 1:
        raise UsageError("The characteristic map takes a class function of a single S_n")
    return SymFunctionP({key[0]: v / z_mu(key[0]) for key, v in chi.values.items()})


def module_character(module: ModuleRep) -> ClassFunction:
    """Traces of class representatives acting on an explicit module."""
    algebra = module.algebra
    degrees = tuple(f.degree for f in algebra.factors)
    values = {}
    for key in _domain(degrees):
        reps = tuple(class_representative(mu) for mu in key)
        if isinstance(algebra, TensorAlgebra):
            index = algebra.index(reps)
        else:
            index = algebra.index(reps[0])
        values[key] = module.trace({index: Fraction(1)})
    return ClassFunction(degrees, values)


def symmetric_group_algebra(n: int) -> AlgebraPresentation:
    """K[S_n] on the permutation basis in lexicographic order."""
    perms = permutations(n)
    index = {p: i for i, p in enumerate(perms)}

    def product(i: int, j: int) -> SparseVector:
        return {index[perms[i] * perms[j]]: Fraction(1)}

    generators = [(f"s{i}", {index[Permutation.simple(n, i)]: Fraction(1)}) for i in range(1, n)]
    words = [tuple(i - 1 for i in p.reduced_word()) for p in perms]
    return AlgebraPresentation(f"KS_{n}", n, perms, product,
                               {index[Permutation.identity(n)]: Fraction(1)}, generators, words)


def standard_tableaux(lam: Partition) -> List[Tuple[Tuple[int, ...], ...]]:
    """Standard Young tableaux of shape lam, rows as tuples, in filling order."""
    found: List[Tuple[Tuple[int, ...], ...]] = []

    def grow(rows: List[List[int]], value: int) -> None:
        if value > lam.weight:
            found.append(tuple(tuple(r) for r in rows))
            return
        for r, part in enumerate(lam.parts):
            if len(rows[r]) < part and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(value)
                grow(rows, value + 1)
                rows[r].pop()

    grow([[] for _ in lam.parts], 1)
    return found


def _tabloids(lam: Partition) -> List[Tuple[frozenset, ...]]:
    result: List[Tuple[frozenset, ...]] = [()]
    for part in lam.parts:
        extended = []
        for partial in result:
            used = set().union(*partial) if partial else set()
            free = [v for v in range(1, lam.weight + 1) if v not in used]
            for row in itertools.combinations(free, part):
                extended.append(partial + (frozenset(row),))
        result = extended
    return result


def _sign(values: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(values)) for j in range(i + 1, len(values))
                     if values[i] > values[j])
    return -1 if inversions % 2 else 1


def _polytabloid(tableau: Tuple[Tuple[int, ...], ...],
                 index: Mapping[Tuple[frozenset, ...], int]) -> SparseVector:
    columns = [tuple(row[c] for row in tableau if c < len(row)) for c in range(len(tableau[0]))]
    vector: SparseVector = {}
    for arrangement in itertools.product(*(itertools.permutations(col) for col in columns)):
        relabel = {}
        sign = 1
        for column, image in zip(columns, arrangement):
            relabel.update(zip(column, image))
            sign *= _sign([column.index(v) for v in image])
        tabloid = tuple(frozenset(relabel[v] for v in row) for row in tableau)
        key = index[tabloid]
        vector[key] = vector.get(key, Fraction(0)) + sign
    return {k: v for k, v in vector.items() if v}


def specht_module(lam: Partition, algebra: AlgebraPresentation) -> ModuleRep:
    """The Specht module S^lam on the basis of standard polytabloids."""
    n = lam.weight
    if not algebra.generators:
        return ModuleRep.trivial_action(algebra, 1, label=lam)
    tabloids = _tabloids(lam)
    index = {t: i for i, t in enumerate(tabloids)}
    basis = [_polytabloid(t, index) for t in standard_tableaux(lam)]
    actions = []
    for i in range(1, n):
        swap = {i: i + 1, i + 1: i}
        images = []
        for vector in basis:
            image: SparseVector = {}
            for key, c in vector.items():
                moved = tuple(frozenset(swap.get(v, v) for v in row) for row in tabloids[key])
                image[index[moved]] = c
            images.append(image)
        coords = linalg.coordinates(basis, images, len(tabloids))
        actions.append(linalg.from_columns(coords, len(basis)))
    logger.debug(f"Specht module {lam}: dimension {len(basis)} inside {len(tabloids)} tabloids")
    return ModuleRep(algebra, actions, label=lam)


class CharacterCalculus:
    """Class functions as the objects of the condition-(5) computations."""

    route = "character"

    def __init__(self, group: str):
        self.group = group

    def objects(self, n: int) -> List[Tuple[Partition, ClassFunction]]:
        return [(lam, ClassFunction.irreducible((lam,))) for lam in partitions(n)]

    def induce(self, m: int, n: int, x: ClassFunction, y: ClassFunction) -> ClassFunction:
        return induce_class_function(x.tensor(y))

    def restrict(self, k: int, l: int, x: ClassFunction) -> ClassFunction:
        return restrict_class_function(x, k, l)

    def tensor(self, x: ClassFunction, y: ClassFunction) -> ClassFunction:
        return x.tensor(y)

    def twisted_induce(self, t: int, m: int, s: int, n: int, w: ClassFunction) -> ClassFunction:
        # (t, m-t, s, n-s) -> (t, s, m-t, n-s) -> (t+s, m-t, n-s) -> (t+s, m+n-t-s)
        grouped = w.reorder((0, 2, 1, 3))
        return induce_class_function(induce_class_function(grouped, 0, 2), 1, 3)

    def decompose(self, x: ClassFunction) -> GrothendieckVector:
        return decompose_into_irreducibles(x)


class SymmetricTower(Tower):
    """K[S_n] with rho_{m,n}(sigma (x) tau) = sigma (+) tau."""

    name = "sym"

    def __init__(self, config=None):
        super().__init__(config)
        self._perm_index: Dict[int, Dict[Permutation, int]] = {}

    def build_algebra(self, n: int) -> AlgebraPresentation:
        return symmetric_group_algebra(n)

    def _index(self, n: int) -> Dict[Permutation, int]:
        with self._lock:
            if n not in self._perm_index:
                self._perm_index[n] = {p: i for i, p in enumerate(self.algebra(n).labels)}
            return self._perm_index[n]

    def embed_basis(self, m: int, n: int, a: int, b: int) -> SparseVector:
        sigma, tau = self.algebra(m).labels[a], self.algebra(n).labels[b]
        return {self._index(m + n)[direct_sum(sigma, tau)]: Fraction(1)}

    def labels(self, n: int) -> List[Partition]:
        return partitions(n)

    def parse_label(self, text: str) -> Partition:
        return Partition.parse(text)

    def build_simple(self, label: Partition) -> ModuleRep:
        return specht_module(label, self.algebra(label.weight))

    def coset_representatives(self, m: int, n: int, side: str) -> List[SparseVector]:
        index = self._index(m + n)
        reps = min_coset_reps(m, n)
        if side == "right":
            reps = [r.inverse() for r in reps]
        return [{index[r]: Fraction(1)} for r in reps]

    def composition_factors(self, module: ModuleRep) -> GrothendieckVector:
        return decompose_into_irreducibles(module_character(module))

    def routes(self) -> Tuple[str, ...]:
        return ("module", "character", "hopf")

    def calculus(self, group: str, route: str = "module"):
        if route == "character":
            return CharacterCalculus(group)
        return super().calculus(group, route)

    def pairing_value(self, p: Partition, m: Partition) -> int:
        if p.weight <= self.config.cap(self.name, module_level=True):
            return dim_hom(self.projective_module(p), self.simple_module(m))
        inner = ClassFunction.irreducible((p,)).inner(ClassFunction.irreducible((m,)))
        return int(inner)

    def build_hopf_data(self, group: str, N: int) -> GradedHopfData:
        def product(a: Partition, b: Partition) -> GrothendieckVector:
            return decompose_into_irreducibles(
                induce_class_function(ClassFunction.irreducible((a, b))))

        def coproduct(g: Partition) -> GrothendieckVector:
            chi = ClassFunction.irreducible((g,))
            return GrothendieckVector.total(
                decompose_into_irreducibles(restrict_class_function(chi, k, g.weight - k))
                for k in range(g.weight + 1)
            )

        return GradedHopfData.build(f"{group.upper()}(sym)", N, partitions, product, coproduct)


def check_antipode_signs(H: GradedHopfData, N: int) -> CheckReport:
    """Compare the antipode with gamma[V_lam] = (-1)^|lam| [V_lam'] on partitions."""
    report = CheckReport("antipode_signs", {"hopf": H.name, "max_degree": N})
    for lam in H.all_labels(N):
        expected = GrothendieckVector.basis(lam.conjugate(), (-1) ** lam.weight)
        report.record("antipode_sign", {"x": lam},
                      antipode(GrothendieckVector.basis(lam), H), expected)
    return report
