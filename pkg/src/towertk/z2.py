"""
The tower A_n = K[Z/2Z]^(x)n with the identity embedding.

A_1 is presented on its two primitive idempotents e_T (trivial module) and
e_S (sign module), so A_n has the 2^n idempotent words as a basis and every
simple module is a coordinate line. The tower satisfies the freeness and
pairing conditions but not the Mackey-type condition: its G0 product is
concatenation while its coproduct is deconcatenation.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import linalg
from .algebra import AlgebraPresentation
from .errors import CombinatoricsError, DecompositionError
from .hopf import GradedHopfData, GrothendieckVector
from .linalg import SparseVector
from .modules import ModuleRep
from .report import CheckReport
from .tower import ModuleCalculus, Tower, condition5_cell

logger = logging.getLogger(__name__)

LETTERS = "TS"


@dataclass(frozen=True)
class TSWord:
    """A tensor word of trivial (T) and sign (S) modules; its length is its degree."""

    letters: str

    def __post_init__(self):
        if any(ch not in LETTERS for ch in self.letters):
            raise CombinatoricsError(f"TS-words use only the letters T and S: {self.letters!r}")

    @classmethod
    def parse(cls, text: str) -> "TSWord":
        return cls(text.strip().strip("()").upper())

    @property
    def weight(self) -> int:
        return len(self.letters)

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(LETTERS.index(ch) for ch in self.letters)

    def __lt__(self, other: "TSWord") -> bool:
        return (self.weight, self.sort_key()) < (other.weight, other.sort_key())

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "TSWord") -> "TSWord":
        return TSWord(self.letters + other.letters)

    def __getitem__(self, index: slice) -> "TSWord":
        return TSWord(self.letters[index])

    def __str__(self) -> str:
        return self.letters

    def __repr__(self) -> str:
        return f"TSWord({self.letters})"


def ts_words(n: int) -> List[TSWord]:
    """All 2^n words of length n, T before S."""
    return [TSWord("".join(w)) for w in itertools.product(LETTERS, repeat=n)]


def z2_algebra(n: int) -> AlgebraPresentation:
    """K[Z/2Z]^(x)n on the idempotent words, generators e_T^(i), e_S^(i) at index 2i, 2i+1."""
    words = ts_words(n)

    def product(i: int, j: int) -> SparseVector:
        return {i: Fraction(1)} if i == j else {}

    generators = []
    for position in range(n):
        for letter in LETTERS:
            vector = {k: Fraction(1) for k, w in enumerate(words) if w.letters[position] == letter}
            generators.append((f"e{letter}{position + 1}", vector))
    basis_words = [tuple(2 * i + LETTERS.index(ch) for i, ch in enumerate(w.letters)) for w in words]
    unit = {k: Fraction(1) for k in range(len(words))}
    return AlgebraPresentation(f"Z2^{n}", n, words, product, unit, generators, basis_words)


def z2_simple_module(w: TSWord, algebra: AlgebraPresentation) -> ModuleRep:
    if not algebra.generators:
        return ModuleRep.trivial_action(algebra, 1, label=w)
    actions = [
        linalg.matrix([[int(w.letters[position] == letter)]])
        for position in range(w.weight) for letter in LETTERS
    ]
    return ModuleRep(algebra, actions, label=w)


def z2_induce(u: TSWord, v: TSWord) -> GrothendieckVector:
    """Induction along the identity map: the class of the concatenation."""
    return GrothendieckVector.basis(u + v)


def z2_restrict(w: TSWord, k: int) -> Tuple[TSWord, TSWord]:
    if not 0 <= k <= w.weight:
        raise CombinatoricsError(f"Split position {k} outside [0, {w.weight}]")
    return w[:k], w[k:]


def z2_coproduct(w: TSWord) -> GrothendieckVector:
    return GrothendieckVector({z2_restrict(w, k): 1 for k in range(w.weight + 1)})


def z2_hopf_data(N: int, group: str = "g0") -> GradedHopfData:
    return GradedHopfData.build(f"{group.upper()}(z2)", N, ts_words, z2_induce, z2_coproduct)


class Z2Tower(Tower):
    """A_n = K[Z/2Z]^(x)n, rho_{m,n} the identity A_m (x) A_n = A_{m+n}."""

    name = "z2"

    def build_algebra(self, n: int) -> AlgebraPresentation:
        return z2_algebra(n)

    def embed_basis(self, m: int, n: int, a: int, b: int) -> SparseVector:
        # idempotent words enumerate in product order, so e_u (x) e_v -> e_uv is a row-major index
        return {a * 2 ** n + b: Fraction(1)}

    def labels(self, n: int) -> List[TSWord]:
        return ts_words(n)

    def parse_label(self, text: str) -> TSWord:
        return TSWord.parse(text)

    def build_simple(self, label: TSWord) -> ModuleRep:
        return z2_simple_module(label, self.algebra(label.weight))

    def coset_representatives(self, m: int, n: int, side: str) -> List[SparseVector]:
        return [dict(self.algebra(m + n).unit)]

    def composition_factors(self, module: ModuleRep) -> GrothendieckVector:
        """Multiplicity of a simple is the trace of its idempotent."""
        algebra = module.algebra
        factors = algebra.factors
        counts: Dict[object, int] = {}
        total = 0
        for labels in self.factor_labels(module):
            vectors = [{f.index(w): Fraction(1)} for f, w in zip(factors, labels)]
            idempotent = vectors[0] if len(vectors) == 1 else algebra.tensor(vectors)
            multiplicity = int(module.trace(idempotent))
            if multiplicity:
                counts[labels[0] if len(labels) == 1 else labels] = multiplicity
                total += multiplicity
        if total != module.dimension:
            raise DecompositionError(
                f"Idempotent traces account for dimension {total} of {module.dimension}"
            )
        return GrothendieckVector(counts)

    def projective_decomposition(self, module: ModuleRep) -> GrothendieckVector:
        return self.composition_factors(module)

    def build_hopf_data(self, group: str, N: int) -> GradedHopfData:
        return z2_hopf_data(N, group)


def z2_condition5_witness(tower: Optional[Z2Tower] = None) -> CheckReport:
    """Both sides of the Mackey-type identity for M = T, N = S at (m, n, k) = (1, 1, 1)."""
    tower = tower or Z2Tower()
    calc = ModuleCalculus(tower, "g0")
    T, S = TSWord("T"), TSWord("S")
    lhs, rhs = condition5_cell(calc, 1, 1, 1, tower.simple_module(T), tower.simple_module(S))
    report = CheckReport("cond5", {"tower": tower.name, "group": "g0", "max_degree": 2,
                                   "route": "module"})
    report.record("mackey", {"m": 1, "n": 1, "k": 1, "M": T, "N": S}, lhs, rhs)
    logger.info(f"z2 witness: lhs={lhs} rhs={rhs}")
    return report
