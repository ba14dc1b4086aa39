"""
The tower contract and the generic induction/restriction machinery.

A Tower supplies algebras A_n, embeddings rho_{m,n}, simple and
projective modules, and a decomposition hook for each Grothendieck group.
Everything else in this module (induce, restrict, twisted induction and the
condition checkers) works for any registered tower.
"""

import importlib
import itertools
import logging
import threading
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .algebra import AlgebraPresentation, EmbeddingMap, tensor_algebra
from .config import EngineConfig, fan_out, get_config
from .errors import DecompositionError, ModuleError, StructureError, UsageError
from .hopf import (GradedHopfData, GrothendieckVector, PairingMatrix, coproduct, product,
                   tensor_product_in)
from .linalg import SparseVector
from .modules import (ModuleRep, dim_hom, induce_along, regular_module, restrict_along,
                      tensor_product)
from .report import CheckReport, distinct_inputs

logger = logging.getLogger(__name__)

Label = Hashable
GROUPS = ("g0", "k0")


def _key(labels: Sequence[Label]) -> Label:
    return labels[0] if len(labels) == 1 else tuple(labels)


class Tower(ABC):
    """A tower of algebras A = (sum_n A_n, rho).

    Subclasses provide the algebras, the embedding on basis elements, the
    labelled simple and projective modules and the structure constants of
    the Grothendieck groups. Providers are cached and read-only afterwards.
    """

    name: str = ""

    def __init__(self, config: Optional[EngineConfig] = None):
        self._config = config
        self._algebras: Dict[int, AlgebraPresentation] = {}
        self._embeddings: Dict[Tuple[int, int], EmbeddingMap] = {}
        self._simples: Dict[Label, ModuleRep] = {}
        self._projectives: Dict[Label, ModuleRep] = {}
        self._hopf: Dict[Tuple[str, int], GradedHopfData] = {}
        # Hopf builds fan out to workers that take _lock, so they never hold it
        self._lock = threading.RLock()
        self._hopf_lock = threading.Lock()

    @property
    def config(self) -> EngineConfig:
        """The tower's own configuration, else the current process-wide one."""
        return self._config if self._config is not None else get_config()

    # providers

    @abstractmethod
    def build_algebra(self, n: int) -> AlgebraPresentation:
        """The presentation of A_n."""

    @abstractmethod
    def embed_basis(self, m: int, n: int, a: int, b: int) -> SparseVector:
        """rho_{m,n}(e_a (x) e_b) as a vector of A_{m+n}."""

    @abstractmethod
    def labels(self, n: int) -> List[Label]:
        """Labels of the simple (equivalently the indecomposable projective) modules of A_n."""

    @abstractmethod
    def parse_label(self, text: str) -> Label:
        """Inverse of str() on labels."""

    @abstractmethod
    def build_simple(self, label: Label) -> ModuleRep:
        ...

    def build_projective(self, label: Label) -> ModuleRep:
        return self.build_simple(label)

    @abstractmethod
    def coset_representatives(self, m: int, n: int, side: str) -> List[SparseVector]:
        """Elements r with A_{m+n} = sum r rho(A_m (x) A_n) (side 'left') or the mirror."""

    @abstractmethod
    def build_hopf_data(self, group: str, N: int) -> GradedHopfData:
        ...

    # cached access

    def algebra(self, n: int) -> AlgebraPresentation:
        with self._lock:
            if n not in self._algebras:
                self.config.require_degree(self.name, n)
                algebra = self.build_algebra(n)
                algebra.validate(self.config.associativity_check_limit)
                if n == 0 and algebra.dimension != 1:
                    raise StructureError(
                        f"{self.name}: A_0 has dimension {algebra.dimension}, not 1"
                    )
                self._algebras[n] = algebra
            return self._algebras[n]

    def embedding(self, m: int, n: int) -> EmbeddingMap:
        """rho_{m,n} from A_m (x) A_n to A_{m+n}."""
        key = (m, n)
        with self._lock:
            if key not in self._embeddings:
                source = tensor_algebra(self.algebra(m), self.algebra(n))
                target = self.algebra(m + n)

                def image(i: int) -> SparseVector:
                    a, b = source.split_index(i)
                    return self.embed_basis(m, n, a, b)

                self._embeddings[key] = EmbeddingMap.from_function(source, target, image, (m, n))
            return self._embeddings[key]

    def free_rank(self, m: int, n: int) -> int:
        """Rank of A_{m+n} as a module over rho(A_m (x) A_n)."""
        big = self.algebra(m + n).dimension
        small = self.algebra(m).dimension * self.algebra(n).dimension
        if big % small:
            raise StructureError(f"dim A_{m + n} = {big} is not a multiple of {small}")
        return big // small

    def simple_module(self, label: Label) -> ModuleRep:
        with self._lock:
            if label not in self._simples:
                self.config.require_degree(self.name, label.weight, module_level=True)
                self._simples[label] = self.build_simple(label)
            return self._simples[label]

    def projective_module(self, label: Label) -> ModuleRep:
        with self._lock:
            if label not in self._projectives:
                self.config.require_degree(self.name, label.weight, module_level=True)
                self._projectives[label] = self.build_projective(label)
            return self._projectives[label]

    def tensor_simple(self, labels: Sequence[Label]) -> ModuleRep:
        module = self.simple_module(labels[0])
        for label in labels[1:]:
            module = tensor_product(module, self.simple_module(label))
        return module

    def tensor_projective(self, labels: Sequence[Label]) -> ModuleRep:
        module = self.projective_module(labels[0])
        for label in labels[1:]:
            module = tensor_product(module, self.projective_module(label))
        return module

    def basis_modules(self, n: int, group: str) -> List[Tuple[Label, ModuleRep]]:
        """The modules whose classes form the basis of G0 (simples) or K0 (projectives)."""
        provider = self.simple_module if group == "g0" else self.projective_module
        return [(label, provider(label)) for label in self.labels(n)]

    def hopf_data(self, group: str, N: Optional[int] = None) -> GradedHopfData:
        if group not in GROUPS:
            raise UsageError(f"Unknown Grothendieck group {group!r}")
        N = self.config.cap(self.name) if N is None else N
        self.config.require_degree(self.name, N)
        key = (group, N)
        with self._hopf_lock:
            if key not in self._hopf:
                self._hopf[key] = self.build_hopf_data(group, N)
            return self._hopf[key]

    def calculus(self, group: str, route: str = "module") -> "ModuleCalculus":
        if route == "module":
            return ModuleCalculus(self, group)
        raise UsageError(f"Tower '{self.name}' has no '{route}' route")

    def routes(self) -> Tuple[str, ...]:
        return ("module", "hopf")

    # decomposition hooks

    def factor_labels(self, module: ModuleRep) -> List[Tuple[Label, ...]]:
        """All label tuples for the factors of the module's acting algebra."""
        degrees = [f.degree for f in module.algebra.factors]
        return [tuple(c) for c in itertools.product(*(self.labels(d) for d in degrees))]

    def composition_factors(self, module: ModuleRep) -> GrothendieckVector:
        """Multiplicities of simples, assuming a semisimple tower (dim Hom(V, M))."""
        counts: Dict[Label, int] = {}
        total = 0
        for labels in self.factor_labels(module):
            simple = self.tensor_simple(labels)
            multiplicity = dim_hom(simple, module)
            if multiplicity:
                counts[_key(labels)] = multiplicity
                total += multiplicity * simple.dimension
        if total != module.dimension:
            raise DecompositionError(
                f"Simple multiplicities account for dimension {total} of {module.dimension}"
            )
        return GrothendieckVector(counts)

    def projective_decomposition(self, module: ModuleRep) -> GrothendieckVector:
        """Multiplicity of P_L in a projective module is dim Hom(module, simple_L)."""
        counts: Dict[Label, int] = {}
        total = 0
        for labels in self.factor_labels(module):
            multiplicity = dim_hom(module, self.tensor_simple(labels))
            if multiplicity:
                counts[_key(labels)] = multiplicity
                total += multiplicity * self.tensor_projective(labels).dimension
        if total != module.dimension:
            raise DecompositionError(
                f"Projective summands account for dimension {total} of {module.dimension}; "
                f"the module is not projective"
            )
        return GrothendieckVector(counts)

    def decompose(self, module: ModuleRep, group: str) -> GrothendieckVector:
        if group == "g0":
            return self.composition_factors(module)
        if group == "k0":
            return self.projective_decomposition(module)
        raise UsageError(f"Unknown Grothendieck group {group!r}")

    def pairing_value(self, p: Label, m: Label) -> int:
        return pairing_dim_hom(self.projective_module(p), self.simple_module(m))

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


def induce(T: Tower, m: int, n: int, M: ModuleRep, N: ModuleRep) -> ModuleRep:
    """A_{m+n} (x)_{A_m (x) A_n} (M (x) N) as an explicit quotient."""
    for degree, module in ((m, M), (n, N)):
        if module.algebra.dimension != T.algebra(degree).dimension:
            raise ModuleError(f"Module over {module.algebra.name} is not an A_{degree}-module")
    return induce_along(tensor_product(M, N), T.embedding(m, n), T.free_rank(m, n))


def restrict(T: Tower, k: int, l: int, M: ModuleRep) -> ModuleRep:
    """M as an A_k (x) A_l-module through rho_{k,l}."""
    return restrict_along(M, T.embedding(k, l))


def twisted_embedding(T: Tower, t: int, m: int, s: int, n: int) -> EmbeddingMap:
    """A_t (x) A_{m-t} (x) A_s (x) A_{n-s} -> A_{t+s} (x) A_{m+n-t-s}.

    (c1, c2, d1, d2) goes to rho_{t,s}(c1 (x) d1) (x) rho_{m-t,n-s}(c2 (x) d2).
    """
    source = tensor_algebra(T.algebra(t), T.algebra(m - t), T.algebra(s), T.algebra(n - s))
    target = tensor_algebra(T.algebra(t + s), T.algebra(m + n - t - s))
    first, second = T.embedding(t, s), T.embedding(m - t, n - s)

    def image(i: int) -> SparseVector:
        c1, c2, d1, d2 = source.split_index(i)
        left = first.images[first.source.join_index((c1, d1))]
        right = second.images[second.source.join_index((c2, d2))]
        return target.tensor([left, right])

    return EmbeddingMap.from_function(source, target, image, (t, m - t, s, n - s))


def twisted_induce(T: Tower, t: int, m: int, s: int, n: int, W: ModuleRep) -> ModuleRep:
    """Induce W over A_t (x) A_{m-t} (x) A_s (x) A_{n-s} along the twisted embedding."""
    embedding = twisted_embedding(T, t, m, s, n)
    rank = T.free_rank(t, s) * T.free_rank(m - t, n - s)
    return induce_along(W, embedding, rank)


def twisted_induce_modules(T: Tower, t: int, m: int, s: int, n: int,
                           M1: ModuleRep, M2: ModuleRep, N1: ModuleRep,
                           N2: ModuleRep) -> ModuleRep:
    W = tensor_product(tensor_product(tensor_product(M1, M2), N1), N2)
    return twisted_induce(T, t, m, s, n, W)


class ModuleCalculus:
    """Explicit modules as the objects of the condition-(5) computations."""

    route = "module"

    def __init__(self, tower: Tower, group: str):
        self.tower = tower
        self.group = group

    def objects(self, n: int) -> List[Tuple[Label, Any]]:
        return self.tower.basis_modules(n, self.group)

    def induce(self, m: int, n: int, x: ModuleRep, y: ModuleRep) -> ModuleRep:
        return induce(self.tower, m, n, x, y)

    def restrict(self, k: int, l: int, x: ModuleRep) -> ModuleRep:
        return restrict(self.tower, k, l, x)

    def tensor(self, x: ModuleRep, y: ModuleRep) -> ModuleRep:
        return tensor_product(x, y)

    def twisted_induce(self, t: int, m: int, s: int, n: int, w: ModuleRep) -> ModuleRep:
        return twisted_induce(self.tower, t, m, s, n, w)

    def decompose(self, x: ModuleRep) -> GrothendieckVector:
        return self.tower.decompose(x, self.group)


def condition5_cell(calc, m: int, n: int, k: int, x, y) -> Tuple[GrothendieckVector,
                                                                 GrothendieckVector]:
    """Both sides of Res_{k, m+n-k} Ind(x (x) y) = sum_{t+s=k} twisted Ind(Res x (x) Res y)."""
    lhs = calc.decompose(calc.restrict(k, m + n - k, calc.induce(m, n, x, y)))
    terms = []
    for t in range(max(0, k - n), min(k, m) + 1):
        s = k - t
        w = calc.tensor(calc.restrict(t, m - t, x), calc.restrict(s, n - s, y))
        terms.append(calc.decompose(calc.twisted_induce(t, m, s, n, w)))
    return lhs, GrothendieckVector.total(terms)


def _default_route(T: Tower, N: int) -> str:
    if N <= T.config.condition5_module_degree.get(T.name, 0):
        return "module"
    return "character" if "character" in T.routes() else "hopf"


def check_condition5(T: Tower, group: str, N: int, route: Optional[str] = None) -> CheckReport:
    """The Mackey-type condition on all basis pairs with m + n <= N and 0 < k < m + n.

    route selects the computation: 'module' (explicit modules), 'character'
    (class functions, symmetric tower) or 'hopf' (the Grothendieck-level
    identity Delta(ab) = Delta(a)Delta(b) read degree by degree).
    """
    if group not in GROUPS:
        raise UsageError(f"Unknown Grothendieck group {group!r}")
    route = route or _default_route(T, N)
    if route not in T.routes():
        raise UsageError(f"Tower '{T.name}' has no '{route}' route")
    if route == "module":
        T.config.require_degree(T.name, N, module_level=True)
    else:
        T.config.require_degree(T.name, N)
    report = CheckReport("cond5", {"tower": T.name, "group": group, "max_degree": N,
                                   "route": route},
                         witness_filter=distinct_inputs("M", "N"))
    cells = [(m, total - m, k)
             for total in range(2, N + 1) for m in range(1, total) for k in range(1, total)]

    if route == "hopf":
        H = T.hopf_data(group, N)
        basis = GrothendieckVector.basis
        for m, n, k in cells:
            for a in H.labels(m):
                for b in H.labels(n):
                    lhs = coproduct(product(basis(a), basis(b), H), H).component((k, m + n - k))
                    rhs = tensor_product_in(coproduct(basis(a), H), coproduct(basis(b), H), H)
                    report.record("mackey", {"m": m, "n": n, "k": k, "M": a, "N": b},
                                  lhs, rhs.component((k, m + n - k)))
        return report

    calc = T.calculus(group, route)
    objects = {d: calc.objects(d) for d in range(1, N)}
    work = [
        (m, n, k, a, x, b, y)
        for m, n, k in cells for a, x in objects[m] for b, y in objects[n]
    ]
    results = fan_out(lambda cell: condition5_cell(calc, cell[0], cell[1], cell[2],
                                                   cell[4], cell[6]), work,
                      max_threads=T.config.max_threads)
    for (m, n, k, a, _, b, _), (lhs, rhs) in zip(work, results):
        report.record("mackey", {"m": m, "n": n, "k": k, "M": a, "N": b}, lhs, rhs)
    logger.info(f"cond5 on {T.name} ({group}, N={N}, {route}): {report.status}")
    return report


def _vector_text(algebra, vector: SparseVector) -> Dict[str, Fraction]:
    return {str(_label_text(algebra.labels[i])): c for i, c in sorted(vector.items())}


def _label_text(label: Any) -> str:
    if isinstance(label, tuple):
        return "(x)".join(str(part) for part in label)
    return str(label)


def three_fold_embedding(T: Tower, l: int, m: int, n: int, side: str,
                         rho: Optional[Callable[[int, int], EmbeddingMap]] = None) -> EmbeddingMap:
    """rho o (rho (x) id) for side 'left', rho o (id (x) rho) for side 'right'."""
    rho = rho or T.embedding
    source = tensor_algebra(T.algebra(l), T.algebra(m), T.algebra(n))
    if side == "left":
        inner, outer = rho(l, m), rho(l + m, n)
    else:
        inner, outer = rho(m, n), rho(l, m + n)

    def image(i: int) -> SparseVector:
        a, b, c = source.split_index(i)
        result: SparseVector = {}
        if side == "left":
            for x, coefficient in inner.images[inner.source.join_index((a, b))].items():
                result = linalg.sparse_add(result,
                                           outer.images[outer.source.join_index((x, c))],
                                           coefficient)
        else:
            for x, coefficient in inner.images[inner.source.join_index((b, c))].items():
                result = linalg.sparse_add(result,
                                           outer.images[outer.source.join_index((a, x))],
                                           coefficient)
        return result

    return EmbeddingMap.from_function(source, T.algebra(l + m + n), image, (l, m, n))


def check_conditions12(T: Tower, N: int,
                       overrides: Optional[Mapping[Tuple[int, int], EmbeddingMap]] = None
                       ) -> CheckReport:
    """A_0 is the ground field and every rho_{m,n}, m + n <= N, is an injective
    unital algebra map; rho is associative on triples of degrees.

    overrides replaces individual embeddings (used for negative controls).
    """
    overrides = dict(overrides or {})
    report = CheckReport("cond12", {"tower": T.name, "max_degree": N})
    report.record("a0_dimension", {}, T.algebra(0).dimension, 1)

    def rho(m: int, n: int) -> EmbeddingMap:
        return overrides.get((m, n)) or T.embedding(m, n)

    for total in range(N + 1):
        for m in range(total + 1):
            n = total - m
            embedding = rho(m, n)
            inputs = {"m": m, "n": n}
            rank = linalg.rank(linalg.from_sparse_rows(embedding.images,
                                                       embedding.target.dimension))
            report.record("injective", inputs, rank, embedding.source.dimension)
            report.record("unital", inputs,
                          _vector_text(embedding.target, embedding.apply(embedding.source.unit)),
                          _vector_text(embedding.target, embedding.target.unit))
            violation = embedding.multiplicativity_violation()
            witness = None
            if violation is not None:
                i, j = violation
                source, target = embedding.source, embedding.target
                witness = {
                    "x": _label_text(source.labels[i]),
                    "y": _label_text(source.labels[j]),
                    "rho(xy)": _vector_text(target, embedding.apply(source.multiply_basis(i, j))),
                    "rho(x)rho(y)": _vector_text(
                        target, target.multiply(embedding.images[i], embedding.images[j])),
                }
            report.record("multiplicative", inputs, witness, None)

    for total in range(N + 1):
        for l in range(total + 1):
            for m in range(total - l + 1):
                n = total - l - m
                left = three_fold_embedding(T, l, m, n, "left", rho).images
                right = three_fold_embedding(T, l, m, n, "right", rho).images
                mismatch = next((i for i, (x, y) in enumerate(zip(left, right)) if x != y), None)
                report.record("associative", {"l": l, "m": m, "n": n},
                              mismatch, None)
    logger.info(f"cond12 on {T.name} (N={N}): {report.status}")
    return report


def check_condition3(T: Tower, m: int, n: int) -> CheckReport:
    """A_{m+n} is free over rho(A_m (x) A_n) on both sides, with explicit bases."""
    report = CheckReport("cond3", {"tower": T.name, "m": m, "n": n})
    embedding = T.embedding(m, n)
    target = embedding.target
    for side in ("left", "right"):
        reps = T.coset_representatives(m, n, side)
        vectors = []
        for r in reps:
            for image in embedding.images:
                if side == "left":
                    vectors.append(target.multiply(r, image))
                else:
                    vectors.append(target.multiply(image, r))
        rank = linalg.rank(linalg.from_sparse_rows(vectors, target.dimension))
        inputs = {"side": side, "representatives": len(reps)}
        report.record(f"{side}_free", inputs, {"rank": rank, "vectors": len(vectors)},
                      {"rank": target.dimension, "vectors": target.dimension})
    logger.info(f"cond3 on {T.name} ({m},{n}): {report.status}")
    return report


def pairing_dim_hom(P: ModuleRep, M: ModuleRep) -> int:
    """<[P], [M]> = dim Hom(P, M)."""
    return dim_hom(P, M)


def pairing_matrix(T: Tower, N: int, tensor_degree: int = 0) -> PairingMatrix:
    """The per-degree matrix of pairing values, rows K0 labels and columns G0 labels.

    With tensor_degree > 0 the module-level values <P (x) Q, M (x) N> are
    added for pairs of positive degrees summing to at most tensor_degree.
    """
    k_basis = {n: T.labels(n) for n in range(N + 1)}
    values = {
        n: [[T.pairing_value(p, m) for m in k_basis[n]] for p in k_basis[n]]
        for n in range(N + 1)
    }
    tensor_values: Dict[Tuple[Tuple, Tuple], int] = {}
    for total in range(2, tensor_degree + 1):
        for i in range(1, total):
            j = total - i
            for p, q in itertools.product(T.labels(i), T.labels(j)):
                projective = T.tensor_projective((p, q))
                for a, b in itertools.product(T.labels(i), T.labels(j)):
                    tensor_values[((p, q), (a, b))] = pairing_dim_hom(projective,
                                                                    T.tensor_simple((a, b)))
    return PairingMatrix(k_basis, k_basis, values, tensor_values)


def check_pairing(T: Tower, N: int) -> CheckReport:
    """The pairing matrix is the identity in every degree up to N."""
    report = CheckReport("pairing", {"tower": T.name, "max_degree": N})
    P = pairing_matrix(T, N)
    for n in range(N + 1):
        labels = P.k_basis[n]
        for i, p in enumerate(labels):
            for j, m in enumerate(labels):
                report.record("orthonormal", {"P": p, "M": m}, P.values[n][i][j], int(i == j))
    report.notes["matrix"] = P
    logger.info(f"pairing on {T.name} (N={N}): {report.status}")
    return report


def check_dimension_equality(T: Tower, k: int, l: int) -> CheckReport:
    """dim Hom(P, Ind(M (x) N)) = dim Hom(Res P, M (x) N) for projectives P of A_{k+l}."""
    report = CheckReport("dimension_equality", {"tower": T.name, "k": k, "l": l})
    for p in T.labels(k + l):
        P = T.projective_module(p)
        restricted = restrict(T, k, l, P)
        for a, b in itertools.product(T.labels(k), T.labels(l)):
            induced = induce(T, k, l, T.simple_module(a), T.simple_module(b))
            report.record("hom_dimension", {"P": p, "M": a, "N": b},
                          dim_hom(P, induced), dim_hom(restricted, T.tensor_simple((a, b))))
    return report


def check_induction_associativity(T: Tower, N: int) -> CheckReport:
    """Ind(Ind(L (x) M) (x) N) and Ind(L (x) Ind(M (x) N)) agree in G0, degrees >= 1."""
    report = CheckReport("induction_associativity", {"tower": T.name, "max_degree": N})
    for total in range(3, N + 1):
        for l in range(1, total - 1):
            for m in range(1, total - l):
                n = total - l - m
                for a, b, c in itertools.product(T.labels(l), T.labels(m), T.labels(n)):
                    L, M, K = (T.simple_module(x) for x in (a, b, c))
                    left = induce(T, l + m, n, induce(T, l, m, L, M), K)
                    right = induce(T, l, m + n, L, induce(T, m, n, M, K))
                    report.record("associativity", {"L": a, "M": b, "N": c},
                                  T.decompose(left, "g0"), T.decompose(right, "g0"))
    return report


def check_restriction_coassociativity(T: Tower, N: int) -> CheckReport:
    """Restricting a simple to A_i (x) A_j (x) A_k along both bracketings agrees in G0."""
    report = CheckReport("restriction_coassociativity", {"tower": T.name, "max_degree": N})
    for total in range(N + 1):
        for i in range(total + 1):
            for j in range(total - i + 1):
                k = total - i - j
                left = three_fold_embedding(T, i, j, k, "left")
                right = three_fold_embedding(T, i, j, k, "right")
                for label in T.labels(total):
                    V = T.simple_module(label)
                    report.record("coassociativity", {"V": label, "i": i, "j": j, "k": k},
                                  T.decompose(restrict_along(V, left), "g0"),
                                  T.decompose(restrict_along(V, right), "g0"))
    return report


def check_regular_decomposition(T: Tower, N: int) -> CheckReport:
    """sum_P dim P * mult(P, A_n) = dim A_n for the left regular module."""
    report = CheckReport("regular_decomposition", {"tower": T.name, "max_degree": N})
    for n in range(N + 1):
        decomposition = T.decompose(regular_module(T.algebra(n)), "k0")
        total = sum(c * T.projective_module(p).dimension for p, c in decomposition.items())
        report.record("dimension", {"n": n, "decomposition": decomposition},
                      total, T.algebra(n).dimension)
    return report


_REGISTRY = {
    "sym": "towertk.symmetric:SymmetricTower",
    "hecke0": "towertk.hecke:HeckeTower",
    "z2": "towertk.z2:Z2Tower",
}

_instances: Dict[str, Tower] = {}


def tower_names() -> List[str]:
    return sorted(_REGISTRY)


def load_tower(name: str, config: Optional[EngineConfig] = None) -> Tower:
    """Instantiate a registered tower by name; instances without a config are shared."""
    if name not in _REGISTRY:
        raise UsageError(f"Unknown tower {name!r}; choose from {', '.join(tower_names())}")
    if config is None and name in _instances:
        return _instances[name]
    module_name, class_name = _REGISTRY[name].split(":")
    cls = getattr(importlib.import_module(module_name), class_name)
    tower = cls(config)
    if config is None:
        _instances[name] = tower
    return tower
