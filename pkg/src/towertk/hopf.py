"""
Graded connected Hopf data on Grothendieck groups.

GrothendieckVector is an integer vector on basis labels (compositions,
partitions, T/S words, or tuples of those for tensor products).
GradedHopfData stores product and coproduct structure constants up to a
truncation degree. The checkers below evaluate bialgebra, Hopf, duality
and compatibility identities cell by cell and return CheckReports.
"""

import itertools
import logging
import threading
from typing import (Any, Callable, Dict, Hashable, Iterable, Iterator, List, Mapping,
                    Optional, Sequence, Tuple)

from .config import fan_out
from .errors import DegreeOverflowError, StructureError, UsageError
from .report import CheckReport, canonical, distinct_inputs, label_str

logger = logging.getLogger(__name__)

Label = Hashable


def as_tuple(label: Label) -> Tuple:
    return label if isinstance(label, tuple) else (label,)


def label_degree(label: Label) -> int:
    return sum(part.weight for part in as_tuple(label))


def label_key(label: Label) -> Tuple:
    parts = as_tuple(label)
    return (sum(p.weight for p in parts), tuple((p.weight, p.sort_key()) for p in parts))


class GrothendieckVector:
    """A finitely supported integer combination of basis labels."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Optional[Mapping[Label, int]] = None):
        self._coefficients: Dict[Label, int] = {}
        for label, value in (coefficients or {}).items():
            if value:
                if int(value) != value:
                    raise StructureError(f"Non-integer coefficient {value} on {label_str(label)}")
                self._coefficients[label] = self._coefficients.get(label, 0) + int(value)
        self._coefficients = {k: v for k, v in self._coefficients.items() if v}

    @classmethod
    def basis(cls, label: Label, coefficient: int = 1) -> "GrothendieckVector":
        return cls({label: coefficient})

    @classmethod
    def total(cls, vectors: Iterable["GrothendieckVector"]) -> "GrothendieckVector":
        result: Dict[Label, int] = {}
        for vector in vectors:
            for label, value in vector._coefficients.items():
                result[label] = result.get(label, 0) + value
        return cls(result)

    def __getitem__(self, label: Label) -> int:
        return self._coefficients.get(label, 0)

    def items(self) -> List[Tuple[Label, int]]:
        """Terms in canonical order (by degree, then basis order)."""
        return sorted(self._coefficients.items(), key=lambda kv: label_key(kv[0]))

    def __iter__(self) -> Iterator[Label]:
        return iter(label for label, _ in self.items())

    def __len__(self) -> int:
        return len(self._coefficients)

    def support(self) -> List[Label]:
        return [label for label, _ in self.items()]

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._coefficients.values())

    def degrees(self) -> List[int]:
        return sorted({label_degree(label) for label in self._coefficients})

    def __add__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        return GrothendieckVector.total([self, other])

    def __neg__(self) -> "GrothendieckVector":
        return GrothendieckVector({k: -v for k, v in self._coefficients.items()})

    def __sub__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        return self + (-other)

    def __mul__(self, scalar: int) -> "GrothendieckVector":
        return GrothendieckVector({k: v * scalar for k, v in self._coefficients.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrothendieckVector):
            return NotImplemented
        return self._coefficients == other._coefficients

    __hash__ = None

    def tensor(self, other: "GrothendieckVector") -> "GrothendieckVector":
        """The tensor product, with tensor labels concatenated as tuples."""
        result: Dict[Label, int] = {}
        for a, ca in self._coefficients.items():
            for b, cb in other._coefficients.items():
                key = as_tuple(a) + as_tuple(b)
                result[key] = result.get(key, 0) + ca * cb
        return GrothendieckVector(result)

    def component(self, degrees: Sequence[int]) -> "GrothendieckVector":
        """The part whose tensor factors have exactly the given degrees."""
        wanted = tuple(degrees)
        return GrothendieckVector({
            k: v for k, v in self._coefficients.items()
            if tuple(p.weight for p in as_tuple(k)) == wanted
        })

    def map_labels(self, fn: Callable[[Label], Label]) -> "GrothendieckVector":
        result: Dict[Label, int] = {}
        for label, value in self._coefficients.items():
            key = fn(label)
            result[key] = result.get(key, 0) + value
        return GrothendieckVector(result)

    def to_json(self) -> Dict[str, str]:
        return {label_str(label): str(value) for label, value in self.items()}

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        terms = []
        for label, value in self.items():
            coefficient = "" if value == 1 else ("-" if value == -1 else f"{value}")
            terms.append(f"{coefficient}[{label_str(label)}]")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"GrothendieckVector({self})"


TensorVector = GrothendieckVector


class GradedHopfData:
    """Structure constants of a graded connected bialgebra up to max_degree.

    Args:
        name: Display name, e.g. 'G0(hecke0)'.
        max_degree: Truncation degree N.
        basis: Degree -> ordered basis labels, for degrees 0..N.
        products: (a, b) -> product vector, for deg a + deg b <= N.
        coproducts: g -> coproduct vector over label pairs, for deg g <= N.
    """

    def __init__(self, name: str, max_degree: int, basis: Mapping[int, Sequence[Label]],
                 products: Mapping[Tuple[Label, Label], GrothendieckVector],
                 coproducts: Mapping[Label, GrothendieckVector]):
        self.name = name
        self.max_degree = max_degree
        self.basis: Dict[int, List[Label]] = {n: list(basis[n]) for n in range(max_degree + 1)}
        self._products = dict(products)
        self._coproducts = dict(coproducts)
        self._antipodes: Dict[Label, GrothendieckVector] = {}
        self._antipode_lock = threading.RLock()
        self.check_connected()

    @classmethod
    def build(cls, name: str, max_degree: int, basis_fn: Callable[[int], Sequence[Label]],
              product_fn: Callable[[Label, Label], GrothendieckVector],
              coproduct_fn: Callable[[Label], GrothendieckVector]) -> "GradedHopfData":
        """Evaluate the structure-constant functions on every admissible basis cell."""
        basis = {n: list(basis_fn(n)) for n in range(max_degree + 1)}
        pairs = [
            (a, b)
            for m in range(max_degree + 1) for n in range(max_degree + 1 - m)
            for a in basis[m] for b in basis[n]
        ]
        labels = [g for n in range(max_degree + 1) for g in basis[n]]
        products = dict(zip(pairs, fan_out(lambda ab: product_fn(*ab), pairs)))
        coproducts = dict(zip(labels, fan_out(coproduct_fn, labels)))
        logger.debug(f"Built {name} to degree {max_degree}: {len(pairs)} products, "
                     f"{len(labels)} coproducts")
        return cls(name, max_degree, basis, products, coproducts)

    @property
    def unit_label(self) -> Label:
        return self.basis[0][0]

    def labels(self, n: int) -> List[Label]:
        if n > self.max_degree:
            raise DegreeOverflowError(f"{self.name} is truncated at degree {self.max_degree}")
        return list(self.basis.get(n, []))

    def all_labels(self, max_degree: Optional[int] = None) -> List[Label]:
        top = self.max_degree if max_degree is None else max_degree
        return [g for n in range(top + 1) for g in self.labels(n)]

    def product_of_labels(self, a: Label, b: Label) -> GrothendieckVector:
        if label_degree(a) + label_degree(b) > self.max_degree:
            raise DegreeOverflowError(
                f"Product [{label_str(a)}]*[{label_str(b)}] leaves the truncation "
                f"degree {self.max_degree} of {self.name}"
            )
        return self._products[(a, b)]

    def coproduct_of_label(self, g: Label) -> GrothendieckVector:
        if label_degree(g) > self.max_degree:
            raise DegreeOverflowError(f"{self.name} is truncated at degree {self.max_degree}")
        return self._coproducts[g]

    def check_connected(self) -> None:
        if len(self.basis.get(0, [])) != 1:
            raise StructureError(f"{self.name}: degree 0 must have exactly one basis label")
        one = self.unit_label
        if self._coproducts.get(one) != GrothendieckVector.basis((one, one)):
            raise StructureError(f"{self.name}: the coproduct of the unit is not 1 (x) 1")

    def to_json(self) -> Dict[str, Any]:
        products = [
            {"left": label_str(a), "right": label_str(b), "value": v.to_json()}
            for (a, b), v in sorted(self._products.items(),
                                    key=lambda kv: (label_key(kv[0][0]), label_key(kv[0][1])))
        ]
        coproducts = [
            {"label": label_str(g), "value": v.to_json()}
            for g, v in sorted(self._coproducts.items(), key=lambda kv: label_key(kv[0]))
        ]
        return {
            "name": self.name,
            "max_degree": str(self.max_degree),
            "basis": {str(n): [label_str(g) for g in labels] for n, labels in self.basis.items()},
            "product": products,
            "coproduct": coproducts,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any],
                  parse_label: Callable[[str], Label]) -> "GradedHopfData":
        """Rebuild data written by to_json; parse_label turns text into a tag."""
        def parse(text: str) -> Label:
            if "|" in text:
                return tuple(parse_label(part) for part in text.split("|"))
            return parse_label(text)

        def vector(entries: Mapping[str, str]) -> GrothendieckVector:
            return GrothendieckVector({parse(k): int(v) for k, v in entries.items()})

        max_degree = int(data["max_degree"])
        basis = {int(n): [parse_label(t) for t in labels] for n, labels in data["basis"].items()}
        products = {(parse_label(e["left"]), parse_label(e["right"])): vector(e["value"])
                    for e in data["product"]}
        coproducts = {parse_label(e["label"]): _pairs(vector(e["value"]))
                      for e in data["coproduct"]}
        return cls(data["name"], max_degree, basis, products, coproducts)

    def __repr__(self) -> str:
        return f"GradedHopfData({self.name}, N={self.max_degree})"


def _pairs(vector: GrothendieckVector) -> GrothendieckVector:
    # a coproduct term whose text had no '|' is malformed
    for label in vector.support():
        if not isinstance(label, tuple) or len(label) != 2:
            raise StructureError(f"Coproduct term {label_str(label)} is not a pair")
    return vector


def unit(H: GradedHopfData) -> GrothendieckVector:
    return GrothendieckVector.basis(H.unit_label)


def counit(x: GrothendieckVector, H: GradedHopfData) -> int:
    return x[H.unit_label]


def product(x: GrothendieckVector, y: GrothendieckVector, H: GradedHopfData) -> GrothendieckVector:
    """Bilinear extension of the product structure constants."""
    return GrothendieckVector.total(
        H.product_of_labels(a, b) * (ca * cb) for a, ca in x.items() for b, cb in y.items()
    )


def coproduct(x: GrothendieckVector, H: GradedHopfData) -> GrothendieckVector:
    """Linear extension of the coproduct, edge terms included."""
    return GrothendieckVector.total(H.coproduct_of_label(g) * c for g, c in x.items())


def reduced_coproduct(g: Label, H: GradedHopfData) -> GrothendieckVector:
    """Delta(g) - 1 (x) g - g (x) 1 for a label of positive degree."""
    one = H.unit_label
    edges = GrothendieckVector({(one, g): 1}) + GrothendieckVector({(g, one): 1})
    return H.coproduct_of_label(g) - edges


def tensor_product_in(x: GrothendieckVector, y: GrothendieckVector,
                      H: GradedHopfData) -> GrothendieckVector:
    """Product in H (x) ... (x) H, factorwise and without signs."""
    terms = []
    for a, ca in x.items():
        for b, cb in y.items():
            factors = [H.product_of_labels(p, q) for p, q in zip(as_tuple(a), as_tuple(b))]
            value = factors[0]
            for f in factors[1:]:
                value = value.tensor(f)
            terms.append(value * (ca * cb))
    return GrothendieckVector.total(terms)


def _apply_to_factor(x: GrothendieckVector, position: int,
                     fn: Callable[[Label], GrothendieckVector]) -> GrothendieckVector:
    terms = []
    for label, c in x.items():
        parts = as_tuple(label)
        value = fn(parts[position])
        if position:
            value = GrothendieckVector.basis(parts[:position]).tensor(value)
        if position + 1 < len(parts):
            value = value.tensor(GrothendieckVector.basis(parts[position + 1:]))
        terms.append(value * c)
    return GrothendieckVector.total(terms)


def _antipode_of_label(g: Label, H: GradedHopfData) -> GrothendieckVector:
    with H._antipode_lock:
        cached = H._antipodes.get(g)
        if cached is not None:
            return cached
        value = _compute_antipode(g, H)
        H._antipodes[g] = value
        return value


def _compute_antipode(g: Label, H: GradedHopfData) -> GrothendieckVector:
    if label_degree(g) == 0:
        value = unit(H)
    else:
        value = -GrothendieckVector.basis(g)
        for (a, b), c in reduced_coproduct(g, H).items():
            value = value - product(_antipode_of_label(a, H), GrothendieckVector.basis(b), H) * c
        check = GrothendieckVector.total(
            product(_antipode_of_label(a, H) if a != g else value,
                    GrothendieckVector.basis(b), H) * c
            for (a, b), c in H.coproduct_of_label(g).items()
        )
        if not check.is_zero():
            raise StructureError(
                f"{H.name}: antipode identity fails on [{label_str(g)}]: got {check}"
            )
    return value


def antipode(x: GrothendieckVector, H: GradedHopfData) -> GrothendieckVector:
    """The antipode by the recursion over the reduced coproduct, self-verified.

    Raises StructureError when sum gamma(x') x'' differs from eps(x) 1.
    """
    return GrothendieckVector.total(_antipode_of_label(g, H) * c for g, c in x.items())


def check_antipode(H: GradedHopfData, N: int, involution: bool = True) -> CheckReport:
    """Antipode identity (and optionally gamma o gamma = id) on every label of degree <= N."""
    report = CheckReport("antipode", {"hopf": H.name, "max_degree": N})
    for g in H.all_labels(N):
        x = GrothendieckVector.basis(g)
        try:
            gamma = antipode(x, H)
        except StructureError as exc:
            report.record("antipode_identity", {"x": g}, str(exc), "eps(x)1", equal=False)
            continue
        convolution = GrothendieckVector.total(
            product(antipode(GrothendieckVector.basis(a), H), GrothendieckVector.basis(b), H) * c
            for (a, b), c in H.coproduct_of_label(g).items()
        )
        report.record("antipode_identity", {"x": g}, convolution, unit(H) * counit(x, H))
        if involution:
            report.record("antipode_involution", {"x": g}, antipode(gamma, H), x)
    return report


_BIALGEBRA_IDENTITIES = (
    "unit", "counit", "associativity", "coassociativity", "compatibility",
    "counit_multiplicative", "unit_comultiplicative",
)


def check_bialgebra(H: GradedHopfData, N: int,
                    identities: Optional[Iterable[str]] = None) -> CheckReport:
    """Bialgebra axioms on all basis tuples whose total degree is at most N.

    identities restricts the sweep to a subset of unit, counit,
    associativity, coassociativity, compatibility, counit_multiplicative and
    unit_comultiplicative.
    """
    selected = set(_BIALGEBRA_IDENTITIES if identities is None else identities)
    unknown = selected - set(_BIALGEBRA_IDENTITIES)
    if unknown:
        raise UsageError(f"Unknown bialgebra identities: {sorted(unknown)}")
    report = CheckReport("bialgebra", {"hopf": H.name, "max_degree": N,
                                       "identities": sorted(selected)},
                         witness_filter=distinct_inputs("a", "b"))
    one = unit(H)
    by_degree = {n: H.labels(n) for n in range(N + 1)}
    labels = [g for n in range(N + 1) for g in by_degree[n]]

    if "unit_comultiplicative" in selected:
        report.record("unit_comultiplicative", {}, coproduct(one, H), one.tensor(one))

    for g in labels:
        x = GrothendieckVector.basis(g)
        if "unit" in selected:
            report.record("unit", {"x": g, "side": "left"}, product(one, x, H), x)
            report.record("unit", {"x": g, "side": "right"}, product(x, one, H), x)
        if "counit" in selected:
            delta = coproduct(x, H)
            left = GrothendieckVector.total(
                GrothendieckVector.basis(b) * (c * counit(GrothendieckVector.basis(a), H))
                for (a, b), c in delta.items()
            )
            right = GrothendieckVector.total(
                GrothendieckVector.basis(a) * (c * counit(GrothendieckVector.basis(b), H))
                for (a, b), c in delta.items()
            )
            report.record("counit", {"x": g, "side": "left"}, left, x)
            report.record("counit", {"x": g, "side": "right"}, right, x)
        if "coassociativity" in selected:
            delta = coproduct(x, H)
            lhs = _apply_to_factor(delta, 0, lambda a: H.coproduct_of_label(a))
            rhs = _apply_to_factor(delta, 1, lambda b: H.coproduct_of_label(b))
            report.record("coassociativity", {"x": g}, lhs, rhs)

    pair_cells = [(a, b) for a in labels for b in labels if label_degree(a) + label_degree(b) <= N]
    for a, b in pair_cells:
        xa, xb = GrothendieckVector.basis(a), GrothendieckVector.basis(b)
        ab = product(xa, xb, H)
        if "compatibility" in selected:
            lhs = coproduct(ab, H)
            rhs = tensor_product_in(coproduct(xa, H), coproduct(xb, H), H)
            report.record("compatibility", {"a": a, "b": b}, lhs, rhs)
        if "counit_multiplicative" in selected:
            report.record("counit_multiplicative", {"a": a, "b": b},
                          counit(ab, H), counit(xa, H) * counit(xb, H))
        if "associativity" in selected:
            for c in labels:
                if label_degree(a) + label_degree(b) + label_degree(c) > N:
                    continue
                xc = GrothendieckVector.basis(c)
                report.record("associativity", {"a": a, "b": b, "c": c},
                              product(ab, xc, H), product(xa, product(xb, xc, H), H))
    logger.debug(f"check_bialgebra({H.name}, N={N}): {report.status} "
                 f"over {len(report.cells)} cells")
    return report


class PairingMatrix:
    """Per-degree integer matrix <[P_i], [V_j]> between K0 and G0 labels.

    Args:
        k_basis: Degree -> K0 labels (rows).
        g_basis: Degree -> G0 labels (columns).
        values: Degree -> matrix, rows indexed like k_basis[n].
        tensor_values: Optional module-level values of <P (x) Q, M (x) N>
            keyed by ((p, q), (m, n)); used to test multiplicativity.
    """

    def __init__(self, k_basis: Mapping[int, Sequence[Label]], g_basis: Mapping[int, Sequence[Label]],
                 values: Mapping[int, Sequence[Sequence[int]]],
                 tensor_values: Optional[Mapping[Tuple[Tuple, Tuple], int]] = None):
        self.k_basis = {n: list(v) for n, v in k_basis.items()}
        self.g_basis = {n: list(v) for n, v in g_basis.items()}
        self.values = {n: [list(map(int, row)) for row in m] for n, m in values.items()}
        self.tensor_values = dict(tensor_values or {})
        self._index: Dict[Tuple[Label, Label], int] = {}
        for n, matrix in self.values.items():
            rows, cols = self.k_basis[n], self.g_basis[n]
            if len(matrix) != len(rows) or any(len(r) != len(cols) for r in matrix):
                raise StructureError(f"Pairing matrix in degree {n} has the wrong shape")
            for i, p in enumerate(rows):
                for j, m in enumerate(cols):
                    self._index[(p, m)] = matrix[i][j]

    @classmethod
    def from_function(cls, Hk: GradedHopfData, Hg: GradedHopfData, N: int,
                      fn: Callable[[Label, Label], int]) -> "PairingMatrix":
        k_basis = {n: Hk.labels(n) for n in range(N + 1)}
        g_basis = {n: Hg.labels(n) for n in range(N + 1)}
        values = {n: [[fn(p, m) for m in g_basis[n]] for p in k_basis[n]] for n in range(N + 1)}
        return cls(k_basis, g_basis, values)

    @classmethod
    def identity(cls, Hk: GradedHopfData, Hg: GradedHopfData, N: int) -> "PairingMatrix":
        """The pairing <p, m> = 1 iff the labels coincide."""
        return cls.from_function(Hk, Hg, N, lambda p, m: int(p == m))

    @classmethod
    def zero(cls, Hk: GradedHopfData, Hg: GradedHopfData, N: int) -> "PairingMatrix":
        return cls.from_function(Hk, Hg, N, lambda p, m: 0)

    def value(self, p: Label, m: Label) -> int:
        return self._index.get((p, m), 0)

    def tensor_value(self, ps: Tuple, ms: Tuple) -> int:
        if len(ps) != len(ms):
            return 0
        result = 1
        for p, m in zip(ps, ms):
            result *= self.value(p, m)
        return result

    def evaluate(self, x: GrothendieckVector, y: GrothendieckVector) -> int:
        """Bilinear evaluation; tensor labels pair factorwise."""
        return sum(
            cx * cy * self.tensor_value(as_tuple(p), as_tuple(m))
            for p, cx in x.items() for m, cy in y.items()
        )

    def is_identity(self) -> bool:
        for n, matrix in self.values.items():
            for i, row in enumerate(matrix):
                for j, v in enumerate(row):
                    if v != int(i == j):
                        return False
        return True

    def to_json(self) -> Dict[str, Any]:
        return {
            str(n): {
                "rows": [label_str(p) for p in self.k_basis[n]],
                "columns": [label_str(m) for m in self.g_basis[n]],
                "values": [[str(v) for v in row] for row in self.values[n]],
            }
            for n in sorted(self.values)
        }


def check_duality(Hg: GradedHopfData, Hk: GradedHopfData, P: PairingMatrix, N: int) -> CheckReport:
    """The pairing identities between K0 data Hk and G0 data Hg, total degree <= N.

    Raises StructureError if the bases differ in size in some degree.
    """
    for n in range(N + 1):
        if len(Hg.labels(n)) != len(Hk.labels(n)):
            raise StructureError(f"Degree {n}: {len(Hk.labels(n))} K0 labels against "
                                 f"{len(Hg.labels(n))} G0 labels")
    report = CheckReport("duality", {"g0": Hg.name, "k0": Hk.name, "max_degree": N})
    basis = GrothendieckVector.basis

    for ((p, q), (m, n)), value in sorted(P.tensor_values.items(),
                                          key=lambda kv: canonical(kv[0]).__str__()):
        report.record("tensor", {"p": p, "q": q, "m": m, "n": n},
                      value, P.value(p, m) * P.value(q, n))

    for total in range(N + 1):
        for i in range(total + 1):
            for p in Hk.labels(i):
                for q in Hk.labels(total - i):
                    pq = product(basis(p), basis(q), Hk)
                    for m in Hg.labels(total):
                        report.record("product_coproduct", {"p": p, "q": q, "m": m},
                                      P.evaluate(pq, basis(m)),
                                      P.evaluate(basis((p, q)), coproduct(basis(m), Hg)))
        for p in Hk.labels(total):
            delta = coproduct(basis(p), Hk)
            for i in range(total + 1):
                for m in Hg.labels(i):
                    for n in Hg.labels(total - i):
                        report.record("coproduct_product", {"p": p, "m": m, "n": n},
                                      P.evaluate(delta, basis((m, n))),
                                      P.evaluate(basis(p), product(basis(m), basis(n), Hg)))
        for m in Hg.labels(total):
            report.record("unit_counit", {"m": m},
                          P.evaluate(unit(Hk), basis(m)), counit(basis(m), Hg))
        for p in Hk.labels(total):
            report.record("counit_unit", {"p": p},
                          P.evaluate(basis(p), unit(Hg)), counit(basis(p), Hk))
    logger.debug(f"check_duality(N={N}): {report.status} over {len(report.cells)} cells")
    return report


def check_AsAs(H: GradedHopfData, N: int) -> CheckReport:
    """The three-case compatibility r_k(a b) against the split of a or of b.

    For a of degree m and b of degree n: below k = m the right side is
    sum a' (x) a''b over the (k, m-k) part of Delta(a); at k = m it is
    a (x) b; above m it is sum ab' (x) b'' over the (k-m, ...) part of Delta(b).
    """
    report = CheckReport("cond5prime", {"hopf": H.name, "max_degree": N})
    basis = GrothendieckVector.basis
    labels = H.all_labels(N)
    for a in labels:
        m = label_degree(a)
        for b in labels:
            n = label_degree(b)
            if m + n > N:
                continue
            ab = product(basis(a), basis(b), H)
            delta_ab = coproduct(ab, H)
            for k in range(m + n + 1):
                lhs = delta_ab.component((k, m + n - k))
                if k < m:
                    split = coproduct(basis(a), H).component((k, m - k))
                    rhs = GrothendieckVector.total(
                        basis(a1).tensor(product(basis(a2), basis(b), H)) * c
                        for (a1, a2), c in split.items()
                    )
                elif k == m:
                    rhs = basis((a, b))
                else:
                    split = coproduct(basis(b), H).component((k - m, n - k + m))
                    rhs = GrothendieckVector.total(
                        product(basis(a), basis(b1), H).tensor(basis(b2)) * c
                        for (b1, b2), c in split.items()
                    )
                report.record("asas", {"a": a, "b": b, "k": k}, lhs, rhs)
    logger.debug(f"check_AsAs({H.name}, N={N}): {report.status}")
    return report


def dual_hopf_data(H: GradedHopfData, name: str) -> GradedHopfData:
    """The graded dual on the dual basis of H's labels.

    The dual product of p and q has coefficient on r equal to the
    coefficient of p (x) q in Delta(r), and the dual coproduct of r has
    coefficient on p (x) q equal to the coefficient of r in p q.
    """
    N = H.max_degree
    basis = {n: H.labels(n) for n in range(N + 1)}
    products: Dict[Tuple[Label, Label], GrothendieckVector] = {}
    for i in range(N + 1):
        for j in range(N + 1 - i):
            for p in basis[i]:
                for q in basis[j]:
                    products[(p, q)] = GrothendieckVector({
                        r: H.coproduct_of_label(r)[(p, q)] for r in basis[i + j]
                    })
    coproducts: Dict[Label, GrothendieckVector] = {}
    for n in range(N + 1):
        for r in basis[n]:
            coproducts[r] = GrothendieckVector({
                (p, q): H.product_of_labels(p, q)[r]
                for i in range(n + 1) for p in basis[i] for q in basis[n - i]
            })
    return GradedHopfData(name, N, basis, products, coproducts)


def structure_table(H: GradedHopfData, op: str, degrees: Sequence[int]) -> List[List[Any]]:
    """Rows (inputs, output) of one structure-constant table for the CLI."""
    basis = GrothendieckVector.basis
    rows: List[List[Any]] = []
    if op == "product":
        m, n = degrees
        for a, b in itertools.product(H.labels(m), H.labels(n)):
            rows.append([a, b, product(basis(a), basis(b), H)])
    elif op == "coproduct":
        (n,) = degrees
        for g in H.labels(n):
            rows.append([g, "", coproduct(basis(g), H)])
    elif op == "antipode":
        (n,) = degrees
        for g in H.labels(n):
            rows.append([g, "", antipode(basis(g), H)])
    else:
        raise UsageError(f"Unknown structure table {op!r}")
    return rows
