"""
Worked examples with known values, recomputed from scratch.

Each GoldenExample pairs a computation with the value it must produce.
`check_golden()` runs all of them into one CheckReport; the CLI `golden`
command prints that report.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

from .combinatorics import (Composition, Partition, Permutation, Word, alpha, conjugate,
                            direct_sum, mirror, omega, shuffle)
from .hecke import g0_coproduct, g0_product_shuffle, nu
from .report import CheckReport
from .symmetric import ClassFunction, decompose_into_irreducibles, induce_class_function
from .z2 import z2_condition5_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoldenExample:
    name: str
    description: str
    expected: str
    compute: Callable[[], str]


def _rho() -> str:
    return str(direct_sum(Permutation.parse("21"), Permutation.parse("312")))


def _shuffle() -> str:
    return " ".join(str(w) for w in shuffle(Word.parse("21"), Word.parse("34")))


def _nu_square() -> str:
    x = nu(Composition((2, 1)))
    return "nu^2 = -nu" if x * x == -x else f"nu^2 = {x * x}"


def _nu_expansion() -> str:
    return str(nu(Composition((2, 1))))


def _hecke_product() -> str:
    return str(g0_product_shuffle(Composition((1,)), Composition((1,))))


def _hecke_coproduct() -> str:
    return str(g0_coproduct(Composition((2, 1))))


def _sym_product() -> str:
    one = Partition((1,))
    return str(decompose_into_irreducibles(induce_class_function(
        ClassFunction.irreducible((one, one)))))


def _z2_witness() -> str:
    cell = z2_condition5_witness().cells[0]
    return f"{cell.lhs} vs {cell.rhs}"


GOLDEN_EXAMPLES: List[GoldenExample] = [
    GoldenExample("rho_2_3", "rho_{2,3}(21 (x) 312)", "21534", _rho),
    GoldenExample("conjugate_3_1", "conjugate of (3,1)", "2,1,1",
                  lambda: str(conjugate(Composition((3, 1))))),
    GoldenExample("mirror_3_1", "mirror of (3,1)", "1,3",
                  lambda: str(mirror(Composition((3, 1))))),
    GoldenExample("alpha_2_2_1_3", "alpha(2,2,1,3)", "13265478",
                  lambda: str(alpha(Composition((2, 2, 1, 3))))),
    GoldenExample("omega_2_2_1_3", "omega(2,2,1,3)", "78564123",
                  lambda: str(omega(Composition((2, 2, 1, 3))))),
    GoldenExample("shuffle_21_34", "21 shuffle 34", "2134 2314 2341 3214 3241 3421", _shuffle),
    GoldenExample("nu_2_1", "nu_(2,1) = T_2 (1 + T_1)", "T[132] + T[312]", _nu_expansion),
    GoldenExample("nu_2_1_square", "nu_(2,1) squared", "nu^2 = -nu", _nu_square),
    GoldenExample("hecke_g0_1_1", "[C_(1)][C_(1)] in G0(hecke0)", "[2] + [1,1]", _hecke_product),
    GoldenExample("hecke_delta_2_1", "coproduct of [C_(2,1)]",
                  "[|2,1] + [1|1,1] + [2|1] + [2,1|]", _hecke_coproduct),
    GoldenExample("sym_g0_1_1", "[V_(1)][V_(1)] in G0(sym)", "[2] + [1,1]", _sym_product),
    GoldenExample("z2_mackey", "Res Ind (T (x) S) against twisted Ind Res at k=1",
                  "[T|S] vs [T|S] + [S|T]", _z2_witness),
]


def check_golden(names: Optional[List[str]] = None) -> CheckReport:
    """Recompute the worked examples; a cell fails when the value differs."""
    report = CheckReport("golden", {"examples": names or "all"})
    for example in GOLDEN_EXAMPLES:
        if names and example.name not in names:
            continue
        report.record(example.name, {"description": example.description},
                      example.compute(), example.expected)
    logger.info(f"golden: {report.status}")
    return report
