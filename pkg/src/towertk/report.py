"""Check reports and their canonical JSON/CSV serialization."""

import csv
import io
import json
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TextIO, Union

logger = logging.getLogger(__name__)


def is_label(obj: Any) -> bool:
    """Basis tags (compositions, partitions, words) expose a sort_key."""
    return hasattr(obj, "sort_key") and hasattr(obj, "weight")


def label_str(label: Any) -> str:
    """Canonical text of a label; tensor labels are joined with '|'."""
    if isinstance(label, tuple):
        return "|".join(label_str(part) for part in label)
    return str(label)


def canonical(obj: Any) -> Any:
    """Convert a result object into JSON-ready data with integers as strings."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if is_label(obj):
        return label_str(obj)
    if isinstance(obj, tuple) and obj and all(is_label(part) for part in obj):
        return label_str(obj)
    if isinstance(obj, dict):
        return {str(canonical(k)) if not isinstance(k, str) else k: canonical(v)
                for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(item) for item in obj]
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(canonical(obj), sort_keys=True, indent=2) + "\n"


@dataclass
class ReportCell:
    """One evaluated identity instance."""
    identity: str
    inputs: Dict[str, Any]
    lhs: Any
    rhs: Any
    equal: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "inputs": canonical(self.inputs),
            "lhs": canonical(self.lhs),
            "rhs": canonical(self.rhs),
            "equal": self.equal,
        }


@dataclass
class CheckReport:
    """The outcome of a checker: every evaluated cell plus free-form notes."""
    check: str
    request: Dict[str, Any] = field(default_factory=dict)
    cells: List[ReportCell] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)
    witness_filter: Optional[Callable[[ReportCell], bool]] = field(default=None, repr=False,
                                                                   compare=False)

    def record(self, identity: str, inputs: Dict[str, Any], lhs: Any, rhs: Any,
               equal: Optional[bool] = None) -> bool:
        """Append a cell; equality defaults to lhs == rhs."""
        same = (lhs == rhs) if equal is None else bool(equal)
        self.cells.append(ReportCell(identity, dict(inputs), lhs, rhs, same))
        if not same:
            logger.debug(f"{self.check}: {identity} fails at {canonical(inputs)}")
        return same

    def extend(self, other: "CheckReport") -> None:
        self.cells.extend(other.cells)
        self.notes.update(other.notes)
        if self.witness_filter is None:
            self.witness_filter = other.witness_filter

    @property
    def passed(self) -> bool:
        return all(cell.equal for cell in self.cells)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> List[ReportCell]:
        return [cell for cell in self.cells if not cell.equal]

    @property
    def first_failure(self) -> Optional[ReportCell]:
        failing = self.failures()
        return failing[0] if failing else None

    @property
    def witness(self) -> Optional[ReportCell]:
        """The failing cell reported as the witness.

        The first failure accepted by witness_filter, else the first failure.
        """
        failing = self.failures()
        if self.witness_filter is not None:
            for cell in failing:
                if self.witness_filter(cell):
                    return cell
        return failing[0] if failing else None

    def identities(self) -> List[str]:
        return sorted({cell.identity for cell in self.cells})

    def summary(self) -> List[Dict[str, Any]]:
        """Per-identity counts of checked and failing cells."""
        rows = []
        for name in self.identities():
            selected = [c for c in self.cells if c.identity == name]
            rows.append({
                "identity": name,
                "checked": len(selected),
                "failed": sum(1 for c in selected if not c.equal),
            })
        return rows

    def to_dict(self, elapsed_ms: int = 0) -> Dict[str, Any]:
        document = {
            "request": canonical(self.request),
            "check": self.check,
            "status": self.status,
            "cells": [cell.to_dict() for cell in self.cells],
            "elapsed_ms": str(elapsed_ms),
        }
        witness = self.witness
        if witness is not None:
            document["witness"] = witness.to_dict()
        if self.notes:
            document["notes"] = canonical(self.notes)
        return document

    def to_json(self, elapsed_ms: int = 0) -> str:
        return json.dumps(self.to_dict(elapsed_ms), sort_keys=True, indent=2) + "\n"


class ReportWriter:
    """Collects one report (or table) and writes it once, like a step log."""

    def __init__(self, output_path: Optional[Union[str, Path]] = None,
                 output_format: str = "json", timing: bool = False):
        """Initialize the writer.

        Args:
            output_path: Destination file; None writes to the given stream.
            output_format: 'json' or 'csv'.
            timing: Record real elapsed milliseconds instead of "0".
        """
        self.output_path = Path(output_path) if output_path else None
        self.output_format = output_format
        self.timing = timing
        self._started = time.perf_counter()

    def elapsed_ms(self) -> int:
        if not self.timing:
            return 0
        return int((time.perf_counter() - self._started) * 1000)

    def render_report(self, report: CheckReport) -> str:
        if self.output_format == "csv":
            header = ["identity", "inputs", "lhs", "rhs", "equal"]
            rows = [
                [cell.identity,
                 json.dumps(canonical(cell.inputs), sort_keys=True),
                 json.dumps(canonical(cell.lhs), sort_keys=True),
                 json.dumps(canonical(cell.rhs), sort_keys=True),
                 "true" if cell.equal else "false"]
                for cell in report.cells
            ]
            return render_csv(header, rows)
        return report.to_json(self.elapsed_ms())

    def render_table(self, request: Dict[str, Any], header: Sequence[str],
                     rows: Sequence[Sequence[Any]]) -> str:
        if self.output_format == "csv":
            return render_csv(header, rows)
        document = {
            "request": canonical(request),
            "header": list(header),
            "rows": [[canonical(v) for v in row] for row in rows],
            "elapsed_ms": str(self.elapsed_ms()),
        }
        return json.dumps(document, sort_keys=True, indent=2) + "\n"

    def save(self, text: str, stream: Optional[TextIO] = None) -> None:
        """Write text to the output file, or to stream when no file was given."""
        if self.output_path is None:
            if stream is not None:
                stream.write(text)
            return
        self.output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.output_path, "w", newline="") as f:
            f.write(text)
        logger.debug(f"Wrote {len(text)} characters to {self.output_path}")


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([_csv_value(value) for value in row])
    return buffer.getvalue()


def _csv_value(value: Any) -> str:
    data = canonical(value)
    if isinstance(data, (dict, list)):
        return json.dumps(data, sort_keys=True)
    return "" if data is None else str(data)


def distinct_inputs(*names: str) -> Callable[[ReportCell], bool]:
    """Witness filter accepting cells whose named inputs are pairwise different."""
    def accept(cell: ReportCell) -> bool:
        values = [cell.inputs.get(name) for name in names]
        return len(set(values)) == len(values)
    return accept
