"""Engine configuration: degree caps, thread fan-out and registration limits."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, TypeVar

from .errors import DegreeOverflowError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV_VAR = "TOWER_MAX_THREADS"


def _default_max_degree() -> Dict[str, int]:
    return {"sym": 6, "hecke0": 5, "z2": 4}


def _default_module_degree() -> Dict[str, int]:
    return {"sym": 4, "hecke0": 5, "z2": 4}


def _default_condition5_module_degree() -> Dict[str, int]:
    return {"sym": 4, "hecke0": 4, "z2": 4}


@dataclass
class EngineConfig:
    """Caps and knobs shared by every tower and checker.

    Attributes:
        max_degree: Truncation degree of the Grothendieck-level data per tower.
        module_degree: Highest degree for which explicit algebras and
            modules are materialized per tower.
        condition5_module_degree: Highest total degree of the module-level
            condition (5) sweep per tower.
        max_threads: Worker threads used by sweeps (1 means sequential).
        associativity_check_limit: Algebras up to this dimension get the full
            triple associativity check at registration.
        isomorphism_search_limit: Largest number of determinant evaluations
            the isomorphism search may spend on its exhaustive grid.
    """

    max_degree: Dict[str, int] = field(default_factory=_default_max_degree)
    module_degree: Dict[str, int] = field(default_factory=_default_module_degree)
    condition5_module_degree: Dict[str, int] = field(
        default_factory=_default_condition5_module_degree
    )
    max_threads: int = 1
    associativity_check_limit: int = 24
    isomorphism_search_limit: int = 200000

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "EngineConfig":
        """Build a configuration, reading TOWER_MAX_THREADS from the environment."""
        env = os.environ if environ is None else environ
        config = cls()
        raw = env.get(THREADS_ENV_VAR)
        if raw is not None:
            try:
                threads = int(raw)
                if threads < 1:
                    raise ValueError(raw)
                config.max_threads = threads
            except ValueError:
                logger.warning(f"Ignoring invalid {THREADS_ENV_VAR}={raw!r}; using 1 thread")
        return config

    def cap(self, tower: str, module_level: bool = False) -> int:
        caps = self.module_degree if module_level else self.max_degree
        return caps.get(tower, 0)

    def require_degree(self, tower: str, degree: int, module_level: bool = False) -> None:
        """Raise DegreeOverflowError if degree exceeds the tower's cap."""
        limit = self.cap(tower, module_level)
        if degree > limit:
            kind = "module-level" if module_level else "Grothendieck"
            raise DegreeOverflowError(
                f"Degree {degree} exceeds the {kind} cap {limit} for tower '{tower}'"
            )


_default_config: Optional[EngineConfig] = None


def get_config() -> EngineConfig:
    """Return the process-wide configuration, reading the environment once."""
    global _default_config
    if _default_config is None:
        _default_config = EngineConfig.from_env()
    return _default_config


def set_config(config: Optional[EngineConfig]) -> None:
    """Replace the process-wide configuration (None resets to the environment)."""
    global _default_config
    _default_config = config


def fan_out(fn: Callable[[T], R], items: Iterable[T],
            max_threads: Optional[int] = None) -> List[R]:
    """Map fn over items, possibly on a thread pool, keeping input order."""
    work = list(items)
    threads = get_config().max_threads if max_threads is None else max_threads
    if threads <= 1 or len(work) <= 1:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, work))
