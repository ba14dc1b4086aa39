"""
Exception hierarchy for towertk.

Checkers never raise for a failed identity; a failed identity is recorded
in a report. These exceptions signal invalid input or broken internals.
"""


class TowerError(Exception):
    """Base class for all towertk errors."""
    pass


class CombinatoricsError(TowerError):
    """Invalid permutation, composition, partition or word input."""
    pass


class DegreeOverflowError(TowerError):
    """A computation would leave the truncated degree range."""
    pass


class StructureError(TowerError):
    """Structure constants are inconsistent (e.g. antipode self-check failed)."""
    pass


class ModuleError(TowerError):
    """A module construction violates the algebra it claims to represent."""
    pass


class DecompositionError(TowerError):
    """A decomposition oracle produced an impossible multiplicity."""
    pass


class InconclusiveError(TowerError):
    """A search exhausted its budget without reaching a certificate."""
    pass


class UsageError(TowerError):
    """Unknown names or invalid arguments at the command-line boundary."""
    pass
