"""Exceptions raised by the engine.

Every failure of an exact identity surfaces as a RiordanError subclass; the
CLI maps them to exit statuses in main.py.
"""

from __future__ import annotations

from typing import Any, Optional, Tuple


class RiordanError(Exception):
    """Base class for every error raised by the package."""


class NonExactDivision(RiordanError):
    pass


class NonUnitConstantTerm(RiordanError):
    pass


class NonzeroConstantInner(RiordanError):
    pass


class NonUnitLinearTerm(RiordanError):
    pass


class TruncationError(RiordanError):
    """Coefficient requested beyond the truncation order of a series."""


class InsufficientOrder(RiordanError):
    pass


class KindMismatch(RiordanError):
    pass


class NonUnitDiagonal(RiordanError):
    pass


class ShapeMismatch(RiordanError):
    pass


class InsufficientDepth(RiordanError):
    pass


class ZeroLambda(RiordanError):
    pass


class NonzeroResidual(RiordanError):
    def __init__(self, index: int, value: Any, label: str = ""):
        self.index = index
        self.value = value
        where = f" ({label})" if label else ""
        super().__init__(f"residual nao nulo em x^{index}: {value}{where}")


class Mismatch(RiordanError):
    """Two constructions disagree; carries the first differing cell."""

    def __init__(self, what: str, cell: Optional[Tuple[int, ...]] = None, left: Any = None, right: Any = None):
        self.what = what
        self.cell = cell
        self.left = left
        self.right = right
        if cell is None:
            super().__init__(what)
        else:
            super().__init__(f"{what}: celula {cell}: {left} != {right}")


class FamilyError(RiordanError):
    """Invalid family name or parameters."""


class ConfigError(RiordanError):
    pass


class FixtureError(RiordanError):
    pass
