"""Exception types shared across the package."""


class RevivalScopeError(Exception):
    """Base class for all package errors."""


class DomainError(RevivalScopeError, ValueError):
    """Coordinate outside the admissible domain of a system."""


class IndexRangeError(RevivalScopeError, ValueError):
    """Eigenstate index outside the admissible range."""


class ParameterError(RevivalScopeError, ValueError):
    """Physical or numerical parameter out of range."""


class GridError(RevivalScopeError, ValueError):
    """Grid does not satisfy the sampling requirements (uniform, power of two)."""


class DataError(RevivalScopeError, ValueError):
    """Malformed numerical input (negative density, unsorted series, ...)."""


class InvalidPacketError(RevivalScopeError, ValueError):
    """Spectral packet with an empty or inconsistent coefficient range."""


class InsufficientRangeError(RevivalScopeError, ValueError):
    """Coefficient index range too small to capture the packet norm."""

    def __init__(self, captured, required):
        self.captured = float(captured)
        self.required = float(required)
        super().__init__(
            f"coefficient range captures norm {self.captured:.6f} < required "
            f"{self.required:.6f} (deficit {self.required - self.captured:.3e})"
        )


class ConfigError(RevivalScopeError, ValueError):
    """Invalid scenario configuration; carries the offending field."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class NumericalBreachError(RevivalScopeError, RuntimeError):
    """A per-row numerical invariant failed during a sweep."""

    def __init__(self, invariant, t, detail=""):
        self.invariant = invariant
        self.t = float(t)
        msg = f"invariant '{invariant}' breached at t={self.t!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
