"""Exception types shared across the package."""


class FlowPolyError(Exception):
    """Base class for all package-specific errors."""


class InputError(FlowPolyError, ValueError):
    """Malformed in-memory input: unknown ids, shape mismatches, bad permutations."""


class ParseError(FlowPolyError, ValueError):
    """Malformed text input: graph files, b files, group strings."""


class IncompatibleError(FlowPolyError, ValueError):
    """A vertex function is not locally zero-sum where the operation requires it."""


class BudgetError(FlowPolyError, RuntimeError):
    """An enumeration would exceed the configured step budget or size guard."""


class ConsistencyError(FlowPolyError, RuntimeError):
    """Two routes that must agree produced different results."""
