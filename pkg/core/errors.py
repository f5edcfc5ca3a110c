# exception hierarchy shared by every module
# NOTE: ParameterError / NodeIndexError also subclass ValueError / IndexError

class XPError(Exception):
    """Base class for all toolkit errors."""

class ParameterError(XPError, ValueError):
    """Invalid parameters for an operation."""

class NodeIndexError(XPError, IndexError):
    """Node or neighbor index outside the graph."""

class BudgetError(XPError):
    """A dense or brute-force computation would exceed its configured budget."""

class GenerationError(XPError):
    """A random construction gave up (rejection cap exceeded)."""

class ConvergenceError(XPError):
    """Iteration stopped at max_iter without meeting its tolerance."""

    def __init__(self, message: str, best_estimate: float, iterations: int, residual: float):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.iterations = iterations
        self.residual = residual

class StrategyError(XPError):
    """A query-game strategy asked for something outside the game."""

class SchemaError(XPError):
    """A CSV does not carry the documented columns."""

class ConfigError(XPError):
    """An experiment configuration failed validation."""

class FormatError(XPError):
    """A graph file is malformed."""
