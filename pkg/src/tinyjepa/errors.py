"""Exception types shared across the package.

Each error class maps to one failure mode the tools report distinctly;
the CLI translates them into exit codes (see cli.py).
"""


class ShapeError(ValueError):
    """Array dimensions incompatible with what an operation requires."""


class ConfigError(ValueError):
    """Invalid configuration value or malformed config file."""

    def __init__(self, message, key=None, line=None):
        loc = ""
        if key is not None:
            loc += f" (key: {key}"
            loc += f", line {line})" if line is not None else ")"
        super().__init__(message + loc)
        self.key = key
        self.line = line


class ContractError(ValueError):
    """A caller violated an operation's precondition."""


class SamplerExhaustedError(RuntimeError):
    """Mask sampling could not produce a valid context within the retry budget."""


class NumericalError(FloatingPointError):
    """NaN or Inf encountered during computation.

    `where` names the layer index or parameter at which the failure was
    detected.
    """

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class CheckpointError(ValueError):
    """Checkpoint file is unreadable, truncated, or structurally incompatible."""
