"""sepscan: partial separability of pure multi-qubit states."""

__version__ = "0.1.0"
