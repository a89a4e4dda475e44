"""
Global logger for the separable spectra toolkit.
Debug messages are printed only when debug mode is enabled. Everything
except info goes to stderr; command output owns stdout.
"""

import sys


class Logger:
    """Process-wide logger with a debug switch and component prefixes."""

    _debug_mode: bool = False

    @classmethod
    def set_debug(cls, enabled: bool):
        """
        Enable or disable debug mode.

        Args:
            enabled: True to enable debug messages, False to disable
        """
        cls._debug_mode = bool(enabled)

    @classmethod
    def is_debug(cls) -> bool:
        """
        Check if debug mode is enabled.

        Returns:
            True if debug mode is enabled, False otherwise
        """
        return cls._debug_mode

    @staticmethod
    def _emit(message: str, prefix: str, marker: str = "", stream=None):
        head = f"{prefix} " if prefix else ""
        mark = f"{marker} " if marker else ""
        print(f"{head}{mark}{message}", file=stream or sys.stdout)

    @classmethod
    def debug(cls, message: str, prefix: str = ""):
        """
        Print a debug message if debug mode is enabled.

        Args:
            message: Message to print
            prefix: Optional component prefix (e.g., "[EllipsoidalSolver]")
        """
        if cls._debug_mode:
            cls._emit(message, prefix, stream=sys.stderr)

    @classmethod
    def info(cls, message: str, prefix: str = ""):
        """Print an info message (always shown)."""
        cls._emit(message, prefix)

    @classmethod
    def error(cls, message: str, prefix: str = ""):
        """
        Print an error message to stderr (always shown).

        Args:
            message: Message to print
            prefix: Optional component prefix (e.g., "[SpectraAPI]")
        """
        cls._emit(message, prefix, "✗", sys.stderr)

    @classmethod
    def success(cls, message: str, prefix: str = ""):
        """Print a success message to stderr (always shown)."""
        cls._emit(message, prefix, "✓", sys.stderr)

    @classmethod
    def warning(cls, message: str, prefix: str = ""):
        """Print a warning message to stderr (always shown)."""
        cls._emit(message, prefix, "⚠", sys.stderr)
