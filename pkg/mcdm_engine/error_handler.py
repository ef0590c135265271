"""
Centralized error handling for the decision engine.

Every component logs failures in the same "[Component] [LEVEL] context:
ErrorType: message" format, and I/O failures are translated into the
engine's own exception types so that callers only ever catch McdmError.
"""

from contextlib import contextmanager
from typing import Tuple, Type

from .exceptions import McdmError
from .shared_logger import LogLevel, shared_logger


class ErrorHandler:
    """Logging and translation helpers shared by the engine components."""

    @staticmethod
    def log_error(
        prefix: str,
        error: Exception,
        level: LogLevel = LogLevel.CRITICAL,
        context: str = "",
    ) -> None:
        """
        Standardized error logging format.

        @param prefix Log prefix (e.g., "[ExperienceStore]")
        @param error Exception instance
        @param level LogLevel for the message
        @param context Additional context description
        """
        ctx = f" {context}" if context else ""
        shared_logger.log(
            f"{prefix} [{level.name}]{ctx}: {type(error).__name__}: {error}", level
        )

    @staticmethod
    @contextmanager
    def catch_and_log(
        prefix: str,
        level: LogLevel = LogLevel.WARNING,
        context: str = "",
        suppress: bool = True,
        exceptions: Tuple[Type[Exception], ...] = (McdmError,),
    ):
        """
        Context manager for steps whose failure must not end a run.

        @param prefix Log prefix for error messages
        @param level LogLevel for error logging
        @param context Additional context description
        @param suppress If True, suppresses exception; if False, re-raises
        @param exceptions Tuple of exception types to catch

        Usage:
            with ErrorHandler.catch_and_log("[Pipeline]", context="recording experience"):
                record_experience(...)
        """
        try:
            yield
        except exceptions as e:
            ErrorHandler.log_error(prefix, e, level, context)
            if not suppress:
                raise

    @staticmethod
    @contextmanager
    def translate(
        prefix: str,
        into: Type[McdmError],
        context: str,
        exceptions: Tuple[Type[Exception], ...] = (OSError,),
    ):
        """
        Context manager turning low-level failures into an engine error.

        @param prefix Log prefix for error messages
        @param into McdmError subclass raised instead
        @param context Human-readable description of the failed operation
        @param exceptions Exception types to translate

        Usage:
            with ErrorHandler.translate("[ReportWriter]", DocumentError, f"Cannot write {path}"):
                path.write_text(text)
        """
        try:
            yield
        except exceptions as e:
            ErrorHandler.log_error(prefix, e, LogLevel.CRITICAL, context)
            raise into(f"{context}: {e}") from e
