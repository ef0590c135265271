import os
import re
import sys
import threading
from datetime import datetime
from enum import IntEnum

from colorama import Fore, Style, init

# Initialize colorama for cross-platform color support
init(autoreset=True)


# Define log levels
class LogLevel(IntEnum):
    INFO = 1
    WARNING = 2
    CRITICAL = 3


LEVEL_MAP = {
    "INFO": LogLevel.INFO,
    "WARNING": LogLevel.WARNING,
    "CRITICAL": LogLevel.CRITICAL,
}

# Global dev mode flag
DEV_MODE = os.environ.get("MCDM_DEV_MODE") == "1"


class EngineLogger:
    """
    Console/file logger shared by every engine component.

    Messages follow the "[Component] [LEVEL] text" convention. Console output
    goes to stderr so that stdout stays reserved for command results.
    """

    COLOR_MAP = {
        LogLevel.INFO: Fore.GREEN,
        LogLevel.WARNING: Fore.YELLOW,
        LogLevel.CRITICAL: Fore.RED,
    }

    def __init__(self, log_file_path=None, level=LogLevel.WARNING):
        self.log_file_path = log_file_path
        self.level = level
        self._lock = threading.Lock()

        # Console output is on unless explicitly muted (tests, embedding apps)
        self._console_enabled = True

    def log(self, message, level=None):
        """
        @brief Log a message if it meets the minimum log level threshold.
        @param message The message to log, usually "[Component] [LEVEL] text"
        @param level The log level; detected from the [LEVEL] tag when omitted
        """
        if level is None:
            level = self._detect_level(message)
        if level < self.level:
            return

        with self._lock:
            if self._console_enabled:
                self._write_to_console(message, level)
            if self.log_file_path:
                self._write_to_file(message, level)

    def set_level(self, level):
        """
        @brief Set the minimum log level threshold.
        @param level LogLevel enum value (e.g., LogLevel.WARNING to show only WARNING and CRITICAL)
        """
        if isinstance(level, LogLevel):
            self.level = level
        else:
            raise ValueError("level must be an instance of LogLevel")

    def set_log_file(self, log_file_path):
        """
        @brief Start (or stop, with None) appending log lines to a file.
        """
        with self._lock:
            self.log_file_path = log_file_path
        if log_file_path and not os.path.exists(log_file_path):
            directory = os.path.dirname(log_file_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(log_file_path, "w", encoding="utf-8"):
                pass

    def set_console(self, enabled):
        self._console_enabled = bool(enabled)

    # --- Internal helpers ---
    @staticmethod
    def _detect_level(message):
        match = re.search(r"\[(INFO|WARNING|CRITICAL)\]", message, re.IGNORECASE)
        if match:
            return LEVEL_MAP.get(match.group(1).upper(), LogLevel.INFO)
        return LogLevel.INFO

    def _write_to_console(self, message, level):
        # Default color based on log level
        color = self.COLOR_MAP.get(level, "")

        # Flashbacks and selection outcomes stand out in dev sessions
        if "[Pipeline]" in message and level == LogLevel.INFO:
            color = Fore.MAGENTA

        if "[Selection]" in message and level == LogLevel.INFO:
            color = Fore.CYAN

        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        try:
            sys.stderr.write(f"{color}[{timestamp}] {message}{Style.RESET_ALL}\n")
            sys.stderr.flush()
        except Exception:
            pass

    def _write_to_file(self, message, level):
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        try:
            with open(self.log_file_path, "a", encoding="utf-8") as f:
                f.write(f"[{timestamp}] [{level.name}] {message}\n")
        except OSError as e:
            sys.stderr.write(f"[{timestamp}] [ERROR] Failed to log message: {e}\n")


# --- Shared logger instance ---
shared_logger = EngineLogger(
    log_file_path=os.environ.get("MCDM_LOG_FILE") or None,
    level=LogLevel.INFO if DEV_MODE else LogLevel.WARNING,
)
