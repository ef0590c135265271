# === System Imports ===
import json
import os
from pathlib import Path

from dotenv import load_dotenv

# === Custom Imports ===
from .exceptions import DocumentError
from .shared_logger import LEVEL_MAP, LogLevel, shared_logger

DEFAULT_SETTINGS_FILE = Path(__file__).parent / "settings" / "engine_settings.json"


class EngineSettings:
    """
    @class EngineSettings
    @brief Loads engine defaults from a JSON settings file and the environment.

    The settings file is organised in sections whose entries carry a
    description and a value:
    {
        "ahp": {
            "description": "...",
            "cr_threshold": {"description": "...", "value": 0.1}
        }
    }
    """

    def __init__(self, settings_file=None):
        """
        @brief Constructor for EngineSettings.
        @param settings_file Path to the JSON settings file; MCDM_SETTINGS_FILE or the bundled file otherwise.
        """
        self.class_prefix_message = "[EngineSettings]"
        # Load environment variables from .env file
        load_dotenv()

        self.settings_file = Path(
            settings_file
            or os.getenv("MCDM_SETTINGS_FILE", "").strip()
            or DEFAULT_SETTINGS_FILE
        )
        self.data = {}

    def load(self):
        """
        @brief Loads and parses the JSON settings file.
        @exception Raises DocumentError if the file cannot be read or parsed.
        @return self, for chaining.
        """
        if not self.settings_file.exists():
            shared_logger.log(
                f"{self.class_prefix_message} [{LogLevel.CRITICAL.name}] Settings file not found: {self.settings_file}"
            )
            raise DocumentError(f"Settings file not found: {self.settings_file}")

        if not self.settings_file.is_file():
            raise DocumentError(f"Settings path is not a file: {self.settings_file}")

        if not os.access(self.settings_file, os.R_OK):
            raise DocumentError(
                f"No read permission for settings file: {self.settings_file}"
            )

        if self.settings_file.stat().st_size == 0:
            raise DocumentError(f"Settings file is empty: {self.settings_file}")

        with open(self.settings_file, "r", encoding="utf-8") as f:
            try:
                self.data = json.load(f)
            except json.JSONDecodeError as e:
                raise DocumentError(
                    f"Invalid JSON in settings file: {e}\n"
                    f"Line {e.lineno}, column {e.colno}: {e.msg}"
                ) from e

        if not isinstance(self.data, dict):
            raise DocumentError(
                f"Settings file must contain a JSON object, got {type(self.data).__name__}"
            )

        shared_logger.log(
            f"{self.class_prefix_message} [{LogLevel.INFO.name}] Settings loaded from {self.settings_file}"
        )
        return self

    def get(self, section, key, default=None):
        """
        @brief Read one setting value.
        @param section Section name (e.g. "ahp")
        @param key Entry name inside the section
        @param default Value returned when the entry is absent
        """
        entry = self.data.get(section, {}).get(key)
        if isinstance(entry, dict) and "value" in entry:
            return entry["value"]
        return default

    # --- Typed accessors used by the pipeline and the CLI ---
    @property
    def count_thresholds(self):
        from .requirements import CountThresholds

        return CountThresholds(
            small_max=int(self.get("requirements", "small_max", 7)),
            medium_max=int(self.get("requirements", "medium_max", 20)),
        )

    @property
    def experience_path(self):
        env_path = os.getenv("MCDM_EXPERIENCE_PATH", "").strip()
        return Path(env_path or self.get("experience", "path", ".mcdm/experience.jsonl"))

    @property
    def choice_k(self):
        return int(self.get("methods", "choice_k", 1))

    def method_defaults(self):
        """
        @brief Method-configuration defaults merged under every run's method config.
        """
        return {
            "choice_k": self.choice_k,
            "tie_tolerance": float(self.get("methods", "tie_tolerance", 1e-12)),
            "ahp": {
                "mode": self.get("ahp", "priority_mode", "geometric_mean"),
                "cr_threshold": float(self.get("ahp", "cr_threshold", 0.1)),
                "cr_mode": self.get("ahp", "cr_mode", "warn"),
            },
        }

    def apply_logging(self):
        """
        @brief Configure the shared logger from settings and environment.
        """
        if os.environ.get("MCDM_DEV_MODE") == "1":
            shared_logger.set_level(LogLevel.INFO)
        else:
            level_name = str(self.get("logging", "level", "WARNING")).upper()
            shared_logger.set_level(LEVEL_MAP.get(level_name, LogLevel.WARNING))

        log_file = os.getenv("MCDM_LOG_FILE", "").strip() or self.get(
            "logging", "log_file"
        )
        if log_file:
            shared_logger.set_log_file(log_file)
