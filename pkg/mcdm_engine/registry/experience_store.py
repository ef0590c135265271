"""
Experience store backing the experience selection strategy.

One JSON document per line: {"fingerprint", "method_id", "timestamp"}.
The file is append-only; the most recent record for a fingerprint wins.
"""

import json
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional

from ..error_handler import ErrorHandler
from ..exceptions import StoreUnreadable, StoreUnwritable
from ..requirements import MethodRequirements
from ..shared_logger import LogLevel, shared_logger
from .interfaces import MethodRegistry, builtin_interfaces

CLASS_PREFIX_MESSAGE = "[ExperienceStore]"

# One writer lock per store file
_WRITE_LOCKS: Dict[str, threading.Lock] = {}
_WRITE_LOCKS_GUARD = threading.Lock()


def parse_instant(timestamp: str) -> datetime:
    """
    @brief Parse an ISO-8601 timestamp into an aware UTC datetime.
    @param timestamp ISO-8601 text; a trailing "Z" or no offset means UTC
    @exception ValueError when the text is not an ISO-8601 instant
    """
    if not isinstance(timestamp, str):
        raise ValueError(f"timestamp must be a string, got {timestamp!r}")
    text = timestamp.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    instant = datetime.fromisoformat(text)
    if instant.tzinfo is None:
        instant = instant.replace(tzinfo=timezone.utc)
    return instant.astimezone(timezone.utc)


def canonical_fingerprint(reqs: MethodRequirements) -> str:
    """Byte-stable serialization of a requirement document."""
    return json.dumps(
        reqs.to_document(), sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )


@dataclass(frozen=True)
class ExperienceRecord:
    fingerprint: str
    chosen_method: str
    timestamp: str

    def to_line(self) -> str:
        return json.dumps(
            {
                "fingerprint": self.fingerprint,
                "method_id": self.chosen_method,
                "timestamp": self.timestamp,
            },
            sort_keys=True,
            ensure_ascii=False,
        )


class ExperienceStore:
    """
    @class ExperienceStore
    @brief Append-only JSON-lines store of requirement -> method decisions.

    Writes are serialized per file; readers parse the whole file and therefore
    see every line completed before the read started.
    """

    def __init__(self, path):
        self.path = Path(path)
        with _WRITE_LOCKS_GUARD:
            self._lock = _WRITE_LOCKS.setdefault(str(self.path.resolve()), threading.Lock())

    def records(self) -> List[ExperienceRecord]:
        """
        @brief Read every record in file order.
        @exception StoreUnreadable on I/O errors or malformed lines
        """
        if not self.path.exists():
            return []

        records = []
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                for line_number, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    try:
                        document = json.loads(line)
                        record = ExperienceRecord(
                            fingerprint=document["fingerprint"],
                            chosen_method=document["method_id"],
                            timestamp=document["timestamp"],
                        )
                        parse_instant(record.timestamp)
                        records.append(record)
                    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                        raise StoreUnreadable(
                            f"{self.path}:{line_number}: malformed experience record ({e})"
                        ) from e
        except OSError as e:
            ErrorHandler.log_error(CLASS_PREFIX_MESSAGE, e, context="reading store")
            raise StoreUnreadable(f"Cannot read experience store {self.path}: {e}") from e
        return records

    def append(self, record: ExperienceRecord) -> None:
        """
        @brief Append one record; previous lines are never rewritten.
        @exception StoreUnwritable on I/O errors
        """
        with self._lock, ErrorHandler.translate(
            CLASS_PREFIX_MESSAGE, StoreUnwritable, f"Cannot write experience store {self.path}"
        ):
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(record.to_line() + "\n")

    def lookup(self, fingerprint: str) -> Optional[ExperienceRecord]:
        """Most recent record for a fingerprint, compared as UTC instants; file order breaks ties."""
        matching = [
            (parse_instant(record.timestamp), index, record)
            for index, record in enumerate(self.records())
            if record.fingerprint == fingerprint
        ]
        if not matching:
            return None
        return max(matching, key=lambda entry: (entry[0], entry[1]))[2]


def select_by_experience(reqs: MethodRequirements, base: ExperienceStore) -> Optional[str]:
    """
    @brief Reuse the method chosen the last time the exact same requirements were met.
    @return The recorded method id, or None when the situation is new
    """
    record = base.lookup(canonical_fingerprint(reqs))
    if record is None:
        shared_logger.log(
            f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] No experience for these requirements"
        )
        return None
    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Experience suggests '{record.chosen_method}' "
        f"(recorded {record.timestamp})"
    )
    return record.chosen_method


def record_experience(
    reqs: MethodRequirements,
    chosen_method: str,
    base: ExperienceStore,
    registry: Optional[MethodRegistry] = None,
    timestamp: Optional[str] = None,
) -> ExperienceStore:
    """
    @brief Append a requirement -> method decision to the store.
    @param registry Registry the method must belong to (builtin families by default)
    @param timestamp ISO-8601 instant (any offset); now when omitted
    @exception UnknownMethod when chosen_method is not registered
    @exception StoreUnwritable when timestamp is not ISO-8601
    """
    (registry or builtin_interfaces()).lookup(chosen_method)
    if timestamp is not None:
        try:
            parse_instant(timestamp)
        except ValueError as e:
            raise StoreUnwritable(f"Refusing to record an unreadable timestamp: {e}") from e
    record = ExperienceRecord(
        fingerprint=canonical_fingerprint(reqs),
        chosen_method=chosen_method,
        timestamp=timestamp
        or datetime.now(timezone.utc).isoformat(timespec="microseconds"),
    )
    base.append(record)
    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Recorded '{chosen_method}' in {base.path}"
    )
    return base
