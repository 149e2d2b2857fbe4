"""Click-feedback event log and the feedback ranking factor.

Events append to a JSONL log (`{"posting_id": ..., "ts": ...}`); folding
replays the log into per-posting click counts. The factor is
log2(2 + clicks) normalized by the corpus maximum, so the most-clicked
posting scores 1.0 and everything floors at 1.0 when no data exists yet.
"""

from __future__ import annotations

import json
import math
import threading
from datetime import datetime, timezone
from pathlib import Path


class FeedbackStore:
    def __init__(self, log_path: str | Path | None = None):
        self.log_path = Path(log_path) if log_path else None
        self._lock = threading.Lock()
        self._counts: dict[str, int] = {}
        self._max_raw = 0.0
        if self.log_path is not None:
            self.fold()

    def append(self, posting_id: str, ts: str | None = None) -> None:
        """Append one click event; writes are serialized."""
        if ts is None:
            ts = datetime.now(timezone.utc).isoformat(timespec="seconds")
        line = json.dumps({"posting_id": posting_id, "ts": ts}) + "\n"
        with self._lock:
            if self.log_path is not None:
                with open(self.log_path, "a", encoding="utf-8") as fh:
                    fh.write(line)
            else:
                self._counts[posting_id] = self._counts.get(posting_id, 0) + 1
                self._refresh_max()

    def fold(self) -> dict[str, int]:
        """Replay the log into click counts and swap them in atomically."""
        counts: dict[str, int] = {}
        if self.log_path is not None and self.log_path.exists():
            with open(self.log_path, encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    try:
                        event = json.loads(line)
                    except json.JSONDecodeError:
                        continue  # a torn write must not poison the fold
                    pid = event.get("posting_id")
                    if isinstance(pid, str):
                        counts[pid] = counts.get(pid, 0) + 1
        with self._lock:
            self._counts = counts
            self._refresh_max()
        return dict(counts)

    def _refresh_max(self) -> None:
        self._max_raw = max(
            (math.log2(2 + c) for c in self._counts.values()), default=0.0
        )

    def clicks(self, posting_id: str) -> int:
        return self._counts.get(posting_id, 0)

    def has_data(self) -> bool:
        return self._max_raw > 0.0

    def factor(self, posting_id: str) -> float:
        """Feedback ranking factor; 1.0 while no click data exists."""
        if self._max_raw <= 0.0:
            return 1.0
        return math.log2(2 + self._counts.get(posting_id, 0)) / self._max_raw
