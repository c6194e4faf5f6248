"""Append-only log of realizer calls, persisted as JSONL for auditability."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class RunRecord:
    mode: str
    realizer: str
    response: str
    prompt: dict | None = None
    fallback: bool = False
    started_at: str = ""
    finished_at: str = ""

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "realizer": self.realizer,
            "fallback": self.fallback,
            "prompt": self.prompt,
            "response": self.response,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
        }


@dataclass
class RunLog:
    records: list[RunRecord] = field(default_factory=list)

    def record(
        self,
        mode: str,
        realizer: str,
        response: str,
        prompt: dict | None = None,
        fallback: bool = False,
        started_at: str | None = None,
        finished_at: str | None = None,
    ) -> RunRecord:
        entry = RunRecord(
            mode=mode,
            realizer=realizer,
            response=response,
            prompt=prompt,
            fallback=fallback,
            started_at=started_at or _now(),
            finished_at=finished_at or _now(),
        )
        self.records.append(entry)
        return entry

    def write(self, path: str | Path) -> None:
        lines = [json.dumps(r.to_dict(), ensure_ascii=False) for r in self.records]
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), "utf-8")
