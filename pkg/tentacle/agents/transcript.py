"""
Episode transcripts: an ordered log of percepts, goals, declarations,
suspensions and execution events, rendered as text or JSON lines.
Nothing time- or host-dependent goes in, so equal runs give equal bytes.
"""

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class TranscriptEntry:
    tick: int
    kind: str
    agent: Optional[str]
    text: str
    artifacts: Tuple[str, ...] = ()

    def line(self) -> str:
        who = self.agent or "-"
        refs = f"  [{', '.join(self.artifacts)}]" if self.artifacts else ""
        return f"t={self.tick:<3} {self.kind:<12} {who:<8} {self.text}{refs}"

    def record(self) -> dict:
        return {"tick": self.tick, "kind": self.kind, "agent": self.agent,
                "text": self.text, "artifacts": list(self.artifacts)}


class Transcript:
    def __init__(self):
        self.entries: List[TranscriptEntry] = []

    def add(self, tick: int, kind: str, agent: Optional[str], text: str, artifacts=()) -> TranscriptEntry:
        entry = TranscriptEntry(tick, kind, agent, text, tuple(artifacts))
        self.entries.append(entry)
        return entry

    def of_kind(self, kind: str) -> List[TranscriptEntry]:
        return [e for e in self.entries if e.kind == kind]

    def text(self) -> str:
        return "".join(entry.line() + "\n" for entry in self.entries)

    def jsonl(self) -> str:
        return "".join(json.dumps(entry.record(), ensure_ascii=False) + "\n" for entry in self.entries)

    def __len__(self):
        return len(self.entries)
