"""
Report Logger - ECIC Matroid System
Persists command runs as JSON records with a pandas CSV summary
"""

import json
import logging
from dataclasses import dataclass, asdict
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd


@dataclass
class RunRecord:
    """One command invocation"""
    command: str
    target: str
    exit_code: int
    summary: str
    timestamp: str
    details: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class ReportLogger:
    """
    Run history under base_path

    runs_<command>.json holds every record of a command; run_summary.csv
    holds one row per run across commands.
    """

    def __init__(self, base_path: str = "report_logs"):
        self.logger = logging.getLogger("ReportLogger")
        self.base_path = Path(base_path)
        self.base_path.mkdir(parents=True, exist_ok=True)
        self.logger.info(f"📊 Report Logger initialized - Path: {self.base_path}")

    def log_run(self, command: str, target: str, exit_code: int, summary: str,
                details: Optional[Dict[str, Any]] = None) -> RunRecord:
        record = RunRecord(
            command=command,
            target=target,
            exit_code=exit_code,
            summary=summary,
            timestamp=datetime.now().isoformat(),
            details=details or {},
        )
        try:
            records = self.load_runs(command)
            records.append(record)
            with open(self._runs_file(command), 'w', encoding='utf-8') as f:
                json.dump([r.to_dict() for r in records], f, indent=2)
            self._append_summary(record)
        except OSError as e:
            self.logger.error(f"💀 Failed to save run record: {str(e)}")
            raise
        self.logger.info(f"✅ Logged {command} run on {target} (exit {exit_code})")
        return record

    def load_runs(self, command: str) -> List[RunRecord]:
        path = self._runs_file(command)
        if not path.exists():
            return []
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return [RunRecord(**data) for data in json.load(f)]
        except (json.JSONDecodeError, TypeError) as e:
            self.logger.warning(f"⚠️ Corrupted run file {path}, starting fresh: {e}")
            return []

    def export_table(self, name: str, frame: pd.DataFrame) -> Path:
        """Write a DataFrame (e.g. simulation tallies) next to the run records"""
        path = self.base_path / f"{name}.csv"
        frame.to_csv(path, index=False)
        self.logger.info(f"📊 Exported {len(frame)} rows to {path}")
        return path

    def summary_frame(self) -> pd.DataFrame:
        path = self.base_path / "run_summary.csv"
        if not path.exists():
            return pd.DataFrame(columns=['timestamp', 'command', 'target', 'exit_code', 'summary'])
        return pd.read_csv(path)

    def _append_summary(self, record: RunRecord) -> None:
        row = pd.DataFrame([{
            'timestamp': record.timestamp,
            'command': record.command,
            'target': record.target,
            'exit_code': record.exit_code,
            'summary': record.summary,
        }])
        path = self.base_path / "run_summary.csv"
        row.to_csv(path, mode='a', header=not path.exists(), index=False)

    def _runs_file(self, command: str) -> Path:
        return self.base_path / f"runs_{command.replace('-', '_')}.json"
