import json
import logging
import os
import uuid
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.config import Config

logger = logging.getLogger(__name__)


class FileManager:
    """Saves reports and window files under the generated directory"""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self.reports_dir = self.config.REPORTS_DIR
        self.windows_dir = self.config.WINDOWS_DIR
        self.config.ensure_directories()

    @staticmethod
    def _stamped_name(prefix: str, suffix: str) -> str:
        return f"{prefix}_{datetime.now().strftime('%Y%m%d_%H%M%S')}_{str(uuid.uuid4())[:8]}{suffix}"

    def save_report(self, report: Dict[str, Any], prefix: str = "report", filename: Optional[str] = None) -> str:
        """Write a JSON report to the reports directory"""
        if filename is None:
            filename = self._stamped_name(prefix, ".json")

        filepath = self.reports_dir / filename
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(report, f, indent=2)
            f.write("\n")

        logger.info("Saved report %s", filepath)
        return str(filepath)

    def save_table(self, text: str, prefix: str = "table", filename: Optional[str] = None) -> str:
        """Write a TSV table to the reports directory"""
        if filename is None:
            filename = self._stamped_name(prefix, ".tsv")

        filepath = self.reports_dir / filename
        filepath.write_text(text, encoding='utf-8')
        logger.info("Saved table %s", filepath)
        return str(filepath)

    def save_window(self, text: str, prefix: str = "window", filename: Optional[str] = None) -> str:
        """Write a serialized window to the windows directory"""
        if filename is None:
            filename = self._stamped_name(prefix, ".txt")

        filepath = self.windows_dir / filename
        filepath.write_text(text, encoding='utf-8')
        logger.info("Saved window %s", filepath)
        return str(filepath)

    def load_report(self, filepath: str) -> Dict[str, Any]:
        with open(filepath, encoding='utf-8') as f:
            return json.load(f)

    def load_text(self, filepath: str) -> str:
        return Path(filepath).read_text(encoding='utf-8')

    def get_generated_files(self, file_type: str = "all") -> List[str]:
        """Saved files, newest first"""
        files = []

        if file_type in ["all", "reports"]:
            files.extend([str(f) for f in self.reports_dir.glob("*.*")])

        if file_type in ["all", "windows"]:
            files.extend([str(f) for f in self.windows_dir.glob("*.*")])

        return sorted(files, key=lambda x: os.path.getmtime(x), reverse=True)

    def delete_file(self, filepath: str) -> bool:
        """Delete a file safely"""
        try:
            Path(filepath).unlink()
            return True
        except OSError:
            return False
