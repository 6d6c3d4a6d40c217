"""Report writers: canonical JSON reports and CSV tables."""
from typing import Any, Dict, List, Optional

import pandas as pd
from loguru import logger

from src.interfaces.generator_interface import GeneratorInterface
from src.utils.helpers import canonical_json, write_text

SUMMARY_COLUMNS = ["claim", "class", "verdict", "holds", "fails", "marginal", "na", "witness"]
EXTREMAL_COLUMNS = ["class", "index", "size", "min", "max", "min_witnesses", "max_witnesses"]


def rows_to_frame(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> pd.DataFrame:
    """DataFrame with a fixed column order; missing cells are left empty."""
    df = pd.DataFrame(rows)
    if columns is None:
        return df
    return df.reindex(columns=columns)


def rows_to_csv(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    """CSV text for ``rows``, with the header even when there are no rows."""
    return rows_to_frame(rows, columns).to_csv(index=False, lineterminator="\n")


class JsonReportGenerator(GeneratorInterface):
    """Writes a report dictionary as canonical JSON."""

    def __init__(self):
        logger.debug("Initializing JsonReportGenerator")

    def render(self, data: dict) -> str:
        return canonical_json(data) + "\n"

    def create_report(self, data: dict, output_path: str) -> bool:
        """Write ``data`` as sorted-key JSON.

        Args:
            data: JSON-serializable report
            output_path: Path to save the report

        Returns:
            True if successful, False otherwise
        """
        if not data:
            logger.error("No data provided")
            return False
        try:
            text = self.render(data)
        except (TypeError, ValueError) as e:
            logger.error(f"Report is not serializable: {e}")
            return False
        if not write_text(text, output_path):
            return False
        logger.info(f"Wrote JSON report: {output_path}")
        return True


class CsvTableGenerator(GeneratorInterface):
    """Writes ``{"rows": [...]}`` as a CSV table."""

    def __init__(self, columns: Optional[List[str]] = None):
        logger.debug("Initializing CsvTableGenerator")
        self.columns = columns

    def create_report(self, data: dict, output_path: str) -> bool:
        """Write ``data["rows"]`` as CSV.

        Args:
            data: Dictionary with a ``rows`` list of flat dictionaries
            output_path: Path to save the table

        Returns:
            True if successful, False otherwise
        """
        if not data or "rows" not in data:
            logger.error("No rows provided")
            return False
        if not write_text(rows_to_csv(data["rows"], self.columns), output_path):
            return False
        logger.info(f"Wrote CSV table with {len(data['rows'])} rows: {output_path}")
        return True
