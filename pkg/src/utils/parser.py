import re
import logging
from pathlib import Path
from typing import List, Optional

logger = logging.getLogger(__name__)

_PLAIN = re.compile(r"^\d+$")
_SCIENTIFIC = re.compile(r"^(\d+)[eE](\d+)$")
_POWER = re.compile(r"^(\d+)\s*(?:\^|\*\*)\s*(\d+)$")


class ValueParser:
    """Parsing of the integer, list and grid values accepted on the command line."""

    @staticmethod
    def clean_text(text: Optional[str]) -> str:
        if not text:
            return ""
        text = text.split("#", 1)[0]
        text = re.sub(r"\s+", " ", text.strip())
        return text.replace("_", "").strip()

    @staticmethod
    def parse_integer(text: str) -> int:
        """Exact integer from '1000000', '1e6', '10^6' or '10**6'."""
        cleaned = ValueParser.clean_text(text)
        if _PLAIN.match(cleaned):
            return int(cleaned)
        match = _SCIENTIFIC.match(cleaned)
        if match:
            return int(match.group(1)) * 10 ** int(match.group(2))
        match = _POWER.match(cleaned)
        if match:
            return int(match.group(1)) ** int(match.group(2))
        raise ValueError(f"not a non-negative integer: {text!r}")

    @staticmethod
    def parse_int_list(text: str) -> List[int]:
        items = [item for item in ValueParser.clean_text(text).split(",") if item.strip()]
        if not items:
            raise ValueError(f"empty list: {text!r}")
        return [ValueParser.parse_integer(item) for item in items]

    @staticmethod
    def parse_float_list(text: str) -> List[float]:
        items = [item.strip() for item in ValueParser.clean_text(text).split(",") if item.strip()]
        if not items:
            raise ValueError(f"empty list: {text!r}")
        return [float(item) for item in items]

    @staticmethod
    def ratio_grid(x_max: int, ratio: float, start: int = 10 ** 3) -> List[int]:
        """Geometric grid start, start*ratio, ... below x_max, then x_max."""
        if ratio <= 1:
            raise ValueError(f"grid ratio must exceed 1, got {ratio}")
        grid: List[int] = []
        value = float(start)
        while round(value) < x_max:
            x = int(round(value))
            if not grid or x > grid[-1]:
                grid.append(x)
            value *= ratio
        grid.append(x_max)
        return grid

    @staticmethod
    def load_grid_file(filepath: str) -> List[int]:
        """Checkpoint values, one per line; blank lines and # comments are skipped."""
        grid = []
        for line in Path(filepath).read_text().splitlines():
            line = ValueParser.clean_text(line)
            if line:
                grid.append(ValueParser.parse_integer(line))
        logger.debug(f"Loaded {len(grid)} grid values from {filepath}")
        return grid
