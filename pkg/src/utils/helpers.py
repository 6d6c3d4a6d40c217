"""Helper functions shared by the CLI and the report writers."""
import json
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Tuple, Union

from loguru import logger

from src.parsers.edgelist_parser import EDGELIST_EXTENSIONS
from src.parsers.graph6_parser import GRAPH6_EXTENSIONS

Number = Union[int, Fraction, Decimal]


def get_file_type(file_path: str) -> str:
    """Get the type of graph file (graph6, edgelist, or unknown) from its name."""
    file_path = str(file_path).lower()
    if file_path.endswith(GRAPH6_EXTENSIONS):
        return "graph6"
    elif file_path.endswith(EDGELIST_EXTENSIONS):
        return "edgelist"
    return "unknown"


def sniff_format(text: str) -> str:
    """Guess the format of graph text: an ``n m`` first line means edgelist."""
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) == 2 and all(f.lstrip('-').isdigit() for f in fields):
            return "edgelist"
        return "graph6"
    return "graph6"


def encode_number(value: Number, with_decimal: bool = False, digits: int = 30) -> Any:
    """JSON form of an exact or high-precision number.

    Integers stay integers; fractions become ``{"num", "den"}`` (plus a
    ``decimal`` rendering when asked); decimals become ``{"decimal"}``.
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1 and not with_decimal:
            return value.numerator
        encoded = {"num": value.numerator, "den": value.denominator}
        if with_decimal:
            encoded["decimal"] = format_decimal(Decimal(value.numerator) / Decimal(value.denominator), digits)
        return encoded
    if isinstance(value, Decimal):
        return {"decimal": format_decimal(value, digits)}
    if isinstance(value, float):
        return value
    raise TypeError(f"Cannot encode {type(value).__name__} as a number")


def format_decimal(value: Decimal, digits: int = 30) -> str:
    """Render ``value`` with at most ``digits`` significant digits."""
    return f"{value:.{digits}g}"


def number_to_text(value: Number) -> str:
    """Short human-readable form used in CSV cells and log lines."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, Decimal):
        return format_decimal(value, 20)
    return str(value)


def canonical_json(data: Any, indent: Optional[int] = 2) -> str:
    """Deterministic JSON with sorted keys; ``indent=None`` gives one line."""
    return json.dumps(data, sort_keys=True, indent=indent)


def write_text(text: str, output_path: Union[str, Path]) -> bool:
    """Write ``text`` to ``output_path``, creating parent directories."""
    try:
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(text, encoding='utf-8')
        return True
    except Exception as e:
        logger.error(f"Error writing {output_path}: {e}")
        return False


def parse_int_range(text: str) -> List[int]:
    """Parse ``a..b`` (inclusive) or a single integer.

    Raises:
        ValueError: If the text is not a range of integers
    """
    if '..' in text:
        low, high = text.split('..', 1)
        low_i, high_i = int(low), int(high)
        if high_i < low_i:
            raise ValueError(f"Empty range {text!r}")
        return list(range(low_i, high_i + 1))
    return [int(text)]


def parse_int_tuple(text: str, size: int) -> Tuple[int, ...]:
    """Parse ``size`` comma-separated integers."""
    fields = [f.strip() for f in text.split(',')]
    if len(fields) != size:
        raise ValueError(f"Expected {size} comma-separated integers, got {text!r}")
    return tuple(int(f) for f in fields)
