"""argparse value types shared by the CLI subcommands."""

import argparse
from typing import Tuple

RANGE_SEPARATOR = ".."


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def parse_range(text: str) -> Tuple[int, int]:
    """``"A..B"`` (or a single ``"A"``) as an inclusive, nonempty range of positive integers."""
    low_text, sep, high_text = text.partition(RANGE_SEPARATOR)
    low = positive_int(low_text)
    high = positive_int(high_text) if sep else low
    if high < low:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return low, high
