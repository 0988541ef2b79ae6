"""Text grammars for plain and colored partitions.

Plain partitions join their parts with "+", for example "3+2+1"; the
empty partition is written "0".  The written sequence must already be
weakly decreasing.  Colored partitions attach "r" or "g" to every part,
for example "2r+1g"; the parts may appear in any order and are read as a
pair of multisets.  Canonical emission lists parts by size, largest
first, with red before green on equal sizes.
"""

from __future__ import annotations

import re

from .partitions import Parts, TwoColorPartition, as_partition

_COLORED_PART = re.compile(r"(\d+)([rg])\Z")


class PartitionSyntaxError(ValueError):
    """Input text does not conform to the partition grammar."""


def parse_partition(text: str) -> Parts:
    """Parse the plain grammar; rejects non-monotone sequences."""
    if text == "0":
        return ()
    parts = []
    for token in text.split("+"):
        if not token.isdigit():
            raise PartitionSyntaxError(f"bad part {token!r} in {text!r}")
        parts.append(int(token))
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise PartitionSyntaxError(str(exc)) from None


def format_partition(p: Parts) -> str:
    """Emit the plain grammar; the empty partition becomes "0"."""
    p = as_partition(p)
    return "+".join(str(x) for x in p) if p else "0"


def parse_two_color(text: str) -> TwoColorPartition:
    """Parse the colored grammar into a two-color partition."""
    if text == "0":
        return TwoColorPartition((), ())
    red, green = [], []
    for token in text.split("+"):
        match = _COLORED_PART.match(token)
        if match is None:
            raise PartitionSyntaxError(f"bad colored part {token!r} in {text!r}")
        size = int(match.group(1))
        if size < 1:
            raise PartitionSyntaxError(f"colored parts must be positive: {token!r}")
        (red if match.group(2) == "r" else green).append(size)
    return TwoColorPartition(
        tuple(sorted(red, reverse=True)), tuple(sorted(green, reverse=True))
    )


def format_two_color(two_color: TwoColorPartition) -> str:
    """Emit the canonical colored form; the empty partition becomes "0"."""
    merged = [(-s, 0, s, "r") for s in two_color.red]
    merged += [(-s, 1, s, "g") for s in two_color.green]
    if not merged:
        return "0"
    return "+".join(f"{size}{letter}" for _, _, size, letter in sorted(merged))


def two_color_to_dict(two_color: TwoColorPartition) -> dict[str, list[int]]:
    """Structured form: {"red": [...], "green": [...]}, parts descending."""
    return {"red": list(two_color.red), "green": list(two_color.green)}


def two_color_from_dict(data: dict[str, list[int]]) -> TwoColorPartition:
    """Inverse of `two_color_to_dict`; unknown keys are rejected."""
    extra = set(data) - {"red", "green"}
    if extra:
        raise PartitionSyntaxError(f"unexpected keys: {sorted(extra)}")
    try:
        return TwoColorPartition(
            tuple(data.get("red", ())), tuple(data.get("green", ()))
        )
    except ValueError as exc:
        raise PartitionSyntaxError(str(exc)) from None
