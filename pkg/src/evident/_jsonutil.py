"""Shared JSON parsing with line-aware errors."""

from __future__ import annotations

import json

from .errors import ParseError


def parse_document(text: str):
    """json.loads that reports the failing line as a :class:`ParseError`."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None


def require(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)
