"""Text formats shared by the CLI: the complex-number grammar, delimited
output and JSON envelopes.

Complex numbers use ``a+bi`` tokens: an optional real part, an optional
imaginary part ending in ``i``, standard float syntax for both (``1``,
``-2.5i``, ``1+2i``, ``3.1e-2-4i``).  States are comma-separated token
lists.
"""

from __future__ import annotations

import json
from typing import Sequence

import numpy as np

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Malformed complex number or state string."""


def parse_complex(token: str) -> complex:
    """Parse one ``a+bi`` token."""
    text = token.strip().replace(" ", "")
    if not text:
        raise ParseError("empty complex token")
    try:
        return complex(text.replace("i", "j").replace("I", "j"))
    except ValueError as exc:
        raise ParseError(f"cannot parse complex number {token!r}") from exc


def format_complex(z: complex) -> str:
    """Shortest round-tripping ``a+bi`` form of ``z``."""
    re, im = float(np.real(z)), float(np.imag(z))
    if im == 0.0:
        return repr(re)
    imag = f"{repr(im)}i" if im < 0 else f"+{repr(im)}i"
    if re == 0.0:
        return imag.lstrip("+")
    return f"{repr(re)}{imag}"


def parse_state(text: str) -> np.ndarray:
    """Parse a comma-separated amplitude list into a complex vector."""
    tokens = [t for t in text.split(",")]
    if len(tokens) < 2:
        raise ParseError("a state needs at least two amplitudes")
    return np.array([parse_complex(t) for t in tokens])


def fmt(x) -> str:
    """Stable numeric formatting for delimited output."""
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    return format(float(x), ".12g")


def csv_lines(name: str, params: dict, columns: Sequence[str], rows, footer: dict = None):
    """Render one figure/table as CSV lines with a schema header comment."""
    head = " ".join(f"{k}={fmt(v)}" for k, v in params.items())
    yield f"# cpgeom {name} schema={SCHEMA_VERSION}" + (f" {head}" if head else "")
    yield ",".join(columns)
    for row in rows:
        yield ",".join(fmt(v) for v in row)
    for key, value in (footer or {}).items():
        yield f"# {key}={fmt(value)}"


def json_payload(**fields) -> str:
    """JSON envelope carrying the schema version."""
    return json.dumps({"schema_version": SCHEMA_VERSION, **fields}, indent=2)
