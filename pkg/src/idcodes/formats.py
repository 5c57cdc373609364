"""Reading and writing code files.

A code file is UTF-8 text::

    idcode v1
    radices: 2 2 2
    code:
    0 0 0
    0 0 1

``#`` starts a comment and blank lines are ignored.  The writer emits
codewords in canonical index order, so writing a parsed canonical file
reproduces it byte for byte.
"""

from __future__ import annotations

import warnings

from .codesets import Code
from .errors import FormatError, IdCodesError
from .hamming import DEFAULT_VERTEX_CAP, Radices, Vertex

HEADER = "idcode v1"


class CodeFileWarning(UserWarning):
    """Non-fatal oddity in a code file (duplicate or missing codewords)."""


def parse_code_file(text: str, cap: int = DEFAULT_VERTEX_CAP) -> Code:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines or lines[0][1] != HEADER:
        raise FormatError(f"first line must be {HEADER!r}")
    if len(lines) < 2 or not lines[1][1].startswith("radices:"):
        raise FormatError("second line must be 'radices: m1 m2 ... mn'")
    if len(lines) < 3 or lines[2][1] != "code:":
        raise FormatError("third line must be 'code:'")
    try:
        r = Radices.parse(lines[1][1][len("radices:"):], cap=cap)
    except IdCodesError as exc:
        raise FormatError(f"line {lines[1][0]}: {exc}") from None

    seen: set[int] = set()
    for lineno, line in lines[3:]:
        try:
            v = Vertex(r, tuple(int(x) for x in line.split()))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc if isinstance(exc, IdCodesError) else 'bad integer'}") from None
        if v.index in seen:
            warnings.warn(f"line {lineno}: duplicate codeword {v} ignored", CodeFileWarning, stacklevel=2)
        seen.add(v.index)
    if not seen:
        warnings.warn("code file has no codewords", CodeFileWarning, stacklevel=2)
    return Code.from_indices(r, seen)


def write_code_file(code: Code) -> str:
    out = [HEADER, f"radices: {code.radices}", "code:"]
    out.extend(" ".join(str(c) for c in v.coords) for v in code)
    return "\n".join(out) + "\n"
