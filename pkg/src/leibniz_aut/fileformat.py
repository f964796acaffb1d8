"""Line-based algebra files.

::

    # comment
    field = F5
    dim = 3
    bracket 1 1 = 3:1
    bracket 1 2 = 3:1 + 2:-1/2

``field`` and ``dim`` must precede the first ``bracket`` line.  Indices are
1-based; unlisted brackets are zero.
"""

from __future__ import annotations

import re

from .algebra import Algebra
from .errors import BadField, BadIndex, DuplicateEntry, ParseError
from .linalg import Field

_ASSIGN = re.compile(r"^(field|dim)\s*=\s*(\S+)$")
_BRACKET = re.compile(r"^bracket\s+(\S+)\s+(\S+)\s*=\s*(.+)$")
_TERM = re.compile(r"^\s*(\S+)\s*:\s*(\S+)\s*$")


def _index(text: str, dim: int, lineno: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"bad index {text!r}", lineno) from None
    if not 1 <= value <= dim:
        raise BadIndex(f"index {value} outside 1..{dim}", lineno)
    return value


def parse_algebra_file(text: str) -> Algebra:
    field: Field | None = None
    dim: int | None = None
    brackets: dict[tuple[int, int], dict[int, object]] = {}
    seen: set[tuple[int, int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _ASSIGN.match(line)
        if m:
            key, value = m.groups()
            if key == "field":
                if field is not None:
                    raise ParseError("field declared twice", lineno)
                try:
                    field = Field.parse(value)
                except BadField as exc:
                    raise BadField(str(exc), lineno) from None
            else:
                if dim is not None:
                    raise ParseError("dim declared twice", lineno)
                if not value.isdigit() or int(value) < 1:
                    raise ParseError(f"bad dimension {value!r}", lineno)
                dim = int(value)
            continue
        m = _BRACKET.match(line)
        if not m:
            raise ParseError(f"unrecognized line {raw.strip()!r}", lineno)
        if field is None or dim is None:
            raise ParseError("bracket before field and dim are declared", lineno)
        i, j = _index(m.group(1), dim, lineno), _index(m.group(2), dim, lineno)
        for term in m.group(3).split("+"):
            tm = _TERM.match(term)
            if not tm:
                raise ParseError(f"bad term {term.strip()!r} (expected k:c)", lineno)
            k = _index(tm.group(1), dim, lineno)
            if (i, j, k) in seen:
                raise DuplicateEntry(f"bracket {i} {j} -> {k} given twice", lineno)
            seen.add((i, j, k))
            try:
                coeff = field.parse_scalar(tm.group(2))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(str(exc), lineno) from None
            brackets.setdefault((i, j), {})[k] = coeff

    if field is None:
        raise ParseError("missing field declaration")
    if dim is None:
        raise ParseError("missing dim declaration")
    return Algebra.from_brackets(field, dim, brackets)


def render_algebra(alg: Algebra) -> str:
    """Canonical file text: nonzero brackets in (i, j) order, terms by k."""
    lines = [f"field = {alg.field}", f"dim = {alg.dim}"]
    for (i, j), terms in sorted(alg.nonzero_brackets().items()):
        body = " + ".join(f"{k}:{alg.field.render(c)}" for k, c in sorted(terms.items()))
        lines.append(f"bracket {i} {j} = {body}")
    return "\n".join(lines) + "\n"
