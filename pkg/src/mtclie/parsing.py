"""Parsers for the small textual grammars used on the command line.

Group spec:     ``C3``, ``B5xA1``, ``A1xA1xA1``
Representation: ``[0,0,1]``, ``[1,0,0]*[1]``, ``[1,0,0]+[1,0,0]^d``

Errors carry the offending input and a caret marking the position.
"""

from __future__ import annotations

import re

from .roots import GroupSpec, SimpleLieType
from .reps import FactorRep, RepExpr, Summand, pad_summand


class ParseError(ValueError):
    """A syntax or validity error in a group or representation string."""

    def __init__(self, text: str, pos: int, message: str) -> None:
        self.text = text
        self.pos = pos
        self.message = message
        caret = " " * pos + "^"
        super().__init__(f"{message}\n  {text}\n  {caret}")


_FACTOR_RE = re.compile(r"([A-G])([0-9]+)")


def parse_group(text: str) -> GroupSpec:
    """Parse ``SeriesRank`` factors joined by ``x`` into a GroupSpec."""
    s = text.strip()
    if not s:
        raise ParseError(text, 0, "empty group spec")
    offset = len(text) - len(text.lstrip())
    factors = []
    pos = 0
    while True:
        m = _FACTOR_RE.match(s, pos)
        if not m:
            raise ParseError(
                text, offset + pos, "expected a factor like 'C3' or 'A1'"
            )
        series, rank = m.group(1), int(m.group(2))
        try:
            factors.append(SimpleLieType(series, rank))
        except ValueError as e:
            raise ParseError(text, offset + pos, str(e)) from None
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "x":
            raise ParseError(text, offset + pos, "expected 'x' between factors")
        pos += 1
    return GroupSpec(tuple(factors))


def parse_rep(text: str, group: GroupSpec) -> RepExpr:
    """Parse a sum of tensor products of bracketed label vectors.

    Tensor factors bind tighter than sums; ``^d`` dualizes the preceding
    factor.  A summand may name fewer tensor factors than the group has;
    missing ones are filled with trivial representations on the right.
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise ParseError(text, 0, "empty representation")
    pos = 0
    summands: list[tuple[int, Summand]] = []

    def parse_factor() -> FactorRep:
        nonlocal pos
        if pos >= len(s) or s[pos] != "[":
            raise ParseError(text, offset + pos, "expected '[' starting a label list")
        end = s.find("]", pos)
        if end < 0:
            raise ParseError(text, offset + pos, "unclosed '['")
        body = s[pos + 1 : end]
        labels = []
        for i, tok in enumerate(body.split(",")):
            tok = tok.strip()
            if not re.fullmatch(r"[0-9]+", tok):
                raise ParseError(
                    text, offset + pos + 1, f"bad label {tok!r}; labels are nonnegative integers"
                )
            labels.append(int(tok))
        pos = end + 1
        dual = False
        if s.startswith("^", pos):
            if not s.startswith("^d", pos):
                raise ParseError(text, offset + pos, "expected '^d'")
            dual = True
            pos += 2
        return FactorRep(tuple(labels), dual)

    while True:
        start = pos
        factors = [parse_factor()]
        while pos < len(s) and s[pos] == "*":
            pos += 1
            factors.append(parse_factor())
        try:
            summand = pad_summand(group, factors)
            probe = RepExpr(group, ((1, summand),))
        except ValueError as e:
            raise ParseError(text, offset + start, str(e)) from None
        for i, (mult, prev) in enumerate(summands):
            if prev == summand:
                summands[i] = (mult + 1, prev)
                break
        else:
            summands.append((1, summand))
        if pos == len(s):
            break
        if s[pos] != "+":
            raise ParseError(text, offset + pos, "expected '+', '*' or end of input")
        pos += 1
    return RepExpr(group, tuple(summands))
