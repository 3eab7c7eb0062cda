"""Colored Motzkin walks: modeling, validation, enumeration, area.

A walk of length L over ``s`` colors is stored as a tuple of step digits
using the encoding

    0           -> flat step,
    k  (1..s)   -> up step of color k,
    s+k (1..s)  -> down step of color k,

so the local alphabet has 2s+1 symbols and a digit tuple doubles as a
mixed-radix basis index for the spin chain.  Areas are kept in exact
half-integer units (``2 * area`` is an integer) because walk weights carry
exponents like t^(k+1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

DEFAULT_ENUMERATION_CAP = 14

FLAT = 0


class InvalidWalkError(ValueError):
    """Raised when an operation requires a valid (half-)walk."""


class EnumerationCapError(ValueError):
    """Raised when an enumeration request exceeds the configured cap."""


def up(color: int = 1) -> int:
    return color


def down(color: int, s: int) -> int:
    return s + color


def is_up(digit: int, s: int) -> bool:
    return 1 <= digit <= s


def is_down(digit: int, s: int) -> bool:
    return s + 1 <= digit <= 2 * s


def step_color(digit: int, s: int) -> int | None:
    """Color of an up/down digit, None for flat."""
    if digit == FLAT:
        return None
    return digit if digit <= s else digit - s


@dataclass(frozen=True)
class ColoredWalk:
    """A sequence of colored steps over an alphabet of ``2s+1`` symbols.

    Immutable and hashable, so walks can key weight tables.
    """

    steps: tuple[int, ...]
    s: int = 1

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"need at least one color, got s={self.s}")
        for d in self.steps:
            if not 0 <= d <= 2 * self.s:
                raise ValueError(f"step digit {d} out of range for s={self.s}")

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """Prefix-sum height profile, length ``len(self)+1``, starting at 0."""
        h = 0
        out = [0]
        for d in self.steps:
            if is_up(d, self.s):
                h += 1
            elif is_down(d, self.s):
                h -= 1
            out.append(h)
        return out

    def final_height(self) -> int:
        return self.heights()[-1]

    def __str__(self) -> str:
        return format_walk(self)


def is_valid(walk: ColoredWalk, require_complete: bool = True) -> bool:
    """True iff the height never dips below zero, colors bracket-match,
    and (when ``require_complete``) the final height is zero.

    Total function: malformed color matching or negative heights return
    False rather than raising.
    """
    h = 0
    stack: list[int] = []
    for d in walk.steps:
        if is_up(d, walk.s):
            h += 1
            stack.append(step_color(d, walk.s))
        elif is_down(d, walk.s):
            h -= 1
            if h < 0:
                return False
            if not stack or stack.pop() != step_color(d, walk.s):
                return False
    if require_complete and h != 0:
        return False
    return True


def area(walk: ColoredWalk) -> Fraction:
    """Area under the walk in exact half-integer units.

    Each step contributes the trapezoid (h_before + h_after) / 2; the
    all-flat walk has area 0.
    """
    if not is_valid(walk, require_complete=False):
        raise InvalidWalkError(f"cannot take the area of invalid walk {walk.steps}")
    return Fraction(twice_area(walk), 2)


def twice_area(walk: ColoredWalk) -> int:
    """2 * area as an exact integer (no validity check)."""
    h = 0
    acc = 0
    for d in walk.steps:
        if is_up(d, walk.s):
            acc += 2 * h + 1
            h += 1
        elif is_down(d, walk.s):
            acc += 2 * h - 1
            h -= 1
        else:
            acc += 2 * h
    return acc


def matched_pairs(walk: ColoredWalk) -> tuple[list[tuple[int, int]], list[int]]:
    """Bracket-matching pairing of a valid half-walk.

    Returns ``(pairs, unmatched)`` where ``pairs`` lists (up_index,
    down_index) in order of the closing step and ``unmatched`` lists the
    indices of up steps left open, left to right.
    """
    if not is_valid(walk, require_complete=False):
        raise InvalidWalkError(f"cannot pair steps of invalid walk {walk.steps}")
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    for i, d in enumerate(walk.steps):
        if is_up(d, walk.s):
            stack.append(i)
        elif is_down(d, walk.s):
            pairs.append((stack.pop(), i))
    return pairs, stack


def enumerate_walks(
    length: int,
    s: int = 1,
    end_height: int = 0,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[ColoredWalk]:
    """Yield every valid colored (half-)walk of ``length`` steps ending at
    ``end_height``, exactly once, in lexicographic digit order.

    The alphabet grows as (2s+1)^length, so lengths above ``cap`` are
    rejected.
    """
    if length > cap:
        raise EnumerationCapError(
            f"length {length} exceeds enumeration cap {cap}; raise cap explicitly"
        )
    if end_height < 0 or end_height > length:
        return

    prefix: list[int] = []
    stack: list[int] = []

    def rec(pos: int, h: int) -> Iterator[ColoredWalk]:
        if pos == length:
            if h == end_height:
                yield ColoredWalk(tuple(prefix), s)
            return
        remaining = length - pos
        if abs(h - end_height) > remaining:
            return
        # flat
        prefix.append(FLAT)
        yield from rec(pos + 1, h)
        prefix.pop()
        # up, every color
        for k in range(1, s + 1):
            prefix.append(k)
            stack.append(k)
            yield from rec(pos + 1, h + 1)
            stack.pop()
            prefix.pop()
        # down, only the matching color
        if stack:
            k = stack[-1]
            prefix.append(s + k)
            c = stack.pop()
            yield from rec(pos + 1, h - 1)
            stack.append(c)
            prefix.pop()

    yield from rec(0, 0)


# --- serialization ----------------------------------------------------------

def format_walk(walk: ColoredWalk) -> str:
    """Compact string form: '0lr' characters for s=1, space-separated
    '0', 'l<k>', 'r<k>' tokens otherwise."""
    if walk.s == 1:
        return "".join("0lr"[0 if d == 0 else (1 if d == 1 else 2)] for d in walk.steps)
    toks = []
    for d in walk.steps:
        if d == FLAT:
            toks.append("0")
        elif is_up(d, walk.s):
            toks.append(f"l{d}")
        else:
            toks.append(f"r{d - walk.s}")
    return " ".join(toks)


def parse_walk(text: str, s: int = 1) -> ColoredWalk:
    """Inverse of :func:`format_walk`; also accepts spaced tokens for s=1."""
    text = text.strip()
    if " " in text:
        tokens = text.split()
    elif s == 1:
        tokens = list(text)
    else:
        raise ValueError("walks with s > 1 use space-separated tokens")
    steps = []
    for tok in tokens:
        if tok == "0":
            steps.append(FLAT)
            continue
        kind, rest = tok[0], tok[1:]
        color = int(rest) if rest else 1
        if kind == "l" and 1 <= color <= s:
            steps.append(up(color))
        elif kind == "r" and 1 <= color <= s:
            steps.append(down(color, s))
        else:
            raise ValueError(f"bad walk token {tok!r} for s={s}")
    return ColoredWalk(tuple(steps), s)
