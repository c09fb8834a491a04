"""Steps, validated path families, and path statistics.

Paths are written as strings over ``U`` (up), ``D`` (down), ``F`` (black
flat) and ``G`` (green flat).  A :class:`LatticePath` keeps that string as
its canonical form; the per-step view is available through ``steps``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, fields
from typing import Iterator, Union


class Step(str, enum.Enum):
    UP = "U"
    DOWN = "D"
    FLAT_BLACK = "F"
    FLAT_GREEN = "G"

    @property
    def is_flat(self) -> bool:
        return self in (Step.FLAT_BLACK, Step.FLAT_GREEN)


class Family(enum.Enum):
    DYCK = "dyck"
    MOTZKIN = "motzkin"
    BICOLORED = "bicolored"


class Marker(enum.Enum):
    """Sentinel positions outside the stored steps."""

    APPENDED_DOWN = "appended-down"

    def __repr__(self) -> str:
        return f"<{self.value}>"


APPENDED_DOWN = Marker.APPENDED_DOWN

StepIndex = Union[int, Marker]

_ALLOWED = {
    Family.DYCK: frozenset("UD"),
    Family.MOTZKIN: frozenset("UDF"),
    Family.BICOLORED: frozenset("UDFG"),
}
_GRAMMAR = re.compile(r"[UDFG]*")
_STEP_OF = {s.value: s for s in Step}


class PathError(ValueError):
    """Base class for malformed or out-of-family paths.

    ``index`` is the 0-based offending step position when one exists.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class IllegalCharacter(PathError):
    pass


class UnbalancedPath(PathError):
    pass


class NegativePrefix(PathError):
    pass


class FamilyViolation(PathError):
    pass


class NotAnUpstep(PathError):
    pass


class NotAFlatstep(PathError):
    pass


@dataclass(frozen=True)
class LatticePath:
    """A validated path tagged with its family.

    ``size`` is the semilength for Dyck paths and the number of steps
    otherwise.  Construct through :func:`parse_path`, or directly (the
    constructor validates as well).
    """

    text: str
    family: Family
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        _validate(self.text, self.family)
        n = len(self.text) // 2 if self.family is Family.DYCK else len(self.text)
        object.__setattr__(self, "size", n)

    @classmethod
    def _trusted(cls, text: str, family: Family) -> LatticePath:
        # skips validation; callers guarantee membership
        obj = object.__new__(cls)
        object.__setattr__(obj, "text", text)
        object.__setattr__(obj, "family", family)
        n = len(text) // 2 if family is Family.DYCK else len(text)
        object.__setattr__(obj, "size", n)
        return obj

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(_STEP_OF[c] for c in self.text)

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __str__(self) -> str:
        return self.text


def _validate(text: str, family: Family) -> None:
    if not _GRAMMAR.fullmatch(text):
        i = next(i for i, c in enumerate(text) if c not in "UDFG")
        raise IllegalCharacter(f"illegal character {text[i]!r}", i)
    allowed = _ALLOWED[family]
    for i, c in enumerate(text):
        if c not in allowed:
            raise FamilyViolation(
                f"step {c!r} is not allowed in a {family.value} path", i)
    h = 0
    for i, c in enumerate(text):
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
            if h < 0:
                raise NegativePrefix("path dips below ground level", i)
    if h != 0:
        raise UnbalancedPath(
            f"path ends at height {h}; number of U and D steps differ")


def parse_path(text: str, family: Family | str) -> LatticePath:
    """Parse ``text`` as a member of ``family``; raises a PathError subclass."""
    return LatticePath(text, Family(family))


def render_path(path: LatticePath) -> str:
    return path.text


def heights(path: LatticePath | str) -> list[int]:
    """Heights of the path's vertices, starting with 0 (length ``len + 1``)."""
    text = path if isinstance(path, str) else path.text
    out = [0]
    h = 0
    for c in text:
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
        out.append(h)
    return out


def _matching_down(text: str, i: int) -> int:
    h = 0
    for j in range(i, len(text)):
        c = text[j]
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
            if h == 0:
                return j
    raise ValueError(f"upstep at {i} has no matching downstep")


def matching_downstep(path: LatticePath, i: int) -> int:
    """Index of the first downstep east of the upstep at ``i`` that returns
    to the upstep's starting height."""
    text = path.text
    if not 0 <= i < len(text) or text[i] != "U":
        raise NotAnUpstep(f"step {i} is not an upstep", i if 0 <= i < len(text) else None)
    return _matching_down(text, i)


def matching_pairs(path: LatticePath) -> dict[int, int]:
    """Map every upstep index to its matching downstep index."""
    pairs = {}
    stack = []
    for j, c in enumerate(path.text):
        if c == "U":
            stack.append(j)
        elif c == "D":
            pairs[stack.pop()] = j
    return pairs


def _associated_down(text: str, i: int) -> StepIndex:
    # first D starting at the flat's height; depth counts relative height
    depth = 0
    for j in range(i + 1, len(text)):
        c = text[j]
        if c == "D":
            if depth == 0:
                return j
            depth -= 1
        elif c == "U":
            depth += 1
    return APPENDED_DOWN


def associated_downstep(path: LatticePath, i: int) -> StepIndex:
    """Associated downstep of the flat at ``i``.

    That is the first downstep after ``i`` whose initial point lies at the
    flat's height.  Returns :data:`APPENDED_DOWN` when only the virtual
    downstep appended after the path qualifies.
    """
    text = path.text
    if not 0 <= i < len(text) or text[i] not in "FG":
        raise NotAFlatstep(f"step {i} is not a flatstep", i if 0 <= i < len(text) else None)
    return _associated_down(text, i)


def descent_lengths(path: LatticePath | str) -> list[int]:
    """Lengths of the maximal runs of downsteps, left to right."""
    text = path if isinstance(path, str) else path.text
    return [len(run) for run in re.findall("D+", text)]


def count_pattern(text: str, pattern: str) -> int:
    """Occurrences of ``pattern`` as consecutive steps, overlaps included."""
    m = len(pattern)
    return sum(1 for i in range(len(text) - m + 1) if text.startswith(pattern, i))


@dataclass(frozen=True)
class PathStatistics:
    udu_count: int = 0
    ddu_count: int = 0
    uuu_count: int = 0
    green_flat_count: int = 0
    black_flat_count: int = 0
    down_count: int = 0
    descent_count: int = 0
    short_nonterminal_descent_count: int = 0
    ground_flat_count: int = 0

    def items(self) -> list[tuple[str, int]]:
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


def compute_statistics(path: LatticePath | str) -> PathStatistics:
    text = path if isinstance(path, str) else path.text
    runs = list(re.finditer("D+", text))
    short_nonterminal = sum(
        1 for m in runs if m.end() - m.start() == 1 and m.end() != len(text))
    ground = 0
    h = 0
    for c in text:
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
        elif h == 0:
            ground += 1
    return PathStatistics(
        udu_count=count_pattern(text, "UDU"),
        ddu_count=count_pattern(text, "DDU"),
        uuu_count=count_pattern(text, "UUU"),
        green_flat_count=text.count("G"),
        black_flat_count=text.count("F"),
        down_count=text.count("D"),
        descent_count=len(runs),
        short_nonterminal_descent_count=short_nonterminal,
        ground_flat_count=ground,
    )


def ascii_art(path: LatticePath | str) -> str:
    """Render a path as rows of ``/``, ``\\``, ``_`` and ``~`` characters."""
    text = path if isinstance(path, str) else path.text
    if not text:
        return ""
    hs = heights(text)
    # each step is drawn in the unit band just above its lower endpoint
    levels = [hs[j + 1] if c == "D" else hs[j] for j, c in enumerate(text)]
    top = max(levels)
    rows = [[" "] * len(text) for _ in range(top + 1)]
    glyph = {"U": "/", "D": "\\", "F": "_", "G": "~"}
    for j, c in enumerate(text):
        rows[top - levels[j]][j] = glyph[c]
    return "\n".join("".join(r).rstrip() for r in rows)
