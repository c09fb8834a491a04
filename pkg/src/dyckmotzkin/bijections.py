"""The two Dyck/Motzkin bijections, their inverses and restrictions.

``t1`` sends UUU-free Dyck n-paths to Motzkin n-paths.  ``t2`` sends
bicolored Motzkin n-paths to Dyck (n+1)-paths, carrying green flats to
UDU occurrences and downsteps to DDU occurrences.  ``std`` is the plain
doubling encoding of bicolored Motzkin paths as Dyck paths.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable

from .paths import (
    APPENDED_DOWN,
    Family,
    LatticePath,
    PathError,
    _associated_down,
    compute_statistics,
    descent_lengths,
    parse_path,
)


class BijectionError(ValueError):
    """Input outside a map's domain, or an image that fails decoding."""


class NotDyck(BijectionError):
    pass


class NotMotzkin(BijectionError):
    pass


class NotBicolored(BijectionError):
    pass


class NotUUUFree(BijectionError):
    pass


class NotDecodable(BijectionError):
    pass


class HasGreenFlat(BijectionError):
    pass


class HasGroundFlat(BijectionError):
    pass


class InternalError(RuntimeError):
    """A structural claim about a map's image was violated."""


def _as_path(path: LatticePath | str, family: Family) -> LatticePath:
    if isinstance(path, LatticePath):
        return path
    return parse_path(path, family)


def _require_dyck(path) -> LatticePath:
    path = _as_path(path, Family.DYCK)
    if path.family is not Family.DYCK:
        raise NotDyck(f"expected a Dyck path, got a {path.family.value} path")
    return path


def _require_bicolored(path) -> LatticePath:
    path = _as_path(path, Family.BICOLORED)
    if path.family is Family.DYCK:
        raise NotBicolored("expected a (bicolored) Motzkin path, got a Dyck path")
    return path


def _require_motzkin(path, error=NotMotzkin) -> LatticePath:
    path = _as_path(path, Family.MOTZKIN)
    if path.family is Family.DYCK:
        raise error("expected a Motzkin path, got a Dyck path")
    if "G" in path.text:
        raise error("Motzkin paths have no green flatsteps")
    return path


# -- t1: UUU-free Dyck n-paths <-> Motzkin n-paths -------------------------

def t1_forward(path: LatticePath | str) -> LatticePath:
    """Collapse each UUD to U, then each remaining UD to F."""
    path = _require_dyck(path)
    text = path.text
    if "UUU" in text:
        raise NotUUUFree("Dyck path contains UUU")
    out = []
    i = 0
    while i < len(text):
        if text[i] == "D":
            out.append("D")
            i += 1
        elif text[i + 1] == "U":
            # UU is always followed by D here
            out.append("U")
            i += 3
        else:
            out.append("F")
            i += 2
    return LatticePath._trusted("".join(out), Family.MOTZKIN)


_T1_EXPAND = {"U": "UUD", "F": "UD", "D": "D"}


def t1_inverse(path: LatticePath | str) -> LatticePath:
    path = _require_motzkin(path)
    return LatticePath._trusted(
        "".join(_T1_EXPAND[c] for c in path.text), Family.DYCK)


# -- std: bicolored Motzkin n-paths <-> Dyck (n+1)-paths -------------------

# green flats go to DU; sending both colors to UD could not be injective
_STD_ENCODE = {"U": "UU", "D": "DD", "F": "UD", "G": "DU"}
_STD_DECODE = {v: k for k, v in _STD_ENCODE.items()}


def std_bijection(path: LatticePath | str) -> LatticePath:
    path = _require_bicolored(path)
    body = "".join(_STD_ENCODE[c] for c in path.text)
    return LatticePath._trusted("U" + body + "D", Family.DYCK)


def std_bijection_inverse(path: LatticePath | str) -> LatticePath:
    path = _require_dyck(path)
    text = path.text
    if not text:
        raise NotDecodable("the empty Dyck path has no preimage")
    body = text[1:-1]
    tokens = "".join(_STD_DECODE[body[i:i + 2]] for i in range(0, len(body), 2))
    try:
        return LatticePath(tokens, Family.BICOLORED)
    except PathError as exc:
        raise NotDecodable(f"decoded steps {tokens!r} are not a path: {exc}") from exc


# -- t2: bicolored Motzkin n-paths <-> Dyck (n+1)-paths --------------------

def _anchors(text: str) -> dict[int, int]:
    """Black flat index -> index of its associated downstep, where the
    appended downstep has index ``len(text)``."""
    out = {}
    for i, c in enumerate(text):
        if c == "F":
            j = _associated_down(text, i)
            out[i] = len(text) if j is APPENDED_DOWN else j
    return out


def _t2_emit(text: str) -> str:
    pending = Counter(_anchors(text).values())
    out = []
    for j, c in enumerate(text + "D"):
        if c == "U" or c == "F":
            out.append("U")
        elif c == "G":
            out.append("UD")
        else:
            out.append("UD" + "D" * pending[j] + "D")
    # drop the appended downstep, which is always the final step
    return "".join(out)[:-1]


def _t2_surgery(text: str, order: Iterable[int]) -> str:
    """Literal rewriting: expand every step, then insert the black flats'
    downsteps one at a time in the given order."""
    n = len(text)
    anchors = _anchors(text)
    order = list(order)
    if sorted(order) != sorted(anchors):
        raise ValueError("flat_order must list each black flat exactly once")
    # cells are (step, tag); tag marks the original downstep of each D image
    cells: list[tuple[str, int | None]] = []
    for j, c in enumerate(text + "D"):
        if c == "U" or c == "F":
            cells.append(("U", None))
        elif c == "G":
            cells += [("U", None), ("D", None)]
        else:
            cells += [("U", None), ("D", None), ("D", j)]
    for i in order:
        target = anchors[i]
        pos = next(p for p, cell in enumerate(cells) if cell[1] == target)
        cells.insert(pos, ("D", None))
    cells = [cell for cell in cells if cell[1] != n]
    return "".join(step for step, _ in cells)


def t2_forward(path: LatticePath | str, flat_order: Iterable[int] | None = None) -> LatticePath:
    """Map a bicolored Motzkin n-path to a Dyck (n+1)-path.

    Ups stay, each downstep (the appended one included) gets a UD placed
    before it, green flats become UD, and each black flat becomes U with a
    D inserted right before its associated downstep.  With ``flat_order``
    (a permutation of the black flat indices) the insertions are performed
    one by one in that order instead of in a single pass.
    """
    path = _require_bicolored(path)
    if flat_order is None:
        out = _t2_emit(path.text)
    else:
        out = _t2_surgery(path.text, flat_order)
    return LatticePath._trusted(out, Family.DYCK)


def t2_inverse(path: LatticePath | str) -> LatticePath:
    """Recover the bicolored Motzkin path from a Dyck (n+1)-path.

    Works on the path with a downstep appended.  Every upstep starts the
    image of one token:

    * ``U D U``: green flat;
    * ``U D D``: downstep, also owning the last D of that descent;
    * ``U U`` whose matching D is interior to a descent: black flat;
    * ``U U`` whose matching D is followed by ``U``: upstep.

    The last token is the appended downstep and is dropped.  Raises
    :class:`NotDecodable` if the steps are not partitioned exactly.
    """
    path = _require_dyck(path)
    if not path.text:
        raise NotDecodable("the empty Dyck path has no preimage")
    e = path.text + "D"
    m = len(e)

    match = {}
    stack = []
    run_start = [0] * m
    run_end = [0] * m
    for j, c in enumerate(e):
        if c == "U":
            stack.append(j)
        else:
            if stack:
                match[stack.pop()] = j
            run_start[j] = run_start[j - 1] if j and e[j - 1] == "D" else j
    for j in range(m - 1, -1, -1):
        if e[j] == "D":
            run_end[j] = run_end[j + 1] if j + 1 < m and e[j + 1] == "D" else j

    owned = [False] * m

    def take(*idx):
        for k in idx:
            if owned[k]:
                raise NotDecodable(f"step {k} claimed twice")
            owned[k] = True

    tokens = []
    for i, c in enumerate(e):
        if c != "U":
            continue
        if e[i + 1] == "D":
            if i + 2 >= m:
                raise NotDecodable(f"upstep {i} starts neither a flat nor a downstep")
            if e[i + 2] == "U":
                tokens.append("G")
                take(i, i + 1)
            else:
                tokens.append("D")
                take(i, i + 1, run_end[i + 1])
        else:
            j = match[i]
            if run_start[j] < j < run_end[j]:
                tokens.append("F")
                take(i, j)
            elif j + 1 < m and e[j + 1] == "U":
                tokens.append("U")
                take(i)
            else:
                raise NotDecodable(f"upstep {i} fits no recapture rule")
    if not all(owned):
        raise NotDecodable(f"step {owned.index(False)} is not accounted for")
    if tokens[-1] != "D":
        raise NotDecodable("the final upstep does not belong to the appended downstep")
    text = "".join(tokens[:-1])
    try:
        return LatticePath(text, Family.BICOLORED)
    except PathError as exc:
        raise NotDecodable(f"recaptured steps {text!r} are not a path: {exc}") from exc


# -- restrictions ----------------------------------------------------------

def restrict_motzkin_to_udu_free(path: LatticePath | str) -> LatticePath:
    """t2 restricted to Motzkin paths; the image is UDU-free."""
    path = _require_motzkin(path, HasGreenFlat)
    return t2_forward(path)


def restrict_udu_free_to_motzkin(path: LatticePath | str) -> LatticePath:
    path = _require_dyck(path)
    out = t2_inverse(path)
    if "G" in out.text:
        raise NotDecodable("Dyck path contains UDU, so its preimage has a green flat")
    return LatticePath._trusted(out.text, Family.MOTZKIN)


def riordan_to_no_short_descent(path: LatticePath | str) -> LatticePath:
    """Motzkin n-path without ground-level flats -> Dyck n-path with no
    descent of length 1."""
    path = _require_motzkin(path)
    if compute_statistics(path).ground_flat_count:
        raise HasGroundFlat("Motzkin path has a flatstep at ground level")
    image = t2_forward(path).text
    if not image.endswith("UD"):
        raise InternalError(f"image {image!r} of {path.text!r} does not end with UD")
    return LatticePath._trusted(image[:-2], Family.DYCK)


def no_short_descent_to_riordan(path: LatticePath | str) -> LatticePath:
    path = _require_dyck(path)
    if 1 in descent_lengths(path):
        raise NotDecodable("Dyck path has a short descent")
    out = t2_inverse(LatticePath._trusted(path.text + "UD", Family.DYCK))
    if "G" in out.text or compute_statistics(out).ground_flat_count:
        raise InternalError(f"preimage {out.text!r} of {path.text!r} is not a Riordan path")
    return LatticePath._trusted(out.text, Family.MOTZKIN)


# -- registry and reports --------------------------------------------------

@dataclass(frozen=True)
class Bijection:
    name: str
    forward: Callable[..., LatticePath]
    inverse: Callable[..., LatticePath]
    domain: Family
    codomain: Family


BIJECTIONS = {
    "t1": Bijection("t1", t1_forward, t1_inverse, Family.DYCK, Family.MOTZKIN),
    "t2": Bijection("t2", t2_forward, t2_inverse, Family.BICOLORED, Family.DYCK),
    "std": Bijection("std", std_bijection, std_bijection_inverse,
                     Family.BICOLORED, Family.DYCK),
    "udu-free": Bijection("udu-free", restrict_motzkin_to_udu_free,
                          restrict_udu_free_to_motzkin, Family.MOTZKIN, Family.DYCK),
    "riordan": Bijection("riordan", riordan_to_no_short_descent,
                         no_short_descent_to_riordan, Family.MOTZKIN, Family.DYCK),
}


@dataclass(frozen=True)
class BijectionReport:
    input: LatticePath
    output: LatticePath
    transported_stats: dict[str, tuple[int, int]]


def report(name: str, path: LatticePath | str, inverse: bool = False) -> BijectionReport:
    """Apply a registered map and pair up the statistics it carries.

    Pairs are ordered (input value, output value).
    """
    bij = BIJECTIONS[name]
    src = _as_path(path, bij.codomain if inverse else bij.domain)
    dst = (bij.inverse if inverse else bij.forward)(src)
    left, right = (dst, src) if inverse else (src, dst)
    ls, rs = compute_statistics(left), compute_statistics(right)
    pairs: dict[str, tuple[int, int]] = {}
    if name in ("t2", "udu-free"):
        pairs["green_flats/udu"] = (ls.green_flat_count, rs.udu_count)
        pairs["downs/ddu"] = (ls.down_count, rs.ddu_count)
    elif name == "t1":
        pairs["semilength/length"] = (left.size, right.size)
    elif name == "std":
        pairs["length/semilength-1"] = (left.size, right.size - 1)
    elif name == "riordan":
        pairs["ground_flats/short_descents"] = (
            ls.ground_flat_count, descent_lengths(right).count(1))
    if inverse:
        pairs = {k: (b, a) for k, (a, b) in pairs.items()}
    return BijectionReport(src, dst, pairs)
