"""Exhaustive path generators, counting sequences and distribution tables."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
import random
from typing import Iterator

from .paths import Family, LatticePath, compute_statistics, descent_lengths

DEFAULT_CAP = 10**7

# Python integers never wrap, so counts are exact at any size.
CountValue = int


class SizeTooLarge(ValueError):
    pass


class KOutOfRange(ValueError):
    pass


_ORDER = str.maketrans("UDFG", "0123")


def token_order_key(text: str) -> str:
    """Sort key realising the step order U < D < F < G."""
    return text.translate(_ORDER)


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")


def catalan(n: int) -> CountValue:
    _check_n(n)
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _motzkin_upto(n: int) -> tuple[int, ...]:
    # (k+2) M_k = (2k+1) M_{k-1} + (3k-3) M_{k-2}
    vals = [1, 1]
    for k in range(2, n + 1):
        num = (2 * k + 1) * vals[k - 1] + (3 * k - 3) * vals[k - 2]
        q, r = divmod(num, k + 2)
        assert r == 0
        vals.append(q)
    return tuple(vals[: n + 1])


def motzkin(n: int) -> CountValue:
    _check_n(n)
    return _motzkin_upto(max(n, 1))[n]


def riordan(n: int) -> CountValue:
    """Motzkin n-paths with no flatstep at ground level."""
    _check_n(n)
    # M_k = R_k + R_{k+1}
    r = 1
    for k in range(n):
        r = motzkin(k) - r
    return r


def family_count(family: Family | str, n: int) -> CountValue:
    family = Family(family)
    if family is Family.DYCK:
        return catalan(n)
    if family is Family.MOTZKIN:
        return motzkin(n)
    return catalan(n + 1)


def _extend(length: int, alphabet: str) -> Iterator[str]:
    # alphabet is already in U < D < F < G order
    up, down = "U" in alphabet, "D" in alphabet
    flats = [c for c in alphabet if c in "FG"]
    buf: list[str] = []

    def rec(h: int, left: int):
        if left == 0:
            yield "".join(buf)
            return
        if up and h + 1 <= left - 1:
            buf.append("U")
            yield from rec(h + 1, left - 1)
            buf.pop()
        if down and h > 0:
            buf.append("D")
            yield from rec(h - 1, left - 1)
            buf.pop()
        if h <= left - 1:
            for c in flats:
                buf.append(c)
                yield from rec(h, left - 1)
                buf.pop()

    return rec(0, length)


def generate_texts(family: Family | str, n: int, cap: int | None = DEFAULT_CAP) -> Iterator[str]:
    """Like :func:`generate_paths` but yields the bare step strings."""
    family = Family(family)
    _check_n(n)
    total = family_count(family, n)
    if cap is not None and total > cap:
        raise SizeTooLarge(
            f"{total} {family.value} paths of size {n} exceeds the cap of {cap}")
    if family is Family.DYCK:
        return _extend(2 * n, "UD")
    if family is Family.MOTZKIN:
        return _extend(n, "UDF")
    return _extend(n, "UDFG")


def generate_paths(family: Family | str, n: int, cap: int | None = DEFAULT_CAP) -> Iterator[LatticePath]:
    """Every path of ``family`` and size ``n`` once, in lexicographic order
    with U < D < F < G."""
    family = Family(family)
    return (LatticePath._trusted(t, family) for t in generate_texts(family, n, cap))


@lru_cache(maxsize=None)
def _completions(h: int, left: int, flats: int) -> int:
    """Ways to finish a path from height ``h`` with ``left`` steps."""
    if h > left:
        return 0
    if left == 0:
        return 1
    total = _completions(h + 1, left - 1, flats) + flats * _completions(h, left - 1, flats)
    if h > 0:
        total += _completions(h - 1, left - 1, flats)
    return total


def random_path(family: Family | str, n: int, rng: random.Random | None = None) -> LatticePath:
    """A uniformly random path of ``family`` and size ``n``."""
    family = Family(family)
    _check_n(n)
    rng = rng or random.Random()
    if family is Family.DYCK:
        length, alphabet = 2 * n, "UD"
    elif family is Family.MOTZKIN:
        length, alphabet = n, "UDF"
    else:
        length, alphabet = n, "UDFG"
    flats = len(alphabet) - 2
    out = []
    h = 0
    for left in range(length, 0, -1):
        weights = {
            c: _completions(h + (c == "U") - (c == "D"), left - 1, flats)
            if c != "D" or h > 0 else 0
            for c in alphabet
        }
        c = rng.choices(alphabet, weights=[weights[c] for c in alphabet])[0]
        h += (c == "U") - (c == "D")
        out.append(c)
    return LatticePath._trusted("".join(out), family)


def formula_udu(n: int, k: int) -> CountValue:
    """Dyck n-paths with exactly k UDUs: C(n-1, k) * M(n-1-k)."""
    if n < 1 or not 0 <= k <= n - 1:
        raise KOutOfRange(f"need n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")
    return comb(n - 1, k) * motzkin(n - 1 - k)


def formula_ddu(n: int, k: int) -> CountValue:
    """Dyck n-paths with exactly k DDUs: C(n-1, 2k) * 2^(n-1-2k) * Catalan(k)."""
    if n < 1 or not 0 <= 2 * k <= n - 1:
        raise KOutOfRange(f"need n >= 1 and 0 <= 2k <= n-1, got n={n}, k={k}")
    return comb(n - 1, 2 * k) * 2 ** (n - 1 - 2 * k) * catalan(k)


FORMULAS = {"udu": formula_udu, "ddu": formula_ddu}


@dataclass(frozen=True)
class DistributionRow:
    n: int
    k: int
    brute: CountValue
    formula: CountValue

    @property
    def ok(self) -> bool:
        return self.brute == self.formula


def brute_distribution(statistic: str, n: int, cap: int | None = DEFAULT_CAP) -> dict[int, int]:
    attr = f"{statistic.lower()}_count"
    counts: dict[int, int] = {}
    for text in generate_texts(Family.DYCK, n, cap):
        k = getattr(compute_statistics(text), attr)
        counts[k] = counts.get(k, 0) + 1
    return counts


def distribution_table(statistic: str, n: int, cap: int | None = DEFAULT_CAP) -> list[DistributionRow]:
    """Brute-force and closed-form counts of Dyck n-paths by UDU or DDU
    occurrences, one row per k with a nonzero count on either side."""
    statistic = statistic.lower()
    formula = FORMULAS[statistic]
    if n < 1:
        raise ValueError(f"distribution tables need n >= 1, got {n}")
    brute = brute_distribution(statistic, n, cap)
    rows = []
    for k in range(max(max(brute), n - 1) + 1):
        try:
            f = formula(n, k)
        except KOutOfRange:
            f = 0
        b = brute.get(k, 0)
        if b or f:
            rows.append(DistributionRow(n, k, b, f))
    return rows


def format_table(rows: list[DistributionRow], header: bool = True) -> str:
    lines = ["n\tk\tbrute\tformula\tok"] if header else []
    for r in rows:
        lines.append(f"{r.n}\t{r.k}\t{r.brute}\t{r.formula}\t{'PASS' if r.ok else 'FAIL'}")
    return "\n".join(lines)


def count_uuu_free(n: int, cap: int | None = DEFAULT_CAP) -> CountValue:
    return sum(1 for t in generate_texts(Family.DYCK, n, cap) if "UUU" not in t)


def count_no_short_descent(n: int, cap: int | None = DEFAULT_CAP) -> CountValue:
    """Dyck n-paths none of whose descents (terminal included) has length 1."""
    return sum(1 for t in generate_texts(Family.DYCK, n, cap)
               if 1 not in descent_lengths(t))


def count_no_ground_flat(n: int, cap: int | None = DEFAULT_CAP) -> CountValue:
    return sum(1 for t in generate_texts(Family.MOTZKIN, n, cap)
               if compute_statistics(t).ground_flat_count == 0)


SEQUENCES = {"catalan": catalan, "motzkin": motzkin, "riordan": riordan}
