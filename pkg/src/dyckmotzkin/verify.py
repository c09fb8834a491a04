"""Exhaustive invariant checks behind ``dyckmotzkin verify``.

Each check takes ``max_n`` and returns ``None`` on success or a short
description of the first counterexample.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import bijections as bij
from .enumeration import (
    catalan,
    count_no_ground_flat,
    count_no_short_descent,
    count_uuu_free,
    distribution_table,
    family_count,
    formula_ddu,
    formula_udu,
    generate_paths,
    generate_texts,
    motzkin,
    random_path,
    riordan,
    token_order_key,
)
from .paths import (
    APPENDED_DOWN,
    Family,
    associated_downstep,
    compute_statistics,
    descent_lengths,
    heights,
    matching_pairs,
    parse_path,
    render_path,
)

Check = Callable[[int], Optional[str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}\t{self.name}" + (f"\t{self.detail}" if self.detail else "")


def check_generator_counts(max_n):
    for fam in Family:
        for n in range(max_n + 1):
            texts = list(generate_texts(fam, n))
            if len(texts) != family_count(fam, n):
                return f"{fam.value} n={n}: {len(texts)} paths"
            keys = [token_order_key(t) for t in texts]
            if any(a >= b for a, b in zip(keys, keys[1:])):
                return f"{fam.value} n={n}: not strictly increasing"
    return None


def check_heights_and_round_trip(max_n):
    for fam in Family:
        for n in range(max_n + 1):
            for p in generate_paths(fam, n):
                hs = heights(p)
                if min(hs) < 0 or hs[-1] != 0:
                    return f"bad heights for {p.text}"
                if render_path(parse_path(p.text, fam)) != p.text:
                    return f"round trip failed for {p.text}"
    return None


def check_matching_pairs(max_n):
    for n in range(max_n + 1):
        for p in generate_paths(Family.DYCK, n):
            pairs = matching_pairs(p)
            downs = {j for j, c in enumerate(p.text) if c == "D"}
            if set(pairs.values()) != downs or len(pairs) != n:
                return f"pairing not bijective on {p.text}"
            spans = sorted(pairs.items())
            for a, b in spans:
                for c, d in spans:
                    if a < c < b < d:
                        return f"crossing pairs in {p.text}"
    return None


def check_udu_short_descent(max_n):
    for n in range(max_n + 1):
        for p in generate_paths(Family.DYCK, n):
            s = compute_statistics(p)
            if (s.udu_count == 0) != (s.short_nonterminal_descent_count == 0):
                return p.text
    return None


def check_ground_flats_appended(max_n):
    for n in range(max_n + 1):
        for p in generate_paths(Family.BICOLORED, n):
            hs = heights(p)
            for i, c in enumerate(p.text):
                if c in "FG" and hs[i] == 0 and associated_downstep(p, i) is not APPENDED_DOWN:
                    return f"{p.text} at {i}"
    return None


def check_sequences(max_n):
    for n in range(max_n + 1):
        if count_no_ground_flat(n) != riordan(n):
            return f"riordan n={n}"
        if sum(1 for _ in generate_texts(Family.BICOLORED, n)) != catalan(n + 1):
            return f"bicolored n={n}"
    return None


def check_uuu_free_count(max_n):
    for n in range(max_n + 1):
        if count_uuu_free(n) != motzkin(n):
            return f"n={n}"
    return None


def _check_bijection(forward, inverse, domain, codomain, max_n, shift):
    for n in range(max_n + 1):
        images = set()
        size = 0
        for p in domain(n):
            q = forward(p)
            if inverse(q).text != p.text:
                return f"inverse(forward({p.text})) != {p.text}"
            images.add(q.text)
            size += 1
        if len(images) != size:
            return f"not injective at n={n}"
        target = {q.text for q in codomain(n + shift)}
        if images != target:
            return f"image differs from codomain at n={n}"
        for q in codomain(n + shift):
            if forward(inverse(q)).text != q.text:
                return f"forward(inverse({q.text})) != {q.text}"
    return None


def _uuu_free_dyck(n):
    return (p for p in generate_paths(Family.DYCK, n) if "UUU" not in p.text)


def check_t1(max_n):
    return _check_bijection(bij.t1_forward, bij.t1_inverse, _uuu_free_dyck,
                            lambda n: generate_paths(Family.MOTZKIN, n), max_n, 0)


def check_t2(max_n):
    return _check_bijection(bij.t2_forward, bij.t2_inverse,
                            lambda n: generate_paths(Family.BICOLORED, n),
                            lambda n: generate_paths(Family.DYCK, n), max_n, 1)


def check_std(max_n):
    return _check_bijection(bij.std_bijection, bij.std_bijection_inverse,
                            lambda n: generate_paths(Family.BICOLORED, n),
                            lambda n: generate_paths(Family.DYCK, n), max_n, 1)


def check_t2_statistics(max_n):
    for n in range(max_n + 1):
        for p in generate_paths(Family.BICOLORED, n):
            q = bij.t2_forward(p)
            a, b = compute_statistics(p), compute_statistics(q)
            if len(q) != 2 * n + 2:
                return f"length of t2({p.text})"
            if (b.udu_count, b.ddu_count) != (a.green_flat_count, a.down_count):
                return p.text
    return None


def check_t2_order_independence(max_n, samples=200, orders=5, seed=0):
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(0, max(max_n, 0))
        p = random_path(Family.BICOLORED, n, rng)
        expected = bij.t2_forward(p).text
        flats = [i for i, c in enumerate(p.text) if c == "F"]
        for _ in range(orders):
            rng.shuffle(flats)
            if bij.t2_forward(p, flat_order=flats).text != expected:
                return f"{p.text} with order {flats}"
    return None


def check_formula_sums(max_n):
    for n in range(1, max_n + 1):
        if sum(formula_udu(n, k) for k in range(n)) != catalan(n):
            return f"udu n={n}"
        if sum(formula_ddu(n, k) for k in range((n - 1) // 2 + 1)) != catalan(n):
            return f"ddu n={n}"
    return None


def check_distributions(max_n):
    for stat in ("udu", "ddu"):
        for n in range(1, max_n + 1):
            rows = distribution_table(stat, n)
            if not all(r.ok for r in rows):
                return f"{stat} n={n}"
            if sum(r.brute for r in rows) != catalan(n):
                return f"{stat} n={n} does not sum to catalan"
    return None


def check_udu_free_restriction(max_n):
    for n in range(max_n + 1):
        images = set()
        for p in generate_paths(Family.MOTZKIN, n):
            q = bij.restrict_motzkin_to_udu_free(p)
            images.add(q.text)
            no_ground = compute_statistics(p).ground_flat_count == 0
            if no_ground != q.text.endswith("UD"):
                return f"ground flat criterion fails for {p.text}"
        target = {q.text for q in generate_paths(Family.DYCK, n + 1) if "UDU" not in q.text}
        if images != target:
            return f"image differs from UDU-free Dyck paths at n={n}"
    return None


def check_riordan_corollary(max_n):
    for n in range(max_n + 1):
        if count_no_short_descent(n) != riordan(n):
            return f"count n={n}"
        images = set()
        for p in generate_paths(Family.MOTZKIN, n):
            if compute_statistics(p).ground_flat_count:
                continue
            q = bij.riordan_to_no_short_descent(p)
            if q.size != n or 1 in descent_lengths(q):
                return f"image of {p.text}"
            if bij.no_short_descent_to_riordan(q).text != p.text:
                return f"round trip of {p.text}"
            images.add(q.text)
        if len(images) != riordan(n):
            return f"image size n={n}"
    return None


CHECKS: list[tuple[str, Check]] = [
    ("generator counts and order", check_generator_counts),
    ("heights and parse/render round trip", check_heights_and_round_trip),
    ("matching downsteps pair non-crossingly", check_matching_pairs),
    ("udu-free iff no short nonterminal descent", check_udu_short_descent),
    ("ground flats associate with appended downstep", check_ground_flats_appended),
    ("riordan and bicolored counts", check_sequences),
    ("uuu-free dyck count equals motzkin", check_uuu_free_count),
    ("t1 bijection", check_t1),
    ("t2 bijection", check_t2),
    ("t2 statistic transport", check_t2_statistics),
    ("t2 order independence", check_t2_order_independence),
    ("std bijection", check_std),
    ("formula rows sum to catalan", check_formula_sums),
    ("distribution tables match formulas", check_distributions),
    ("motzkin image is udu-free dyck", check_udu_free_restriction),
    ("riordan corollary", check_riordan_corollary),
]


def run_checks(max_n: int, names: list[str] | None = None) -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        if names and name not in names:
            continue
        try:
            detail = check(max_n)
        except Exception as exc:  # report, keep going
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, detail is None, detail or ""))
    return results
