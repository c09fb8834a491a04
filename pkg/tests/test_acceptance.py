"""Exit criteria for the package; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s -q``.
"""
import random
import time

import pytest

from dyckmotzkin.bijections import (
    restrict_motzkin_to_udu_free,
    std_bijection,
    std_bijection_inverse,
    t1_forward,
    t1_inverse,
    t2_forward,
    t2_inverse,
)
from dyckmotzkin.enumeration import (
    catalan,
    count_no_short_descent,
    count_uuu_free,
    distribution_table,
    generate_paths,
    motzkin,
    random_path,
    riordan,
)
from dyckmotzkin.paths import Family, LatticePath, compute_statistics


@pytest.fixture
def verdict(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail
    return emit


def _is_dyck(text, n):
    try:
        return LatticePath(text, Family.DYCK).size == n
    except ValueError:
        return False


def test_1_uuu_free_count(verdict):
    start = time.perf_counter()
    bad = [n for n in range(13) if count_uuu_free(n) != motzkin(n)]
    elapsed = time.perf_counter() - start
    verdict(1, "UUU-free Dyck n-paths number M_n, n=0..12",
            not bad and elapsed < 30.0, f"mismatches={bad}, {elapsed:.1f}s")


def test_2_t1_bijection(verdict):
    problems = []
    for n in range(11):
        dom = [p for p in generate_paths(Family.DYCK, n) if "UUU" not in p.text]
        images = set()
        for p in dom:
            m = t1_forward(p)
            if t1_inverse(m).text != p.text:
                problems.append(f"inverse fails on {p.text}")
            images.add(m.text)
        motz = {m.text for m in generate_paths(Family.MOTZKIN, n)}
        if len(images) != len(dom) or images != motz:
            problems.append(f"not a bijection at n={n}")
        for m in generate_paths(Family.MOTZKIN, n):
            if t1_forward(t1_inverse(m)).text != m.text:
                problems.append(f"forward fails on {m.text}")
    verdict(2, "t1 bijection onto Motzkin n-paths, n=0..10", not problems, "; ".join(problems[:3]))


def test_3_t2_map(verdict):
    problems = []
    for n in range(9):
        images = set()
        count = 0
        for p in generate_paths(Family.BICOLORED, n):
            count += 1
            d = t2_forward(p)
            if not _is_dyck(d.text, n + 1):
                problems.append(f"invalid image of {p.text}")
            a, b = compute_statistics(p), compute_statistics(d)
            if (b.udu_count, b.ddu_count) != (a.green_flat_count, a.down_count):
                problems.append(f"statistics not carried for {p.text}")
            if t2_inverse(d).text != p.text:
                problems.append(f"inverse fails on {p.text}")
            images.add(d.text)
        dyck = {d.text for d in generate_paths(Family.DYCK, n + 1)}
        if count != catalan(n + 1) or len(images) != count or images != dyck:
            problems.append(f"not a bijection at n={n}")
        for d in generate_paths(Family.DYCK, n + 1):
            if t2_forward(t2_inverse(d)).text != d.text:
                problems.append(f"forward fails on {d.text}")
    verdict(3, "t2 bijection with UDU/DDU transport, n=0..8", not problems, "; ".join(problems[:3]))


def test_4_golden_examples(verdict):
    t1_ok = t1_forward("UUDUDUUDDD").text == "UFUDD"
    src = "UUDFUFDGDUDFUD"
    out = t2_forward(src)
    s = compute_statistics(out)
    t2_ok = (s.udu_count, s.ddu_count) == (1, 5) and t2_inverse(out).text == src
    verdict(4, "worked examples (n=5 for t1, n=14 for t2)", t1_ok and t2_ok,
            f"t1 {'ok' if t1_ok else 'wrong'}, t2 image {out.text}")


def test_5_distributions(verdict):
    problems = []
    for stat in ("udu", "ddu"):
        for n in range(1, 11):
            rows = distribution_table(stat, n)
            if not all(r.brute == r.formula for r in rows):
                problems.append(f"{stat} n={n}")
            if sum(r.brute for r in rows) != catalan(n) or sum(r.formula for r in rows) != catalan(n):
                problems.append(f"{stat} n={n} sum")
    verdict(5, "UDU and DDU distributions match formulas, n=1..10", not problems, ", ".join(problems))


def test_6_corollaries(verdict):
    problems = []
    for n in range(9):
        images = set()
        for m in generate_paths(Family.MOTZKIN, n):
            d = restrict_motzkin_to_udu_free(m)
            images.add(d.text)
            no_ground = compute_statistics(m).ground_flat_count == 0
            if no_ground != d.text.endswith("UD"):
                problems.append(f"ground-flat criterion fails on {m.text}")
        udu_free = {d.text for d in generate_paths(Family.DYCK, n + 1) if "UDU" not in d.text}
        if images != udu_free:
            problems.append(f"image is not the UDU-free Dyck paths at n={n}")
    for n in range(11):
        if count_no_short_descent(n) != riordan(n):
            problems.append(f"no-short-descent count n={n}")
    verdict(6, "restriction corollaries", not problems, "; ".join(problems[:3]))


def test_7_order_independence(verdict):
    rng = random.Random(2004)
    problems = []
    for _ in range(200):
        p = random_path(Family.BICOLORED, rng.randint(0, 12), rng)
        expected = t2_forward(p).text
        flats = [i for i, c in enumerate(p.text) if c == "F"]
        for _ in range(5):
            rng.shuffle(flats)
            if t2_forward(p, flat_order=flats).text != expected:
                problems.append(f"{p.text} under {flats}")
    verdict(7, "t2 independent of black-flat processing order", not problems, "; ".join(problems[:3]))


def test_8_std_bijection(verdict):
    problems = []
    for n in range(9):
        images = set()
        count = 0
        for p in generate_paths(Family.BICOLORED, n):
            count += 1
            d = std_bijection(p)
            if not _is_dyck(d.text, n + 1) or std_bijection_inverse(d).text != p.text:
                problems.append(p.text)
            images.add(d.text)
        if len(images) != count or images != {d.text for d in generate_paths(Family.DYCK, n + 1)}:
            problems.append(f"not a bijection at n={n}")
    verdict(8, "std encoding (green flat as DU) is a bijection, n=0..8", not problems, "; ".join(problems[:3]))
