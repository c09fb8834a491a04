import itertools

import pytest


def _ok(word):
    h = 0
    for c in word:
        h += (c == "U") - (c == "D")
        if h < 0:
            return False
    return h == 0


def brute_paths(alphabet, length):
    """All valid paths over ``alphabet`` with ``length`` steps, by filtering
    every word; independent of the pruned generators."""
    return {w for w in map("".join, itertools.product(alphabet, repeat=length)) if _ok(w)}


def brute_dyck(n):
    return brute_paths("UD", 2 * n)


def brute_motzkin(n):
    return brute_paths("UDF", n)


def brute_bicolored(n):
    return brute_paths("UDFG", n)


def brute_heights(word):
    hs = [0]
    for c in word:
        hs.append(hs[-1] + (c == "U") - (c == "D"))
    return hs


@pytest.fixture
def oracle():
    class O:
        dyck = staticmethod(brute_dyck)
        motzkin = staticmethod(brute_motzkin)
        bicolored = staticmethod(brute_bicolored)
        heights = staticmethod(brute_heights)
    return O
