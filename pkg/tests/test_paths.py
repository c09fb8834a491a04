import pytest
from hypothesis import given, strategies as st

from dyckmotzkin.paths import (
    APPENDED_DOWN,
    Family,
    FamilyViolation,
    IllegalCharacter,
    LatticePath,
    NegativePrefix,
    NotAFlatstep,
    NotAnUpstep,
    PathError,
    Step,
    UnbalancedPath,
    ascii_art,
    associated_downstep,
    compute_statistics,
    descent_lengths,
    heights,
    matching_downstep,
    matching_pairs,
    parse_path,
    render_path,
)

from conftest import brute_bicolored, brute_dyck, brute_heights, brute_motzkin

PAPER_T1 = "UUDUDUUDDD"
PAPER_T2 = "UUDFUFDGDUDFUD"


def test_parse_empty_in_every_family():
    for fam in Family:
        p = parse_path("", fam)
        assert p.size == 0 and p.text == ""
        assert compute_statistics(p) == compute_statistics("")
        assert all(v == 0 for _, v in compute_statistics(p).items())


def test_parse_paper_dyck_example():
    p = parse_path(PAPER_T1, Family.DYCK)
    assert p.family is Family.DYCK
    assert p.size == 5
    assert p.steps[:3] == (Step.UP, Step.UP, Step.DOWN)


def test_size_by_family():
    assert parse_path("UFD", "motzkin").size == 3
    assert parse_path("UGFD", "bicolored").size == 4
    assert parse_path("UDUD", "dyck").size == 2


@pytest.mark.parametrize("text, family, error", [
    ("UUDUD", Family.DYCK, UnbalancedPath),
    ("UDD", Family.MOTZKIN, NegativePrefix),
    ("DU", Family.DYCK, NegativePrefix),
    ("UXD", Family.BICOLORED, IllegalCharacter),
    ("ud", Family.DYCK, IllegalCharacter),
    ("UFD", Family.DYCK, FamilyViolation),
    ("UGD", Family.MOTZKIN, FamilyViolation),
])
def test_parse_errors(text, family, error):
    with pytest.raises(error):
        parse_path(text, family)


def test_parse_error_index():
    with pytest.raises(NegativePrefix) as info:
        parse_path("UDDU", Family.DYCK)
    assert info.value.index == 2
    with pytest.raises(IllegalCharacter) as info:
        parse_path("UDx", Family.DYCK)
    assert info.value.index == 2


def test_constructor_validates():
    with pytest.raises(PathError):
        LatticePath("UU", Family.DYCK)


def test_render():
    assert render_path(parse_path("", Family.DYCK)) == ""
    assert render_path(parse_path(PAPER_T1, Family.DYCK)) == PAPER_T1
    assert render_path(parse_path("G", Family.BICOLORED)) == "G"


@given(st.text(alphabet="UDFG", max_size=12))
def test_parse_render_round_trip(s):
    try:
        p = parse_path(s, Family.BICOLORED)
    except PathError:
        return
    assert render_path(p) == s


def _oracle_match(word, i):
    hs = brute_heights(word)
    return next(j for j in range(i + 1, len(word))
                if word[j] == "D" and hs[j] == hs[i + 1])


def test_matching_downstep_examples():
    assert matching_downstep(parse_path("UUDD", "dyck"), 0) == 3
    assert matching_downstep(parse_path("UUDD", "dyck"), 1) == 2
    assert matching_downstep(parse_path("UDUD", "dyck"), 2) == 3
    assert _oracle_match(PAPER_T1, 0) == 9
    assert matching_downstep(parse_path(PAPER_T1, "dyck"), 0) == 9


def test_matching_downstep_not_up():
    with pytest.raises(NotAnUpstep):
        matching_downstep(parse_path("UD", "dyck"), 1)


@pytest.mark.parametrize("n", range(7))
def test_matching_pairs_exhaustive(n):
    for w in brute_dyck(n):
        p = parse_path(w, Family.DYCK)
        pairs = matching_pairs(p)
        assert pairs == {i: _oracle_match(w, i) for i, c in enumerate(w) if c == "U"}
        assert sorted(pairs.values()) == [j for j, c in enumerate(w) if c == "D"]
        for a, b in pairs.items():
            for c, d in pairs.items():
                assert not a < c < b < d


def test_matching_in_motzkin_path():
    p = parse_path("UFUDFD", Family.MOTZKIN)
    assert matching_downstep(p, 0) == 5
    assert matching_downstep(p, 2) == 3


def test_associated_downstep_paper_figure():
    p = parse_path(PAPER_T2, Family.BICOLORED)
    assert associated_downstep(p, 3) == 8
    assert associated_downstep(p, 5) == 6
    assert associated_downstep(p, 11) is APPENDED_DOWN
    # green flats get associated downsteps too
    assert associated_downstep(p, 7) == 8


def test_associated_downstep_not_flat():
    with pytest.raises(NotAFlatstep):
        associated_downstep(parse_path("UFD", Family.MOTZKIN), 0)


def _oracle_assoc(word, i):
    hs = brute_heights(word)
    for j in range(i + 1, len(word)):
        if word[j] == "D" and hs[j] == hs[i]:
            return j
    return APPENDED_DOWN


@pytest.mark.parametrize("n", range(9))
def test_associated_downstep_exhaustive(n):
    for w in brute_bicolored(n):
        p = LatticePath(w, Family.BICOLORED)
        hs = brute_heights(w)
        for i, c in enumerate(w):
            if c in "FG":
                got = associated_downstep(p, i)
                assert got == _oracle_assoc(w, i)
                if hs[i] == 0:
                    assert got is APPENDED_DOWN


def test_statistics_examples():
    s = compute_statistics(parse_path("UDUD", Family.DYCK))
    assert (s.udu_count, s.ddu_count) == (1, 0)

    s = compute_statistics(parse_path("UUUDDUUUUDDDUDUDDDUUDDUUUDDUDD", Family.DYCK))
    assert (s.udu_count, s.ddu_count) == (1, 5)

    s = compute_statistics(parse_path("UUDDUD", Family.DYCK))
    assert s.short_nonterminal_descent_count == 0
    assert s.descent_count == 2
    assert descent_lengths("UUDDUD")[-1] == 1

    s = compute_statistics(parse_path("FUD", Family.MOTZKIN))
    assert s.ground_flat_count == 1


def test_statistics_overlapping_windows():
    assert compute_statistics("UDUDUD").udu_count == 2
    s = compute_statistics(parse_path("UDUDU" + "D", Family.DYCK))
    assert s.udu_count == 2
    assert compute_statistics("UUUUDDDD").uuu_count == 2


def test_statistics_flats():
    s = compute_statistics(parse_path("GUFGDF", Family.BICOLORED))
    assert s.green_flat_count == 2
    assert s.black_flat_count == 2
    assert s.ground_flat_count == 2
    assert s.down_count == 1


@pytest.mark.parametrize("n", range(9))
def test_udu_free_iff_no_short_nonterminal_descent(n):
    for w in brute_dyck(n):
        s = compute_statistics(parse_path(w, Family.DYCK))
        assert (s.udu_count == 0) == (s.short_nonterminal_descent_count == 0)
        assert (s.uuu_count == 0) == ("UUU" not in w)


@pytest.mark.parametrize("n", range(7))
def test_heights_nonnegative(n):
    for w in brute_motzkin(n):
        hs = heights(parse_path(w, Family.MOTZKIN))
        assert hs == brute_heights(w)
        assert min(hs) == 0 and hs[-1] == 0


def test_ascii_art():
    assert ascii_art("") == ""
    assert ascii_art("UD") == "/\\"
    assert ascii_art("UFD").splitlines() == [" _", "/ \\"]
    assert ascii_art("F") == "_"
    assert ascii_art("UUDD").splitlines() == [" /\\", "/  \\"]
