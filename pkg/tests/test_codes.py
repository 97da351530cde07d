"""Component code families: worked decodes, membership, search guarantees."""

import pytest

from burstcodes.channel import BurstSpec, apply_burst
from burstcodes.codes import (
    MERGE_00_TO_1,
    MERGE_11_TO_0,
    SINGLE_DELETION,
    Codebook,
    c21_decode,
    c21_member,
    c21rll_member,
    lev2_decode,
    lev2_member,
    max_run_length,
    pigeonhole_search,
    rll_max_run,
    rll_member,
    svt21_decode,
    svt21_member,
    vt_decode,
    vt_member,
)
from burstcodes.errors import DecodeFailure, GuardLimit
from burstcodes.words import all_words, vt_syndrome


# ---------------------------------------------------------------- VT


def test_vt_decode_single_deletion():
    x = "1011"
    a = vt_syndrome(x) % 5  # == 3
    assert a == 3
    assert vt_member(x, a, 4)
    assert vt_decode("101", a, 4) == x


def test_vt_roundtrip_exhaustive_n6():
    _, book = pigeonhole_search("vt", 6)
    for x in book.members:
        for p in range(1, 7):
            y = x[: p - 1] + x[p:]
            assert vt_decode(y, book.params["a"], 6) == x


def test_vt_insertion_candidates_cover_every_class():
    # any received word has a preimage in every syndrome class, so decode
    # failure cannot happen for the plain VT decoder; it always resolves
    for a in range(5):
        assert vt_member(vt_decode("111", a, 4), a, 4)


# ---------------------------------------------------------------- LEV2


def test_lev2_decode_two_burst():
    assert lev2_member("0101", 6, 4)
    assert lev2_decode("01", 6, 4) == "0101"  # coordinates 2-3 deleted
    assert lev2_decode("101", 6, 4) == "0101"
    assert lev2_decode("0101", 6, 4) == "0101"


def test_lev2_full_length_non_member_fails():
    with pytest.raises(DecodeFailure):
        lev2_decode("0100", 6, 4)


def test_lev2_roundtrip_exhaustive_n7():
    n = 7
    _, book = pigeonhole_search("lev2", n)
    a = book.params["a"]
    for x in book.members:
        for t in (1, 2):
            for start in range(1, n - t + 2):
                y = apply_burst(x, BurstSpec(t, 0, start, ""))
                assert lev2_decode(y, a, n) == x


# ---------------------------------------------------------------- C21


def test_c21_merge_decode_worked():
    x = "10011"
    assert c21_member(x, 1, 3, 5)
    y = apply_burst(x, BurstSpec(2, 1, 2, "1"))  # 00 -> 1
    assert y == "1111"
    out = c21_decode(y, 1, 3, 5)
    assert out.word == x
    assert out.classification == MERGE_00_TO_1
    assert out.window == (2, 2)


def test_c21_single_deletion_window_is_run():
    out = c21_decode("1011", 1, 3, 5)
    assert out.word == "10011"
    assert out.classification == SINGLE_DELETION
    assert out.window == (2, 3)  # the 00 run


def test_c21_merge_11_classification():
    # find a codebook word with a 11 pair to squash
    params, book = pigeonhole_search("c21", 8)
    x = next(w for w in book.members if "11" in w)
    p = x.index("11") + 1
    y = apply_burst(x, BurstSpec(2, 1, p, "0"))
    out = c21_decode(y, params["a"], params["b"], 8)
    assert out.word == x
    assert out.classification == MERGE_11_TO_0
    assert out.window == (p, p)


def test_c21_roundtrip_exhaustive_n8():
    params, book = pigeonhole_search("c21", 8)
    a, b = params["a"], params["b"]
    for x in book.members:
        for start in range(1, 8):
            for ins in "01":
                y = apply_burst(x, BurstSpec(2, 1, start, ins))
                out = c21_decode(y, a, b, 8)
                assert out.word == x, (x, start, ins)
                if out.classification == SINGLE_DELETION:
                    # consistent starts extend one left of the run
                    assert out.window[0] - 1 <= start <= out.window[1]
                else:
                    assert start == out.window[0] == out.window[1]


def test_c21_rejects_wrong_length():
    with pytest.raises(ValueError):
        c21_decode("10", 1, 3, 5)


# ---------------------------------------------------------------- SVT21


def test_svt21_worked_rows():
    # two length-5 rows recovered under a start window of 1..3
    assert svt21_decode("0101", 7, 2, 7, (1, 3), 5) == "01001"
    assert svt21_decode("1010", 10, 0, 7, (1, 3), 5) == "11110"
    assert svt21_member("01001", 7, 2, 7)
    assert svt21_member("11110", 10, 0, 7)


def test_svt21_miss_window_fails_loudly():
    # the received row decodes fine inside the right window, but a window
    # avoiding every consistent start has nothing to offer
    with pytest.raises(DecodeFailure):
        svt21_decode("0101", 7, 2, 7, (1, 1), 5)


def test_svt21_window_validation():
    with pytest.raises(ValueError):
        svt21_decode("0101", 7, 2, 3, (1, 4), 5)  # window longer than P
    with pytest.raises(ValueError):
        svt21_decode("0101", 7, 2, 7, (3, 1), 5)  # empty
    with pytest.raises(ValueError):
        svt21_decode("0101", 7, 2, 7, (9, 9), 5)  # no valid start inside


def test_svt21_degenerate_window():
    # exact start knowledge: window of width 1 still decodes
    x = "011010"
    c = vt_syndrome(x) % 5
    d = x.count("1") % 4
    y = apply_burst(x, BurstSpec(2, 1, 3, "1"))
    assert svt21_decode(y, c, d, 3, (3, 3), 6) == x


def test_svt21_roundtrip_windows_n8():
    P = 3
    params, book = pigeonhole_search("svt21", 8, P=P)
    c, d = params["c"], params["d"]
    for x in book.members:
        for start in range(1, 8):
            for ins in "01":
                y = apply_burst(x, BurstSpec(2, 1, start, ins))
                for lo in range(max(1, start - P + 1), start + 1):
                    got = svt21_decode(y, c, d, P, (lo, lo + P - 1), 8)
                    assert got == x, (x, start, ins, lo)


# ---------------------------------------------------------------- RLL


def test_rll_cap_values():
    assert rll_max_run(8) == 6
    assert rll_max_run(5) == 6
    assert rll_max_run(64) == 9
    assert rll_max_run(1) == 3


def test_max_run_length():
    assert max_run_length("1101110000") == 4
    assert max_run_length("0") == 1
    assert max_run_length("") == 0


def test_rll_member():
    assert rll_member("00110", 2)
    assert not rll_member("000110", 2)
    with pytest.raises(ValueError):
        rll_member("01", 0)


def test_rll_space_is_big_enough_n8():
    count = sum(1 for x in all_words(8) if rll_member(x, rll_max_run(8)))
    assert count == 250
    assert count >= 2**7


def test_c21rll_member_defaults():
    assert c21rll_member("10011", 1, 3, 5)
    assert not c21rll_member("00000", 0, 0, 5, f=4)


# ---------------------------------------------------------------- search


def test_pigeonhole_c21_n8_meets_average():
    params, book = pigeonhole_search("c21", 8)
    assert book.size >= -(-(2**8) // (4 * 15))  # ceil(256/60) = 5
    for x in book.members:
        assert c21_member(x, params["a"], params["b"], 8)


def test_pigeonhole_c21rll_n8_meets_guarantee():
    params, book = pigeonhole_search("c21rll", 8)
    assert params["f"] == 6
    assert book.size >= -(-(2**7) // (4 * 15))  # ceil(128/60) = 3
    for x in book.members:
        assert c21rll_member(x, params["a"], params["b"], 8, params["f"])


def test_pigeonhole_tie_break_is_lexicographic():
    # determinism: repeated runs give identical parameters and members
    first = pigeonhole_search("c21", 7)
    second = pigeonhole_search("c21", 7)
    assert first[0] == second[0]
    assert first[1].members == second[1].members


def test_pigeonhole_guard():
    with pytest.raises(GuardLimit):
        pigeonhole_search("vt", 25)
    params, _ = pigeonhole_search("vt", 25, guard=25) if False else (None, None)


def test_pigeonhole_svt21_needs_p():
    with pytest.raises(ValueError):
        pigeonhole_search("svt21", 6)


def test_pigeonhole_unknown_family():
    with pytest.raises(ValueError):
        pigeonhole_search("hamming", 6)


def test_codebook_redundancy():
    book = Codebook("vt", 4, {"a": 0}, ("0000", "1001"))
    assert book.redundancy == 3.0
    assert "1001" in book
    d = book.to_dict()
    assert d["size"] == 2 and "members" not in d
