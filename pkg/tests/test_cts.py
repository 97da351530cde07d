"""Interleaved (t, s)-burst construction: worked decode, alignment, roundtrips."""

import pytest

from burstcodes.channel import BurstSpec, apply_burst
from burstcodes.cts import (
    CtsParams,
    column_window,
    cts_decode,
    cts_member,
    cts_param_search,
    row_run_cap,
    window_capacity,
)
from burstcodes.words import all_words, interleave


def consistent_starts(row_x, row_y):
    """Starts p where row_x = row_y[:p-1] + pair + row_y[p:] for some pair."""
    return [
        p
        for p in range(1, len(row_x))
        if row_y[: p - 1] == row_x[: p - 1] and row_y[p:] == row_x[p + 1 :]
    ]


WORKED = CtsParams.derive(15, 4, 1, a=1, b=3, row_params=((7, 2), (10, 0)))


def test_worked_params_accept_the_codeword():
    assert WORKED.k == 3 and WORKED.m == 5
    assert WORKED.f == 6 and WORKED.P == 7
    assert cts_member("101011001101110", WORKED)


def test_worked_decode():
    x = "101011001101110"
    y = apply_burst(x, BurstSpec(4, 1, 6, "0"))
    assert y == "101010101110"
    assert cts_decode(y, WORKED) == x


def test_decode_rejects_wrong_length():
    with pytest.raises(ValueError):
        cts_decode("101010101", WORKED)


def test_params_validation():
    with pytest.raises(ValueError):
        CtsParams.derive(12, 3, 2, 0, 0, ((0, 0),))  # t < 2s
    with pytest.raises(ValueError):
        CtsParams.derive(13, 4, 1, 0, 0, ((0, 0), (0, 0)))  # 3 does not divide 13
    with pytest.raises(ValueError):
        CtsParams.derive(12, 4, 1, 0, 0, ((0, 0),))  # needs 2 row pairs
    with pytest.raises(ValueError):
        CtsParams(12, 4, 1, 0, 0, ((0, 0), (0, 0)), f=5, P=5)  # wrong caps


def test_window_capacity_rule():
    assert window_capacity(5, 1) == row_run_cap(5) + 1
    assert window_capacity(6, 2) == row_run_cap(6) + 2


def _roundtrip_all_bursts(n, t, s):
    params, book = cts_param_search(n, t, s)
    assert book.size >= 1
    for x in book.members:
        assert cts_member(x, params)
        for start in range(1, n - t + 2):
            for ins in all_words(s):
                y = apply_burst(x, BurstSpec(t, s, start, ins))
                assert cts_decode(y, params) == x, (x, start, ins)
    return params, book


def test_roundtrip_8_3_1():
    _roundtrip_all_bursts(8, 3, 1)


def test_roundtrip_8_4_2():
    # s = 2 exercises the widened deletion window
    _roundtrip_all_bursts(8, 4, 2)


def test_roundtrip_degenerate_single_row():
    # t - s = 1: the whole word is row 1
    params, book = _roundtrip_all_bursts(6, 2, 1)
    assert params.k == 1 and params.row_params == ()


def test_search_meets_pigeonhole_average():
    from burstcodes.codes import rll_member

    params, book = cts_param_search(10, 3, 1)
    m, P = params.m, params.P
    eligible = sum(
        1 for x in all_words(10) if rll_member(interleave(x, params.k)[0], params.f)
    )
    buckets = (2 * m - 1) * 4 * ((2 * P - 1) * 4) ** (params.k - 1)
    assert eligible == 2**10  # cap 6 exceeds the row length, nothing excluded
    assert book.size >= -(-eligible // buckets)


def test_row_alignment_and_window_sufficiency():
    # every decode sees rows that are one deletion or one (2,1)-burst away,
    # and the column window derived from row 1 always contains a consistent
    # start for every other row
    for (n, t, s) in ((8, 3, 1), (8, 4, 2)):
        params, book = cts_param_search(n, t, s)
        k, m = params.k, params.m
        for x in book.members:
            rows_x = interleave(x, k)
            for start in range(1, n - t + 2):
                for ins in all_words(s):
                    y = apply_burst(x, BurstSpec(t, s, start, ins))
                    rows_y = tuple(y[i::k] for i in range(k))
                    from burstcodes.codes import c21_decode

                    out1 = c21_decode(rows_y[0], params.a, params.b, m)
                    assert out1.word == rows_x[0]
                    win = column_window(out1, s, m)
                    for i in range(1, k):
                        ps = consistent_starts(rows_x[i], rows_y[i])
                        assert ps, "row alignment broken"
                        assert any(
                            win[0] <= p <= win[1] for p in ps
                        ), (x, start, ins, i, win, ps)


def test_search_determinism():
    a = cts_param_search(8, 4, 2)
    b = cts_param_search(8, 4, 2)
    assert a[0] == b[0]
    assert a[1].members == b[1].members
