"""
From one deletion to a full burst decode
========================================

The interleaved construction corrects a (t, s)-burst by slicing the
word into rows, fixing row 1 with a (2,1)-burst code, and using the
location it reports to fix the cheaper windowed codes on the other
rows.  This tour runs each layer on its own, then the whole stack.
"""

from burstcodes import (
    BurstSpec,
    CtsParams,
    apply_burst,
    c21_decode,
    cts_decode,
    svt21_decode,
    vt_decode,
)

# --- layer 1: the VT code fixes a single deletion -------------------
x = "1011"
y = x[:2] + x[3:]  # drop position 3
print("VT:", y, "->", vt_decode(y, a=3, n=4))

# --- layer 2: a (2,1)-burst code fixes delete-2-insert-1 ------------
# deleting "00" from 10011 at position 2 and inserting 1 gives 1111;
# the decoder reports what happened and where
out = c21_decode("1111", a=1, b=3, n=5)
print(f"C21: 1111 -> {out.word}  ({out.classification} at {out.window})")

# --- layer 3: if the location is known to P places, syndromes mod
# 2P-1 suffice (cheaper than mod 2n-1)
got = svt21_decode("0101", c=2, d=2, P=3, window=(2, 3), n=5)
print("SVT21 with window [2,3]: 0101 ->", got)

# --- the full construction at n=15, t=4, s=1 -------------------------
# k = t-s = 3 rows of m = 5 columns; row 1 is a run-capped C21 code,
# rows 2 and 3 are SVT21 codes sharing its location window
params = CtsParams.derive(15, 4, 1, a=1, b=3, row_params=((7, 2), (10, 0)))
x = "101011001101110"
y = apply_burst(x, BurstSpec(t=4, s=1, start=6, inserted="0"))
print("\ncodeword ", x)
print("received ", y)

word, trace = cts_decode(y, params, trace=True)
print("row 1    ", trace.row1.word, trace.row1.classification, trace.row1.window)
print("columns  ", trace.column_window)
for i, row in enumerate(trace.rows[1:], start=2):
    print(f"row {i}    ", row)
print("decoded  ", word)
assert word == x
