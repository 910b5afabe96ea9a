"""Pure-Python translation scan: the reference kernel for the oracle.

The overlap of `start` with the flipped image shifted by t is the number
of point pairs (s, f) with s = f + t, so counting the multiset of
differences s - f over all pairs evaluates every translation that can
overlap at all. That covers the whole search space: any translation
outside the difference set has overlap 0, and for nonempty inputs some
translation reaches overlap >= 1.

coinflip._scan_cy is a compiled drop-in replacement; this module is the
fallback and the ground truth the compiled kernel is tested against.
"""

from collections import Counter


def scan_pairs(start, flipped):
    """Best overlap over all translations of `flipped` onto `start`.

    Both arguments are sequences of (a, b) integer pairs. Returns
    (max_overlap, shifts) where shifts lists every (da, db) achieving the
    maximum, sorted ascending.
    """
    if not start or not flipped:
        raise ValueError("scan_pairs requires nonempty point lists")
    counts = Counter(
        (sa - fa, sb - fb) for sa, sb in start for fa, fb in flipped
    )
    best = max(counts.values())
    shifts = sorted(t for t, c in counts.items() if c == best)
    return best, shifts
