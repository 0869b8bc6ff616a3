"""Levenshtein edit distance: exact two-row DP plus a banded bounded variant.

Distances are plain non-negative ints counting unit-cost inserts, deletes
and substitutions. Strings are compared code point by code point; any case
folding happens upstream in tokenization.
"""

from __future__ import annotations

__all__ = ["levenshtein", "levenshtein_bounded"]


def levenshtein(a: str, b: str) -> int:
    """Minimum number of single-character edits turning ``a`` into ``b``.

    >>> levenshtein("RISK", "MASK")
    2
    >>> levenshtein("phule", "phulen")
    1
    >>> levenshtein("", "abc")
    3
    """
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    lb = len(b)
    if lb == 0:
        return len(a)
    prev = list(range(lb + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            if ca == cb:
                cur.append(prev[j - 1])
            else:
                cur.append(1 + min(prev[j - 1], prev[j], cur[j - 1]))
        prev = cur
    return prev[lb]


def levenshtein_bounded(a: str, b: str, bound: int) -> int | None:
    """Exact distance when it is at most ``bound``, otherwise None.

    Evaluates only a diagonal band of half-width ``bound`` of the DP matrix
    and abandons the scan as soon as a whole band row exceeds the bound, so
    the cost is O(bound * min(len(a), len(b))) instead of quadratic.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if abs(la - lb) > bound:
        return None
    if la < lb:
        a, b, la, lb = b, a, lb, la
    if lb == 0:
        return la  # la <= bound here, the length gap was checked above
    cap = bound + 1  # sentinel: every value beyond the bound behaves alike
    prev = [j if j <= bound else cap for j in range(lb + 1)]
    for i in range(1, la + 1):
        ca = a[i - 1]
        lo = max(1, i - bound)
        hi = min(lb, i + bound)
        cur = [cap] * (lb + 1)
        cur[0] = i if i <= bound else cap
        best = cur[0]
        for j in range(lo, hi + 1):
            if ca == b[j - 1]:
                d = prev[j - 1]
            else:
                d = 1 + min(prev[j - 1], prev[j], cur[j - 1])
                if d > cap:
                    d = cap
            cur[j] = d
            if d < best:
                best = d
        if best > bound:
            return None
        prev = cur
    d = prev[lb]
    return d if d <= bound else None
