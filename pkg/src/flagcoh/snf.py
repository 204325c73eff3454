"""Smith normal form over the integers, exact and pivot-stable.

Only the diagonal is needed downstream (ranks and elementary divisors), so
no transform matrices are tracked.  Pivoting always picks a smallest
nonzero entry to limit coefficient growth.
"""

from __future__ import annotations


def smith_diagonal(rows) -> list[int]:
    """Nonnegative diagonal of the Smith normal form, divisibility-chained."""
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        # fold in any entry the pivot does not divide yet
        p = a[t][t]
        culprit = next(
            (
                (i, j)
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if a[i][j] % p
            ),
            None,
        )
        if culprit is not None:
            a[t] = [x + y for x, y in zip(a[t], a[culprit[0]])]
            continue
        diag.append(abs(p))
        t += 1
    # enforce d_1 | d_2 | ... (gcd/lcm folding keeps the product invariant)
    from math import gcd

    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] // g * diag[j]
    return diag


def rank(rows) -> int:
    return len([d for d in smith_diagonal(rows) if d])


def elementary_divisors(rows) -> list[int]:
    """Divisors > 1 of the Smith form, sorted."""
    return sorted(d for d in smith_diagonal(rows) if d > 1)
