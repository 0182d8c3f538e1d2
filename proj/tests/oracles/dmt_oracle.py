#!/usr/bin/env python3
"""Brute-force reference values for the DMT unit tests.

The diversity d(k) is computed here from the flow-cost recursion
(split at the last hop, Rayleigh base case), never from the closed-form
coefficient formula.  Decode sets are found by enumerating every subset.
"""
from functools import lru_cache
from itertools import combinations


@lru_cache(maxsize=None)
def d_rec(dim, k):
    dim = tuple(sorted(dim))
    if min(dim) < k:
        raise ValueError("k out of range")
    if len(dim) == 2:
        return (dim[0] - k) * (dim[1] - k)
    # split off the largest layer; order does not matter for the recursion key
    head, last = dim[:-1], dim[-1]
    return min(d_rec(head, j) + (j - k) * (last - k) for j in range(k, min(head) + 1))


def d_rp0(dim):
    return d_rec(tuple(dim), 0)


def coeffs_from_curve(dim):
    n = min(dim)
    d = [d_rec(tuple(dim), k) for k in range(n + 1)]
    return [d[i - 1] - d[i] for i in range(1, n + 1)]


def serial(dim, decode):
    pts = [0] + list(decode)
    return min(d_rp0(dim[pts[i - 1]:pts[i] + 1]) for i in range(1, len(pts)))


def best_decode(dim, target):
    N = len(dim) - 1
    for size in range(1, N + 1):
        hits = []
        for rest in combinations(range(1, N), size - 1):
            dec = list(rest) + [N]
            if serial(dim, dec) >= target:
                hits.append(dec)
        if hits:
            return hits
    return None


if __name__ == "__main__":
    for dim in [(2, 2, 2), (2, 4, 3), (1, 5), (2, 2, 2, 2), (3, 1, 4, 2), (5,) * 6]:
        print(dim, "c =", coeffs_from_curve(dim), "d =", [d_rec(dim, k) for k in range(min(dim) + 1)])
    print("(3,1,4,2) d>=3 minimal decode sets:", best_decode((3, 1, 4, 2), 3))
    print("(2,2,2) d>=3 minimal decode sets:", best_decode((2, 2, 2), 3))
    print("(3,1,4,2) serial all-DF", serial((3, 1, 4, 2), [1, 2, 3]), "all-AF", serial((3, 1, 4, 2), [3]))
    print("rayleigh (2,4)", [d_rec((2, 4), k) for k in range(3)])
    print("(2,2,2,2,3,3) d:", [d_rec((2, 2, 2, 2, 3, 3), k) for k in range(3)])
    print("(3,2,2,2,3) split at 2:", min(d_rp0((3, 2, 2)), d_rp0((2, 2, 3))))
