#!/usr/bin/env python3
"""Writes the highest-quality coprime triples a + b = c with c <= N."""
import argparse
import math
import sys


def radicals(n):
    rad = [1] * (n + 1)
    for p in range(2, n + 1):
        if rad[p] == 1:
            for k in range(p, n + 1, p):
                rad[k] *= p
    return rad


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=1000000)
    ap.add_argument("--count", type=int, default=100)
    args = ap.parse_args()
    n = args.limit
    rad = radicals(n)
    by_rad = sorted(range(1, n + 1), key=lambda k: rad[k])
    found = []
    for c in range(3, n + 1):
        # quality > 1 needs rad(a) rad(b) rad(c) < c
        bound = c / rad[c]
        if bound <= 2:
            continue
        for a in by_rad:
            ra = rad[a]
            if ra * 2 > bound:
                break
            if 2 * a >= c:
                continue
            b = c - a
            r = ra * rad[b] * rad[c]
            if r < c and math.gcd(a, b) == 1:
                found.append((math.log(c) / math.log(r), a, b, c))
    found.sort(key=lambda t: (-t[0], t[3]))
    out = sys.stdout
    out.write("# a b c quality, highest quality first, c <= %d\n" % n)
    for q, a, b, c in found[: args.count]:
        out.write("%d %d %d %.4f\n" % (a, b, c, q))


if __name__ == "__main__":
    main()
