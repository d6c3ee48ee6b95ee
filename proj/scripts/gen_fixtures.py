#!/usr/bin/env python3
"""Regenerate the offline b-file fixtures under fixtures/.

Each sequence is computed from its definitional recurrence or Beatty floor
using exact integer arithmetic (math.isqrt); no floating point, and none of
the C++ code paths, are involved. When network access is available, prefer
refreshing real b-files from oeis.org via `hoflab oeis-diff --online`; these
fixtures exist so the diff suite runs deterministically offline.

Usage: scripts/gen_fixtures.py [terms] [outdir]
"""

import math
import sys
from pathlib import Path

TERMS = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
OUTDIR = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(__file__).resolve().parent.parent / "fixtures"


def lower_wythoff(n: int) -> int:  # floor(n*phi)
    return (n + math.isqrt(5 * n * n)) // 2


def upper_wythoff(n: int) -> int:  # floor(n*phi^2)
    return lower_wythoff(n) + n


def g_recursive(count: int) -> list[int]:  # A005206, offset 0
    g = [0, 1]
    for n in range(2, count):
        g.append(n - g[g[n - 1]])
    return g[:count]


def wythoff_swap(count: int) -> list[int]:  # A002251, offset 0
    w = list(range(count))
    k = 1
    while lower_wythoff(k) < count:
        lo, up = lower_wythoff(k), upper_wythoff(k)
        if lo < count:
            w[lo] = up
        if up < count:
            w[up] = lo
        k += 1
    return w


def averages(seq: list[int]) -> list[int]:  # A073869, offset 0
    out, acc = [], 0
    for n, v in enumerate(seq):
        acc += v
        assert acc % (n + 1) == 0, f"average not integral at {n}"
        out.append(acc // (n + 1))
    return out


def pell_gamma_slow(count: int) -> list[int]:  # A097508, offset 0
    return [math.isqrt(2 * (n + 1) ** 2) - (n + 1) for n in range(count)]


def r_slow(count: int) -> list[int]:  # A049472, offset 0: floor(n/sqrt2)
    return [math.isqrt(2 * n * n) // 2 for n in range(count)]


def pell_lower(n: int) -> int:  # floor(n(1+sqrt2))
    return n + math.isqrt(2 * n * n)


def pell_upper(n: int) -> int:  # floor(n(1+sqrt2/2))
    return n + math.isqrt(2 * n * n) // 2


def pell_swap(count: int) -> list[int]:  # A109250, offset 1
    size = count + 1
    w = list(range(size))
    k = 1
    while pell_upper(k) < size or pell_lower(k) < size:
        lo, up = pell_lower(k), pell_upper(k)
        if lo < size:
            w[lo] = up
        if up < size:
            w[up] = lo
        k += 1
    return w[1:size]


def v_recursive(count: int) -> list[int]:  # A063882, offset 1
    v = [0, 1, 1, 1, 1]
    for n in range(5, count + 1):
        v.append(v[n - v[n - 1]] + v[n - v[n - 4]])
    return v[1 : count + 1]


def cloitre(count: int) -> list[int]:  # A138466, offset 1
    a = [0, 1]
    for n in range(2, count + 1):
        a.append(n - a[a[n - 1]] // 2)
    return a[1 : count + 1]


def married(count: int) -> tuple[list[int], list[int]]:  # A005378/A005379, offset 0
    a, b = [1], [0]
    for n in range(1, count):
        b.append(n - a[b[n - 1]])
        a.append(n - b[a[n - 1]])
    return a, b


def greedy_f(count: int) -> list[int]:  # A019444, offset 1
    used, out, acc = set(), [], 0
    for n in range(1, count + 1):
        r = (-acc) % n
        x = r if r else n
        while x in used:
            x += n
        used.add(x)
        acc += x
        out.append(x)
    return out


def write_bfile(a_number: str, offset: int, values: list[int]) -> None:
    path = OUTDIR / f"b{a_number[1:]}.txt"
    with open(path, "w") as out:
        for i, v in enumerate(values):
            out.write(f"{offset + i} {v}\n")
    print(f"{path.name}: {len(values)} terms from index {offset}")


def main() -> None:
    OUTDIR.mkdir(parents=True, exist_ok=True)
    n = TERMS
    write_bfile("A005206", 0, g_recursive(n))
    write_bfile("A000201", 1, [lower_wythoff(i) for i in range(1, n + 1)])
    write_bfile("A001950", 1, [upper_wythoff(i) for i in range(1, n + 1)])
    w = wythoff_swap(n)
    write_bfile("A002251", 0, w)
    write_bfile("A073869", 0, averages(w))
    write_bfile("A097508", 0, pell_gamma_slow(n))
    write_bfile("A049472", 0, r_slow(n))
    write_bfile("A003151", 1, [pell_lower(i) for i in range(1, n + 1)])
    write_bfile("A003152", 1, [pell_upper(i) for i in range(1, n + 1)])
    write_bfile("A109250", 1, pell_swap(n))
    write_bfile("A063882", 1, v_recursive(n))
    write_bfile("A138466", 1, cloitre(n))
    a, b = married(n)
    write_bfile("A005378", 0, a)
    write_bfile("A005379", 0, b)
    write_bfile("A019444", 1, greedy_f(n))


if __name__ == "__main__":
    main()
