#!/usr/bin/env python3
"""Writes the monoid table corpus under fixtures/monoids.

Every monoid of order at most 4 up to isomorphism, plus a handful of larger
ones.  Element 0 is the identity in every generated table.
"""

import itertools
import json
import pathlib
import sys


def associative(t, n):
    return all(t[t[a][b]][c] == t[a][t[b][c]]
               for a in range(n) for b in range(n) for c in range(n))


def canonical(t, n):
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        key = tuple(inv[t[p[a]][p[b]]] for a in range(n) for b in range(n))
        if best is None or key < best:
            best = key
    return best


def monoids_of_order(n):
    seen = set()
    out = []
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    for values in itertools.product(range(n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for x in range(n):
            t[0][x] = x
            t[x][0] = x
        for (a, b), v in zip(cells, values):
            t[a][b] = v
        if not associative(t, n):
            continue
        key = canonical(t, n)
        if key in seen:
            continue
        seen.add(key)
        out.append([list(key[i * n:(i + 1) * n]) for i in range(n)])
    return sorted(out)


def cyclic_group(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def chain(n):
    # 0 is the top (identity); the product is the larger index
    return [[max(a, b) for b in range(n)] for a in range(n)]


def nilpotent(n):
    # 1, a, a^2, ..., a^(n-2), 0 with a^(n-1) = 0
    zero = n - 1
    return [[min(a + b, zero) for b in range(n)] for a in range(n)]


def with_identity(semigroup):
    m = len(semigroup)
    t = [[0] * (m + 1) for _ in range(m + 1)]
    for x in range(m + 1):
        t[0][x] = x
        t[x][0] = x
    for a in range(m):
        for b in range(m):
            t[a + 1][b + 1] = semigroup[a][b] + 1
    return t


def brandt_b2():
    # 0, e11, e12, e21, e22 with matrix-unit products
    units = [(1, 1), (1, 2), (2, 1), (2, 2)]
    s = [[0] * 5 for _ in range(5)]
    for i, (a, b) in enumerate(units):
        for j, (c, d) in enumerate(units):
            s[i + 1][j + 1] = units.index((a, d)) + 1 if b == c else 0
    return s


def left_zero(m):
    return [[a for _ in range(m)] for a in range(m)]


def symmetric3():
    perms = list(itertools.permutations(range(3)))
    perms.sort(key=lambda p: p != (0, 1, 2))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[k]] for k in range(3))] for q in perms]
            for p in perms]


def group_with_zero(g):
    n = len(g)
    t = [[0] * (n + 1) for _ in range(n + 1)]
    for a in range(n + 1):
        for b in range(n + 1):
            t[a][b] = n if a == n or b == n else g[a][b]
    return t


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures/monoids")
    root.mkdir(parents=True, exist_ok=True)
    tables = {}
    for n in range(1, 5):
        for i, t in enumerate(monoids_of_order(n)):
            tables[f"m{n}_{i:02d}"] = t
    tables["z5"] = cyclic_group(5)
    tables["chain5"] = chain(5)
    tables["nil5"] = nilpotent(5)
    tables["z4_zero"] = group_with_zero(cyclic_group(4))
    tables["b2_one"] = with_identity(brandt_b2())
    tables["s3"] = symmetric3()
    tables["lz5_one"] = with_identity(left_zero(5))
    tables["z6"] = cyclic_group(6)
    for name, t in tables.items():
        n = len(t)
        assert associative(t, n), name
        doc = {"size": n, "identity": 0, "table": t}
        (root / f"{name}.json").write_text(
            json.dumps(doc, separators=(", ", ": ")) + "\n")
    print(f"wrote {len(tables)} tables to {root}")


if __name__ == "__main__":
    main()
