"""Ordinary finite rings (associative, not necessarily unital) of small order.

Additive groups are built as products of cyclic groups; multiplications are
bilinear extensions of the products of generators, kept when they are
well defined and associative.  Rings are returned as integer tables over
``range(n)`` with 0 the additive identity.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

MAX_ORDER = 5


def _factorisations(n: int, smallest: int = 2) -> list[tuple[int, ...]]:
    """Cyclic factor orders (non-decreasing, each dividing the next) with product ``n``."""
    if n == 1:
        return [()]
    out = []
    for m in range(smallest, n + 1):
        if n % m == 0:
            for rest in _factorisations(n // m, m):
                if all(r % m == 0 for r in rest):
                    out.append((m,) + rest)
    return out


def _is_associative(mul, n) -> bool:
    return all(mul[mul[a][b]][c] == mul[a][mul[b][c]] for a in range(n) for b in range(n) for c in range(n))


def _is_distributive(add, mul, n) -> bool:
    for a, b, c in product(range(n), repeat=3):
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return False
        if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
            return False
    return True


def _rings_on_group(moduli: tuple[int, ...]):
    elements = list(product(*(range(m) for m in moduli))) if moduli else [()]
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    add = [[index[tuple((x + y) % m for x, y, m in zip(a, b, moduli))] for b in elements] for a in elements]
    k = len(moduli)
    gens = [(i, j) for i in range(k) for j in range(k)]
    for images in product(elements, repeat=len(gens)):
        gp = dict(zip(gens, images))

        def times(a, b):
            acc = [0] * k
            for i in range(k):
                for j in range(k):
                    coeff = a[i] * b[j]
                    if coeff:
                        for t in range(k):
                            acc[t] = (acc[t] + coeff * gp[i, j][t]) % moduli[t]
            return tuple(acc)

        mul = [[index[times(a, b)] for b in elements] for a in elements]
        if _is_distributive(add, mul, n) and _is_associative(mul, n):
            yield add, mul


def _canonical(add, mul, n):
    """Lexicographically smallest relabelling (used as an isomorphism invariant)."""
    best = None
    for perm in permutations(range(n)):
        if perm[0] != 0:
            continue
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        key = (
            tuple(perm[add[inv[a]][inv[b]]] for a in range(n) for b in range(n)),
            tuple(perm[mul[inv[a]][inv[b]]] for a in range(n) for b in range(n)),
        )
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def rings_up_to_iso(n: int) -> tuple:
    """One ``(add, mul)`` representative per isomorphism class of rings of order ``n``."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}")
    seen = {}
    for moduli in _factorisations(n):
        for add, mul in _rings_on_group(moduli):
            key = _canonical(add, mul, n)
            if key not in seen:
                seen[key] = (
                    tuple(tuple(key[0][a * n:(a + 1) * n]) for a in range(n)),
                    tuple(tuple(key[1][a * n:(a + 1) * n]) for a in range(n)),
                )
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def labelled_rings(n: int) -> frozenset:
    """Every ``(add, mul)`` pair on ``range(n)`` that is an ordinary ring (any zero)."""
    out = set()
    for add, mul in rings_up_to_iso(n):
        for perm in permutations(range(n)):
            inv = [0] * n
            for i, p in enumerate(perm):
                inv[p] = i
            out.add((
                tuple(tuple(perm[add[inv[a]][inv[b]]] for b in range(n)) for a in range(n)),
                tuple(tuple(perm[mul[inv[a]][inv[b]]] for b in range(n)) for a in range(n)),
            ))
    return frozenset(out)


def is_ordinary_ring(add, mul) -> bool:
    """Brute-force ring test on integer tables over ``range(n)``."""
    n = len(add)
    r = range(n)
    if any(add[a][b] != add[b][a] for a in r for b in r):
        return False
    if any(add[add[a][b]][c] != add[a][add[b][c]] for a in r for b in r for c in r):
        return False
    zeros = [e for e in r if all(add[e][a] == a for a in r)]
    if len(zeros) != 1:
        return False
    z = zeros[0]
    if any(all(add[a][b] != z for b in r) for a in r):
        return False
    return _is_associative(mul, n) and _is_distributive(add, mul, n)
