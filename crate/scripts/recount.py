"""Independent brute-force recount of small anti-dendriform algebras.

Scans every (succ, prec) pair of structure-constant tensors over F_p with
numpy, evaluating the axioms directly (no associativity shortcut), and prints
one count per (dim, p). Used to confirm the golden counts of the Rust search.

    python3 scripts/recount.py            # dims 1-2 over F_2, F_3
"""

import itertools
import sys

import numpy as np


def all_tensors(n, p):
    """Every n x n x n tensor over F_p, lexicographic, shape (p**n**3, n, n, n)."""
    digits = np.array(list(itertools.product(range(p), repeat=n ** 3)), dtype=np.int64)
    return digits.reshape(-1, n, n, n)


def prod(c, x, y):
    """Batched bilinear product: c[b,i,j,k], x[b,...,i], y[b,...,j] -> [b,...,k]."""
    return np.einsum("bijk,b...i,b...j->b...k", c, x, y)


def passes(s, q, p):
    """Boolean mask of candidates (s, q) satisfying both axiom groups."""
    b, n = s.shape[0], s.shape[1]
    d = (s + q) % p
    e = np.broadcast_to(np.eye(n, dtype=np.int64), (b, n, n))
    ok = np.ones(b, dtype=bool)
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e[:, i], e[:, j], e[:, k]
        t1 = prod(s, x, prod(s, y, z)) % p
        t2 = -prod(s, prod(d, x, y), z) % p
        t3 = -prod(q, x, prod(d, y, z)) % p
        t4 = prod(q, prod(q, x, y), z) % p
        l2 = prod(q, prod(s, x, y), z) % p
        r2 = prod(s, x, prod(q, y, z)) % p
        for a, c in ((t1, t2), (t2, t3), (t3, t4), (l2, r2)):
            ok &= (a == c).all(axis=1)
    return ok


def count(n, p):
    tensors = all_tensors(n, p)
    total = 0
    for s in tensors:
        batch = np.broadcast_to(s, tensors.shape)
        total += int(passes(batch, tensors, p).sum())
    return total


def main(argv):
    cases = [(1, 2), (1, 3), (2, 2), (2, 3)]
    if len(argv) > 1:
        cases = [tuple(int(v) for v in a.split(",")) for a in argv[1:]]
    for n, p in cases:
        print(f"dim {n} p{p}: {count(n, p)}")


if __name__ == "__main__":
    main(sys.argv)
