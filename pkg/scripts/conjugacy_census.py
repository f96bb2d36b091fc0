#!/usr/bin/env python3
"""Tabulate conjugacy classes of GF(q^k) under z -> sigma(u) z u^{-1} for
every Frobenius power sigma = phi^l, and confirm the class-size formula
(q^k - 1)/(q^r - 1) with r = gcd(l, k)."""

import math
import sys

sys.path.insert(0, "src")

from orecodes.gf import GF
from orecodes.skewpoly import OreRing, conjugacy_classes


def census(q, k):
    field = GF(q, k)
    print(f"== GF({q}^{k}) ==")
    for l in range(k):
        ring = OreRing(field, l)
        classes = conjugacy_classes(ring)
        r = math.gcd(l, k) if l else k
        expected = (q ** k - 1) // (q ** r - 1)
        sizes = sorted(len(c) for c in classes)
        print(
            f"  sigma = phi^{l}: {len(classes)} classes (predicted {q ** r}),"
            f" nonzero class size {expected}, sizes {sizes}"
        )
        reps = ["{" + ",".join(repr(z) for z in c) + "}" for c in classes]
        print("    " + "  ".join(reps))


if __name__ == "__main__":
    for q, k in [(2, 2), (2, 3), (3, 2), (2, 4)]:
        census(q, k)
