#!/usr/bin/env python3
"""Reference token-selection traces for tests/protocol_test.cc.

Re-implements the draw/coin loop on top of rng_reference.py with an attack
that consumes no randomness (truncate), so the trace depends only on the
selection procedure.
"""

import math

from rng_reference import derive, next64, next_below


def uniform(s):
    return (next64(s) >> 11) * 2.0**-53


def target_count(n, p):
    return math.floor(p * n + 0.5 + 1e-9)


def trace(seed, index, tokens, p):
    s = derive(seed, index)
    target = target_count(len(tokens), p)
    remaining = list(range(len(tokens)))
    drawn, attacked = [], []
    while len(attacked) < target and remaining:
        j = next_below(s, len(remaining))
        idx = remaining[j]
        remaining[j] = remaining[-1]
        remaining.pop()
        drawn.append(idx)
        if uniform(s) < p and len(tokens[idx]) >= 3:
            attacked.append(idx)
    return drawn, attacked, target


if __name__ == "__main__":
    cases = [
        (42, 0, ["alpha", "be", "gamma", "delta", "epsilon", "zeta"], 0.5),
        (7, 3, ["one", "two", "three", "four"], 0.5),
        (2024, 11, ["a", "bb", "ccc", "dddd", "eeeee", "ffffff", "g"], 0.8),
    ]
    for seed, index, tokens, p in cases:
        drawn, attacked, target = trace(seed, index, tokens, p)
        print(f"seed={seed} index={index} p={p} target={target}")
        print(f"  drawn={drawn} attacked={attacked}")
