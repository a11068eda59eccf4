#!/usr/bin/env python3
"""Reference arithmetic for the per-sample random stream.

splitmix64 seeding of xoshiro256**, written independently of the C++ code.
Prints the values frozen into tests/random_test.cc.
"""

M = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(state):
    state = (state + GOLDEN) & M
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
    return state, z ^ (z >> 31)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M


def derive(seed, index):
    x = seed ^ ((index * GOLDEN) & M)
    s = []
    for _ in range(4):
        x, out = splitmix64(x)
        s.append(out)
    return s


def next64(s):
    result = (rotl((s[1] * 5) & M, 7) * 9) & M
    t = (s[1] << 17) & M
    s[2] ^= s[0]
    s[3] ^= s[1]
    s[1] ^= s[2]
    s[0] ^= s[3]
    s[2] ^= t
    s[3] = rotl(s[3], 45)
    return result


def next_below(s, n):
    limit = ((1 << 64) // n) * n
    while True:
        v = next64(s)
        if v < limit:
            return v % n


if __name__ == "__main__":
    for seed, idx in [(42, 0), (42, 1), (0, 0), (123456789, 7)]:
        s = derive(seed, idx)
        print(f"derive({seed},{idx}) state = " + ", ".join(f"0x{v:016X}" for v in s))
        outs = [next64(s) for _ in range(3)]
        print("  next: " + ", ".join(f"0x{v:016X}" for v in outs))
    s = derive(42, 0)
    print("uniform(42,0): " + ", ".join(repr((next64(s) >> 11) * 2.0**-53) for _ in range(3)))
    s = derive(42, 0)
    print("below10(42,0): " + ", ".join(str(next_below(s, 10)) for _ in range(10)))
    s = derive(7, 3)
    print("below3(7,3): " + ", ".join(str(next_below(s, 3)) for _ in range(10)))
