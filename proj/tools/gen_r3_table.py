#!/usr/bin/env python3
"""Generate the R3 case table for Gauss diagrams from three straight lines.

Lines 0, 1, 2 sit at heights top, middle, bottom. For random arrangements we
read off, along each oriented line, the order of its two crossings and the
sign of every crossing (sign = z-component of over x under). The resulting
patterns are encoded as 6-bit keys:

  bit 0: top segment     -> tail of the top-middle chord comes first
  bit 1: middle segment  -> head (of the top-middle chord) comes first
  bit 2: bottom segment  -> head of the top-bottom chord comes first
  bit 3: sign of top-middle chord is +
  bit 4: sign of top-bottom chord is +
  bit 5: sign of middle-bottom chord is +
"""
import math
import random
import sys


def intersect(p, d, q, e):
    # p + t d = q + s e
    det = d[0] * (-e[1]) - d[1] * (-e[0])
    rx, ry = q[0] - p[0], q[1] - p[1]
    t = (rx * (-e[1]) - ry * (-e[0])) / det
    return (p[0] + t * d[0], p[1] + t * d[1])


def param(p, d, x):
    return (x[0] - p[0]) * d[0] + (x[1] - p[1]) * d[1]


def cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def pattern(lines):
    (p0, d0), (p1, d1), (p2, d2) = lines
    x01 = intersect(p0, d0, p1, d1)
    x02 = intersect(p0, d0, p2, d2)
    x12 = intersect(p1, d1, p2, d2)
    top_tm_first = param(p0, d0, x01) < param(p0, d0, x02)
    mid_head_first = param(p1, d1, x01) < param(p1, d1, x12)
    bot_tb_first = param(p2, d2, x02) < param(p2, d2, x12)
    s_tm = cross(d0, d1) > 0
    s_tb = cross(d0, d2) > 0
    s_mb = cross(d1, d2) > 0
    bits = [top_tm_first, mid_head_first, bot_tb_first, s_tm, s_tb, s_mb]
    return sum(int(b) << i for i, b in enumerate(bits))


def main():
    rng = random.Random(12345)
    found = set()
    for _ in range(200000):
        lines = []
        for _ in range(3):
            th = rng.uniform(0, 2 * math.pi)
            lines.append(((rng.uniform(-1, 1), rng.uniform(-1, 1)),
                          (math.cos(th), math.sin(th))))
        found.add(pattern(lines))
    # the other side of every move reverses all three segment orders
    for key in found:
        assert (key ^ 0b111) in found, key
    table = [1 if k in found else 0 for k in range(64)]
    print(f"// {len(found)} valid R3 configurations", file=sys.stderr)
    rows = [", ".join(str(v) for v in table[i:i + 16]) for i in range(0, 64, 16)]
    print(",\n".join(rows))


if __name__ == "__main__":
    main()
