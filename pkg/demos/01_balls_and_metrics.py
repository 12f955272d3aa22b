"""Radius tokens, ball enumeration, and the p-Lee / induced-metric bridge.

Everything here is exact: a radius r with r^p = s integer is carried as
the token (p, s) and never converted to a float.
"""

from lpcodes.geometry import (
    INF,
    RadiusToken,
    ball_cardinality,
    enumerate_ball,
    induced_distance_oracle,
    lee_distance,
    lp_distance,
    plee_distance,
)

print("=== Euclidean balls in Z^2 ===")
for s in (1, 2, 4, 8):
    token = RadiusToken(2, s)
    print(f"  |B(sqrt{s:>2})| = {ball_cardinality(2, token):>2}", end="")
    if token.integer_radius() is not None:
        print(f"   (radius {token.integer_radius()})")
    else:
        print()

print("\n=== The cross B_2^2(1) ===")
cross = enumerate_ball(2, RadiusToken(2, 1))
for y in (1, 0, -1):
    row = "".join("#" if (x, y) in set(cross.points) else "." for x in (-1, 0, 1))
    print("  " + row)

print("\n=== Chebyshev ball = square ===")
print(f"  |B_inf^2(2)| = {ball_cardinality(2, RadiusToken(INF, 2))} = 5^2")

print("\n=== Distances ===")
x, y = (0, 0, 0), (1, 2, 3)
print(f"  l_3 distance {x} -- {y}: token s = {lp_distance(x, y, 3).power_value}")
print(f"  Lee distance of 1 and 12 in Z_13: {lee_distance(1, 12, 13)}")
print(f"  Lee distance of 0 and 7 in Z_49: {lee_distance(0, 7, 49)}")

print("\n=== p-Lee == quotient metric (spot checks) ===")
cases = [((0, 0), (12, 12), 13, 2), ((0, 0), (7, 5), 49, 1), ((3,), (10,), 13, 3)]
for a, b, q, p in cases:
    direct = plee_distance(a, b, q, p)
    oracle = induced_distance_oracle(a, b, q, p)
    tag = "ok" if direct == oracle else "MISMATCH"
    print(f"  q={q:<3} p={p}  {a} -- {b}: s = {direct.power_value:<4} [{tag}]")
