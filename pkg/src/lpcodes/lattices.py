"""Full-rank sublattices of Z^n in exact integer arithmetic.

A lattice is held in canonical lower-triangular Hermite normal form
(positive diagonal, entries below the diagonal reduced modulo it), so
two descriptions of the same lattice compare equal.  Enumeration,
minimum distance, packing radius and the perfect-code certificate all
reduce to integer comparisons via RadiusToken power values.
"""

from dataclasses import dataclass

from . import distance_sets
from .geometry import (
    INF,
    RadiusToken,
    ball_cardinality,
    balls_overlap,
    compare_root_sums,
)
from .intmath import iroot

__all__ = [
    "IntegerLattice",
    "QuotientStructure",
    "PerfectCertificate",
    "canonicalize",
    "hermite_normal_form",
    "smith_normal_form",
    "integer_row_echelon",
    "quotient_structure",
    "minimum_distance",
    "packing_radius",
    "radius_bracket",
    "verify_perfect",
]


def hermite_normal_form(rows, n):
    """Canonical lower-triangular HNF of the lattice generated by rows.

    Accepts any number of generators; raises ValueError if they do not
    span a rank-n lattice.
    """
    work = [list(map(int, r)) for r in rows]
    if any(len(r) != n for r in work):
        raise ValueError("generator rows must have length n")
    pivots = [None] * n
    for col in range(n - 1, -1, -1):
        live = [r for r in work if r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            base = live[0]
            for r in live[1:]:
                q = r[col] // base[col]
                for j in range(n):
                    r[j] -= q * base[j]
            live = [r for r in live if r[col]]
        if not live:
            raise ValueError("generators do not span a rank-n lattice")
        piv = live[0]
        work.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        pivots[col] = piv
    basis = [pivots[i] for i in range(n)]
    # reduce entries below the diagonal into [0, diag)
    for i in range(n):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                for k in range(j + 1):
                    basis[i][k] -= q * basis[j][k]
    return tuple(tuple(r) for r in basis)


@dataclass(frozen=True)
class IntegerLattice:
    """A full-rank sublattice of Z^n with canonical HNF basis rows."""

    n: int
    basis: tuple
    determinant: int

    @classmethod
    def from_rows(cls, rows, n=None):
        rows = [tuple(r) for r in rows]
        if n is None:
            if not rows:
                raise ValueError("empty generator list")
            n = len(rows[0])
        basis = hermite_normal_form(rows, n)
        det = 1
        for i in range(n):
            det *= basis[i][i]
        return cls(n, basis, det)

    def contains(self, v):
        v = list(v)
        if len(v) != self.n:
            return False
        for i in range(self.n - 1, -1, -1):
            d = self.basis[i][i]
            if v[i] % d:
                return False
            c = v[i] // d
            if c:
                for j in range(i + 1):
                    v[j] -= c * self.basis[i][j]
        return True

    def enumerate_in_box(self, box_radius):
        """All lattice points with sup norm <= box_radius, sorted."""
        if box_radius < 0:
            raise ValueError("box radius must be nonnegative")
        n, basis = self.n, self.basis
        out = []
        partial = [0] * n

        def rec(i):
            if i < 0:
                out.append(tuple(partial))
                return
            d = basis[i][i]
            lo = -((box_radius + partial[i]) // d)
            hi = (box_radius - partial[i]) // d
            for c in range(lo, hi + 1):
                if c:
                    for j in range(i + 1):
                        partial[j] += c * basis[i][j]
                rec(i - 1)
                if c:
                    for j in range(i + 1):
                        partial[j] -= c * basis[i][j]

        rec(n - 1)
        return sorted(out)

    def to_json(self):
        return {"n": self.n, "basis": [list(r) for r in self.basis]}

    @classmethod
    def from_json(cls, obj):
        return cls.from_rows(obj["basis"], obj["n"])


def canonicalize(rows, n=None):
    """IntegerLattice from an arbitrary generating set."""
    return IntegerLattice.from_rows(rows, n)


def smith_normal_form(rows):
    """Invariant factors d_1 | d_2 | ... of an integer matrix (Smith form)."""
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    ncols = len(A[0]) if m else 0
    t = 0
    factors = []
    while t < min(m, ncols):
        piv = None
        for i in range(t, m):
            for j in range(t, ncols):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        A[t], A[piv[0]] = A[piv[0]], A[t]
        for row in A:
            row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    for j in range(t, ncols):
                        A[i][j] -= q * A[t][j]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        clean = False
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for i in range(m):
                        A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        for i in range(m):
                            A[i][t], A[i][j] = A[i][j], A[i][t]
                        clean = False
            if not clean:
                continue
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, ncols):
                    if A[i][j] % A[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # fold the offending row into the pivot row; the column pass
            # then replaces the pivot by a strictly smaller remainder
            for j in range(t, ncols):
                A[t][j] += A[offender][j]
        factors.append(abs(A[t][t]))
        t += 1
    return tuple(factors)


def integer_row_echelon(rows):
    """(H, U, rank) with U unimodular, U @ rows = H in row echelon form.

    Rows of U beyond the rank are a basis of the integer left-nullspace.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    ncols = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    pr = 0
    for c in range(ncols):
        live = [i for i in range(pr, m) if A[i][c]]
        while len(live) > 1:
            live.sort(key=lambda i: abs(A[i][c]))
            base = live[0]
            for i in live[1:]:
                q = A[i][c] // A[base][c]
                for j in range(ncols):
                    A[i][j] -= q * A[base][j]
                for j in range(m):
                    U[i][j] -= q * U[base][j]
            live = [i for i in live if A[i][c]]
        if not live:
            continue
        i0 = live[0]
        A[pr], A[i0] = A[i0], A[pr]
        U[pr], U[i0] = U[i0], U[pr]
        if A[pr][c] < 0:
            A[pr] = [-x for x in A[pr]]
            U[pr] = [-x for x in U[pr]]
        pr += 1
        if pr == m:
            break
    return A, U, pr


@dataclass(frozen=True)
class QuotientStructure:
    """Invariant factors d_1 | d_2 | ... | d_n of Z^n modulo a lattice."""

    factors: tuple

    @property
    def order(self):
        out = 1
        for d in self.factors:
            out *= d
        return out


def quotient_structure(lat):
    factors = smith_normal_form(lat.basis)
    qs = QuotientStructure(factors)
    assert qs.order == lat.determinant
    return qs


def _row_power(row, p):
    if p == INF:
        return max(abs(x) for x in row)
    return sum(abs(x) ** p for x in row)


def minimum_distance(lat, p):
    """Shortest nonzero vector length of the lattice, as a RadiusToken.

    Box enumeration with a growing sup-norm window; the window never
    needs to exceed the sup norm bound implied by the shortest basis
    row, so the scan is exact and finite.
    """
    if p != INF and (not isinstance(p, int) or p < 1):
        raise ValueError("exponent must be an integer >= 1 or inf")
    s0 = min(_row_power(r, p) for r in lat.basis)
    hard = s0 if p == INF else iroot(s0, p)

    def best_in_box(radius):
        best = None
        for v in lat.enumerate_in_box(radius):
            if any(v):
                pw = _row_power(v, p)
                if best is None or pw < best:
                    best = pw
        return best

    radius = 1
    while True:
        radius = min(radius, hard)
        best = best_in_box(radius)
        if best is not None:
            refine = best if p == INF else iroot(best, p)
            refine = min(refine, hard)
            if refine > radius:
                best = best_in_box(refine)
            return RadiusToken(p, best)
        if radius == hard:
            raise AssertionError("shortest basis row not found in its own box")
        radius *= 2


def packing_radius(lat, p):
    """Largest achievable token r with all lattice-translated balls disjoint.

    Disjointness of B(0, r) and B(v, r) is tested exactly per lattice
    vector; the candidate window comes from the bracket
    floor((d-1)/2) <= r < d/2 + n**(1/p)/2, used only to bound the scan.
    """
    n = lat.n
    d = minimum_distance(lat, p)
    if p == INF:
        hi = (d.power_value + 1) // 2 + 1
        cand = [v for v in lat.enumerate_in_box(2 * hi) if any(v)]
        for r in range(hi, -1, -1):
            if not any(max(abs(c) for c in v) <= 2 * r for v in cand):
                result = RadiusToken(INF, r)
                assert (d.power_value - 1) // 2 <= result.power_value
                return result
        raise AssertionError("sup-metric radius scan exhausted")
    upper = d.radius / 2 + n ** (1.0 / p) / 2
    s_hi = int(upper**p) + 2
    table = distance_sets.enumerate_achievable(p, n, s_hi)
    box = 2 * iroot(s_hi, p)
    cand = [v for v in lat.enumerate_in_box(box) if any(v)]
    cand.sort(key=lambda v: _row_power(v, p))
    powers = [_row_power(v, p) for v in cand]
    for s in reversed(table.achievable):
        token = RadiusToken(p, s)
        top = 2 * iroot(s, p)
        hit = False
        for v, pw in zip(cand, powers):
            if pw <= s:
                hit = True
                break
            if pw > n * top**p:
                break
            if balls_overlap(v, n, token):
                hit = True
                break
        if not hit:
            lower = (iroot(d.power_value, p) - 1) // 2
            assert lower**p <= s
            return token
    raise AssertionError("token scan exhausted without finding a packing radius")


def radius_bracket(lat, p):
    """Exact check of floor((d-1)/2) <= r < d/2 + n**(1/p)/2.

    Returns (lower_ok, upper_ok, d_token, r_token) with both comparisons
    decided in integer/radical arithmetic, never floats.
    """
    d = minimum_distance(lat, p)
    r = packing_radius(lat, p)
    if p == INF:
        lower = (d.power_value - 1) // 2
        lower_ok = lower <= r.power_value
        upper_ok = 2 * r.power_value < d.power_value + 1
        return lower_ok, upper_ok, d, r
    lower = (iroot(d.power_value, p) - 1) // 2
    lower_ok = lower**p <= r.power_value
    # 2 * r < d + n^(1/p), all as p-th roots
    upper_ok = compare_root_sums(p, [(2, r.power_value)], [(1, d.power_value), (1, lat.n)]) < 0
    return lower_ok, upper_ok, d, r


@dataclass(frozen=True)
class PerfectCertificate:
    """Outcome of the perfect-code check for (lattice, p, r).

    PERFECT means determinant equals the ball cardinality and no nonzero
    lattice vector lies in B - B; by the counting argument the two
    conditions together are equivalent to the balls tiling Z^n.
    """

    status: str
    failed_condition: object
    witness_vector: object
    lattice: IntegerLattice
    token: RadiusToken

    @property
    def is_perfect(self):
        return self.status == "PERFECT"

    def to_json(self):
        return {
            "status": self.status,
            "failed_condition": self.failed_condition,
            "witness_vector": list(self.witness_vector) if self.witness_vector else None,
            "lattice": self.lattice.to_json(),
            "p": self.token.json_p(),
            "s": self.token.power_value,
        }


def verify_perfect(lat, p, token):
    """Certify whether lattice translates of B_p^n(r) tile Z^n."""
    if token.p != p:
        raise ValueError("token exponent does not match p")
    if p != INF and not distance_sets.is_achievable(p, lat.n, token.power_value):
        raise ValueError(
            f"s={token.power_value} is not an achievable distance power for (p={p}, n={lat.n})"
        )
    mu = ball_cardinality(lat.n, token)
    if lat.determinant != mu:
        return PerfectCertificate("NOT_PERFECT", "cardinality", None, lat, token)
    if p == INF:
        box = 2 * token.power_value
    else:
        box = 2 * iroot(token.power_value, p)
    for v in lat.enumerate_in_box(box):
        if any(v) and balls_overlap(v, lat.n, token):
            return PerfectCertificate("NOT_PERFECT", "overlap", v, lat, token)
    return PerfectCertificate("PERFECT", None, None, lat, token)
