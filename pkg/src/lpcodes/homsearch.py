"""Group homomorphism search for lattice tilings by discrete balls.

A ball B tiles Z^n by translates of a lattice iff some Abelian group G
with |G| = |B| admits a homomorphism phi: Z^n -> G whose restriction to
B is a bijection; the tiling lattice is ker(phi).  Injectivity on B is
equivalent to phi(v) != 0 for every nonzero v in B - B, which is what
the search enforces.

The search is depth-first over the basis images g_1..g_n.  Before image
g_j is chosen, every difference vector whose highest nonzero coordinate
is j contributes a congruence v_j * x = -(v_1 g_1 + ... + v_{j-1}
g_{j-1}); its solution set is marked forbidden in a dense table, and the
candidates for g_j are the unmarked elements.  Symmetry reductions (all
validated against brute force in the test suite):

* each image is negation-normalized (g and -g are interchangeable via a
  coordinate sign flip, which preserves the ball);
* images are taken in sorted encoded order (coordinate permutations
  preserve the ball), except that for cyclic G the first image is
  instead fixed to one divisor per automorphism orbit, and only the
  remaining images are mutually sorted.
"""

import itertools
import json
from dataclasses import dataclass, replace
from functools import reduce
from math import gcd, lcm

from . import distance_sets, lattices
from .geometry import INF, RadiusToken, difference_set, enumerate_ball
from .intmath import divisors, factorize, xgcd
from .lattices import IntegerLattice

__all__ = [
    "AbelianGroupSpec",
    "GroupHomomorphism",
    "TokenOutcome",
    "ClassificationReport",
    "abelian_groups_of_order",
    "is_bijective_on",
    "kernel_lattice",
    "search_homomorphisms",
    "classify",
    "brute_force_search",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Abelian group as an invariant-factor chain d_1 | d_2 | ... (each > 1).

    Elements are residue tuples; `encode` packs them into mixed-radix
    integers (first factor least significant) for dense table indexing.
    The trivial group has an empty chain.
    """

    order: int
    factors: tuple

    def __post_init__(self):
        prod = 1
        for a, b in itertools.pairwise(self.factors):
            if b % a:
                raise ValueError(f"not a divisibility chain: {self.factors}")
        for d in self.factors:
            if d < 2:
                raise ValueError("invariant factors must exceed 1")
            prod *= d
        if prod != self.order:
            raise ValueError(f"factors {self.factors} do not multiply to {self.order}")

    @property
    def is_cyclic(self):
        return len(self.factors) <= 1

    @property
    def identity(self):
        return (0,) * len(self.factors)

    def encode(self, x):
        idx = 0
        for c, d in zip(reversed(x), reversed(self.factors)):
            idx = idx * d + c
        return idx

    def decode(self, idx):
        x = []
        for d in self.factors:
            idx, c = divmod(idx, d)
            x.append(c)
        return tuple(x)

    def neg(self, x):
        return tuple((-c) % d for c, d in zip(x, self.factors))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def scale(self, k, x):
        return tuple((k * c) % d for c, d in zip(x, self.factors))

    def element_order(self, x):
        return reduce(lcm, (d // gcd(c, d) for c, d in zip(x, self.factors)), 1)

    def elements(self):
        return (self.decode(i) for i in range(self.order))

    def label(self):
        return " x ".join(f"Z_{d}" for d in reversed(self.factors)) or "Z_1"


def _partitions(k):
    """Integer partitions of k, parts descending, lexicographically largest first."""
    if k == 0:
        yield ()
        return
    for first in range(k, 0, -1):
        for rest in _partitions(k - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def abelian_groups_of_order(m):
    """All Abelian groups of order m up to isomorphism, cyclic first.

    Built by choosing a partition of each prime exponent and merging the
    prime-power blocks columnwise into an invariant-factor chain.  The
    list is ordered by descending factor profile, so Z_m always leads
    and square-free m yields exactly one group.
    """
    if m < 1:
        raise ValueError("order must be positive")
    primes = sorted(factorize(m).items())
    choices = [list(_partitions(e)) for _, e in primes]
    groups = []
    for combo in itertools.product(*choices):
        depth = max((len(parts) for parts in combo), default=0)
        chain = []
        for row in range(depth):
            d = 1
            for (p, _), parts in zip(primes, combo):
                if row < len(parts):
                    d *= p ** parts[row]
            chain.append(d)
        # chain is descending by construction; store ascending
        groups.append(AbelianGroupSpec(m, tuple(reversed(chain))))
    groups.sort(key=lambda g: tuple(sorted(g.factors, reverse=True)), reverse=True)
    return groups


@dataclass(frozen=True)
class GroupHomomorphism:
    """phi: Z^n -> G determined by the images of the standard basis."""

    group: AbelianGroupSpec
    images: tuple

    def __post_init__(self):
        k = len(self.group.factors)
        for g in self.images:
            if len(g) != k:
                raise ValueError("image has wrong number of components")

    @property
    def n(self):
        return len(self.images)

    def apply(self, x):
        if len(x) != self.n:
            raise ValueError("dimension mismatch")
        acc = self.group.identity
        for xi, g in zip(x, self.images):
            acc = self.group.add(acc, self.group.scale(xi, g))
        return acc

    def to_json(self):
        return {
            "group_order": self.group.order,
            "group_factors": list(self.group.factors),
            "images": [list(g) for g in self.images],
        }

    @classmethod
    def from_json(cls, obj):
        spec = AbelianGroupSpec(obj["group_order"], tuple(obj["group_factors"]))
        return cls(spec, tuple(tuple(g) for g in obj["images"]))


def is_bijective_on(phi, ball):
    """Whether phi restricted to the ball's points is a bijection onto G.

    With |G| = |ball| this reduces (pigeonhole) to injectivity, i.e.
    phi(v) != 0 for every nonzero difference v; unequal sizes are an
    immediate no.
    """
    if phi.group.order != ball.cardinality:
        return False
    zero = phi.group.identity
    for v in difference_set(ball).points:
        if any(v) and phi.apply(v) == zero:
            return False
    return True


def kernel_lattice(phi):
    """Hermite basis of ker(phi) = {x in Z^n : phi(x) = 0}.

    Computed from the integer left-nullspace of the images stacked over
    diag(d_1..d_k): a relation (x, y) with x.M + y.D = 0 means exactly
    that phi(x) vanishes.  det equals |G| iff phi is surjective, so a
    smaller determinant is the caller's signal of a proper image.
    """
    n = phi.n
    factors = phi.group.factors
    k = len(factors)
    if k == 0:
        return IntegerLattice.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)
    stacked = [list(g) for g in phi.images]
    stacked += [[factors[c] if j == c else 0 for j in range(k)] for c in range(k)]
    _, U, rank = lattices.integer_row_echelon(stacked)
    relations = [row[:n] for row in U[rank:]]
    return IntegerLattice.from_rows(relations, n)


def _slices(diffs, n):
    """Difference vectors keyed by highest nonzero coordinate, upper half.

    Only v with v_j > 0 are kept (phi(-v) = -phi(v)); each is trimmed to
    its first j+1 coordinates.
    """
    out = [[] for _ in range(n)]
    for v in diffs:
        j = n - 1
        while j >= 0 and v[j] == 0:
            j -= 1
        if j < 0 or v[j] < 0:
            continue
        out[j].append(v[: j + 1])
    return [tuple(sorted(level)) for level in out]


def _mark_forbidden(group, level_slice, prefix):
    """Dense 0/1 table over G of images g_j violating some difference.

    For each slice vector v the constraint phi(v) != 0 forbids the
    solutions x of v_j * x = -(sum over the prefix); solving is
    componentwise CRT on the invariant factors.  No-solution congruences
    forbid nothing.
    """
    factors = group.factors
    marked = bytearray(group.order)
    for v in level_slice:
        rhs = group.identity
        for vi, g in zip(v, prefix):
            rhs = group.add(rhs, group.scale(-vi, g))
        a = v[-1]
        per_component = []
        for t, d in zip(rhs, factors):
            g0, inv, _ = xgcd(a % d, d)
            if t % g0:
                per_component = None
                break
            step = d // g0
            x0 = (inv * (t // g0)) % step
            per_component.append((x0, step, g0))
        if per_component is None:
            continue
        if len(factors) == 1:
            x0, step, cnt = per_component[0]
            marked[x0::step] = b"\x01" * cnt
        else:
            sols = [[x0 + k * step for k in range(cnt)] for x0, step, cnt in per_component]
            for combo in itertools.product(*sols):
                marked[group.encode(combo)] = 1
    return marked


def _search_group(group, n, slices, budget, counter):
    """DFS for one group; returns images or None.  counter[0] = examined."""
    m = group.order
    # negation-normalized representatives, in encode order
    normalized = []
    for i in range(m):
        g = group.decode(i)
        if i <= group.encode(group.neg(g)):
            normalized.append(g)
    if group.is_cyclic and m > 1:
        first_candidates = [((d % m),) for d in divisors(m)]
    else:
        first_candidates = normalized

    prefix = []

    def descend(j):
        marked = _mark_forbidden(group, slices[j], prefix)
        if j == 0:
            candidates = first_candidates
        elif group.is_cyclic and j == 1:
            candidates = normalized
        else:
            floor = group.encode(prefix[-1])
            candidates = [g for g in normalized if group.encode(g) >= floor]
        for g in candidates:
            counter[0] += 1
            if counter[0] > budget:
                raise _BudgetExceeded
            if marked[group.encode(g)]:
                continue
            if j == n - 1:
                return tuple(prefix) + (g,)
            prefix.append(g)
            found = descend(j + 1)
            prefix.pop()
            if found:
                return found
        return None

    return descend(0)


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class TokenOutcome:
    """Result of the homomorphism search at one radius token."""

    n: int
    token: RadiusToken
    status: str  # found | exhausted | inconclusive | skipped
    ball_size: int
    groups_tried: tuple
    homomorphism: object
    kernel: object
    candidates_examined: int
    certificate: object = None

    def to_json(self):
        return {
            "n": self.n,
            "p": self.token.json_p(),
            "s": self.token.power_value,
            "status": self.status,
            "ball_size": self.ball_size,
            "groups_tried": [list(fs) for fs in self.groups_tried],
            "homomorphism": self.homomorphism.to_json() if self.homomorphism else None,
            "kernel": self.kernel.to_json() if self.kernel else None,
            "candidates_examined": self.candidates_examined,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


def search_homomorphisms(n, token, budget=DEFAULT_BUDGET):
    """Search all Abelian groups of order mu_p(n, r) at one token.

    Unachievable tokens are skipped outright: the packing radius of any
    code lies in the distance set, so nothing can be r-perfect there.
    Groups are tried cyclic-first; within a group the traversal is
    deterministic, so exhausted counts are reproducible.
    """
    p = token.p
    s = token.power_value
    if p != INF and not distance_sets.is_achievable(p, n, s):
        return TokenOutcome(n, token, "skipped", 0, (), None, None, 0)
    ball = enumerate_ball(n, token)
    m = ball.cardinality
    slices = _slices(difference_set(ball).points, n)
    counter = [0]
    tried = []
    for group in abelian_groups_of_order(m):
        tried.append(group.factors)
        try:
            images = _search_group(group, n, slices, budget, counter)
        except _BudgetExceeded:
            return TokenOutcome(
                n, token, "inconclusive", m, tuple(tried), None, None, counter[0]
            )
        if images is not None:
            phi = GroupHomomorphism(group, images)
            return TokenOutcome(
                n, token, "found", m, tuple(tried), phi, kernel_lattice(phi), counter[0]
            )
    return TokenOutcome(n, token, "exhausted", m, tuple(tried), None, None, counter[0])


@dataclass(frozen=True)
class ClassificationReport:
    """Sweep of all achievable tokens up to s_max for fixed (n, p)."""

    n: int
    p: object
    s_max: int
    budget: int
    outcomes: tuple
    wall_time: float = 0.0  # informational; excluded from serialization

    @property
    def found_tokens(self):
        return tuple(o.token.power_value for o in self.outcomes if o.status == "found")

    def to_json_lines(self):
        return "".join(
            json.dumps(o.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
            for o in self.outcomes
        )

    def to_json(self):
        return {
            "n": self.n,
            "p": "inf" if self.p == INF else self.p,
            "s_max": self.s_max,
            "budget": self.budget,
            "outcomes": [o.to_json() for o in self.outcomes],
        }


def _classify_token(args):
    n, p, s, budget = args
    return search_homomorphisms(n, RadiusToken(p, s), budget)


def classify(n, p, s_max, budget=DEFAULT_BUDGET, jobs=1):
    """Classify every achievable token 1 <= s <= s_max for (n, p).

    s = 0 is excluded as trivial (the ball is the origin and Z^n itself
    tiles).  Each found homomorphism's kernel is independently
    re-verified as a perfect code, and the certificate is attached.
    """
    if p == INF:
        tokens = list(range(1, s_max + 1))
    else:
        tokens = [
            s
            for s in distance_sets.enumerate_achievable(p, n, s_max).achievable
            if s >= 1
        ]
    work = [(n, p, s, budget) for s in tokens]
    if jobs > 1 and len(work) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            outcomes = pool.map(_classify_token, work)
    else:
        outcomes = [_classify_token(w) for w in work]
    verified = []
    for out in outcomes:
        if out.status == "found":
            cert = lattices.verify_perfect(out.kernel, p, out.token)
            if not cert.is_perfect:
                raise AssertionError(
                    f"kernel at s={out.token.power_value} failed re-verification"
                )
            out = replace(out, certificate=cert)
        verified.append(out)
    return ClassificationReport(n, p, s_max, budget, tuple(verified))


def brute_force_search(n, token):
    """Unreduced reference search: every image tuple of every group.

    Exponential; only for cross-validating the symmetry reductions on
    tiny cases.  Returns the first homomorphism in lexicographic encode
    order, or None.
    """
    ball = enumerate_ball(n, token)
    diffs = [v for v in difference_set(ball).points if any(v)]
    for group in abelian_groups_of_order(ball.cardinality):
        zero = group.identity
        for combo in itertools.product(range(group.order), repeat=n):
            images = tuple(group.decode(i) for i in combo)
            phi = GroupHomomorphism(group, images)
            if all(phi.apply(v) != zero for v in diffs):
                return phi
    return None
