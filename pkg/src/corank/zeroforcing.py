"""The color-change game: closures, exact zero forcing numbers, and the
unit-determinant certificate submatrix extracted from a chronological list.

Rules: a blue vertex with exactly one white neighbor forces it; on digraphs
the unique white *out*-neighbor is forced (in-neighbors are irrelevant).
"""

from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULT_CONFIG
from .graphs import Digraph
from .polyring import ZZ, Polynomial


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class ColorState:
    blue: frozenset
    forces: tuple  # ordered (forcer, forced) pairs


@dataclass(frozen=True)
class ForceRecord:
    initial_set: frozenset
    forces: tuple

    def to_json(self):
        return {"initial_set": sorted(self.initial_set),
                "forces": [list(f) for f in self.forces]}

    @classmethod
    def from_json(cls, payload):
        return cls(frozenset(payload["initial_set"]),
                   tuple((a, b) for a, b in payload["forces"]))


def _forward_masks(g):
    return g.out_adj if isinstance(g, Digraph) else g.adj


def closure(g, blue, rng=None) -> ColorState:
    """Fixed point of the color change rule starting from the given set.

    Deterministic by default: the lexicographically smallest legal
    (forcer, forced) pair is applied first.  Passing an rng randomizes the
    application order; the final blue set is order-independent.
    """
    adj = _forward_masks(g)
    mask = 0
    for v in blue:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    forces = []
    while True:
        legal = []
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            white = adj[v] & ~mask
            if white and white & (white - 1) == 0:
                legal.append((v, white.bit_length() - 1))
                if rng is None:
                    break
        if not legal:
            break
        pick = legal[0] if rng is None else legal[rng.randrange(len(legal))]
        forces.append(pick)
        mask |= 1 << pick[1]
    blue_out = frozenset(i for i in range(g.n) if mask >> i & 1)
    return ColorState(blue_out, tuple(forces))


def is_zero_forcing_set(g, blue) -> bool:
    return len(closure(g, blue).blue) == g.n


@dataclass(frozen=True)
class ZeroForcingResult:
    z: int
    witness: ForceRecord
    exact: bool


def zero_forcing_number(g, config=DEFAULT_CONFIG) -> ZeroForcingResult:
    """Minimum zero forcing set by ascending-cardinality subset search.

    Exact for n <= config.zf_exact_max_n; the witness is the
    lexicographically least minimum set.  Beyond the exact tier a greedy
    upper bound is returned with exact=False.
    """
    n = g.n
    if n == 0:
        return ZeroForcingResult(0, ForceRecord(frozenset(), ()), True)
    if n > config.zf_exact_max_n:
        return _greedy_upper_bound(g)
    failed_closures = []  # maximal non-spanning closed sets seen so far
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            cmask = 0
            for v in combo:
                cmask |= 1 << v
            if any(cmask & ~c == 0 for c in failed_closures):
                continue  # closure stays inside a known non-spanning closed set
            state = closure(g, combo)
            if len(state.blue) == n:
                record = ForceRecord(frozenset(combo), state.forces)
                return ZeroForcingResult(k, record, True)
            cl = 0
            for v in state.blue:
                cl |= 1 << v
            if not any(cl & ~c == 0 for c in failed_closures):
                failed_closures = [c for c in failed_closures if c & ~cl != 0]
                failed_closures.append(cl)
    raise AssertionError("V itself always forces")  # pragma: no cover


def _greedy_upper_bound(g):
    keep = set(range(g.n))
    for v in range(g.n - 1, -1, -1):
        trial = keep - {v}
        if trial and is_zero_forcing_set(g, trial):
            keep = trial
    state = closure(g, keep)
    return ZeroForcingResult(len(keep), ForceRecord(frozenset(keep), state.forces),
                             False)


def mz(g, config=DEFAULT_CONFIG) -> int:
    """n - Z(g); a lower bound on n - Z when beyond the exact tier."""
    return g.n - zero_forcing_number(g, config).z


def validate_record(g, record: ForceRecord) -> bool:
    """Replay the chronological list, checking each force was legal."""
    adj = _forward_masks(g)
    mask = 0
    for v in record.initial_set:
        if not 0 <= v < g.n:
            return False
        mask |= 1 << v
    for a, b in record.forces:
        if not (mask >> a & 1) or mask >> b & 1:
            return False
        white = adj[a] & ~mask
        if white != 1 << b:
            return False
        mask |= 1 << b
    return mask == (1 << g.n) - 1


@dataclass(frozen=True)
class CertificateMinor:
    rows: tuple          # forcing vertices a_1..a_k
    cols: tuple          # forced vertices b_1..b_k
    entries: tuple       # k x k of Polynomial over ZZ
    determinant: int     # (-1)^k, forced by the triangular shape

    @property
    def k(self):
        return len(self.rows)


def certificate_minor(g, record: ForceRecord) -> CertificateMinor:
    """The submatrix of the variable-diagonal Laplacian on rows a_i, cols b_i.

    Structurally verified lower triangular with -1 on the diagonal, so its
    determinant is (-1)^k whatever the below-diagonal entries (which may be
    diagonal variables of the ambient matrix).  This certifies the k-minor
    ideal trivial over every commutative ring with unity.
    """
    if not validate_record(g, record):
        raise CertificateError("force record does not replay on this graph")
    k = len(record.forces)
    rows = tuple(a for a, _ in record.forces)
    cols = tuple(b for _, b in record.forces)
    directed = isinstance(g, Digraph)
    n = g.n

    def entry(u, v):
        if u == v:
            return Polynomial.variable(n, ZZ, u)
        if directed:
            mult = 1 if g.has_arc(u, v) else 0
        else:
            mult = 1 if g.has_edge(u, v) else 0
        return Polynomial.constant(n, ZZ, -mult)

    grid = []
    for t, a in enumerate(rows):
        row = []
        for s, b in enumerate(cols):
            e = entry(a, b)
            if s == t:
                if e != Polynomial.constant(n, ZZ, -1):
                    raise CertificateError(
                        f"diagonal entry at step {t} is not -1; "
                        f"replay admitted an illegal force")
            elif s > t:
                if not e.is_zero():
                    raise CertificateError(
                        f"entry ({t},{s}) above the diagonal is nonzero; "
                        f"list is not chronological")
            row.append(e)
        grid.append(tuple(row))
    det = -1 if k % 2 else 1
    return CertificateMinor(rows, cols, tuple(grid), det)
