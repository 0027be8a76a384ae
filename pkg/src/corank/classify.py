"""Forbidden-induced-subgraph classifications at parameter value one.

Graphs: connected G is complete iff P3-free iff mr <= 1 iff co-rank <= 1
iff mz <= 1.  Digraphs: the analogous five-way classification through the
three-part digraphs Lambda_{n1,n2,n3} and the seventeen-member forbidden
family.  The digraph equivalence is exhaustively true on weakly connected
inputs; disconnected inputs can break the forbidden-family direction (two
disjoint arcs are family-free but have mz = 2), and reports on such inputs
carry agreement=False rather than hiding it.
"""

from dataclasses import dataclass, field

from .config import DEFAULT_CONFIG
from .criticalideals import gamma
from .generators import forbidden_family_named, path
from .graphs import Digraph, Graph, contains_induced, is_connected
from .polyring import QQ, ZZ
from .zeroforcing import zero_forcing_number


@dataclass
class EquivalenceReport:
    kind: str
    conditions: dict            # name -> bool
    witnesses: dict = field(default_factory=dict)

    @property
    def agreement(self) -> bool:
        return len(set(self.conditions.values())) == 1

    def to_json(self):
        return {"kind": self.kind, "conditions": dict(self.conditions),
                "agreement": self.agreement,
                "witnesses": {k: _plain(v) for k, v in self.witnesses.items()}}


def _plain(v):
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, (frozenset, set)):
        return sorted(v)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return v


# ---------------------------------------------------------------------------
# graphs

def is_complete_graph(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def classify_rank1_graph(g: Graph, config=DEFAULT_CONFIG, cache=None) -> EquivalenceReport:
    """The five equivalent descriptions of connected graphs with all
    parameters at most one (only the complete graphs qualify)."""
    if not is_connected(g):
        raise ValueError("rank-1 classification is stated for connected graphs")
    complete = is_complete_graph(g)
    p3_hit = contains_induced(g, path(3)) if g.n >= 3 else None
    p3_free = p3_hit is None
    zf = zero_forcing_number(g, config)
    m_z = g.n - zf.z
    gq = gamma(g, QQ, config, cache)
    gz = gamma(g, ZZ, config, cache)
    mr_le_1 = complete  # the all-ones matrix is the rank-one witness
    witnesses = {"zero_forcing_set": zf.witness.initial_set,
                 "gamma_q": gq.value, "gamma_z": gz.value}
    if p3_hit is not None:
        witnesses["induced_p3"] = p3_hit
    if complete:
        witnesses["rank1_matrix"] = "all-ones"
    conditions = {
        "complete": complete,
        "p3_free": p3_free,
        "mr_le_1": mr_le_1,
        "gamma_le_1": gq.value is not None and gq.value <= 1
                      and gz.value is not None and gz.value <= 1,
        "mz_le_1": m_z <= 1,
    }
    return EquivalenceReport("graph-rank1", conditions, witnesses)


@dataclass
class Mr2CorollaryResult:
    applicable: bool
    holds: bool | None
    mr: int
    gamma_q: int

    def to_json(self):
        return {"applicable": self.applicable, "holds": self.holds,
                "mr": self.mr, "gamma_q": self.gamma_q}


def check_mr2_corollary(g: Graph, config=DEFAULT_CONFIG, cache=None) -> Mr2CorollaryResult:
    """For connected graphs with mr <= 2 (exact at n <= 7), mr <= gamma.

    Graphs with mr > 2 are reported not applicable rather than false.
    """
    if g.n > 7:
        raise ValueError("exact minimum rank needs n <= 7")
    zf = zero_forcing_number(g, config)
    mr = g.n - zf.z
    gq = gamma(g, QQ, config, cache)
    if mr > 2:
        return Mr2CorollaryResult(False, None, mr, gq.value)
    return Mr2CorollaryResult(True, mr <= gq.value, mr, gq.value)


# ---------------------------------------------------------------------------
# digraphs

def rank1_arc_decomposition(d: Digraph):
    """Sets (A, B) with arcs(d) = A x B minus the diagonal, or None.

    Such a decomposition is exactly a rank-one pattern witness: the 0/1
    matrix with rows A and columns B realizes the arc pattern off the
    diagonal.  Vertices outside A and B are necessarily isolated.
    """
    if not d.arcs:
        return frozenset(), frozenset()
    out_support = frozenset(u for u in range(d.n) if d.out_adj[u])
    in_support = frozenset(v for v in range(d.n) if d.in_adj[v])
    # a one-element side may absorb its counterpart without changing A x B
    cand_a = [out_support] + ([out_support | in_support] if len(in_support) == 1 else [])
    cand_b = [in_support] + ([in_support | out_support] if len(out_support) == 1 else [])
    arcs = set(d.arcs)
    for a in cand_a:
        for b in cand_b:
            if {(u, v) for u in a for v in b if u != v} == arcs:
                return a, b
    return None


def _lambda_witnesses(d: Digraph, require_cover):
    if not d.arcs:
        if require_cover:
            return [(0, 0, d.n)]
        return [(0, 0, d.n)]
    out_support = frozenset(u for u in range(d.n) if d.out_adj[u])
    in_support = frozenset(v for v in range(d.n) if d.in_adj[v])
    cand_a = [out_support] + ([out_support | in_support] if len(in_support) == 1 else [])
    cand_b = [in_support] + ([in_support | out_support] if len(out_support) == 1 else [])
    arcs = set(d.arcs)
    found = []
    for a in cand_a:
        for b in cand_b:
            if {(u, v) for u in a for v in b if u != v} != arcs:
                continue
            if require_cover and (a | b) != set(range(d.n)):
                continue
            found.append((len(a - b), len(a & b), len(b - a)))
    return sorted(set(found))


def is_lambda(d: Digraph):
    """Partition witness (n1, n2, n3) when d is exactly some Lambda digraph.

    Every vertex must land in one of the three parts (empty parts are
    fine); ties resolve to the lexicographically least witness.  Returns
    None otherwise.
    """
    found = _lambda_witnesses(d, require_cover=True)
    return found[0] if found else None


def is_lambda_up_to_isolated(d: Digraph):
    """(n1, n2, n3, isolated count) when d is a Lambda digraph possibly
    together with isolated vertices.

    Disconnected inputs make this the reading under which the five-way
    digraph classification stays an equivalence; an exact Lambda is the
    special case isolated = 0.
    """
    deco = rank1_arc_decomposition(d)
    if deco is None:
        return None
    a, b = deco
    if not d.arcs:
        return (0, 0, d.n, 0)
    isolated = d.n - len(a | b)
    witnesses = _lambda_witnesses(d, require_cover=False)
    n1, n2, n3 = witnesses[0]
    return (n1, n2, n3, isolated)


def lambda_pattern_matrix(d: Digraph):
    """Rank-at-most-one integer matrix whose off-diagonal support is the
    arc set, from the A x B decomposition; None when no such matrix exists."""
    deco = rank1_arc_decomposition(d)
    if deco is None:
        return None
    a, b = deco
    return [[(1 if (i in a and j in b) else 0) for j in range(d.n)]
            for i in range(d.n)]


def classify_digraph1(d: Digraph, config=DEFAULT_CONFIG, cache=None) -> EquivalenceReport:
    """The five-way digraph classification at parameter value one.

    Conditions: forbidden-family-free, Lambda shape (up to isolated
    vertices), minimum rank <= 1 (rank-one pattern witness), mz <= 1, and
    co-rank <= 1 over Z and Q.  Agreement can legitimately fail on
    disconnected inputs whose components both carry arcs; the report then
    simply carries the disagreement.
    """
    hits = []
    for name, pattern, _ in forbidden_family_named():
        if pattern.n <= d.n:
            emb = contains_induced(d, pattern)
            if emb is not None:
                hits.append((name, emb))
    family_free = not hits

    lam = is_lambda_up_to_isolated(d)
    strict = is_lambda(d)
    matrix = lambda_pattern_matrix(d)
    mr_le_1 = matrix is not None
    if matrix is not None:
        _assert_pattern(d, matrix)

    zf = zero_forcing_number(d, config)
    m_z = d.n - zf.z
    gq = gamma(d, QQ, config, cache)
    gz = gamma(d, ZZ, config, cache)

    conditions = {
        "family_free": family_free,
        "lambda_shape": lam is not None,
        "mr_le_1": mr_le_1,
        "mz_le_1": m_z <= 1,
        "gamma_le_1": gq.value is not None and gq.value <= 1
                      and gz.value is not None and gz.value <= 1,
    }
    witnesses = {"zero_forcing_set": zf.witness.initial_set,
                 "mz": m_z, "gamma_q": gq.value, "gamma_z": gz.value}
    if hits:
        witnesses["forbidden_embeddings"] = hits[:3]
    if lam is not None:
        witnesses["lambda_parts"] = lam
        witnesses["lambda_strict"] = strict
    if matrix is not None:
        witnesses["rank1_matrix"] = matrix
    return EquivalenceReport("digraph-rank1", conditions, witnesses)


def _assert_pattern(d, matrix):
    from .linalg import exact_rank
    for i in range(d.n):
        for j in range(d.n):
            if i == j:
                continue
            want = d.has_arc(i, j)
            have = matrix[i][j] != 0
            assert want == have, f"pattern mismatch at ({i},{j})"
    assert exact_rank(matrix).rank <= 1
