"""Minimum-rank style parameters: exact ranks, small-order minimum rank,
diagonal-evaluation bounds, and the tree parameter suite.

Tree parameters come from two independent dynamic programs (a 2-matching
DP and a delete-or-extend DP for the path-count maximum) whose agreement
with each other and with exponential oracles is part of the test gate.
"""

from dataclasses import dataclass, field
from itertools import product

from .config import DEFAULT_CONFIG
from .criticalideals import box_points, domain_name, gamma, generalized_laplacian
from .graphs import Graph, is_tree
from .linalg import RankComputation, exact_rank, rank_mod_p
from .polyring import QQ, ZZ, GF
from .zeroforcing import zero_forcing_number

__all__ = ["exact_rank", "RankComputation", "mr_small", "mrcr_bounds",
           "two_matching_number", "path_cover_number", "delta_parameter",
           "tree_suite", "TreeParams", "TreeTheoremViolation"]


class TreeTheoremViolation(AssertionError):
    """An identity that provably holds for trees failed: implementation bug."""


# ---------------------------------------------------------------------------
# minimum rank at small order

@dataclass(frozen=True)
class MinimumRankResult:
    exact: bool
    lower: int
    upper: int
    provenance: str

    @property
    def value(self):
        if not self.exact:
            raise ValueError("minimum rank not exact at this order; use bounds")
        return self.lower


def mr_small(g: Graph, config=DEFAULT_CONFIG) -> MinimumRankResult:
    """Real minimum rank, exact for n <= 7 where it coincides with n - Z.

    Larger orders get the interval [n - Z, best diagonal-evaluation rank],
    explicitly flagged non-exact.
    """
    zf = zero_forcing_number(g, config)
    lo = g.n - zf.z
    if g.n <= 7 and zf.exact:
        return MinimumRankResult(True, lo, lo, "zero-forcing identity (n <= 7)")
    bounds = mrcr_bounds(g, QQ, config.box_radius, config)
    return MinimumRankResult(False, lo, bounds.upper,
                             "bounds only: zero-forcing lower, evaluation upper")


@dataclass(frozen=True)
class MrcrBounds:
    domain: str
    lower: int
    upper: int
    witness: tuple | None   # diagonal achieving the upper bound
    exhaustive: bool        # whole box scanned (upper is exact over the box)

    @property
    def value(self):
        if self.lower != self.upper:
            raise ValueError("bounds did not close")
        return self.lower


def mrcr_bounds(g, domain=ZZ, box_radius=None, config=DEFAULT_CONFIG,
                gamma_result=None) -> MrcrBounds:
    """Bounds on the least rank of L(g, d) over diagonals d in the domain.

    Lower bound: the co-rank evidence (which itself dominates n - Z);
    upper bound: the best exact rank over the integer box.
    """
    if box_radius is None:
        box_radius = config.box_radius
    if gamma_result is None:
        gamma_result = gamma(g, domain, config)
    lower = gamma_result.value if gamma_result.value is not None else gamma_result.lower
    matrix = generalized_laplacian(g)
    upper = g.n
    witness = None
    scanned = 0
    exhaustive = True
    for pt in box_points(g.n, box_radius):
        scanned += 1
        if scanned > config.box_point_budget:
            exhaustive = False
            break
        if isinstance(domain, GF):
            rk = rank_mod_p(matrix.evaluate(pt), domain.p)
        else:
            rk = exact_rank(matrix.evaluate(pt)).rank
        if rk < upper:
            upper, witness = rk, pt
        if upper <= lower:
            break
    return MrcrBounds(domain_name(domain), lower, upper, witness, exhaustive)


# ---------------------------------------------------------------------------
# 2-matchings

def _adjacency_lists(g: Graph):
    # bitmask neighborhoods cost O(n) each on huge sparse graphs; plain
    # lists keep the tree DPs linear at n ~ 1e5
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _require_tree(g):
    n = g.n
    if n < 1 or g.m != n - 1:
        raise ValueError("input is not a tree (connected with n-1 edges)")
    adj = _adjacency_lists(g)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    if count != n:
        raise ValueError("input is not a tree (connected with n-1 edges)")
    return adj


def _rooted_order(adj, n, root=0):
    """Iterative DFS order and parents, avoiding recursion on big trees."""
    parent = [-2] * n
    order = []
    stack = [root]
    parent[root] = -1
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if parent[w] == -2:
                parent[w] = v
                stack.append(w)
    return order, parent


def _nu2_tree(g: Graph):
    """Maximum 2-matching on a tree: DP over (vertex, parent-edge-used)."""
    order, parent = _rooted_order(_adjacency_lists(g), g.n)
    children = [[] for _ in range(g.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    dp0 = [0] * g.n   # parent edge unused: up to two child edges
    dp1 = [0] * g.n   # parent edge used: up to one child edge
    pick0 = [[] for _ in range(g.n)]
    pick1 = [[] for _ in range(g.n)]
    for v in reversed(order):
        base = sum(dp0[c] for c in children[v])
        gains = sorted(((dp1[c] + 1 - dp0[c], c) for c in children[v]),
                       reverse=True)
        chosen = [c for gain, c in gains[:2] if gain > 0]
        dp0[v] = base + sum(dp1[c] + 1 - dp0[c] for c in chosen)
        pick0[v] = chosen
        chosen1 = [c for gain, c in gains[:1] if gain > 0]
        dp1[v] = base + sum(dp1[c] + 1 - dp0[c] for c in chosen1)
        pick1[v] = chosen1
    edges = []
    stack = [(0, 0)]  # (vertex, parent edge used)
    while stack:
        v, used = stack.pop()
        chosen = pick1[v] if used else pick0[v]
        for c in children[v]:
            if c in chosen:
                edges.append((min(v, c), max(v, c)))
                stack.append((c, 1))
            else:
                stack.append((c, 0))
    assert len(edges) == dp0[0]
    return dp0[0], edges


def _nu2_general(g: Graph):
    """Branch-and-bound maximum 2-matching for small general graphs."""
    edges = sorted(g.edges)
    best = [0, []]
    deg = [0] * g.n

    def rec(idx, count, chosen):
        if count + (len(edges) - idx) <= best[0]:
            return
        if idx == len(edges):
            if count > best[0]:
                best[0] = count
                best[1] = list(chosen)
            return
        u, v = edges[idx]
        if deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            rec(idx + 1, count + 1, chosen)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        rec(idx + 1, count, chosen)

    rec(0, 0, [])
    return best[0], best[1]


def two_matching_number(g: Graph):
    """Maximum edge set with every vertex meeting at most two chosen edges.

    Returns (size, edge list).  Trees use the linear DP; other graphs fall
    back to exhaustive search and are only intended for small instances.
    """
    if is_tree(g):
        return _nu2_tree(g)
    return _nu2_general(g)


# ---------------------------------------------------------------------------
# path covers on trees

def _paths_of_matching(g: Graph, matching):
    """Components of the chosen 2-matching as vertex paths (trees only)."""
    nbr = {v: [] for v in range(g.n)}
    for u, v in matching:
        nbr[u].append(v)
        nbr[v].append(u)
    assert all(len(ns) <= 2 for ns in nbr.values())
    seen = set()
    paths = []
    for v in range(g.n):
        if v in seen:
            continue
        if len(nbr[v]) == 2:
            continue  # interior vertex, start paths at endpoints only
        path = [v]
        seen.add(v)
        prev, cur = v, (nbr[v][0] if nbr[v] else None)
        while cur is not None:
            path.append(cur)
            seen.add(cur)
            nxt = [w for w in nbr[cur] if w != prev]
            prev, cur = cur, (nxt[0] if nxt else None)
        paths.append(path)
    assert len(seen) == g.n
    return paths


def path_cover_number(t: Graph):
    """Minimum number of vertex-disjoint induced paths covering a tree.

    Computed as n minus the 2-matching number; the cover witness is the
    path system spanned by a maximum 2-matching (within a tree any
    connected subgraph path is automatically induced).
    """
    _require_tree(t)
    nu2, matching = _nu2_tree(t)
    paths = _paths_of_matching(t, matching)
    assert len(paths) == t.n - nu2
    return t.n - nu2, paths


def path_cover_oracle(t: Graph):
    """Brute-force minimum induced-path cover, for cross-validation."""
    n = t.n

    def cover(uncovered):
        if not uncovered:
            return 0
        v = min(uncovered)
        best = None
        for path_set, size in _paths_through(t, v, uncovered):
            sub = cover(uncovered - path_set)
            total = 1 + sub
            if best is None or total < best:
                best = total
        return best

    return cover(frozenset(range(n)))


def _paths_through(g, v, allowed):
    """All vertex sets of induced paths inside allowed that contain v."""
    seen = {frozenset([v])}
    yield frozenset([v]), 1
    stack = [[v]]
    # grow paths from v in both directions
    def extensions(path):
        out = []
        for end, other in ((path[0], path[-1]), (path[-1], path[0])):
            for w in g.neighbors(end):
                if w not in allowed or w in path:
                    continue
                candidate = [w] + path if end == path[0] else path + [w]
                interior_ok = all(not g.has_edge(w, x) for x in path if x != end)
                if interior_ok:
                    out.append(candidate)
        return out

    while stack:
        path = stack.pop()
        for cand in extensions(path):
            key = frozenset(cand)
            if key in seen:
                continue
            seen.add(key)
            yield key, len(cand)
            stack.append(cand)


# ---------------------------------------------------------------------------
# the delete-or-extend maximum

NEG = float("-inf")


def delta_parameter(t: Graph):
    """Maximum of (paths left) - (vertices deleted) over vertex deletions
    of a tree that leave a disjoint union of paths.

    Linear-time DP.  States per vertex: deleted; kept with 0, 1 or 2
    surviving child branches (two branches close the component: the parent
    must then be deleted).  Returns (delta, deleted set, path count).
    """
    adj = _require_tree(t)
    n = t.n
    order, parent = _rooted_order(adj, n)
    children = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    dpD = [0] * n
    dp0 = [0] * n
    dp1 = [NEG] * n
    dp2 = [NEG] * n
    choice1 = [None] * n  # child kept open in state 1
    choice2 = [None] * n  # children pair kept open in state 2

    def closed(c):
        return max(dpD[c], dp0[c] + 1, dp1[c] + 1, dp2[c] + 1)

    def open_up(c):
        return max(dp0[c], dp1[c])

    for v in reversed(order):
        kids = children[v]
        sum_closed = sum(closed(c) for c in kids)
        sum_deleted = sum(dpD[c] for c in kids)
        dpD[v] = sum_closed - 1
        dp0[v] = sum_deleted
        gains = sorted(((open_up(c) - dpD[c], c) for c in kids), reverse=True)
        if kids:
            g1, c1 = gains[0]
            dp1[v] = sum_deleted + g1
            choice1[v] = c1
        if len(kids) >= 2:
            g2, c2 = gains[1]
            dp2[v] = sum_deleted + g1 + g2
            choice2[v] = (c1, c2)

    root = order[0]
    delta = max(dpD[root], dp0[root] + 1, dp1[root] + 1, dp2[root] + 1)

    # witness reconstruction
    deleted = set()
    start = max(("D", "0", "1", "2"),
                key=lambda s: {"D": dpD[root], "0": dp0[root] + 1,
                               "1": dp1[root] + 1, "2": dp2[root] + 1}[s])
    stack = [(root, start)]
    while stack:
        v, state = stack.pop()
        kids = children[v]
        if state == "D":
            deleted.add(v)
            for c in kids:
                sub = max(("D", "0", "1", "2"),
                          key=lambda s: {"D": dpD[c], "0": dp0[c] + 1,
                                         "1": dp1[c] + 1, "2": dp2[c] + 1}[s])
                stack.append((c, sub))
            continue
        keep_open = []
        if state == "1":
            keep_open = [choice1[v]]
        elif state == "2":
            keep_open = list(choice2[v])
        for c in kids:
            if c in keep_open:
                sub = "0" if dp0[c] >= dp1[c] else "1"
                stack.append((c, sub))
            else:
                stack.append((c, "D"))
    # count resulting paths: components of t minus deleted
    paths = _count_path_components(t, deleted, adj)
    assert paths - len(deleted) == delta, "witness must reproduce the DP value"
    return delta, sorted(deleted), paths


def _count_path_components(g, deleted, adj=None):
    adj = adj if adj is not None else _adjacency_lists(g)
    seen = set(deleted)
    comps = 0
    for v in range(g.n):
        if v in seen:
            continue
        comps += 1
        comp = []
        seen.add(v)
        queue = [v]
        while queue:
            x = queue.pop()
            comp.append(x)
            degree_alive = 0
            for w in adj[x]:
                if w in deleted:
                    continue
                degree_alive += 1
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
            if degree_alive > 2:
                raise AssertionError("deletion witness leaves a non-path component")
    return comps


def delta_oracle(t: Graph):
    """Exhaustive max of p - q over all deletion subsets (n <= ~12)."""
    best = NEG
    n = t.n
    for mask in range(1 << n):
        deleted = {v for v in range(n) if mask >> v & 1}
        if len(deleted) == n:
            continue
        try:
            p = _count_path_components(t, deleted)
        except AssertionError:
            continue
        best = max(best, p - len(deleted))
    return best


def nu2_oracle(g: Graph):
    """Exhaustive maximum 2-matching over edge subsets (small inputs)."""
    edges = sorted(g.edges)
    best = 0
    for mask in range(1 << len(edges)):
        deg = [0] * g.n
        ok = True
        count = 0
        for k, (u, v) in enumerate(edges):
            if mask >> k & 1:
                deg[u] += 1
                deg[v] += 1
                count += 1
                if deg[u] > 2 or deg[v] > 2:
                    ok = False
                    break
        if ok:
            best = max(best, count)
    return best


# ---------------------------------------------------------------------------
# the full tree suite

@dataclass
class TreeParams:
    n: int
    mz: int
    P: int
    Delta: int
    nu2: int
    M: int
    mr: int
    gamma_z: int
    gamma_q: int
    diagonal: tuple           # d in {-1,0}^n with rank L(T,d) = mz
    cover: list = field(default_factory=list)
    matching: list = field(default_factory=list)
    deletion_set: list = field(default_factory=list)

    def to_json(self):
        return {"n": self.n, "mz": self.mz, "path_cover": self.P,
                "delta": self.Delta, "nu2": self.nu2, "max_nullity": self.M,
                "mr": self.mr, "gamma_z": self.gamma_z, "gamma_q": self.gamma_q,
                "diagonal": list(self.diagonal),
                "cover": self.cover, "matching": [list(e) for e in self.matching],
                "deletion_set": self.deletion_set}


def tree_suite(t: Graph, config=DEFAULT_CONFIG) -> TreeParams:
    """Every tree parameter, with all the provable equalities asserted.

    mz = gamma_Z = gamma_Q = mr = n - P = n - Delta = nu2, plus a diagonal
    d in {-1,0}^n with rank L(t,d) = mz.  Any failed equality raises
    TreeTheoremViolation: the theorems hold, so only a bug can trip it.
    """
    _require_tree(t)
    n = t.n
    if n > config.zf_exact_max_n:
        raise ValueError(f"tree suite verifies exactly only up to "
                         f"n={config.zf_exact_max_n}; use delta_parameter / "
                         f"two_matching_number for large trees")
    zf = zero_forcing_number(t, config)
    m_z = n - zf.z
    nu2, matching = _nu2_tree(t)
    p_cover, cover = path_cover_number(t)
    delta, deletion, paths = delta_parameter(t)
    gz = gamma(t, ZZ, config)
    gq = gamma(t, QQ, config)

    matrix = generalized_laplacian(t)
    diag = None
    for pt in product((-1, 0), repeat=n):
        if exact_rank(matrix.evaluate(pt)).rank == m_z:
            diag = pt
            break

    checks = {
        "nu2 == n - P": nu2 == n - p_cover,
        "P == Delta": p_cover == delta,
        "mz == n - P": m_z == n - p_cover,
        "gamma_Z == mz": gz.value == m_z,
        "gamma_Q == mz": gq.value == m_z,
        "diagonal in {-1,0}^n achieving rank mz": diag is not None,
    }
    failures = [name for name, ok in checks.items() if not ok]
    if failures:
        raise TreeTheoremViolation(f"tree identities failed: {failures}")
    return TreeParams(n=n, mz=m_z, P=p_cover, Delta=delta, nu2=nu2,
                      M=n - m_z, mr=m_z, gamma_z=gz.value, gamma_q=gq.value,
                      diagonal=diag, cover=cover, matching=matching,
                      deletion_set=deletion)
