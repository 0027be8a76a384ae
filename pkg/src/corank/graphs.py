"""Simple graphs and digraphs with dense 0-indexed vertices.

Adjacency is kept both as frozen edge/arc sets and as per-vertex bitmasks;
the bitmasks drive the search-heavy routines (closures, canonical labeling,
induced-pattern embedding).  Instances are immutable after construction.
"""

from itertools import combinations


class Graph:
    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            es.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(es)
        self._adj = None

    @property
    def adj(self):
        # bitmask rows cost O(n^2/64) to build; huge sparse graphs (the
        # linear-time tree paths) never touch them
        if self._adj is None:
            adj = [0] * self.n
            for u, v in self.edges:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            self._adj = tuple(adj)
        return self._adj

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return tuple(a.bit_count() for a in self.adj)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return _bits(self.adj[v])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


class Digraph:
    __slots__ = ("n", "arcs", "_out_adj", "_in_adj")

    def __init__(self, n, arcs=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        ars = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            ars.add((u, v))
        self.n = n
        self.arcs = frozenset(ars)
        self._out_adj = None
        self._in_adj = None

    def _build(self):
        out_adj = [0] * self.n
        in_adj = [0] * self.n
        for u, v in self.arcs:
            out_adj[u] |= 1 << v
            in_adj[v] |= 1 << u
        self._out_adj = tuple(out_adj)
        self._in_adj = tuple(in_adj)

    @property
    def out_adj(self):
        if self._out_adj is None:
            self._build()
        return self._out_adj

    @property
    def in_adj(self):
        if self._in_adj is None:
            self._build()
        return self._in_adj

    @property
    def m(self):
        return len(self.arcs)

    def has_arc(self, u, v):
        return bool(self.out_adj[u] >> v & 1)

    def out_neighbors(self, v):
        return _bits(self.out_adj[v])

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# structural operations

def complement(g: Graph) -> Graph:
    missing = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    return Graph(g.n, missing)


def relabel(g, perm):
    """Apply perm (old label -> new label) to a graph or digraph."""
    if isinstance(g, Graph):
        return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    return Digraph(g.n, [(perm[u], perm[v]) for u, v in g.arcs])


def induced_subgraph(g, vertices):
    """Induced sub(di)graph on the given vertices, relabeled 0..k-1 in order."""
    vs = list(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    if isinstance(g, Graph):
        return Graph(len(vs), [(pos[u], pos[v]) for u, v in g.edges
                               if u in pos and v in pos])
    return Digraph(len(vs), [(pos[u], pos[v]) for u, v in g.arcs
                             if u in pos and v in pos])


def is_connected(g) -> bool:
    """Connectivity; for digraphs this is weak connectivity."""
    if g.n == 0:
        return True
    if isinstance(g, Graph):
        adj = g.adj
    else:
        adj = tuple(o | i for o, i in zip(g.out_adj, g.in_adj))
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge (in sorted edge order); adjacency = shared endpoint."""
    es = sorted(g.edges)
    out = []
    for i, j in combinations(range(len(es)), 2):
        if set(es[i]) & set(es[j]):
            out.append((i, j))
    return Graph(len(es), out)


def degree_vector(g: Graph):
    return list(g.degrees())


# ---------------------------------------------------------------------------
# induced-pattern embedding

def contains_induced(g, pattern):
    """Injective vertex map realizing pattern as an induced sub(di)graph.

    Returns a tuple t with t[i] = host vertex for pattern vertex i, or None.
    Backtracking over host vertices with adjacency consistency checks at
    every extension; exhaustive, intended for small orders.
    """
    if pattern.n > g.n:
        return None
    directed = isinstance(g, Digraph)
    if directed != isinstance(pattern, Digraph):
        raise TypeError("pattern and host must both be graphs or both digraphs")
    pn = pattern.n
    if pn == 0:
        return ()
    if directed:
        p_out, p_in = pattern.out_adj, pattern.in_adj
        g_out, g_in = g.out_adj, g.in_adj
    else:
        p_out = p_in = pattern.adj
        g_out = g_in = g.adj

    assign = [-1] * pn
    used = 0

    def extend(i):
        nonlocal used
        if i == pn:
            return True
        for h in range(g.n):
            if used >> h & 1:
                continue
            ok = True
            for j in range(i):
                hj = assign[j]
                if bool(p_out[i] >> j & 1) != bool(g_out[h] >> hj & 1):
                    ok = False
                    break
                if bool(p_in[i] >> j & 1) != bool(g_in[h] >> hj & 1):
                    ok = False
                    break
            if not ok:
                continue
            assign[i] = h
            used |= 1 << h
            if extend(i + 1):
                return True
            used &= ~(1 << h)
        assign[i] = -1
        return False

    if extend(0):
        return tuple(assign)
    return None


# ---------------------------------------------------------------------------
# canonical labeling
#
# The canonical encoding of a (di)graph is the lexicographically minimal
# sequence of per-vertex segments over all placement orders, where the
# segment of the vertex placed at position j is
#     graphs:   (degree, adjacency bits to positions 0..j-1)
#     digraphs: (outdeg, indeg, interleaved arc bits to positions 0..j-1)
# Including the degrees first makes degree-based candidate pruning exact.
# Exhaustive (hence a true isomorphism certificate) at any n, but intended
# for n <= 8; beyond that it is merely increasingly slow, never wrong.

class CanonicalForm:
    __slots__ = ("key", "perm", "n", "directed")

    def __init__(self, key, perm, n, directed):
        self.key = key          # bytes; equal iff isomorphic
        self.perm = perm        # old label -> canonical label witness
        self.n = n
        self.directed = directed

    def __eq__(self, other):
        return isinstance(other, CanonicalForm) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def hex(self):
        return self.key.hex()

    def __repr__(self):
        return f"CanonicalForm({self.key.hex()})"


def _canonical_order(n, seg_of, interchangeable):
    """Minimize the segment sequence over all placement orders.

    seg_of(v, placed) -> comparable segment key.
    interchangeable(remaining) -> True when any relative order of the
    remaining vertices yields the same continuation (used to collapse the
    factorial tie blowup on complete/empty remainders).
    """
    best = None
    best_order = None
    cur = []

    def dfs(placed, remaining):
        nonlocal best, best_order
        level = len(placed)
        if level == n:
            if best is None or cur < best:
                best = list(cur)
                best_order = list(placed)
            return
        cands = sorted((seg_of(v, placed), v) for v in remaining)
        if len(remaining) >= 3 and interchangeable(remaining):
            cands = cands[:1]
        for key, v in cands:
            if best is not None and cur == best[:level] and key > best[level]:
                break  # candidates are sorted; nothing smaller follows
            cur.append(key)
            placed.append(v)
            remaining.remove(v)
            dfs(placed, remaining)
            remaining.add(v)
            placed.pop()
            cur.pop()

    dfs([], set(range(n)))
    return best, best_order


def canonical_form(g) -> CanonicalForm:
    directed = isinstance(g, Digraph)
    n = g.n
    if n == 0:
        return CanonicalForm(b"D0" if directed else b"G0", (), 0, directed)

    full = (1 << n) - 1

    if directed:
        outd = tuple(a.bit_count() for a in g.out_adj)
        ind = tuple(a.bit_count() for a in g.in_adj)

        def seg_of(v, placed):
            bits = 0
            for p in placed:
                bits = bits << 2 | (g.out_adj[p] >> v & 1) << 1 | (g.out_adj[v] >> p & 1)
            return (outd[v], ind[v], bits)

        def interchangeable(remaining):
            rem_mask = 0
            for v in remaining:
                rem_mask |= 1 << v
            rs = list(remaining)
            ro = g.out_adj[rs[0]] & ~rem_mask
            ri = g.in_adj[rs[0]] & ~rem_mask
            for v in rs[1:]:
                if g.out_adj[v] & ~rem_mask != ro or g.in_adj[v] & ~rem_mask != ri:
                    return False
            k = len(rs)
            inner = sum((g.out_adj[v] & rem_mask).bit_count() for v in rs)
            return inner == 0 or inner == k * (k - 1)
    else:
        deg = g.degrees()

        def seg_of(v, placed):
            bits = 0
            for p in placed:
                bits = bits << 1 | (g.adj[v] >> p & 1)
            return (deg[v], bits)

        def interchangeable(remaining):
            rem_mask = 0
            for v in remaining:
                rem_mask |= 1 << v
            rs = list(remaining)
            outside = g.adj[rs[0]] & ~rem_mask
            for v in rs[1:]:
                if g.adj[v] & ~rem_mask != outside:
                    return False
            k = len(rs)
            inner = sum((g.adj[v] & rem_mask).bit_count() for v in rs)
            return inner == 0 or inner == k * (k - 1)

    segments, order = _canonical_order(n, seg_of, interchangeable)
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    key = _pack_key(n, segments, directed)
    return CanonicalForm(key, tuple(perm), n, directed)


def _pack_key(n, segments, directed):
    parts = [b"D" if directed else b"G", n.to_bytes(2, "big")]
    for seg in segments:
        *degs, bits = seg
        for d in degs:
            parts.append(d.to_bytes(2, "big"))
        width = max(1, (bits.bit_length() + 7) // 8)
        parts.append(width.to_bytes(1, "big"))
        parts.append(bits.to_bytes(width, "big"))
    return b"".join(parts)


def are_isomorphic(a, b) -> bool:
    if a.n != b.n:
        return False
    return canonical_form(a).key == canonical_form(b).key
