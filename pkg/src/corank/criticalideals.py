"""Minor ideals of the variable-diagonal Laplacian and the co-rank gamma.

gamma is computed by a certificate sandwich: the zero-forcing submatrix
certifies a lower bound valid over every commutative ring, evaluation ranks
certify upper bounds, and only a surviving gap is closed index by index
with unit-minor scans, point certificates and finally Groebner runs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .cache import DecisionCache
from .config import DEFAULT_CONFIG
from .graphs import Digraph, canonical_form, degree_vector
from .linalg import exact_rank, rank_mod_p
from .polyring import (ZZ, QQ, GF, DEGREVLEX, BudgetExceeded, Polynomial,
                       buchberger, is_trivial_over_field, is_trivial_over_Z)
from .zeroforcing import certificate_minor, zero_forcing_number

_GLOBAL_CACHE = DecisionCache()


def domain_name(domain):
    if domain is ZZ:
        return "Z"
    if domain is QQ:
        return "Q=R"
    if isinstance(domain, GF):
        return f"F{domain.p}"
    raise ValueError(f"unsupported domain {domain!r}")


# ---------------------------------------------------------------------------
# the symbolic matrix

class SymbolicMatrix:
    """n x n matrix with variable x_u at (u,u) and -m_uv off the diagonal."""

    def __init__(self, n, offdiag):
        # offdiag[(u, v)] = multiplicity m_uv (simple inputs: 0/1)
        self.n = n
        self._mult = offdiag
        self._minor_memo = {}

    def multiplicity(self, u, v):
        if u == v:
            raise ValueError("diagonal has no multiplicity")
        return self._mult.get((u, v), 0)

    def entry(self, u, v) -> Polynomial:
        if u == v:
            return Polynomial.variable(self.n, ZZ, u)
        return Polynomial.constant(self.n, ZZ, -self._mult.get((u, v), 0))

    def evaluate(self, point):
        """Integer/rational matrix with the diagonal replaced by the point."""
        assert len(point) == self.n
        rows = []
        for u in range(self.n):
            row = []
            for v in range(self.n):
                row.append(point[u] if u == v else -self._mult.get((u, v), 0))
            rows.append(row)
        return rows

    def minor(self, rows, cols) -> Polynomial:
        """Exact determinant of the submatrix, memoized across overlapping
        row/column subsets (cofactor expansion along the first row)."""
        rows, cols = tuple(rows), tuple(cols)
        assert len(rows) == len(cols)
        memo = self._minor_memo
        key = (rows, cols)
        if key in memo:
            return memo[key]
        k = len(rows)
        if k == 0:
            res = Polynomial.constant(self.n, ZZ, 1)
        elif k == 1:
            res = self.entry(rows[0], cols[0])
        else:
            res = Polynomial.zero(self.n, ZZ)
            r0 = rows[0]
            rest = rows[1:]
            for j, c in enumerate(cols):
                e = self.entry(r0, c)
                if e.is_zero():
                    continue
                sub = self.minor(rest, cols[:j] + cols[j + 1:])
                term = e * sub
                res = res + term if j % 2 == 0 else res - term
        memo[key] = res
        return res


def generalized_laplacian(g) -> SymbolicMatrix:
    mult = {}
    if isinstance(g, Digraph):
        for u, v in g.arcs:
            mult[(u, v)] = 1
    else:
        for u, v in g.edges:
            mult[(u, v)] = 1
            mult[(v, u)] = 1
    return SymbolicMatrix(g.n, mult)


@dataclass
class MinorGenerators:
    size: int
    generators: list           # deduplicated up to sign, zero minors dropped
    unit_minor: tuple | None   # (rows, cols, value) with value in {1,-1}
    constant_minors: list      # (rows, cols, value), nonzero constants

    def to_domain(self, domain):
        return [g.to_domain(domain) for g in self.generators]


def minor_generators(matrix: SymbolicMatrix, size: int,
                     stop_at_unit=False) -> MinorGenerators:
    """All size x size minors, expanded, deduplicated up to sign.

    With stop_at_unit, generation stops as soon as a +-1 constant minor is
    found (it already decides triviality over every ring).
    """
    n = matrix.n
    if not 0 <= size <= n:
        raise ValueError(f"minor size {size} out of range for n={n}")
    gens = []
    seen = set()
    unit = None
    constants = []
    for rows in combinations(range(n), size):
        for cols in combinations(range(n), size):
            p = matrix.minor(rows, cols)
            if p.is_zero():
                continue
            if p.is_constant():
                c = p.constant_value()
                constants.append((rows, cols, c))
                if unit is None and c in (1, -1):
                    unit = (rows, cols, c)
            key = p.key()
            nkey = (-p).key()
            if key in seen or nkey in seen:
                continue
            seen.add(key)
            gens.append(p)
            if unit is not None and stop_at_unit:
                return MinorGenerators(size, gens, unit, constants)
    return MinorGenerators(size, gens, unit, constants)


# ---------------------------------------------------------------------------
# evaluation-point searches

def box_points(n, radius):
    """Integer points of {-radius..radius}^n by increasing max-norm, then lex."""
    yield (0,) * n
    for m in range(1, radius + 1):
        for pt in product(range(-m, m + 1), repeat=n):
            if max(map(abs, pt)) == m:
                yield pt


def field_points(n, p, budget):
    """Points of F_p^n via centered lifts, by increasing max-norm then lex."""
    radius = (p - 1) // 2 if p > 2 else 1
    count = 0
    if p == 2:
        for pt in product((0, 1), repeat=n):
            if count >= budget:
                return
            count += 1
            yield pt
        return
    for pt in box_points(n, radius):
        if count >= budget:
            return
        count += 1
        yield tuple(x % p for x in pt)


def _eval_rank(matrix, point, domain):
    rows = matrix.evaluate(point)
    if isinstance(domain, GF):
        return rank_mod_p(rows, domain.p)
    return exact_rank(rows).rank


@dataclass
class BoxSearchResult:
    point: tuple | None
    rank: int | None
    exhaustive: bool
    points_scanned: int


def variety_box_search(g, r, box_radius=None, domain=QQ,
                       config=DEFAULT_CONFIG) -> BoxSearchResult:
    """First point in the integer box with rank L(g, a) <= r.

    Scan order: increasing max-norm, then lexicographic.  Absence with
    exhaustive=True is definitive for the box (not for the domain).
    """
    if box_radius is None:
        box_radius = config.box_radius
    if r + 1 > g.n:
        raise ValueError("r + 1 must be at most n")
    matrix = generalized_laplacian(g)
    scanned = 0
    if isinstance(domain, GF):
        points = field_points(g.n, domain.p, config.box_point_budget)
    else:
        points = box_points(g.n, box_radius)
    for pt in points:
        if scanned >= config.box_point_budget:
            return BoxSearchResult(None, None, False, scanned)
        scanned += 1
        rk = _eval_rank(matrix, pt, domain)
        if rk <= r:
            return BoxSearchResult(pt, rk, True, scanned)
    return BoxSearchResult(None, None, True, scanned)


def nontriviality_certificate(g, i, domain, config=DEFAULT_CONFIG):
    """A point killing every i-minor, or None (absence is inconclusive).

    Over Q the point is an integer box point; over Z it is a pair
    (p, point) with all i-minors vanishing mod p; over F_p a field point.
    """
    matrix = generalized_laplacian(g)
    n = g.n
    if i < 1 or i > n:
        raise ValueError("index out of range")
    if domain is QQ:
        scanned = 0
        for pt in box_points(n, config.box_radius):
            scanned += 1
            if scanned > config.box_point_budget:
                return None
            if exact_rank(matrix.evaluate(pt)).rank <= i - 1:
                return pt
        return None
    if domain is ZZ:
        for p in config.primes:
            for pt in field_points(n, p, config.modp_point_budget):
                if rank_mod_p(matrix.evaluate(pt), p) <= i - 1:
                    return (p, pt)
        return None
    if isinstance(domain, GF):
        for pt in field_points(n, domain.p, config.modp_point_budget):
            if rank_mod_p(matrix.evaluate(pt), domain.p) <= i - 1:
                return pt
        return None
    raise ValueError(f"unsupported domain {domain!r}")


# ---------------------------------------------------------------------------
# per-index triviality decisions

@dataclass
class TrivialityDecision:
    trivial: bool | None      # None = undecided within budget
    method: str
    detail: object = None

    def to_json(self):
        return {"trivial": self.trivial, "method": self.method,
                "detail": _jsonable(self.detail)}


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return repr(obj)


_MINOR_SCAN_CAP = 250_000  # skip the unit-minor scan when C(n,i)^2 exceeds this


def ideal_trivial(g, i, domain, config=DEFAULT_CONFIG, cache=None,
                  skip_point_search=False) -> TrivialityDecision:
    """Decide 1 in I_i(g) over the domain, with certificates preferred.

    Order of attack: unit constant minor (trivial, every domain), point
    certificate (non-trivial), Groebner fallback.  Decisions are cached by
    (canonical form, i, domain, budget hash).
    """
    cache = cache if cache is not None else _GLOBAL_CACHE
    n = g.n
    if i <= 0:
        return TrivialityDecision(True, "empty-minor")
    if i > n:
        raise ValueError(f"minor size {i} exceeds n={n}")
    key = ("ideal_trivial", canonical_form(g).hex(), i, domain_name(domain),
           config.budget_hash())
    hit = cache.get(key)
    if hit is not None:
        return TrivialityDecision(hit["trivial"], hit["method"], hit.get("detail"))

    decision = _decide_trivial(g, i, domain, config, skip_point_search)
    if decision.trivial is not None:  # budget-undecided results are not cached
        cache.put(key, decision.to_json())
    return decision


def _decide_trivial(g, i, domain, config, skip_point_search):
    from math import comb
    matrix = generalized_laplacian(g)
    n = g.n
    scan_ok = comb(n, i) ** 2 <= _MINOR_SCAN_CAP
    gens = None
    if scan_ok:
        gens = minor_generators(matrix, i, stop_at_unit=True)
        if gens.unit_minor is not None:
            return TrivialityDecision(True, "unit-minor", gens.unit_minor)
        if domain is QQ and gens.constant_minors:
            return TrivialityDecision(True, "constant-minor",
                                      gens.constant_minors[0])
        if isinstance(domain, GF):
            for rows, cols, c in gens.constant_minors:
                if c % domain.p != 0:
                    return TrivialityDecision(True, "constant-minor",
                                              (rows, cols, c))
        if not gens.generators:
            return TrivialityDecision(False, "zero-ideal")

    if not skip_point_search:
        cert = nontriviality_certificate(g, i, domain, config)
        if cert is not None:
            return TrivialityDecision(False, "point-certificate", cert)

    if gens is None or (gens.unit_minor is None and scan_ok is False):
        return TrivialityDecision(None, "budget", "minor scan too large")
    # regenerate fully (the stop_at_unit pass may have ended early only when
    # a unit was found, which was handled above, so gens is complete here)
    try:
        if domain is ZZ:
            ok, cert = is_trivial_over_Z(gens.generators, DEGREVLEX,
                                         config.spair_cap, config.degree_cap)
            return TrivialityDecision(ok, "groebner", _describe_z_cert(cert))
        field_gens = gens.to_domain(domain)
        ok, payload = is_trivial_over_field(field_gens, DEGREVLEX,
                                            config.spair_cap, config.degree_cap)
        if ok:
            return TrivialityDecision(True, "groebner", None)
        return TrivialityDecision(False, "groebner",
                                  [str(p.terms) for p in payload.generators[:4]])
    except BudgetExceeded as exc:
        return TrivialityDecision(None, "budget", exc.reason)


def _describe_z_cert(cert):
    tag = cert[0]
    if tag == "denominator":
        return f"denominator-cleared constant {cert[1]}"
    if tag == "prime":
        return f"non-trivial mod {cert[1]}"
    return "non-trivial over Q"


# ---------------------------------------------------------------------------
# gamma

@dataclass
class GammaResult:
    domain: str
    lower: int
    upper: int
    value: int | None
    lower_witness: dict = field(default_factory=dict)
    upper_witness: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)   # index -> method string
    status: str = "exact"                            # exact | undecided

    def to_json(self):
        return {"domain": self.domain, "lower": self.lower, "upper": self.upper,
                "value": self.value, "lower_witness": _jsonable(self.lower_witness),
                "upper_witness": _jsonable(self.upper_witness),
                "provenance": {str(k): v for k, v in sorted(self.provenance.items())},
                "status": self.status}


def _budgeted_box_scan(g, matrix, lower, upper, upper_point, domain, config, cache):
    """Improve the evaluation upper bound by a budgeted box scan.

    Over Z and Q the scan evaluates integer points at rational rank, so its
    outcome is domain-independent and cached once per (graph, target).
    """
    rational = not isinstance(domain, GF)
    key = None
    if rational:
        key = ("gamma-box-scan", canonical_form(g).hex(), lower,
               config.box_radius, config.gamma_box_budget)
        hit = cache.get(key)
        if hit is not None:
            rank, pt = hit
            if rank is not None and rank < upper:
                return rank, tuple(pt)
            return upper, upper_point
    if rational:
        points = box_points(g.n, config.box_radius)
    else:
        points = field_points(g.n, domain.p, config.gamma_box_budget)
    scanned = 0
    for pt in points:
        scanned += 1
        if scanned > config.gamma_box_budget:
            break
        rk = _eval_rank(matrix, pt, domain)
        if rk < upper:
            upper, upper_point = rk, pt
        if upper <= lower:
            break
    if key is not None:
        cache.put(key, [upper, list(upper_point) if upper_point else None])
    return upper, upper_point


def _probe_points(g):
    n = g.n
    pts = [(0,) * n, (1,) * n, (-1,) * n]
    if isinstance(g, Digraph):
        deg = [a.bit_count() for a in g.out_adj]
    else:
        deg = degree_vector(g)
    pts.append(tuple(deg))
    pts.append(tuple(-d for d in deg))
    out = []
    for p in pts:
        if p not in out:
            out.append(p)
    return out


def gamma(g, domain=QQ, config=DEFAULT_CONFIG, cache=None) -> GammaResult:
    """The largest i with I_i(g) trivial over the domain.

    Sandwich first: the zero-forcing certificate minor gives the lower
    bound, evaluation ranks give the upper bound; no Groebner machinery
    runs unless a gap survives.
    """
    cache = cache if cache is not None else _GLOBAL_CACHE
    n = g.n
    result = GammaResult(domain_name(domain), 0, n, None)

    zf = zero_forcing_number(g, config)
    lower = g.n - zf.z
    provenance = {}
    if zf.exact:
        cert = certificate_minor(g, zf.witness)  # structural validation
        result.lower_witness = {"force_record": zf.witness.to_json(),
                                "certificate_rows": list(cert.rows),
                                "certificate_cols": list(cert.cols),
                                "determinant": cert.determinant}
        for i in range(1, lower + 1):
            provenance[i] = "zero-forcing-certificate"
    else:
        result.lower_witness = {"note": "zero forcing bound not exact at this order"}

    matrix = generalized_laplacian(g)
    upper = n
    upper_point = None
    for pt in _probe_points(g):
        rk = _eval_rank(matrix, pt, domain)
        if rk < upper:
            upper, upper_point = rk, pt
        if upper <= lower:
            break
    if upper > lower:
        upper, upper_point = _budgeted_box_scan(g, matrix, lower, upper,
                                                upper_point, domain, config, cache)
    result.upper_witness = {"point": list(upper_point) if upper_point else None,
                            "rank": upper}
    if upper_point is not None and upper < n:
        provenance[upper + 1] = "evaluation-rank"

    while lower < upper:
        i = lower + 1
        dec = ideal_trivial(g, i, domain, config, cache, skip_point_search=False)
        if dec.trivial is True:
            lower = i
            provenance[i] = dec.method
        elif dec.trivial is False:
            upper = i - 1
            provenance[i] = dec.method
        else:
            result.lower, result.upper = lower, upper
            result.provenance = provenance
            result.status = "undecided"
            result.value = None
            return result

    result.lower = result.upper = lower
    result.value = lower
    result.provenance = provenance
    return result


def groebner_basis_of_critical_ideal(g, i, domain=QQ, order=DEGREVLEX,
                                     config=DEFAULT_CONFIG):
    """Reduced Groebner basis of I_i(g) for reporting and ideal comparison.

    Field domains return the basis directly.  For Z the field computation
    runs over Q and is paired with the exact Z-triviality decision; true
    basis computation over Z is out of scope by design.
    """
    matrix = generalized_laplacian(g)
    gens = minor_generators(matrix, i)
    if isinstance(domain, GF) or domain is QQ:
        return buchberger(gens.to_domain(domain), order,
                          config.spair_cap, config.degree_cap)
    if domain is ZZ:
        q_basis = buchberger(gens.to_domain(QQ), order,
                             config.spair_cap, config.degree_cap)
        ok, cert = is_trivial_over_Z(gens.generators, order,
                                     config.spair_cap, config.degree_cap)
        return q_basis, TrivialityDecision(ok, "groebner", _describe_z_cert(cert))
    raise ValueError(f"unsupported domain {domain!r}")


def contained_in_monomials_plus_constant(minors, var_indices, constant):
    """Exact Z-containment test against <x_i for i in S, c>.

    A polynomial lies in that ideal iff every term free of the listed
    variables has a coefficient divisible by c.
    """
    for p in minors:
        for mono, coeff in p.terms.items():
            if any(mono[i] for i in var_indices):
                continue
            if coeff % constant != 0:
                return False
    return True
