"""Exact multivariate polynomial arithmetic and Buchberger's algorithm.

Coefficient domains: arbitrary-precision rationals (QQ), the integers (ZZ,
for holding expanded minors and certificates), and prime fields GF(p).
Everything is exact; no floating point enters any ideal decision.
"""

from fractions import Fraction
from math import gcd


class DomainMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A Buchberger run went over its S-pair or degree cap.

    Carries the partial basis so callers can report an explicit
    "undecided" status instead of a silent wrong answer.
    """

    def __init__(self, reason, partial):
        super().__init__(reason)
        self.reason = reason
        self.partial = partial


# ---------------------------------------------------------------------------
# coefficient domains

class _Rationals:
    name = "Q"
    is_field = True

    def coerce(self, c):
        return c if isinstance(c, Fraction) else Fraction(c)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / self.coerce(a)

    def is_unit(self, a):
        return a != 0

    def __repr__(self):
        return "QQ"


class _Integers:
    name = "Z"
    is_field = False

    def coerce(self, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainMismatch(f"{c} is not an integer")
            return c.numerator
        return int(c)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a in (1, -1):
            return a
        raise DomainMismatch(f"{a} is not a unit in Z")

    def is_unit(self, a):
        return a in (1, -1)

    def __repr__(self):
        return "ZZ"


class GF:
    """Prime field of order p, elements stored as ints in [0, p)."""

    is_field = True

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def coerce(self, c):
        if isinstance(c, Fraction):
            num = c.numerator % self.p
            den = c.denominator % self.p
            if den == 0:
                raise DomainMismatch(f"denominator of {c} vanishes mod {self.p}")
            return num * pow(den, self.p - 2, self.p) % self.p
        return int(c) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, self.p - 2, self.p)

    def is_unit(self, a):
        return a % self.p != 0

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = _Rationals()
ZZ = _Integers()


# ---------------------------------------------------------------------------
# monomial orders
#
# A monomial is a tuple of non-negative exponents, one per variable.
# Order objects expose key(mono); bigger key means bigger monomial, so
# max(terms, key=order.key) is the leading monomial.

class MonomialOrder:
    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


def _lex_key(m):
    return m


def _grlex_key(m):
    return (sum(m), m)


def _degrevlex_key(m):
    # ties broken by the *smallest* exponent vector read from the last
    # variable backwards, hence the negated reversal
    return (sum(m), tuple(-e for e in reversed(m)))


LEX = MonomialOrder("lex", _lex_key)
GRLEX = MonomialOrder("grlex", _grlex_key)
DEGREVLEX = MonomialOrder("degrevlex", _degrevlex_key)

ORDERS = {"lex": LEX, "grlex": GRLEX, "degrevlex": DEGREVLEX}


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse polynomial: dict monomial -> nonzero coefficient.

    Instances are treated as immutable values; all operations return new
    polynomials.  The zero polynomial has an empty term dict.
    """

    __slots__ = ("nvars", "domain", "terms")

    def __init__(self, nvars, domain, terms=None, _clean=False):
        self.nvars = nvars
        self.domain = domain
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            clean = {}
            for m, c in terms.items():
                c = domain.coerce(c)
                if c != 0:
                    clean[tuple(m)] = c
            self.terms = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nvars, domain):
        return cls(nvars, domain, {}, _clean=True)

    @classmethod
    def constant(cls, nvars, domain, c):
        c = domain.coerce(c)
        if c == 0:
            return cls.zero(nvars, domain)
        return cls(nvars, domain, {(0,) * nvars: c}, _clean=True)

    @classmethod
    def variable(cls, nvars, domain, i):
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, domain, {mono: domain.coerce(1)}, _clean=True)

    # -- basic queries -----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.domain.coerce(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def lead_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def lead_coeff(self, order):
        return self.terms[self.lead_monomial(order)]

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars or self.domain != other.domain:
            raise DomainMismatch("incompatible polynomials")

    def __add__(self, other):
        self._check(other)
        res = dict(self.terms)
        add = self.domain.add
        for m, c in other.terms.items():
            s = add(res.get(m, 0), c)
            if s == 0:
                res.pop(m, None)
            else:
                res[m] = s
        return Polynomial(self.nvars, self.domain, res, _clean=True)

    def __neg__(self):
        neg = self.domain.neg
        return Polynomial(self.nvars, self.domain,
                          {m: neg(c) for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        mul, add = self.domain.mul, self.domain.add
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = add(res.get(m, 0), mul(c1, c2))
                if s == 0:
                    res.pop(m, None)
                else:
                    res[m] = s
        return Polynomial(self.nvars, self.domain, res, _clean=True)

    def mul_term(self, coeff, mono):
        if coeff == 0:
            return Polynomial.zero(self.nvars, self.domain)
        mul = self.domain.mul
        res = {mono_mul(m, mono): mul(c, coeff) for m, c in self.terms.items()}
        return Polynomial(self.nvars, self.domain, res, _clean=True)

    def scale(self, coeff):
        return self.mul_term(self.domain.coerce(coeff), (0,) * self.nvars)

    def monic(self, order):
        if self.is_zero():
            return self
        lc = self.lead_coeff(order)
        if lc == self.domain.coerce(1):
            return self
        return self.scale(self.domain.inv(lc))

    def primitive(self):
        """Divide out the integer content and normalise the leading sign."""
        if self.is_zero() or self.domain is not ZZ:
            return self
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
        lead = self.terms[max(self.terms, key=DEGREVLEX.key)]
        if lead < 0:
            g = -g
        if g in (0, 1):
            return self
        return Polynomial(self.nvars, self.domain,
                          {m: c // g for m, c in self.terms.items()}, _clean=True)

    def to_domain(self, domain):
        return Polynomial(self.nvars, domain,
                          {m: domain.coerce(c) for m, c in self.terms.items()})

    def evaluate(self, point):
        """Evaluate at a full point (one value per variable) in the domain."""
        assert len(point) == self.nvars
        dom = self.domain
        point = [dom.coerce(v) for v in point]
        total = dom.coerce(0)
        for m, c in self.terms.items():
            val = c
            for i, e in enumerate(m):
                for _ in range(e):
                    val = dom.mul(val, point[i])
            total = dom.add(total, val)
        return total

    # -- comparisons ---------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.domain == other.domain and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def key(self):
        """Canonical sortable key: terms sorted under degrevlex."""
        return tuple(sorted(self.terms.items(), key=lambda t: DEGREVLEX.key(t[0])))

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"


# ---------------------------------------------------------------------------
# text form: "x0*x1 - x1 - 2", powers as "x5^2"

def format_polynomial(p, order=DEGREVLEX, varnames=None):
    if p.is_zero():
        return "0"
    names = varnames or [f"x{i}" for i in range(p.nvars)]
    out = []
    for m in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        body = "*".join(factors)
        neg = (isinstance(c, Fraction) or p.domain is ZZ) and c < 0
        cc = -c if neg else c
        if body and cc == 1:
            text = body
        elif body:
            text = f"{cc}*{body}"
        else:
            text = f"{cc}"
        if not out:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f"- {text}" if neg else f"+ {text}")
    return " ".join(out)


class PolynomialParseError(ValueError):
    pass


def parse_polynomial(text, nvars, domain=ZZ):
    """Parse the text form produced by format_polynomial.

    Accepts integer or rational coefficients, '*' products, '^' or '**'
    powers and variables named x<i>.
    """
    import re

    s = text.replace("**", "^").replace(" ", "")
    if not s:
        raise PolynomialParseError("empty polynomial text")
    # split into signed term strings
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise PolynomialParseError(f"cannot tokenize {text!r}")
    terms = {}
    for chunk in chunks:
        sign = 1
        body = chunk
        while body and body[0] in "+-":
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        if not body:
            raise PolynomialParseError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        expo = [0] * nvars
        for factor in body.split("*"):
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if m:
                idx, e = int(m.group(1)), int(m.group(2) or 1)
                if idx >= nvars:
                    raise PolynomialParseError(f"variable x{idx} out of range")
                expo[idx] += e
                continue
            m = re.fullmatch(r"(\d+)(?:/(\d+))?", factor)
            if m:
                coeff *= Fraction(int(m.group(1)), int(m.group(2) or 1))
                continue
            raise PolynomialParseError(f"bad factor {factor!r} in {text!r}")
        mono = tuple(expo)
        prev = terms.get(mono, Fraction(0))
        terms[mono] = prev + coeff
    poly = Polynomial(nvars, QQ, terms)
    if domain is QQ:
        return poly
    return poly.to_domain(domain)


# ---------------------------------------------------------------------------
# division

def normal_form(f, divisors, order=DEGREVLEX, with_quotients=False):
    """Remainder of f under multivariate division by the given divisors.

    The remainder has no term divisible by any divisor's leading monomial.
    With quotients, returns (r, [q_i]) with f = sum q_i*g_i + r exactly.
    """
    if not f.domain.is_field:
        raise DomainMismatch("division requires a field domain")
    divisors = [g for g in divisors if not g.is_zero()]
    for g in divisors:
        if g.nvars != f.nvars or g.domain != f.domain:
            raise DomainMismatch("divisor domain/variable mismatch")
    dom = f.domain
    heads = [(g.lead_monomial(order), g.lead_coeff(order), g) for g in divisors]
    quots = [Polynomial.zero(f.nvars, dom) for _ in divisors] if with_quotients else None
    r_terms = {}
    p = f
    while not p.is_zero():
        lm = p.lead_monomial(order)
        lc = p.terms[lm]
        for i, (gm, gc, g) in enumerate(heads):
            if mono_divides(gm, lm):
                q_coeff = dom.mul(lc, dom.inv(gc))
                q_mono = mono_div(lm, gm)
                p = p - g.mul_term(q_coeff, q_mono)
                if with_quotients:
                    quots[i] = quots[i] + Polynomial(
                        f.nvars, dom, {q_mono: q_coeff}, _clean=True)
                break
        else:
            r_terms[lm] = lc
            p = Polynomial(f.nvars, dom,
                           {m: c for m, c in p.terms.items() if m != lm}, _clean=True)
    r = Polynomial(f.nvars, dom, r_terms, _clean=True)
    if with_quotients:
        return r, quots
    return r


# ---------------------------------------------------------------------------
# Buchberger

class IdealBasis:
    """A generating set, possibly marked as a reduced Groebner basis.

    When cofactor tracking was requested, ``cofactors[k]`` expresses
    ``generators[k]`` as a combination of the original input generators.
    """

    def __init__(self, generators, domain, order, is_groebner=False, cofactors=None):
        self.generators = list(generators)
        self.domain = domain
        self.order = order
        self.is_groebner = is_groebner
        self.cofactors = cofactors

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_trivial(self):
        return (len(self.generators) == 1 and self.generators[0].is_constant()
                and not self.generators[0].is_zero())

    def contains(self, f):
        """Ideal membership via reduction; valid when marked Groebner."""
        assert self.is_groebner
        if f.is_zero():
            return True
        return normal_form(f, self.generators, self.order).is_zero()

    def __repr__(self):
        gens = ", ".join(format_polynomial(g, self.order) for g in self.generators)
        tag = "groebner" if self.is_groebner else "raw"
        return f"IdealBasis<{tag}|{self.domain}|{self.order}>[{gens}]"


def _spair(f, g, order, nvars, dom):
    fm, gm = f.lead_monomial(order), g.lead_monomial(order)
    lcm = mono_lcm(fm, gm)
    cf = dom.inv(f.lead_coeff(order))
    cg = dom.inv(g.lead_coeff(order))
    return (f.mul_term(cf, mono_div(lcm, fm))
            - g.mul_term(cg, mono_div(lcm, gm)))


def buchberger(generators, order=DEGREVLEX, spair_cap=50000, degree_cap=30,
               track_cofactors=False):
    """Reduced Groebner basis over a field domain.

    Normal selection strategy (smallest lcm degree first) with the coprime
    and chain pair-elimination criteria.  Input generators are seeded in
    sorted order, so the reduced output depends only on the generator set.
    A nonzero constant encountered at any point short-circuits to the
    basis {1}.  Exceeding a budget raises BudgetExceeded with the partial
    basis attached.
    """
    import heapq

    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return IdealBasis([], ZZ if not generators else generators[0].domain, order,
                          is_groebner=True, cofactors=[] if track_cofactors else None)
    nvars, dom = gens[0].nvars, gens[0].domain
    if not dom.is_field:
        raise DomainMismatch("buchberger requires a field domain")

    m = len(gens)
    # deterministic seeding order; cofactor slots stay in caller order
    seed_order = sorted(range(m), key=lambda i: gens[i].key())

    def unit_vector(i):
        vec = [Polynomial.zero(nvars, dom) for _ in range(m)]
        vec[i] = Polynomial.constant(nvars, dom, 1)
        return vec

    basis = []       # list of polynomials, monic
    heads = []       # cached (lead monomial, lead coeff)
    cofs = []        # parallel cofactor vectors when tracking

    def reduce_with_cof(p, pcof):
        """Fully reduce p by the current basis, updating its cofactor vector."""
        r_terms = {}
        pterms = dict(p.terms)
        while pterms:
            lm = max(pterms, key=order.key)
            lc = pterms.pop(lm)
            hit = -1
            for i, (gm, gc) in enumerate(heads):
                if mono_divides(gm, lm):
                    hit = i
                    break
            if hit < 0:
                r_terms[lm] = lc
                continue
            gm, gc = heads[hit]
            q_coeff = dom.mul(lc, dom.inv(gc))
            q_mono = mono_div(lm, gm)
            add, mul, neg = dom.add, dom.mul, dom.neg
            for mm, cc in basis[hit].terms.items():
                if mm == gm:
                    continue
                key = mono_mul(mm, q_mono)
                s = add(pterms.get(key, 0), neg(mul(cc, q_coeff)))
                if s == 0:
                    pterms.pop(key, None)
                else:
                    pterms[key] = s
            if pcof is not None:
                gcof = cofs[hit]
                pcof = [a - b.mul_term(q_coeff, q_mono) for a, b in zip(pcof, gcof)]
        r = Polynomial(nvars, dom, r_terms, _clean=True)
        return r, pcof

    def trivial_result(one_cof):
        one = Polynomial.constant(nvars, dom, 1)
        return IdealBasis([one], dom, order, is_groebner=True,
                          cofactors=[one_cof] if track_cofactors else None)

    heap = []        # (lcm degree, i, j, lcm)
    pending = set()  # {(i, j)} mirror of the heap for the chain criterion

    def add_to_basis(p, pcof):
        """Insert a fully reduced nonzero polynomial; returns 'trivial' cofactor."""
        if p.is_constant():
            c = p.constant_value()
            if pcof is not None:
                inv = dom.inv(c)
                return [q.scale(inv) for q in pcof]
            return True
        if pcof is not None:
            inv = dom.inv(p.lead_coeff(order))
            pcof = [q.scale(inv) for q in pcof]
            p = p.scale(inv)
        else:
            p = p.monic(order)
        k = len(basis)
        lmk = p.lead_monomial(order)
        basis.append(p)
        heads.append((lmk, p.lead_coeff(order)))
        cofs.append(pcof)
        for i in range(k):
            lcm = mono_lcm(heads[i][0], lmk)
            heapq.heappush(heap, (mono_degree(lcm), i, k, lcm))
            pending.add((i, k))
        return None

    # seed the basis, reducing each generator against what came before
    for idx in seed_order:
        g = gens[idx]
        gc = unit_vector(idx) if track_cofactors else None
        r, rc = reduce_with_cof(g, gc)
        if r.is_zero():
            continue
        if r.total_degree() > degree_cap:
            raise BudgetExceeded("degree cap exceeded",
                                 IdealBasis(basis, dom, order))
        tv = add_to_basis(r, rc)
        if tv is not None:
            return trivial_result(tv if track_cofactors else None)

    spairs_done = 0
    while heap:
        deg, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        # coprime criterion
        lmi, lmj = heads[i][0], heads[j][0]
        if mono_mul(lmi, lmj) == lcm:
            continue
        # chain criterion: a third leading monomial dividing the lcm whose
        # pairs with i and j are both already settled
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(heads[k][0], lcm):
                if (min(i, k), max(i, k)) not in pending \
                        and (min(j, k), max(j, k)) not in pending:
                    skip = True
                    break
        if skip:
            continue
        spairs_done += 1
        if spairs_done > spair_cap:
            raise BudgetExceeded("S-pair cap exceeded", IdealBasis(basis, dom, order))
        s = _spair(basis[i], basis[j], order, nvars, dom)
        scof = None
        if track_cofactors:
            cf = dom.inv(heads[i][1])
            cg = dom.inv(heads[j][1])
            mf, mg = mono_div(lcm, lmi), mono_div(lcm, lmj)
            scof = [a.mul_term(cf, mf) - b.mul_term(cg, mg)
                    for a, b in zip(cofs[i], cofs[j])]
        r, rcof = reduce_with_cof(s, scof)
        if r.is_zero():
            continue
        if r.total_degree() > degree_cap:
            raise BudgetExceeded("degree cap exceeded", IdealBasis(basis, dom, order))
        tv = add_to_basis(r, rcof)
        if tv is not None:
            return trivial_result(tv if track_cofactors else None)

    # interreduce to the unique reduced basis
    keep = []
    lms = [g.lead_monomial(order) for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and mono_divides(lms[j], lms[i])
               and (lms[j] != lms[i] or j < i) for j in range(len(basis))):
            continue
        keep.append(i)
    reduced, red_cofs = [], []
    for i in keep:
        others = [basis[j] for j in keep if j != i]
        if track_cofactors:
            r, quots = normal_form(basis[i], others, order, with_quotients=True)
            cvec = list(cofs[i])
            for q, j in zip(quots, [jj for jj in keep if jj != i]):
                if q.is_zero():
                    continue
                cvec = [a - q * b for a, b in zip(cvec, cofs[j])]
            if not r.is_zero():
                inv = dom.inv(r.lead_coeff(order))
                reduced.append(r.scale(inv))
                red_cofs.append([c.scale(inv) for c in cvec])
        else:
            r = normal_form(basis[i], others, order)
            if not r.is_zero():
                reduced.append(r.monic(order))
    # deterministic output order: descending leading monomial
    packed = list(zip(reduced, red_cofs)) if track_cofactors else [(g, None) for g in reduced]
    packed.sort(key=lambda t: order.key(t[0].lead_monomial(order)), reverse=True)
    result = IdealBasis([g for g, _ in packed], dom, order, is_groebner=True,
                        cofactors=[c for _, c in packed] if track_cofactors else None)
    return result


def is_trivial_over_field(generators, order=DEGREVLEX, spair_cap=50000,
                          degree_cap=30, want_cofactors=False):
    """Decide 1 in <generators> over the (field) coefficient domain.

    Returns (True, cofactors-or-None) or (False, reduced basis).  With
    cofactors, sum(h_i * g_i) == 1 exactly, verified by expansion.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return False, IdealBasis([], QQ, order, is_groebner=True)
    basis = buchberger(gens, order, spair_cap, degree_cap,
                       track_cofactors=want_cofactors)
    if basis.is_trivial():
        if want_cofactors:
            hs = basis.cofactors[0]
            check = Polynomial.zero(gens[0].nvars, gens[0].domain)
            for h, g in zip(hs, gens):
                check = check + h * g
            assert check == Polynomial.constant(gens[0].nvars, gens[0].domain, 1), \
                "cofactor expansion must reproduce 1"
            return True, hs
        return True, None
    return False, basis


def _factor_desk_scale(d):
    """Trial-division factorization; fine for denominator-cleared constants."""
    d = abs(d)
    primes = []
    q = 2
    while q * q <= d:
        if d % q == 0:
            primes.append(q)
            while d % q == 0:
                d //= q
        q += 1 if q == 2 else 2
    if d > 1:
        primes.append(d)
    return primes


def is_trivial_over_Z(generators, order=DEGREVLEX, spair_cap=50000, degree_cap=30):
    """Decide 1 in <generators> inside Z[X].

    Strategy: decide over Q with cofactor tracking.  Non-trivial over Q is
    non-trivial over Z.  Otherwise clear denominators to get an integer D
    in the integer ideal; 1 lies in the ideal iff the reduction mod p is
    trivial for every prime p dividing D (all other primes are settled by
    the combination itself).

    Returns (decision, certificate) where certificate is
      ("rational-basis", basis)           non-trivial already over Q
      ("prime", p, basis)                 non-trivial mod p
      ("denominator", D)                  trivial; all prime divisors of D pass
    """
    gens = []
    for g in generators:
        if g.is_zero():
            continue
        if g.domain is not ZZ:
            raise DomainMismatch("is_trivial_over_Z wants integer coefficients")
        gens.append(g)
    if not gens:
        return False, ("rational-basis", IdealBasis([], QQ, order, is_groebner=True))
    for g in gens:
        if g.is_constant() and ZZ.is_unit(g.constant_value()):
            return True, ("denominator", 1)
    qgens = [g.to_domain(QQ) for g in gens]
    ok, payload = is_trivial_over_field(qgens, order, spair_cap, degree_cap,
                                        want_cofactors=True)
    if not ok:
        return False, ("rational-basis", payload)
    d = 1
    for h in payload:
        for c in h.terms.values():
            d = d * c.denominator // gcd(d, c.denominator)
    if d == 1:
        return True, ("denominator", 1)
    for p in _factor_desk_scale(d):
        pgens = [g.to_domain(GF(p)) for g in gens]
        okp, basis_p = is_trivial_over_field(pgens, order, spair_cap, degree_cap)
        if not okp:
            return False, ("prime", p, basis_p)
    return True, ("denominator", d)


def ideals_equal(basis_a, gens_b, order=DEGREVLEX):
    """Mutual-reduction ideal equality: basis_a must be a Groebner basis.

    gens_b may be any generating set; builds its Groebner basis and checks
    containment both ways.
    """
    other = buchberger(list(gens_b), order)
    return (all(basis_a.contains(g) for g in other.generators)
            and all(other.contains(g) for g in basis_a.generators))
