"""Independent oracles used by the test suite.

Everything here recomputes results by a different route than the package:
diagram membership by supporting half-planes, conjugate products by exact
cyclotomic arithmetic, random valid characteristic sequences by rejection.
"""

from fractions import Fraction
from math import gcd

from branchpolar.diagram import NewtonDiagram


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------


def oracle_contains(support, point) -> bool:
    """Membership in N(support) tested against every supporting direction."""
    support = list(support)
    px, py = point
    if px < min(x for x, _ in support) or py < min(y for _, y in support):
        return False
    amax = max(y for _, y in support) + 1
    bmax = max(x for x, _ in support) + 1
    for a in range(1, amax + 1):
        for b in range(1, bmax + 1):
            if a * px + b * py < min(a * x + b * y for x, y in support):
                return False
    return True


def random_diagram(rng, xmax=200, ymax=200) -> NewtonDiagram:
    from branchpolar.diagram import from_support

    npts = rng.randint(1, 6)
    pts = [(rng.randint(0, xmax), rng.randint(0, ymax)) for _ in range(npts)]
    return from_support(pts)


# ---------------------------------------------------------------------------
# characteristic sequences
# ---------------------------------------------------------------------------


def random_char_sequence(rng, b0_max=64):
    from branchpolar.charclass import new_char_sequence

    b0 = rng.randint(2, b0_max)
    b = [b0]
    e = b0
    while e > 1:
        step = rng.randint(1, max(2 * e, 8))
        candidate = b[-1] + step
        if gcd(e, candidate) < e:
            b.append(candidate)
            e = gcd(e, candidate)
    return new_char_sequence(b)


# ---------------------------------------------------------------------------
# exact cyclotomic arithmetic (tiny, just enough for conjugate products)
# ---------------------------------------------------------------------------


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_divmod(a, b):
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) < len(b):
            break
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = coef
        for i, cb in enumerate(b):
            a[shift + i] -= coef * cb
    return q, a


def cyclotomic(n):
    """Coefficient list (low to high) of the n-th cyclotomic polynomial."""
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # z^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, cyclotomic(d))
            assert not any(r)
            poly = q
    while poly and not poly[-1]:
        poly.pop()
    return poly


class Cyc:
    """Elements of Q[z]/Phi_n(z); z is a primitive n-th root of unity."""

    def __init__(self, n, coeffs=None):
        self.n = n
        self.phi = cyclotomic(n)
        deg = len(self.phi) - 1
        vec = [Fraction(0)] * deg
        if coeffs:
            for i, c in enumerate(coeffs):
                vec[i] = Fraction(c)
        self.vec = vec

    @classmethod
    def zeta_power(cls, n, k):
        k %= n
        out = cls(n)
        raw = [Fraction(0)] * (k + 1)
        raw[k] = Fraction(1)
        out.vec = out._reduce(raw)
        return out

    def _reduce(self, raw):
        deg = len(self.phi) - 1
        raw = list(raw)
        for i in range(len(raw) - 1, deg - 1, -1):
            c = raw[i]
            if c:
                for j, pc in enumerate(self.phi[:-1]):
                    raw[i - deg + j] -= c * pc
            raw.pop()
        while len(raw) < deg:
            raw.append(Fraction(0))
        return raw

    def __add__(self, other):
        out = Cyc(self.n)
        out.vec = [a + b for a, b in zip(self.vec, other.vec)]
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            out = Cyc(self.n)
            out.vec = [a * other for a in self.vec]
            return out
        out = Cyc(self.n)
        out.vec = self._reduce(_poly_mul(self.vec, other.vec))
        return out

    def __neg__(self):
        out = Cyc(self.n)
        out.vec = [-a for a in self.vec]
        return out

    def rational(self) -> Fraction:
        assert all(not c for c in self.vec[1:]), f"not rational: {self.vec}"
        return self.vec[0]

    def is_zero(self):
        return all(not c for c in self.vec)


def min_poly_oracle(series):
    """Conjugate product over an exact cyclotomic field, term dict in (x, y)."""
    s = series.reduce()
    n = s.denom
    # polynomials in (u, y) with Cyc coefficients, keys (u_exp, y_exp)
    prod = {(0, 0): Cyc(n, [1])}
    for j in range(n):
        factor = {(0, 1): Cyc(n, [1])}
        for i, c in s.terms:
            key = (i, 0)
            val = Cyc.zeta_power(n, i * j) * Fraction(c)
            factor[key] = factor.get(key, Cyc(n)) + (-val)
        nxt = {}
        for (ia, ja), ca in prod.items():
            for (ib, jb), cb in factor.items():
                key = (ia + ib, ja + jb)
                v = ca * cb
                if key in nxt:
                    nxt[key] = nxt[key] + v
                else:
                    nxt[key] = v
        prod = {k: v for k, v in nxt.items() if not v.is_zero()}
    out = {}
    for (i, jy), c in prod.items():
        q = c.rational()
        if q:
            assert i % n == 0, "oracle product kept a fractional exponent"
            out[(i // n, jy)] = q
    return out
