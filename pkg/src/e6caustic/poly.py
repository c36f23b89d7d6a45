"""Dense univariate real polynomials.

Certified real root isolation (Sturm chains + bisection), Sylvester
resultants via fraction-free elimination, discriminants, and node
interpolation. Everything downstream (fibers, locus polynomials,
bifurcation machinery) sits on this module.

Coefficients are stored constant-term first.
"""

import numpy as np

COEFF_FLOOR = 1e-300        # below this a coefficient is identically zero
TOL_CLUSTER = 1e-7          # default root clustering threshold (relative)
TOL_ROOT = 1e-9             # default residual certificate for real_roots
MULT_TOL = 1e-6             # derivative-order multiplicity threshold
CHAIN_EPS = 1e-13           # Sturm remainder truncation (relative)


class IdenticallyZero(ValueError):
    pass


class BothConstant(ValueError):
    pass


class DegreeTooLow(ValueError):
    pass


class DuplicateNodes(ValueError):
    pass


class InconsistentData(ValueError):
    """Interpolation residual above tolerance; degree cap too small."""


class Poly1:
    """Real polynomial, dense coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, trim=0.0):
        c = np.atleast_1d(np.asarray(coeffs, dtype=float)).copy()
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a nonempty 1-D sequence")
        top = np.abs(c).max()
        cut = max(COEFF_FLOOR, trim * top)
        n = c.size
        while n > 1 and abs(c[n - 1]) <= cut:
            n -= 1
        self.coeffs = c[:n]

    @classmethod
    def from_roots(cls, roots, lead=1.0):
        c = np.array([lead])
        for r in roots:
            c = np.convolve(c, [-r, 1.0])
        return cls(c)

    @property
    def degree(self):
        if self.coeffs.size == 1 and abs(self.coeffs[0]) <= COEFF_FLOOR:
            return -1
        return self.coeffs.size - 1

    def __call__(self, x):
        return eval(self, x)

    def deriv(self):
        c = self.coeffs
        if c.size == 1:
            return Poly1([0.0])
        return Poly1(c[1:] * np.arange(1, c.size))

    def __mul__(self, other):
        if np.isscalar(other):
            return Poly1(self.coeffs * other)
        return Poly1(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(a.size, b.size)
        out = np.zeros(n)
        out[: a.size] += a
        out[: b.size] += b
        return Poly1(out)

    def __sub__(self, other):
        return self + (other * -1.0)

    def scale_at(self, x):
        """Sum of |c_i| * max(1,|x|)^i; natural magnitude of eval noise."""
        ax = max(1.0, abs(x))
        return float(np.abs(self.coeffs) @ (ax ** np.arange(self.coeffs.size)))

    def is_zero(self):
        return bool(np.all(np.abs(self.coeffs) <= COEFF_FLOOR))

    def __repr__(self):
        return f"Poly1({self.coeffs.tolist()})"


def eval(p, x):
    """Horner evaluation; exact for degree 0."""
    c = p.coeffs
    r = 0.0
    for ci in c[::-1]:
        r = r * x + ci
    return float(r)


def eval_many(p, xs):
    xs = np.asarray(xs, dtype=float)
    r = np.zeros_like(xs)
    for ci in p.coeffs[::-1]:
        r = r * xs + ci
    return r


def _polydiv(a, b):
    """Quotient and remainder of coefficient arrays (constant first)."""
    a = a.copy()
    db, da = b.size - 1, a.size - 1
    if da < db:
        return np.zeros(1), a
    q = np.zeros(da - db + 1)
    inv = 1.0 / b[-1]
    for k in range(da - db, -1, -1):
        f = a[db + k] * inv
        q[k] = f
        a[k : db + k + 1] -= f * b
    return q, a[:db] if db > 0 else np.zeros(1)


def _trimmed(c, rel):
    top = np.abs(c).max()
    cut = max(COEFF_FLOOR, rel * top)
    n = c.size
    while n > 1 and abs(c[n - 1]) <= cut:
        n -= 1
    return c[:n]


def _sturm_chain(c):
    """Sturm chain of the coefficient array, each element max-normalized."""
    chain = [c / np.abs(c).max()]
    if c.size > 1:
        d = c[1:] * np.arange(1, c.size)
        chain.append(d / np.abs(d).max())
    while chain[-1].size > 1:
        _, r = _polydiv(chain[-2], chain[-1])
        r = _trimmed(-r, CHAIN_EPS)
        top = np.abs(r).max()
        if top <= COEFF_FLOOR:
            break
        chain.append(r / top)
    return chain


def _variations(chain, x):
    prev = 0
    v = 0
    for c in chain:
        val = 0.0
        for ci in c[::-1]:
            val = val * x + ci
        s = 0 if val == 0.0 else (1 if val > 0.0 else -1)
        if s != 0:
            if prev != 0 and s != prev:
                v += 1
            prev = s
    return v


def _cauchy_bound(c):
    lead = abs(c[-1])
    return 1.0 + float(np.abs(c[:-1]).max(initial=0.0)) / lead


def _refine_root(c, a, b, sa):
    """Bisection to float limit inside a bracket with p(a) sign sa."""
    for _ in range(200):
        m = 0.5 * (a + b)
        if m == a or m == b:
            break
        v = 0.0
        for ci in c[::-1]:
            v = v * m + ci
        if v == 0.0:
            return m
        if (v > 0) == (sa > 0):
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def _squarefree(c):
    """Numeric square-free part via Euclid gcd(p, p')."""
    if c.size <= 2:
        return c
    a = c / np.abs(c).max()
    b = c[1:] * np.arange(1, c.size)
    b = b / np.abs(b).max()
    while b.size > 1:
        _, r = _polydiv(a, b)
        r = _trimmed(r, 1e-10)
        if np.abs(r).max() <= 1e-12:
            break
        a, b = b, r / np.abs(r).max()
    else:
        return c
    if b.size <= 1:
        return c
    g = b if np.abs(b).max() > COEFF_FLOOR else None
    if g is None:
        return c
    q, _ = _polydiv(c, g)
    return _trimmed(q, 1e-12)


def _multiplicity(p, r, cap):
    """Smallest derivative order with magnitude above the noise scale."""
    c = p.coeffs.copy()
    ax = max(1.0, abs(r))
    for k in range(cap):
        val = 0.0
        for ci in c[::-1]:
            val = val * r + ci
        scale = float(np.abs(c) @ (ax ** np.arange(c.size)))
        if abs(val) > MULT_TOL * scale:
            return k
        if c.size == 1:
            return k + 1
        c = c[1:] * np.arange(1, c.size)
    return cap


def real_roots(p, tol=TOL_ROOT, cluster=TOL_CLUSTER):
    """All real roots with multiplicities, ascending.

    Sturm isolation on the square-free part, bisection refinement,
    derivative-order multiplicities, clustering of near-coincident roots.
    Raises IdenticallyZero for the zero polynomial.
    """
    if p.is_zero():
        raise IdenticallyZero("zero polynomial has no well-defined roots")
    if p.degree <= 0:
        return []
    sq = _squarefree(p.coeffs)
    sq = sq / np.abs(sq).max()
    if sq.size <= 1:
        return []
    chain = _sturm_chain(sq)
    bound = _cauchy_bound(sq)
    roots = []
    stack = [(-bound, bound, _variations(chain, -bound), _variations(chain, bound))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n <= 0:
            continue
        if n == 1 or (b - a) <= 1e-14 * (1.0 + abs(a) + abs(b)):
            sa = 0.0
            for ci in sq[::-1]:
                sa = sa * a + ci
            sb = 0.0
            for ci in sq[::-1]:
                sb = sb * b + ci
            if sa == 0.0:
                roots.append(a)
            elif sb == 0.0 or (sa > 0) != (sb > 0):
                roots.append(_refine_root(sq, a, b, 1 if sa > 0 else -1))
            else:
                # even-order contact inside the interval: take the extremum
                roots.append(0.5 * (a + b))
            continue
        m = 0.5 * (a + b)
        vm = _variations(chain, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    roots.sort()

    # cluster, then assign derivative-order multiplicities
    out = []
    i = 0
    while i < len(roots):
        j = i
        while j + 1 < len(roots) and roots[j + 1] - roots[j] <= cluster * (1.0 + abs(roots[j])):
            j += 1
        grp = roots[i : j + 1]
        r = grp[len(grp) // 2]
        m = max(_multiplicity(p, r, p.degree + 1), len(grp))
        out.append((r, m))
        i = j + 1

    # cap total multiplicity at the degree
    total = sum(m for _, m in out)
    while total > p.degree and out:
        k = max(range(len(out)), key=lambda i: out[i][1])
        r, m = out[k]
        if m <= 1:
            break
        out[k] = (r, m - 1)
        total -= 1

    scale = [p.scale_at(r) for r, _ in out]
    return [(r, m) for (r, m), s in zip(out, scale) if abs(eval(p, r)) <= tol * s or m > 1]


def sylvester(p, q):
    """Sylvester matrix of p, q (standard layout, descending coefficients)."""
    cp = p.coeffs[::-1]
    cq = q.coeffs[::-1]
    m, n = p.degree, q.degree
    s = np.zeros((m + n, m + n))
    for i in range(n):
        s[i, i : i + m + 1] = cp
    for i in range(m):
        s[n + i, i : i + n + 1] = cq
    return s


def _det_bareiss(m):
    """Fraction-free Bareiss determinant with partial pivoting."""
    a = m.astype(float).copy()
    n = a.shape[0]
    sign = 1.0
    prev = 1.0
    for k in range(n - 1):
        piv = k + int(np.argmax(np.abs(a[k:, k])))
        if a[piv, k] == 0.0:
            return 0.0
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            sign = -sign
        a[k + 1 :, k + 1 :] = (a[k, k] * a[k + 1 :, k + 1 :]
                               - np.outer(a[k + 1 :, k], a[k, k + 1 :])) / prev
        prev = a[k, k]
    return sign * a[-1, -1]


def resultant(p, q):
    """det of the Sylvester matrix; 0 iff p, q share a complex root."""
    if p.degree < 1 and q.degree < 1:
        raise BothConstant("resultant needs at least one non-constant input")
    if p.degree < 1:
        return float(p.coeffs[0] ** q.degree)
    if q.degree < 1:
        return float(q.coeffs[0] ** p.degree)
    return float(_det_bareiss(sylvester(p, q)))


def discriminant(p):
    """resultant(p, p') normalized by the leading coefficient, standard sign."""
    d = p.degree
    if d < 2:
        raise DegreeTooLow("discriminant needs degree >= 2")
    sign = -1.0 if (d * (d - 1) // 2) % 2 else 1.0
    return sign * resultant(p, p.deriv()) / float(p.coeffs[-1])


def interpolate(nodes, degree_cap, tol=1e-8):
    """Least-squares fit of degree <= degree_cap through the nodes.

    The nodes must over-determine the polynomial (>= degree_cap + 1 of
    them); a residual above tol * scale means the cap is too small.
    """
    xs = np.array([x for x, _ in nodes], dtype=float)
    ys = np.array([y for _, y in nodes], dtype=float)
    if xs.size < degree_cap + 1:
        raise ValueError("need at least degree_cap + 1 nodes")
    order = np.argsort(xs)
    xs, ys = xs[order], ys[order]
    if np.any(np.diff(xs) <= 1e-14 * (1.0 + np.abs(xs[:-1]))):
        raise DuplicateNodes("interpolation nodes coincide")

    # scale x to [-1, 1] for conditioning, fit, then map back
    x0 = 0.5 * (xs[0] + xs[-1])
    h = 0.5 * (xs[-1] - xs[0])
    t = (xs - x0) / h
    v = np.vander(t, degree_cap + 1, increasing=True)
    coef, *_ = np.linalg.lstsq(v, ys, rcond=None)
    resid = np.abs(v @ coef - ys)
    yscale = np.abs(ys).max(initial=1.0)
    if np.any(resid > tol * max(yscale, 1e-30)):
        raise InconsistentData("residual above tolerance; raise degree_cap")

    # expand c((x - x0)/h) into powers of x
    out = np.zeros(degree_cap + 1)
    base = np.array([1.0])
    lin = np.array([-x0 / h, 1.0 / h])
    for k, ck in enumerate(coef):
        out[: base.size] += ck * base
        base = np.convolve(base, lin)
    return Poly1(out, trim=0.0)
