"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored on the power basis 1, z, ..., z^(phi(n)-1) where z = zeta_n
= exp(2*pi*i/n), with Fraction coefficients, always reduced modulo the n-th
cyclotomic polynomial Phi_n.  The conductor n is part of the value; arithmetic
between two CycloNum with different conductors raises, so conductor bugs
surface instead of being hidden by silent coercion.  Use embed()/lift_common()
to move elements into a bigger field explicitly.

Galois automorphisms sigma_k : z -> z^k (gcd(k,n)=1) act by permuting powers,
complex conjugation is sigma_{n-1}.  Numerical enclosures use mpmath interval
arithmetic, so sign decisions on real elements are certified, not floating
point guesses.
"""

from fractions import Fraction
from math import gcd
import mpmath
from mpmath import iv

_ZERO = Fraction(0)
_ONE = Fraction(1)


def euler_phi(n):
    if n < 1:
        raise ValueError("conductor must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    # exact division helpers over Q, coefficients int or Fraction
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    while len(a) >= len(b) and _poly_trim(a):
        if not a:
            break
        d = len(a) - len(b)
        c = Fraction(a[-1]) / lb
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        _poly_trim(a)
    return q, [Fraction(x) for x in a]


_cyclo_cache = {}


def cyclotomic_coeffs(n):
    """Coefficients (ascending, ints) of Phi_n, computed as (t^n - 1) / prod Phi_d."""
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in divisors(n):
        if d < n:
            den = _poly_mul(den, list(cyclotomic_coeffs(d)))
    q, r = _poly_divmod(num, den)
    assert not r, "cyclotomic division must be exact"
    coeffs = tuple(int(c) for c in q)
    assert all(Fraction(c).denominator == 1 for c in q)
    _cyclo_cache[n] = coeffs
    return coeffs


class _Field:
    """Cached per-conductor data: Phi_n and power reduction rows t^m mod Phi_n."""

    _cache = {}
    __slots__ = ("n", "phi", "modulus", "_rows")

    def __new__(cls, n):
        if n in cls._cache:
            return cls._cache[n]
        self = object.__new__(cls)
        self.n = n
        self.modulus = cyclotomic_coeffs(n)
        self.phi = len(self.modulus) - 1
        # rows[m] = coefficient tuple (ints scaled? Phi is monic so rows stay integral)
        self._rows = [tuple([1 if i == m else 0 for i in range(self.phi)])
                      for m in range(self.phi)]
        cls._cache[n] = self
        return self

    def row(self, m):
        """t^m mod Phi_n as an int tuple of length phi."""
        rows = self._rows
        phi = self.phi
        mod = self.modulus
        while len(rows) <= m:
            prev = rows[-1]
            shifted = [0] + list(prev)
            if len(shifted) > phi:
                top = shifted.pop()
                if top:
                    for i in range(phi):
                        shifted[i] -= top * mod[i]
            rows.append(tuple(shifted))
        return rows[m]

    def reduce(self, coeffs):
        """Reduce a coefficient list of any length to the power basis."""
        phi = self.phi
        out = [Fraction(c) for c in coeffs[:phi]]
        out += [_ZERO] * (phi - len(out))
        for m in range(phi, len(coeffs)):
            c = coeffs[m]
            if c:
                r = self.row(m)
                for i in range(phi):
                    if r[i]:
                        out[i] += c * r[i]
        return tuple(out)


class CycloNum:
    """An element of Q(zeta_n) on the power basis, exact."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        field = _Field(n)
        if len(coeffs) == field.phi and all(isinstance(c, Fraction) for c in coeffs):
            cs = tuple(coeffs)
        else:
            cs = field.reduce([Fraction(c) for c in coeffs])
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("CycloNum is immutable")

    def __reduce__(self):
        return (CycloNum, (self.n, self.coeffs))

    # construction helpers -------------------------------------------------

    @staticmethod
    def from_rational(q, n=1):
        z = [Fraction(q)] + [_ZERO] * (_Field(n).phi - 1)
        return CycloNum(n, z)

    @staticmethod
    def zeta(n, k=1):
        """zeta_n^k."""
        f = _Field(n)
        return CycloNum(n, [Fraction(c) for c in f.row(k % n)])

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.n != self.n:
                raise ValueError(
                    "conductor mismatch: %d vs %d (embed explicitly)" % (self.n, other.n))
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(other, self.n)
        return None

    # ring/field operations -------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.n, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        out = [_ZERO] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CycloNum(self.n, _Field(self.n).reduce(out))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("CycloNum inverse of 0")
        # extended euclid against Phi_n in Q[t]
        f = _Field(self.n)
        r0 = [Fraction(c) for c in f.modulus]
        r1 = list(self.coeffs)
        _poly_trim(r1)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            q, r = _poly_divmod(r0, r1)
            _poly_trim(r)
            if not r:
                break
            s = [a for a in s0]
            qm = _poly_mul(q, s1)
            s = [(s[i] if i < len(s) else _ZERO) - (qm[i] if i < len(qm) else _ZERO)
                 for i in range(max(len(s), len(qm)))]
            r0, r1, s0, s1 = r1, r, s1, s
        g = r1[-1] if len(r1) == 1 else None
        assert g is not None, "Phi_n must be coprime to any nonzero element"
        inv = [c / g for c in s1]
        return CycloNum(self.n, f.reduce(inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum.from_rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other, self.n)
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.n != self.n:
            m = self.n * other.n // gcd(self.n, other.n)
            return self.embed(m).coeffs == other.embed(m).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # predicates -------------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not rational: %r" % (self,))
        return self.coeffs[0]

    def is_real(self):
        return self.conj() == self

    # galois action ----------------------------------------------------------

    def galois(self, k):
        """Apply sigma_k : zeta -> zeta^k.  Requires gcd(k, n) = 1."""
        n = self.n
        k %= n
        if n > 1 and gcd(k, n) != 1:
            raise ValueError("sigma_%d is not an automorphism of Q(zeta_%d)" % (k, n))
        f = _Field(n)
        out = [_ZERO] * f.phi
        for j, c in enumerate(self.coeffs):
            if c:
                r = f.row((j * k) % n)
                for i in range(f.phi):
                    if r[i]:
                        out[i] += c * r[i]
        return CycloNum(n, tuple(out))

    def conj(self):
        if self.n <= 2:
            return self
        return self.galois(self.n - 1)

    def real_part(self):
        return (self + self.conj()) / 2

    def imag_part_times_i(self):
        """Returns x - conj(x), which is 2*i*Im(x); stays inside the field."""
        return self - self.conj()

    def norm_abs2(self):
        """x * conj(x), a totally real element."""
        return self * self.conj()

    # conductor moves ----------------------------------------------------------

    def embed(self, m):
        """Image under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n).  Needs n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("no embedding Q(zeta_%d) -> Q(zeta_%d)" % (self.n, m))
        q = m // self.n
        f = _Field(m)
        out = [_ZERO] * f.phi
        for j, c in enumerate(self.coeffs):
            if c:
                r = f.row((j * q) % m)
                for i in range(f.phi):
                    if r[i]:
                        out[i] += c * r[i]
        return CycloNum(m, tuple(out))

    def descend(self, d):
        """Rewrite over Q(zeta_d) for d | n, or None if the element is not there."""
        if d == self.n:
            return self
        if self.n % d:
            raise ValueError("%d does not divide %d" % (d, self.n))
        fn, fd = _Field(self.n), _Field(d)
        q = self.n // d
        # columns: zeta_d^i embedded upstairs
        cols = [fn.row((i * q) % self.n) for i in range(fd.phi)]
        # solve cols * y = coeffs by gaussian elimination over Q
        rows = fn.phi
        aug = [[Fraction(cols[j][i]) for j in range(fd.phi)] + [self.coeffs[i]]
               for i in range(rows)]
        piv = []
        r = 0
        for c in range(fd.phi):
            sel = None
            for i in range(r, rows):
                if aug[i][c]:
                    sel = i
                    break
            if sel is None:
                continue
            aug[r], aug[sel] = aug[sel], aug[r]
            inv = 1 / aug[r][c]
            aug[r] = [v * inv for v in aug[r]]
            for i in range(rows):
                if i != r and aug[i][c]:
                    fac = aug[i][c]
                    aug[i] = [a - fac * b for a, b in zip(aug[i], aug[r])]
            piv.append(c)
            r += 1
        for i in range(r, rows):
            if aug[i][-1]:
                return None
        y = [_ZERO] * fd.phi
        for i, c in enumerate(piv):
            y[c] = aug[i][-1]
        return CycloNum(d, tuple(y))

    def min_conductor(self):
        """Smallest d | n with the element in Q(zeta_d)."""
        for d in divisors(self.n):
            got = self.descend(d)
            if got is not None:
                return got
        return self

    # numerics -----------------------------------------------------------------

    def approx(self, prec=53):
        """Non-rigorous mpmath complex approximation at prec bits."""
        with mpmath.workprec(prec + 20):
            z = mpmath.expjpi(mpmath.mpf(2) / self.n)
            acc = mpmath.mpc(1)
            out = mpmath.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    out += acc * mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
                if j + 1 < len(self.coeffs):
                    acc *= z
            return out

    def enclosure(self, prec=80):
        """Rigorous interval enclosure (mpmath iv.mpc) at prec bits."""
        old = iv.prec
        try:
            iv.prec = prec + 20
            theta = 2 * iv.pi / self.n
            z = iv.exp(iv.mpc(0, 1) * theta)
            acc = iv.mpc(1)
            out = iv.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    out += acc * iv.mpf(c.numerator) / iv.mpf(c.denominator)
                if j + 1 < len(self.coeffs):
                    acc *= z
            return out
        finally:
            iv.prec = old

    def sign_real(self, start_prec=80, max_prec=1 << 16):
        """Certified sign of a real element: -1, 0, or 1.

        Zero is syntactic (all coefficients zero); otherwise interval precision
        is doubled until the real enclosure excludes zero.
        """
        if self.is_zero():
            return 0
        if not self.is_real():
            raise ValueError("sign_real on a non-real element")
        prec = start_prec
        while prec <= max_prec:
            box = self.enclosure(prec)
            re = box.real
            if re.a > 0:
                return 1
            if re.b < 0:
                return -1
            prec *= 2
        raise ArithmeticError("sign undetermined at %d bits for %r" % (max_prec, self))

    # io -------------------------------------------------------------------------

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mon = "z%d" % self.n if j == 1 else "z%d^%d" % (self.n, j)
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append("-" + mon)
                else:
                    parts.append("%s*%s" % (c, mon))
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s

    def to_obj(self):
        """JSON-friendly form: conductor and [num, den] coefficient pairs."""
        return {"n": self.n,
                "c": [[c.numerator, c.denominator] for c in self.coeffs]}

    @staticmethod
    def from_obj(obj):
        return CycloNum(obj["n"], [Fraction(a, b) for a, b in obj["c"]])


def rat(q):
    """Shorthand: rational as a conductor-1 CycloNum."""
    return CycloNum.from_rational(q, 1)


def lift_common(*xs):
    """Embed all arguments (CycloNum or rational) into the lcm conductor."""
    n = 1
    for x in xs:
        if isinstance(x, CycloNum):
            n = n * x.n // gcd(n, x.n)
    out = []
    for x in xs:
        if isinstance(x, CycloNum):
            out.append(x.embed(n))
        else:
            out.append(CycloNum.from_rational(x, n))
    return out


def galois_group(n):
    """Exponents k of the automorphisms sigma_k of Q(zeta_n), sorted."""
    return [k for k in range(1, max(n, 2)) if gcd(k, n) == 1] or [1]
