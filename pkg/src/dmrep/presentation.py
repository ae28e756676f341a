"""Words and presentations for the 3-fold Deligne-Mostow lattices.

The lattice Gamma(p,k) is generated by J (regular elliptic of order 3) and
R1 (complex reflection of order p) subject to

    J^3,  R1^p,  (R1 J)^(2k),
    W = R1 J R1 J^2 R1 J R1^(p-1) J^2 R1^(p-1) J R1^(p-1) J^2.

Type one means 0 < p <= 6 and k <= 2p/(p-2) when p > 2.  Words are stored as
generator/exponent pairs with positive exponents only; projectively J^-1 is
J^2 and R1^-1 is R1^(p-1), so inverses never appear in evaluation.  Exponent
sums are taken as written (J^2 contributes 2), which is what the lifting
bookkeeping needs.
"""

import re

from .linalg import identity, mat_mul, mat_pow


class Word:
    """A positive word in J and R1, freely reduced by merging adjacent letters."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        merged = []
        for gen, exp in letters:
            if gen not in ("J", "R"):
                raise ValueError("unknown generator %r" % (gen,))
            if exp < 0:
                raise ValueError("negative exponent; use the projective inverse")
            if exp == 0:
                continue
            if merged and merged[-1][0] == gen:
                merged[-1] = (gen, merged[-1][1] + exp)
            else:
                merged.append((gen, exp))
        object.__setattr__(self, "letters", tuple(merged))

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative word power; use inverse(p) explicitly")
        return Word(self.letters * n)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return sum(e for _, e in self.letters)

    def inverse(self, p):
        """Projective inverse: reverse the word, J^e -> J^(3-e mod 3),
        R^e -> R^(p-e mod p).  Valid because J^3 and R1^p are scalar."""
        out = []
        for gen, exp in reversed(self.letters):
            m = 3 if gen == "J" else p
            e = (-exp) % m
            if e:
                out.append((gen, e))
        return Word(out)

    def exponent_sums(self):
        """(sum of J exponents, sum of R1 exponents), as written."""
        sj = sum(e for g, e in self.letters if g == "J")
        sr = sum(e for g, e in self.letters if g == "R")
        return sj, sr

    def evaluate(self, Jmat, Rmat, one):
        """Multiply out on explicit matrices; entries need ring ops and `one`."""
        acc = identity(len(Jmat), one)
        for gen, exp in self.letters:
            base = Jmat if gen == "J" else Rmat
            acc = mat_mul(acc, mat_pow(base, exp, one))
        return acc

    def __repr__(self):
        if not self.letters:
            return "1"
        out = []
        for gen, exp in self.letters:
            name = "J" if gen == "J" else "R1"
            out.append(name if exp == 1 else "%s^%d" % (name, exp))
        return " ".join(out)

    # J, R, R1 as generator names; exponent as ^n (multi-digit, may be
    # negative) or a single bare digit (J2 means J^2)
    _TOKEN = re.compile(r"([Jj]|[Rr]1?(?![0-9]))(?:\^(-?\d+)|([0-9]))?")

    @staticmethod
    def parse(text, p=None):
        """Parse words like "J R1^2 J2 R" or "JRRJ2".  Negative exponents are
        rewritten projectively and need p for R."""
        out = []
        pos = 0
        cleaned = text.replace("*", " ")
        for m in Word._TOKEN.finditer(cleaned):
            gap = cleaned[pos:m.start()]
            if gap.strip():
                raise ValueError("cannot parse word at %r" % (gap,))
            pos = m.end()
            gen = m.group(1)[0].upper()
            exp = int(m.group(2) or m.group(3) or 1)
            if exp < 0:
                mod = 3 if gen == "J" else p
                if mod is None:
                    raise ValueError("negative R exponent needs p")
                exp = exp % mod
            out.append((gen, exp))
        if cleaned[pos:].strip():
            raise ValueError("cannot parse word at %r" % (cleaned[pos:],))
        return Word(out)


def commutator(a, b, p):
    return a * b * a.inverse(p) * b.inverse(p)


J1 = Word([("J", 1)])
J2 = Word([("J", 2)])
R1 = Word([("R", 1)])


class Presentation:
    """The type-one presentation for parameters (p, k)."""

    __slots__ = ("p", "k")

    def __init__(self, p, k):
        if not (isinstance(p, int) and isinstance(k, int)):
            raise ValueError("p and k must be integers")
        if not (0 < p <= 6):
            raise ValueError("type one requires 0 < p <= 6, got p=%d" % p)
        if k < 1:
            raise ValueError("k must be positive, got k=%d" % k)
        if p > 2 and k * (p - 2) > 2 * p:
            raise ValueError("type one requires k <= 2p/(p-2): (p,k)=(%d,%d)" % (p, k))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)

    def __setattr__(self, *a):
        raise AttributeError("Presentation is immutable")

    def __repr__(self):
        return "Presentation(p=%d, k=%d)" % (self.p, self.k)

    def relators(self):
        """Ordered dict name -> Word for the four defining relators."""
        p, k = self.p, self.k
        pm1 = p - 1
        w = Word([("R", 1), ("J", 1), ("R", 1), ("J", 2), ("R", 1), ("J", 1),
                  ("R", pm1), ("J", 2), ("R", pm1), ("J", 1), ("R", pm1), ("J", 2)])
        return {
            "J3": Word([("J", 3)]),
            "Rp": Word([("R", p)]),
            "RJ2k": Word([("R", 1), ("J", 1)] * (2 * k)),
            "W": w,
        }

    def relator_exponent_sums(self):
        return {name: w.exponent_sums() for name, w in self.relators().items()}

    # cusp group words, from the (3,6) analysis but valid for any p
    # (inverses are taken projectively with this presentation's p)

    def cusp_r2(self):
        """R2 = J R1 J^2, a reflection conjugate to R1."""
        return J1 * R1 * J2

    def cusp_a1(self):
        """A1 = J R1^2 J^2 R1^2 J."""
        return J1 * Word([("R", 2)]) * J2 * Word([("R", 2)]) * J1

    def cusp_center(self):
        """(R2 A1)^2 generates the centre of the cusp group."""
        return (self.cusp_r2() * self.cusp_a1()) ** 2

    def cusp_parabolic_gens(self):
        """[A1, R2], [A1, R2^2], (R2 A1)^2."""
        p = self.p
        r2, a1 = self.cusp_r2(), self.cusp_a1()
        return [commutator(a1, r2, p), commutator(a1, r2 * r2, p), self.cusp_center()]


def evaluate_word(word, Jmat, Rmat, one):
    return word.evaluate(Jmat, Rmat, one)
