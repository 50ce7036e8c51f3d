"""Exact arithmetic kernel: multivariate Laurent polynomials over Z,
Laurent scalars in q^(1/2), and rational generating functions.

All values are immutable after construction and all operations are pure,
so everything here is safe to share between threads.  Coefficients are
plain Python ints (arbitrary precision); rationals only ever appear at
evaluation time, as fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction


def _deglex_key(exps):
    # deg-lex: total degree first, then lexicographic on the exponent vector
    return (sum(exps), exps)


class MLaurent:
    """Multivariate Laurent polynomial with integer coefficients.

    Terms are stored as a dict mapping exponent vectors (tuples of ints,
    negative entries allowed) to nonzero integer coefficients.  The
    variable list is fixed per value; mixing variable lists is a usage
    error.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        clean = {}
        if terms:
            n = len(self.vars)
            for exps, coeff in terms.items():
                if len(exps) != n:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {n}"
                    )
                if coeff:
                    clean[tuple(exps)] = coeff
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        if c == 0:
            return cls(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables, exps, coeff=1):
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def variable(cls, variables, name, power=1):
        variables = tuple(variables)
        i = variables.index(name)
        exps = [0] * len(variables)
        exps[i] = power
        return cls(variables, {tuple(exps): 1})

    # ---- ring structure ------------------------------------------------

    def _check_compatible(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable lists differ: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = MLaurent.constant(self.vars, other)
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        out = MLaurent.__new__(MLaurent)
        out.vars = self.vars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MLaurent.__new__(MLaurent)
        out.vars = self.vars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = MLaurent.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MLaurent(self.vars)
            out = MLaurent.__new__(MLaurent)
            out.vars = self.vars
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        self._check_compatible(other)
        # sparse convolution; iterate over the shorter operand outside
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(e, 0) + ca * cb
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        out = MLaurent.__new__(MLaurent)
        out.vars = self.vars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = MLaurent.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == MLaurent.constant(self.vars, other).terms
        return isinstance(other, MLaurent) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # ---- queries --------------------------------------------------------

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def leading(self):
        """(exponent vector, coefficient) of the deg-lex greatest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_deglex_key)
        return e, self.terms[e]

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    # ---- maps -----------------------------------------------------------

    def evaluate(self, point):
        """Exact value at a point (dict var -> Fraction/int); values must be nonzero."""
        vals = []
        for v in self.vars:
            x = Fraction(point[v])
            if x == 0:
                raise ZeroDivisionError(f"variable {v} evaluated at 0")
            vals.append(x)
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for x, e in zip(vals, exps):
                term *= x ** e
            total += term
        return total

    def substitute_inverse(self, name):
        """Replace one variable by its inverse."""
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i] = -f[i]
            terms[tuple(f)] = c
        return MLaurent(self.vars, terms)

    def rename(self, variables):
        """Same exponent data over a different variable list of equal length."""
        variables = tuple(variables)
        if len(variables) != len(self.vars):
            raise ValueError("variable count mismatch")
        return MLaurent(variables, dict(self.terms))

    def divexact(self, other):
        """Exact division; raises if the quotient is not a Laurent polynomial."""
        self._check_compatible(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quot_terms = {}
        le, lc = other.leading()
        while rem.terms:
            re, rc = rem.leading()
            if rc % lc:
                raise ValueError("division is not exact")
            qe = tuple(a - b for a, b in zip(re, le))
            qc = rc // lc
            quot_terms[qe] = quot_terms.get(qe, 0) + qc
            rem = rem - MLaurent.monomial(self.vars, qe, qc) * other
        return MLaurent(self.vars, quot_terms)

    # ---- serialization ----------------------------------------------------

    def text(self):
        """Canonical text form: terms sorted deg-lex descending."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_deglex_key, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e != 0:
                    factors.append(f"{v}^{e}")
            body = "*".join([str(abs(coeff))] + factors) if factors else str(abs(coeff))
            parts.append((coeff < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"MLaurent({self.text()!r})"


class QScalar:
    """Laurent polynomial in q^(1/2) with integer coefficients.

    Exponents are stored as integers counting half-steps, so the key k
    represents q^(k/2).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def of_int(cls, c):
        return cls({0: c})

    @classmethod
    def q_power(cls, half_exponent_doubled, coeff=1):
        """coeff * q^(half_exponent_doubled / 2)"""
        return cls({half_exponent_doubled: coeff})

    def __add__(self, other):
        if isinstance(other, int):
            other = QScalar.of_int(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        out = QScalar.__new__(QScalar)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QScalar.__new__(QScalar)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = QScalar.of_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = QScalar.of_int(other)
        terms = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = ka + kb
                s = terms.get(k, 0) + ca * cb
                if s:
                    terms[k] = s
                elif k in terms:
                    del terms[k]
        out = QScalar.__new__(QScalar)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = QScalar.of_int(other)
        return isinstance(other, QScalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def at_q1(self):
        """Specialize q -> 1."""
        return sum(self.terms.values())

    def evaluate_sqrt(self, sqrt_q):
        """Exact value when q^(1/2) is the given rational."""
        x = Fraction(sqrt_q)
        return sum(Fraction(c) * x ** k for k, c in self.terms.items())

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            coeff = self.terms[k]
            a = abs(coeff)
            if k == 0:
                body = str(a)
            else:
                if k % 2 == 0:
                    power = "q" if k == 2 else f"q^{k // 2}"
                else:
                    power = f"q^({k}/2)"
                body = power if a == 1 else f"{a}*{power}"
            parts.append((coeff < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"QScalar({self.text()!r})"


QONE = QScalar.of_int(1)


class RationalGF:
    """Rational generating function num(t) / prod_i (1 - t^{k_i}).

    The numerator is a plain integer polynomial given by its coefficient
    list; the denominator is the multiset of exponents k_i >= 1.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator):
        while len(numerator) > 1 and numerator[-1] == 0:
            numerator = numerator[:-1]
        self.numerator = tuple(numerator)
        denominator = tuple(sorted(denominator))
        if any(k < 1 for k in denominator):
            raise ValueError("denominator exponents must be >= 1")
        self.denominator = denominator

    def expand(self, rmax):
        """Coefficients of t^0 .. t^rmax of the power-series expansion."""
        if rmax < 0:
            raise ValueError("rmax must be >= 0")
        coeffs = list(self.numerator[: rmax + 1])
        coeffs += [0] * (rmax + 1 - len(coeffs))
        # multiplying by 1/(1 - t^k) is a running sum with stride k
        for k in self.denominator:
            for i in range(k, rmax + 1):
                coeffs[i] += coeffs[i - k]
        return coeffs

    def text(self):
        num = " + ".join(
            f"{c}*t^{i}" if i else str(c)
            for i, c in enumerate(self.numerator)
            if c
        ) or "0"
        den = "*".join(f"(1-t^{k})" for k in self.denominator) or "1"
        return f"({num}) / ({den})"

    def __repr__(self):
        return f"RationalGF({self.text()!r})"


def gf_expand(g: RationalGF, rmax: int):
    return g.expand(rmax)


def mlaurent_mul(a: MLaurent, b: MLaurent) -> MLaurent:
    return a * b


def mlaurent_eval(f: MLaurent, point) -> Fraction:
    return f.evaluate(point)
