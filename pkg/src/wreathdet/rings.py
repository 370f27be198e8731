"""Exact scalars: rationals and sparse multivariate polynomials over them.

Scalars are either `Fraction`/`int` or `Poly`. A `Poly` stores a mapping
monomial -> rational coefficient, where a monomial is a sorted tuple of
(variable, exponent) pairs and a variable is a tuple like ("a",) or
("x", 2, 1) (symbol name plus integer indices). Zero coefficients are never
stored, so `p.terms == {}` iff p == 0. All arithmetic is exact; there is no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def variable(name, *index):
    """Poly in a single variable, e.g. variable('x', 1, 2) for x[1,2]."""
    return Poly({(((name, *index), 1),): Fraction(1)})


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def is_rational(x):
    return isinstance(x, (int, Fraction))


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for mono, coeff in terms.items():
                c = as_fraction(coeff)
                if c:
                    t[mono] = c
        self.terms = t

    # construction helpers -------------------------------------------------

    @staticmethod
    def const(c):
        c = as_fraction(c)
        return Poly({(): c} if c else {})

    @staticmethod
    def _coerce(x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        return NotImplemented

    # ring operations -------------------------------------------------------

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        p = Poly.__new__(Poly)
        p.terms = t
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly.__new__(Poly)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        p = Poly.__new__(Poly)
        p.terms = t
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly powers must be nonnegative integers")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # inspection ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def coefficient(self, mono):
        """Coefficient of a monomial given as ((var, exp), ...) sorted."""
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def as_rational(self):
        """The value if constant, else raise."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {()}:
            return self.terms[()]
        raise ValueError("polynomial is not constant")

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    # substitution ----------------------------------------------------------

    def subs(self, assignment):
        """Substitute variables; values may be rationals or Polys.

        Unassigned variables stay symbolic.
        """
        out = Poly.const(0)
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for v, e in mono:
                if v in assignment:
                    val = assignment[v]
                    factor = val ** e if isinstance(val, Poly) else as_fraction(val) ** e
                    term = term * factor
                else:
                    term = term * Poly({((v, e),): Fraction(1)})
            out = out + term
        return out

    def relabel(self, varmap):
        """Rename variables via a dict; used for permutation actions."""
        t = {}
        for mono, coeff in self.terms.items():
            m = tuple(sorted((varmap.get(v, v), e) for v, e in mono))
            t[m] = t.get(m, 0) + coeff
        return Poly(t)

    # formatting ------------------------------------------------------------

    @staticmethod
    def _var_str(v):
        name, *idx = v
        return name if not idx else f"{name}[{','.join(map(str, idx))}]"

    def __str__(self):
        if not self.terms:
            return "0"
        # canonical order: total degree descending, then lexicographic
        def key(m):
            return (-sum(e for _, e in m), m)

        pieces = []
        for mono in sorted(self.terms, key=key):
            c = self.terms[mono]
            factors = [
                self._var_str(v) if e == 1 else f"{self._var_str(v)}^{e}"
                for v, e in mono
            ]
            if not factors:
                body = str(abs(c))
            else:
                mag = abs(c)
                body = "*".join(([] if mag == 1 else [str(mag)]) + factors)
            pieces.append(("- " if c < 0 else "+ ") + body)
        head = pieces[0]
        head = ("-" if head.startswith("- ") else "") + head[2:]
        return " ".join([head] + pieces[1:])

    def __repr__(self):
        return f"Poly({self})"


ALPHA = variable("a")
