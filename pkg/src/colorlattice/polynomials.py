"""Exact polynomial arithmetic: one-variable q-series and multivariate Laurent sums.

Everything is integer-coefficient and exact.  `QPolynomial` backs rank
generating functions and Gaussian binomials; `LaurentPoly` backs weight
generating functions, whose exponents are integer vectors that may go
negative.
"""

from __future__ import annotations

__all__ = [
    "InexactDivisionError",
    "QPolynomial",
    "qbinomial",
    "LaurentPoly",
]


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where none was expected."""


class QPolynomial:
    """A polynomial in q with integer coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        if any(not isinstance(c, int) or isinstance(c, bool) for c in cs):
            raise TypeError("coefficients must be integers")
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def q_power(cls, k: int):
        if k < 0:
            raise ValueError("q-powers here are nonnegative")
        return cls((0,) * k + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        return self + (-other)

    def __rsub__(self, other):
        return QPolynomial((other,)) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self and other else []
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Divide, insisting on a zero remainder over the integers."""
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return QPolynomial()
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(other.coeffs) - 1
        quot = [0] * (len(rem) - dq)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + dq]
            if c % lead:
                raise InexactDivisionError(f"{self} is not divisible by {other}")
            quot[k] = c // lead
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= quot[k] * b
        if any(rem):
            raise InexactDivisionError(f"{self} is not divisible by {other}")
        return QPolynomial(quot)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def is_unimodal(self) -> bool:
        cs = self.coeffs
        i = 1
        while i < len(cs) and cs[i - 1] <= cs[i]:
            i += 1
        while i < len(cs) and cs[i - 1] >= cs[i]:
            i += 1
        return i >= len(cs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                head = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                head = f"{mag}q" + (f"^{k}" if k > 1 else "")
            if not parts:
                parts.append(head if c > 0 else f"-{head}")
            else:
                parts.append(("+ " if c > 0 else "- ") + head)
        return " ".join(parts)

    def __repr__(self):
        return f"QPolynomial({self.coeffs})"


def qbinomial(m: int, k: int) -> QPolynomial:
    """The Gaussian binomial [m choose k]_q as an honest polynomial."""
    if k < 0 or k > m:
        return QPolynomial()
    result = QPolynomial.one()
    for i in range(1, k + 1):
        result = result * (1 - QPolynomial.q_power(m - k + i))
        result = result.exact_div(1 - QPolynomial.q_power(i))
    return result


class LaurentPoly:
    """An integer combination of monomials z^a, a an integer vector.

    Exponent vectors are tuples, all of one length; the zero sum has no
    terms and any length.  Addition merges, multiplication convolves.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        for exps, coeff in (terms.items() if isinstance(terms, dict) else terms):
            exps = tuple(exps)
            if any(not isinstance(e, int) or isinstance(e, bool) for e in exps):
                raise TypeError(f"exponents must be integers: {exps}")
            data[exps] = data.get(exps, 0) + coeff
        data = {e: c for e, c in data.items() if c != 0}
        widths = {len(e) for e in data}
        if len(widths) > 1:
            raise ValueError(f"mixed exponent lengths: {sorted(widths)}")
        self.terms = dict(sorted(data.items()))

    @classmethod
    def monomial(cls, exps, coeff: int = 1):
        return cls([(tuple(exps), coeff)])

    @classmethod
    def zero(cls):
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, 0) + c
        return LaurentPoly(merged)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: other * c for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if len(e1) != len(e2):
                    raise ValueError("mixed exponent lengths in product")
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def map_exponents(self, fn, sign: int = 1) -> "LaurentPoly":
        """Push every monomial z^a to sign * z^(fn(a)), merging collisions."""
        return LaurentPoly([(tuple(fn(e)), sign * c) for e, c in self.terms.items()])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            body = "" if all(x == 0 for x in e) else f"z^({','.join(map(str, e))})"
            mag = abs(c)
            if body:
                head = body if mag == 1 else f"{mag}*{body}"
            else:
                head = str(mag)
            if not parts:
                parts.append(head if c > 0 else f"-{head}")
            else:
                parts.append(("+ " if c > 0 else "- ") + head)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.terms})"
