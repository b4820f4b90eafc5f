"""Exact integer polynomials in q, bivariate (q, t) polynomials, and the
q-integers, q-factorials, and Gaussian binomial coefficients.

Coefficients are Python ints, so overflow cannot happen.  The only
division anywhere is exact polynomial division, which fails loudly when
the quotient would leave the integer ring.
"""

from __future__ import annotations

from typing import Iterable


class InexactDivisionError(ArithmeticError):
    """A polynomial quotient would not be exact over the integers."""


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly((x,))
    return NotImplemented


class QPoly:
    """Integer-coefficient polynomial in q, stored densely by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def term(cls, degree: int, coeff: int = 1) -> "QPoly":
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, d: int) -> "QPoly":
        """Multiply by q**d."""
        if d < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return QPoly((0,) * d + self.coeffs)

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def at_one(self) -> int:
        return sum(self.coeffs)

    def exact_div(self, den) -> "QPoly":
        """Quotient self / den; raises InexactDivisionError unless the
        division is exact over the integers."""
        den = _coerce(den)
        if den is NotImplemented:
            raise TypeError("can only divide by QPoly or int")
        if not den:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        out = [0] * max(len(rem) - len(den.coeffs) + 1, 0)
        lead = den.coeffs[-1]
        while len(rem) >= len(den.coeffs):
            c, r = divmod(rem[-1], lead)
            if r:
                raise InexactDivisionError(f"({self}) is not divisible by ({den})")
            pos = len(rem) - len(den.coeffs)
            out[pos] = c
            for i, b in enumerate(den.coeffs):
                rem[pos + i] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        if rem:
            raise InexactDivisionError(f"({self}) is not divisible by ({den})")
        return QPoly(out)

    def pairs(self) -> list[list[int]]:
        """Nonzero [degree, coefficient] pairs by ascending degree."""
        return [[d, c] for d, c in enumerate(self.coeffs) if c]

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)


def q_int(k: int) -> QPoly:
    """[k] = 1 + q + ... + q^(k-1); [0] is the zero polynomial."""
    if k < 0:
        raise ValueError("q-integer of a negative integer")
    return QPoly((1,) * k)


def q_fact(k: int) -> QPoly:
    """[k]! = [1][2]...[k]."""
    out = QPoly((1,))
    for i in range(1, k + 1):
        out = out * q_int(i)
    return out


def q_binom(a: int, b: int) -> QPoly:
    """Gaussian binomial, via exact division of q-factorials."""
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    return q_fact(a).exact_div(q_fact(b) * q_fact(a - b))


class QTPoly:
    """Integer polynomial in q and t, stored sparsely by (q-deg, t-deg)."""

    __slots__ = ("coeffs",)

    def __init__(self, terms=None) -> None:
        data: dict[tuple[int, int], int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for (qd, td), c in items:
                if qd < 0 or td < 0:
                    raise ValueError("degrees must be nonnegative")
                new = data.get((qd, td), 0) + int(c)
                if new:
                    data[(qd, td)] = new
                else:
                    data.pop((qd, td), None)
        self.coeffs = data

    @classmethod
    def term(cls, qdeg: int, tdeg: int, coeff: int = 1) -> "QTPoly":
        return cls({(qdeg, tdeg): coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce_qt(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            new = out.get(k, 0) + c
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        res = QTPoly()
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "QTPoly":
        res = QTPoly()
        res.coeffs = {k: -c for k, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        other = _coerce_qt(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_qt(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_qt(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (qa, ta), ca in self.coeffs.items():
            for (qb, tb), cb in other.coeffs.items():
                k = (qa + qb, ta + tb)
                new = out.get(k, 0) + ca * cb
                if new:
                    out[k] = new
                else:
                    out.pop(k, None)
        res = QTPoly()
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def at_t1(self) -> QPoly:
        """Specialize t = 1, leaving a polynomial in q."""
        top = max((qd for qd, _ in self.coeffs), default=-1)
        out = [0] * (top + 1)
        for (qd, _), c in self.coeffs.items():
            out[qd] += c
        return QPoly(out)

    def at_q1(self) -> QPoly:
        """Specialize q = 1, leaving a polynomial in t."""
        top = max((td for _, td in self.coeffs), default=-1)
        out = [0] * (top + 1)
        for (_, td), c in self.coeffs.items():
            out[td] += c
        return QPoly(out)

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def triples(self) -> list[list[int]]:
        """Nonzero [q-degree, t-degree, coefficient] triples, sorted."""
        return [[qd, td, self.coeffs[(qd, td)]] for qd, td in sorted(self.coeffs)]

    def __eq__(self, other) -> bool:
        other = _coerce_qt(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"QTPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for (qd, td) in sorted(self.coeffs):
            c = self.coeffs[(qd, td)]
            atoms = []
            if qd:
                atoms.append("q" if qd == 1 else f"q^{qd}")
            if td:
                atoms.append("t" if td == 1 else f"t^{td}")
            body = " ".join(atoms) if atoms else str(abs(c))
            if atoms and abs(c) != 1:
                body = f"{abs(c)} {body}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)


def _coerce_qt(x):
    if isinstance(x, QTPoly):
        return x
    if isinstance(x, int):
        return QTPoly({(0, 0): x})
    if isinstance(x, QPoly):
        return QTPoly({(d, 0): c for d, c in enumerate(x.coeffs)})
    return NotImplemented
