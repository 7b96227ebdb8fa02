"""Exact polynomial arithmetic.

``Poly`` is a univariate polynomial with rational coefficients, used for
every closed form this package produces (outage, bounds, capacity).
``Poly2`` is its bivariate sibling in the variables ``p`` and ``rho``,
needed only by the correlated-channel model.  All construction arithmetic
is exact; floating point enters only when a polynomial is *evaluated* at
a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Coeff = int | Fraction

__all__ = ["Poly", "Poly2"]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


def _format_term(coeff: Fraction, power_text: str, first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = -coeff if coeff < 0 else coeff
    if power_text == "":
        body = str(mag)
    elif mag == 1:
        body = power_text
    elif mag.denominator == 1:
        body = f"{mag.numerator}{power_text}"
    else:
        body = f"({mag}){power_text}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


class Poly:
    """Univariate polynomial, coefficient of x^i at position i.

    Canonical form: trailing zero coefficients stripped; the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: Coeff = 1) -> "Poly":
        return cls((0,) * power + (coeff,))

    @classmethod
    def one_minus_x(cls) -> "Poly":
        return cls((1, -1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @staticmethod
    def _coerce(value):
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly((value,))
        return NotImplemented

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for Fraction x, float for float x."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def format(self, var: str = "p") -> str:
        """Canonical text: ascending powers, explicit signs, e.g. 'p + p^2 - p^3'."""
        if not self.coeffs:
            return "0"
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                ptext = ""
            elif power == 1:
                ptext = var
            else:
                ptext = f"{var}^{power}"
            parts.append(_format_term(c, ptext, first=not parts))
        return "".join(parts)

    def coeff_strings(self) -> list[str]:
        """Machine form: coefficients as exact decimal/rational strings."""
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.format()!r})"


class Poly2:
    """Bivariate polynomial in (p, rho), exact coefficients.

    Stored as a mapping (p_power, rho_power) -> coefficient with zero
    terms removed.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Coeff] = ()):
        clean: dict[tuple[int, int], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (dp, dr), c in items:
            c = _as_fraction(c)
            if c == 0:
                continue
            key = (int(dp), int(dr))
            acc = clean.get(key, Fraction(0)) + c
            if acc == 0:
                clean.pop(key, None)
            else:
                clean[key] = acc
        object.__setattr__(self, "terms", dict(clean))

    def __setattr__(self, name, value):
        raise AttributeError("Poly2 is immutable")

    @classmethod
    def zero(cls) -> "Poly2":
        return cls({})

    @classmethod
    def one(cls) -> "Poly2":
        return cls({(0, 0): 1})

    @classmethod
    def p(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def rho(cls) -> "Poly2":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value: Coeff) -> "Poly2":
        return cls({(0, 0): value})

    @classmethod
    def from_univariate(cls, poly: Poly) -> "Poly2":
        return cls({(i, 0): c for i, c in enumerate(poly.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly2):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "Poly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key, Fraction(0)) + c
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Poly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (ap, ar), ca in self.terms.items():
            for (bp, br), cb in other.terms.items():
                key = (ap + bp, ar + br)
                acc = out.get(key, Fraction(0)) + ca * cb
                if acc == 0:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly2":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Poly2.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @staticmethod
    def _coerce(value):
        if isinstance(value, Poly2):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly2({(0, 0): value})
        return NotImplemented

    def __call__(self, p, rho):
        total = 0 * p
        for (dp, dr), c in self.terms.items():
            total = total + c * p**dp * rho**dr
        return total

    def substitute_rho(self, rho: Coeff) -> Poly:
        """Fix rho to an exact value, returning a univariate polynomial in p."""
        rho = _as_fraction(rho)
        max_p = max((dp for dp, _ in self.terms), default=-1)
        coeffs = [Fraction(0)] * (max_p + 1)
        for (dp, dr), c in self.terms.items():
            coeffs[dp] += c * rho**dr
        return Poly(coeffs)

    def format(self, var_p: str = "p", var_rho: str = "rho") -> str:
        if not self.terms:
            return "0"
        parts = []
        for (dp, dr) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[0], k[1])):
            c = self.terms[(dp, dr)]
            factors = []
            if dp == 1:
                factors.append(var_p)
            elif dp > 1:
                factors.append(f"{var_p}^{dp}")
            if dr == 1:
                factors.append(var_rho)
            elif dr > 1:
                factors.append(f"{var_rho}^{dr}")
            parts.append(_format_term(c, "*".join(factors), first=not parts))
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly2({self.format()!r})"
