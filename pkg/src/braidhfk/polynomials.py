"""Exact integer Laurent polynomials in ``t^(1/2)`` and Conway polynomials in ``z``.

Half-integer exponents are stored doubled, so ``t^(k/2)`` lives at key
``k`` and all arithmetic stays in plain integers.  ``ConwayPoly`` is a
dense coefficient list in ``z``; substituting ``z -> t^(1/2) - t^(-1/2)``
turns it into a ``HalfLaurent``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where none is possible."""


class HalfLaurent:
    """Finitely supported map from doubled exponents to integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c: dict[int, int] = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    self._c[int(k)] = int(v)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls({0: 1})

    @classmethod
    def monomial(cls, doubled_exp: int, coeff: int = 1) -> "HalfLaurent":
        return cls({doubled_exp: coeff})

    @classmethod
    def half_difference(cls) -> "HalfLaurent":
        """The polynomial ``t^(1/2) - t^(-1/2)``."""
        return cls({1: 1, -1: -1})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "HalfLaurent":
        p = cls()
        for k, v in pairs:
            p._c[k] = p._c.get(k, 0) + v
        p._c = {k: v for k, v in p._c.items() if v}
        return p

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        return isinstance(other, HalfLaurent) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        out = dict(self._c)
        for k, v in other._c.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        r = HalfLaurent()
        r._c = out
        return r

    def __neg__(self) -> "HalfLaurent":
        r = HalfLaurent()
        r._c = {k: -v for k, v in self._c.items()}
        return r

    def __sub__(self, other: "HalfLaurent") -> "HalfLaurent":
        return self + (-other)

    def __mul__(self, other: "HalfLaurent") -> "HalfLaurent":
        out: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        r = HalfLaurent()
        r._c = out
        return r

    def __pow__(self, n: int) -> "HalfLaurent":
        if n < 0:
            raise ValueError("negative powers are not supported")
        acc = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def shifted(self, doubled_exp: int) -> "HalfLaurent":
        """Multiply by the monomial ``t^(doubled_exp/2)``."""
        r = HalfLaurent()
        r._c = {k + doubled_exp: v for k, v in self._c.items()}
        return r

    def exact_div(self, divisor: "HalfLaurent") -> "HalfLaurent":
        """Exact polynomial quotient; raises InexactDivisionError on remainder."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return HalfLaurent.zero()
        # anchor both at exponent 0 so ordinary division terminates
        abot, dbot = min(self._c), min(divisor._c)
        rem = {k - abot: v for k, v in self._c.items()}
        div = {k - dbot: v for k, v in divisor._c.items()}
        dtop = max(div)
        dlead = div[dtop]
        out: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < dtop:
                raise InexactDivisionError("nonzero remainder")
            q, r = divmod(rem[top], dlead)
            if r != 0:
                raise InexactDivisionError("leading coefficient does not divide")
            shift = top - dtop
            out[shift] = q
            for k, v in div.items():
                kk = k + shift
                s = rem.get(kk, 0) - q * v
                if s:
                    rem[kk] = s
                else:
                    rem.pop(kk, None)
        res = HalfLaurent()
        res._c = {k + abot - dbot: v for k, v in out.items() if v}
        return res

    # -- inspection --------------------------------------------------------

    def coefficient(self, exponent: int) -> int:
        """Coefficient of ``t^exponent`` for an integer exponent."""
        return self._c.get(2 * exponent, 0)

    def coefficient_doubled(self, doubled_exp: int) -> int:
        return self._c.get(doubled_exp, 0)

    @property
    def top_doubled(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no top exponent")
        return max(self._c)

    @property
    def bottom_doubled(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no bottom exponent")
        return min(self._c)

    def is_symmetric(self) -> bool:
        """Palindromic under ``t -> 1/t``."""
        return all(self._c.get(-k, 0) == v for k, v in self._c.items())

    def to_pairs(self) -> list[list[int]]:
        """JSON form: ``[doubledExponent, coefficient]`` pairs, descending."""
        return [[k, self._c[k]] for k in sorted(self._c, reverse=True)]

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                e = str(k // 2) if k % 2 == 0 else f"({k}/2)"
                var = "t" if e == "1" else f"t^{e}"
                body = var if mag == 1 else f"{mag} {var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"HalfLaurent({self._c!r})"


class ConwayPoly:
    """Integer polynomial in the Conway variable ``z`` (dense coefficients)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(int(x) for x in c)

    @classmethod
    def zero(cls) -> "ConwayPoly":
        return cls()

    @classmethod
    def one(cls) -> "ConwayPoly":
        return cls((1,))

    @classmethod
    def z(cls) -> "ConwayPoly":
        return cls((0, 1))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConwayPoly) and self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other: "ConwayPoly") -> "ConwayPoly":
        n = max(len(self._c), len(other._c))
        return ConwayPoly(
            (self[i] + other[i] for i in range(n))
        )

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __mul__(self, other: "ConwayPoly") -> "ConwayPoly":
        if not self._c or not other._c:
            return ConwayPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return ConwayPoly(out)

    def times_z(self) -> "ConwayPoly":
        if not self._c:
            return self
        return ConwayPoly((0,) + self._c)

    def to_half_laurent(self) -> HalfLaurent:
        """Substitute ``z -> t^(1/2) - t^(-1/2)``."""
        out = HalfLaurent.zero()
        power = HalfLaurent.one()
        h = HalfLaurent.half_difference()
        for coeff in self._c:
            if coeff:
                out = out + (power * HalfLaurent({0: coeff}))
            power = power * h
        return out

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[tuple[str, str]] = []
        for i in range(len(self._c) - 1, -1, -1):
            v = self._c[i]
            if not v:
                continue
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if i == 0:
                body = str(mag)
            else:
                var = "z" if i == 1 else f"z^{i}"
                body = var if mag == 1 else f"{mag} {var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"ConwayPoly({list(self._c)!r})"
