"""Univariate polynomials with coefficients in Q(q)."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence

from .qfield import ONE, ZERO, QRational, as_qrational, qnum


class QPoly1D:
    """``sum coeffs[n] * t**n`` with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_qrational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: List[QRational] = cs

    @classmethod
    def monomial(cls, n: int, c=1) -> "QPoly1D":
        return cls([ZERO] * n + [as_qrational(c)])

    @classmethod
    def const(cls, c) -> "QPoly1D":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> QRational:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _lift(self, other) -> "QPoly1D":
        return other if isinstance(other, QPoly1D) else QPoly1D([other])

    def __add__(self, other) -> "QPoly1D":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly1D([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "QPoly1D":
        return QPoly1D([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPoly1D":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "QPoly1D":
        return self._lift(other) - self

    def __mul__(self, other) -> "QPoly1D":
        if not isinstance(other, QPoly1D):
            c = as_qrational(other)
            return QPoly1D([a * c for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return QPoly1D()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return QPoly1D(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QPoly1D":
        return self * as_qrational(other).inverse()

    def __pow__(self, n: int) -> "QPoly1D":
        out = QPoly1D([ONE])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly1D):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    # transformations
    def scale_argument(self, c) -> "QPoly1D":
        """``f(c t)``."""
        c = as_qrational(c)
        out, p = [], ONE
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return QPoly1D(out)

    def shift(self, n: int) -> "QPoly1D":
        """Multiply by ``t**n``; negative ``n`` divides and requires exactness."""
        if n >= 0:
            return QPoly1D([ZERO] * n + self.coeffs)
        if any(self.coeffs[:-n]):
            raise ArithmeticError(f"polynomial is not divisible by t^{-n}")
        return QPoly1D(self.coeffs[-n:])

    def jackson_derivative(self, power: int = 1) -> "QPoly1D":
        """``(f(p t) - f(t)) / ((p - 1) t)`` with ``p = q**power``."""
        return QPoly1D([qnum(n, power) * self.coeffs[n] for n in range(1, len(self.coeffs))])

    def derivative(self) -> "QPoly1D":
        return QPoly1D([self.coeffs[n] * n for n in range(1, len(self.coeffs))])

    def map_coeffs(self, fn) -> "QPoly1D":
        return QPoly1D([fn(c) for c in self.coeffs])

    def truncate(self, order: int) -> "QPoly1D":
        """Drop every power above ``order``."""
        return QPoly1D(self.coeffs[: order + 1])

    def inflate(self, k: int) -> "QPoly1D":
        """``f(t**k)``."""
        out = [ZERO] * (k * max(len(self.coeffs) - 1, 0) + 1)
        for n, c in enumerate(self.coeffs):
            out[k * n] = c
        return QPoly1D(out if self.coeffs else [])

    def deflate(self, k: int) -> "QPoly1D":
        """Inverse of :meth:`inflate`; every exponent must be a multiple of ``k``."""
        if any(c for n, c in enumerate(self.coeffs) if n % k):
            raise ValueError(f"polynomial is not a polynomial in t^{k}")
        return QPoly1D(self.coeffs[::k])

    def __call__(self, x) -> QRational:
        x = as_qrational(x)
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def at_q(self, q0) -> List[Fraction]:
        return [c.subs(q0) for c in self.coeffs]

    def evaluate(self, q0: float, t0: float) -> float:
        out = 0.0
        for c in reversed(self.coeffs):
            out = out * t0 + float(c.subs(Fraction(q0)))
        return out

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[n]
            if not c:
                continue
            s = str(c)
            if " " in s or "/" in s:
                s = f"({s})"
            mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
            parts.append(s if not mono else f"{s}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def t_poly() -> QPoly1D:
    return QPoly1D([ZERO, ONE])


__all__ = ["QPoly1D", "t_poly"]
