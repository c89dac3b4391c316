"""The real Clifford algebra R_{0,m} with generators squaring to -1.

Basis blades are bitmasks: bit ``i`` set means ``e_{i+1}`` is a factor, factors
in increasing order.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Tuple

from .qfield import ONE, ZERO, QRational, as_qrational

MAX_DIM = 12


def popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=None)
def blade_sign(a: int, b: int) -> int:
    """Sign of ``e_a * e_b`` relative to the blade ``a ^ b``."""
    s = 0
    x = a >> 1
    while x:
        s += popcount(x & b)
        x >>= 1
    # every shared generator squares to -1
    s += popcount(a & b)
    return -1 if s & 1 else 1


def blade_grade(mask: int) -> int:
    return popcount(mask)


def bar_sign(mask: int) -> int:
    """Sign picked up by a blade under the main anti-involution."""
    k = popcount(mask)
    return -1 if (k * (k + 1) // 2) & 1 else 1


def blade_str(mask: int) -> str:
    if mask == 0:
        return "1"
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(f"e{i + 1}")
        mask >>= 1
        i += 1
    return "".join(out)


def parse_blade(text: str) -> int:
    text = text.strip()
    if text == "1":
        return 0
    mask = 0
    parts = text.split("e")
    if parts[0] != "":
        raise ValueError(f"bad blade {text!r}")
    last = 0
    for p in parts[1:]:
        i = int(p)
        if i <= last:
            raise ValueError(f"blade {text!r} is not in increasing order")
        mask |= 1 << (i - 1)
        last = i
    return mask


def gen(i: int) -> int:
    """Mask of the generator ``e_i`` (1-based)."""
    return 1 << (i - 1)


class CliffordElement:
    """A multivector with coefficients in Q(q)."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Dict[int, QRational] | None = None):
        if not 0 <= m <= MAX_DIM:
            raise ValueError(f"dimension m={m} outside 0..{MAX_DIM}")
        self.m = m
        self.terms: Dict[int, QRational] = {}
        full = (1 << m) - 1
        for mask, c in (terms or {}).items():
            if mask & ~full:
                raise ValueError(f"blade {blade_str(mask)} does not exist for m={m}")
            c = as_qrational(c)
            if c:
                self.terms[mask] = c

    @classmethod
    def scalar(cls, m: int, c=1) -> "CliffordElement":
        return cls(m, {0: c})

    @classmethod
    def blade(cls, m: int, mask: int, c=1) -> "CliffordElement":
        return cls(m, {mask: c})

    @classmethod
    def e(cls, m: int, i: int) -> "CliffordElement":
        return cls(m, {gen(i): ONE})

    def _check(self, other: "CliffordElement") -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: m={self.m} vs m={other.m}")

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.m, other)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return CliffordElement(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return geometric_product(self, other)
        c = as_qrational(other)
        return CliffordElement(self.m, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = as_qrational(other)
        return CliffordElement(self.m, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordElement):
            if isinstance(other, (int, QRational)):
                other = CliffordElement.scalar(self.m, other)
            else:
                return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def grade(self, k: int) -> "CliffordElement":
        return CliffordElement(self.m, {b: c for b, c in self.terms.items() if popcount(b) == k})

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms, key=lambda b: (popcount(b), b)):
            parts.append(f"({self.terms[mask]})*{blade_str(mask)}")
        return " + ".join(parts)

    __repr__ = __str__


def geometric_product(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    a._check(b)
    out: Dict[int, QRational] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            if blade_sign(ma, mb) < 0:
                c = -c
            k = ma ^ mb
            out[k] = out.get(k, ZERO) + c
    return CliffordElement(a.m, out)


def bar(a: CliffordElement) -> CliffordElement:
    return CliffordElement(a.m, {k: (v if bar_sign(k) > 0 else -v) for k, v in a.terms.items()})


def scalar_part(a: CliffordElement) -> QRational:
    return a.terms.get(0, ZERO)


def blades(m: int) -> Iterable[int]:
    return range(1 << m)


def anticommutator(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b + b * a


__all__: Tuple[str, ...] = (
    "CliffordElement",
    "geometric_product",
    "bar",
    "scalar_part",
    "blade_sign",
    "bar_sign",
    "blade_str",
    "parse_blade",
    "blade_grade",
    "gen",
    "blades",
    "anticommutator",
    "popcount",
    "MAX_DIM",
)
