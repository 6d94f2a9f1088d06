"""Exact arithmetic in the 16-element commutative ring Z4 + u*Z4 with u^2 = 1.

An element is written a + u*b with a, b in Z4 = {0, 1, 2, 3}.  Multiplication
follows from u^2 = 1:

    (a + u*b)(c + u*d) = (a*c + b*d) + u*(a*d + b*c)      (mod 4)

The ring carries a Watson-Crick complement x -> (1+u) - x and a fixed
correspondence between elements and DNA 2-letter codons built from the digit
map 0 <-> A, 1 <-> T, 2 <-> G, 3 <-> C applied to the pair (a, b).
"""

from __future__ import annotations

import re

# Digit <-> nucleotide bijection.  NUCLEOTIDES[d] is the letter for digit d.
NUCLEOTIDES = "ATGC"
DIGIT_OF_NUCLEOTIDE = {c: d for d, c in enumerate(NUCLEOTIDES)}

# Watson-Crick complement on letters: A <-> T, G <-> C.
NUCLEOTIDE_COMPLEMENT = {"A": "T", "T": "A", "G": "C", "C": "G"}

_ELEMENT_RE = re.compile(r"^(?:(\d+)(?:\+(\d*)u)?|(\d*)u)$")
_PAIR_RE = re.compile(r"^\((\d+),(\d+)\)$")


class RingElement:
    """An immutable element a + u*b of Z4 + u*Z4, u^2 = 1."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0) -> None:
        object.__setattr__(self, "a", a % 4)
        object.__setattr__(self, "b", b % 4)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RingElement is immutable")

    # -- parsing and rendering ------------------------------------------------

    @classmethod
    def from_string(cls, text: str) -> "RingElement":
        """Parse "a+bu" with zero terms elided ("0", "u", "2+3u") or "(a,b)"."""
        s = text.replace(" ", "")
        m = _PAIR_RE.match(s)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        m = _ELEMENT_RE.match(s)
        if m is None:
            raise ValueError(f"cannot parse ring element: {text!r}")
        a_part, b_part, bare_u = m.groups()
        if bare_u is not None:
            return cls(0, int(bare_u) if bare_u else 1)
        a = int(a_part)
        if b_part is None:
            return cls(a, 0)
        return cls(a, int(b_part) if b_part else 1)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        u_term = "u" if self.b == 1 else f"{self.b}u"
        if self.a == 0:
            return u_term
        return f"{self.a}+{u_term}"

    def __repr__(self) -> str:
        return f"RingElement({self.a}, {self.b})"

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(value: "RingElement | int") -> "RingElement":
        if isinstance(value, RingElement):
            return value
        if isinstance(value, int):
            return RingElement(value, 0)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "RingElement | int") -> "RingElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(-self.a, -self.b)

    def __sub__(self, other: "RingElement | int") -> "RingElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: "RingElement | int") -> "RingElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: "RingElement | int") -> "RingElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            raise ValueError("negative powers are not defined in this ring")
        result = RingElement(1, 0)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RingElement(other, 0)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- structure ------------------------------------------------------------

    @property
    def is_unit(self) -> bool:
        # Exactly one of a, b odd.  Both odd gives a zero divisor, e.g.
        # (1+u)(3+u) = 0, so inclusive-or would be wrong.
        return (self.a + self.b) % 2 == 1

    def inverse(self) -> "RingElement":
        if not self.is_unit:
            raise ZeroDivisionError(f"{self} is not a unit")
        for y in ALL_ELEMENTS:
            if self * y == ONE:
                return y
        raise AssertionError("unreachable: unit without inverse")

    def complement(self) -> "RingElement":
        """Watson-Crick complement: x + complement(x) = 1 + u."""
        return RingElement(1 - self.a, 1 - self.b)

    # -- DNA correspondence ---------------------------------------------------

    def theta(self) -> str:
        """The 2-letter codon for this element (fixed 16-entry table)."""
        return THETA_TABLE[(self.a, self.b)]

    @classmethod
    def from_codon(cls, codon: str) -> "RingElement":
        try:
            return cls(*ELEMENT_OF_CODON[codon])
        except KeyError:
            raise ValueError(f"not a codon: {codon!r}") from None


ZERO = RingElement(0, 0)
ONE = RingElement(1, 0)
U = RingElement(0, 1)
ONE_PLUS_U = RingElement(1, 1)

#: All 16 elements in lexicographic (a, b) order.
ALL_ELEMENTS = tuple(RingElement(a, b) for a in range(4) for b in range(4))

#: The 8 units (exactly one component odd).
UNITS = tuple(x for x in ALL_ELEMENTS if x.is_unit)

#: The ideal generated by 1+u, computed by closure over all multiples.
IDEAL_ONE_PLUS_U = frozenset(x * ONE_PLUS_U for x in ALL_ELEMENTS)

# Fixed element <-> codon correspondence.  Keys are (a, b) of a + u*b; the
# codon is the digit map applied to a then b.  Kept as an explicit constant
# (it is normative data); a test asserts it agrees with the digit map.
THETA_TABLE: dict[tuple[int, int], str] = {
    (0, 0): "AA",
    (0, 1): "AT",
    (0, 2): "AG",
    (0, 3): "AC",
    (1, 0): "TA",
    (1, 1): "TT",
    (1, 2): "TG",
    (1, 3): "TC",
    (2, 0): "GA",
    (2, 1): "GT",
    (2, 2): "GG",
    (2, 3): "GC",
    (3, 0): "CA",
    (3, 1): "CT",
    (3, 2): "CG",
    (3, 3): "CC",
}

ELEMENT_OF_CODON = {codon: ab for ab, codon in THETA_TABLE.items()}
