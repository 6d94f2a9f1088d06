"""Cyclic codes of odd length n over Z4 + u*Z4, u^2 = 1.

A code is the ideal of R[x]/(x^n - 1) generated by g1(x) + (1+u)g2(x) and,
when g3 is present, (1+u)g3(x), with g1 and g3 monic over Z4 and
g3 | g1 | x^n - 1 mod 2.  Enumeration closes the cyclic shifts of the
generators under addition and all 16 scalar multiples, so it computes the
full ideal with no structural assumptions.

Codewords are length-n tuples of ring elements.  Internally a word is packed
into an integer, one byte per coordinate (high nibble a, low nibble b,
coordinate 0 in the most significant byte) so that vector addition is a
single masked integer addition and sorting packed words is the
lexicographic order on (a, b) pairs.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .polynomials import PolyR, PolyZ4
from .ring import ALL_ELEMENTS, ONE_PLUS_U, RingElement

Codeword = tuple[RingElement, ...]

#: Default bound on code size during enumeration.
DEFAULT_ENUMERATION_CAP = 1 << 20


class SpecError(ValueError):
    """A code spec violates a structural requirement."""


class EnumerationCapExceeded(RuntimeError):
    """Closure grew past the configured word cap."""


# Byte-level tables for packed words.  Valid coordinate bytes are
# (a << 4) | b with a, b in 0..3; addition needs the 0b0011 mask per nibble.
_ADD_NIBBLE_MASK = 0x33

_SCALAR_TABLES: dict[tuple[int, int], bytes] = {}
for _s in ALL_ELEMENTS:
    _table = bytearray(256)
    for _e in ALL_ELEMENTS:
        _p = _s * _e
        _table[(_e.a << 4) | _e.b] = (_p.a << 4) | _p.b
    _SCALAR_TABLES[(_s.a, _s.b)] = bytes(_table)

#: Coordinate bytes of the multiples of 1+u (equal nibbles).
_ONE_PLUS_U_BYTES = frozenset((t << 4) | t for t in range(4))


def encode_word(word: Codeword) -> int:
    acc = 0
    for e in word:
        acc = (acc << 8) | (e.a << 4) | e.b
    return acc


def decode_word(packed: int, n: int) -> Codeword:
    raw = packed.to_bytes(n, "big")
    return tuple(RingElement(byte >> 4, byte & 0x0F) for byte in raw)


def _poly_to_packed(p: PolyR, n: int) -> int:
    reduced = p.mod_xn_minus_1(n)
    coeffs = list(reduced.coeffs) + [RingElement(0)] * (n - len(reduced.coeffs))
    return encode_word(tuple(coeffs))


def _rotate(packed: int, n: int) -> int:
    """x * c(x): coordinate i moves to i+1 (mod n)."""
    return (packed >> 8) | ((packed & 0xFF) << (8 * (n - 1)))


def _scalar_mul_packed(scalar: RingElement, packed: int, n: int) -> int:
    table = _SCALAR_TABLES[(scalar.a, scalar.b)]
    return int.from_bytes(packed.to_bytes(n, "big").translate(table), "big")


def _word_weight(packed: int, n: int) -> int:
    return sum(1 for byte in packed.to_bytes(n, "big") if byte)


@dataclass(frozen=True)
class CodeSpec:
    """Generator data (n, g1, g2, optional g3) for a cyclic code.

    Absent g3 is the single-generator form; its checkers treat g3 as g1.
    """

    n: int
    g1: PolyZ4
    g2: PolyR = field(default_factory=PolyR)
    g3: "PolyZ4 | None" = None
    strict_z4_divisibility: bool = False

    @property
    def is_single_generator(self) -> bool:
        return self.g3 is None

    def validate(self) -> list[str]:
        """All violated structural conditions, one message each."""
        problems: list[str] = []
        if self.n < 1 or self.n % 2 == 0:
            problems.append(f"n must be odd and positive, got {self.n}")
            return problems
        if not self.g1.is_monic:
            problems.append(f"g1 must be monic, got {self.g1}")
        if self.g3 is not None and not self.g3.is_monic:
            problems.append(f"g3 must be monic, got {self.g3}")
        xn1 = PolyZ4.xn_minus_1(self.n)
        if self.g1.is_monic:
            if not self.g1.divides_mod2(xn1):
                problems.append(f"g1 = {self.g1} does not divide x^{self.n} - 1 mod 2")
            if self.strict_z4_divisibility and not self.g1.divides(xn1):
                problems.append(f"g1 = {self.g1} does not divide x^{self.n} - 1 over Z4")
        if self.g3 is not None and self.g3.is_monic:
            if not self.g3.divides_mod2(self.g1):
                problems.append(f"g3 = {self.g3} does not divide g1 = {self.g1} mod 2")
            if self.strict_z4_divisibility and not self.g3.divides(self.g1):
                problems.append(f"g3 = {self.g3} does not divide g1 = {self.g1} over Z4")
        return problems

    def require_valid(self) -> None:
        problems = self.validate()
        if problems:
            raise SpecError("; ".join(problems))

    def generator_polys(self) -> list[PolyR]:
        gens = [self.g1.to_ring_poly() + self.g2 * ONE_PLUS_U]
        if self.g3 is not None:
            gens.append(self.g3.to_ring_poly() * ONE_PLUS_U)
        return gens

    def sort_key(self):
        g2_key = tuple(c.pair for c in self.g2.coeffs)
        g3_key = self.g3.coeffs if self.g3 is not None else None
        return (
            self.n,
            len(self.g1.coeffs),
            self.g1.coeffs,
            0 if g3_key is None else 1,
            g3_key or (),
            len(g2_key),
            g2_key,
        )

    def describe(self) -> dict:
        return {
            "n": self.n,
            "g1": str(self.g1),
            "g2": str(self.g2),
            "g3": None if self.g3 is None else str(self.g3),
            "strict_z4_divisibility": self.strict_z4_divisibility,
        }


class Code:
    """An enumerated code: a set of length-n words closed under the module
    operations (closure is verified by construction for enumerated specs and
    can be re-checked independently via the is_*_closed methods)."""

    def __init__(self, n: int, packed_words, spec: "CodeSpec | None" = None) -> None:
        self.n = n
        self.packed = tuple(sorted(set(packed_words)))
        self.spec = spec
        self._packed_set = frozenset(self.packed)

    @classmethod
    def from_spec(cls, spec: CodeSpec, cap: int = DEFAULT_ENUMERATION_CAP) -> "Code":
        spec.require_valid()
        n = spec.n
        seeds: set[int] = set()
        for gen in spec.generator_polys():
            packed = _poly_to_packed(gen, n)
            for _ in range(n):
                for scalar in ALL_ELEMENTS:
                    seeds.add(_scalar_mul_packed(scalar, packed, n))
                packed = _rotate(packed, n)
        seeds.discard(0)
        mask = int.from_bytes(bytes([_ADD_NIBBLE_MASK]) * n, "big")
        words = {0}
        frontier = [0]
        seed_list = sorted(seeds)
        while frontier:
            w = frontier.pop()
            for s in seed_list:
                v = (w + s) & mask
                if v not in words:
                    if len(words) >= cap:
                        raise EnumerationCapExceeded(
                            f"code exceeds the {cap}-word enumeration cap"
                        )
                    words.add(v)
                    frontier.append(v)
        return cls(n, words, spec=spec)

    # -- basic views ----------------------------------------------------------

    @property
    def cardinality(self) -> int:
        return len(self.packed)

    @functools.cached_property
    def codewords(self) -> tuple[Codeword, ...]:
        """All codewords, sorted lexicographically by (a, b) pairs."""
        return tuple(decode_word(w, self.n) for w in self.packed)

    def __contains__(self, word) -> bool:
        if isinstance(word, int):
            return word in self._packed_set
        return encode_word(tuple(word)) in self._packed_set

    def __iter__(self):
        return iter(self.codewords)

    def __len__(self) -> int:
        return len(self.packed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and self.packed == other.packed

    def __hash__(self) -> int:
        return hash((self.n, self.packed))

    def __repr__(self) -> str:
        return f"<Code n={self.n} words={self.cardinality}>"

    # -- metrics ---------------------------------------------------------------

    @functools.cached_property
    def weight_enumerator(self) -> tuple[int, ...]:
        """Counts A_i of codewords of Hamming weight i, i = 0..n."""
        counts = [0] * (self.n + 1)
        for w in self.packed:
            counts[_word_weight(w, self.n)] += 1
        return tuple(counts)

    @functools.cached_property
    def min_hamming_distance(self) -> "int | None":
        """Minimum nonzero weight; None for the zero code (undefined).

        Equals the minimum pairwise distance because the word set is closed
        under subtraction.
        """
        nonzero = [i for i in range(1, self.n + 1) if self.weight_enumerator[i]]
        return min(nonzero) if nonzero else None

    def subcode_one_plus_u(self) -> "Code":
        """The subcode of words that are multiples of 1+u, i.e. words whose
        every coordinate lies in the ideal generated by 1+u."""
        kept = [
            w
            for w in self.packed
            if all(byte in _ONE_PLUS_U_BYTES for byte in w.to_bytes(self.n, "big"))
        ]
        return Code(self.n, kept, spec=None)

    # -- independent closure checks ---------------------------------------------

    def is_shift_closed(self) -> bool:
        return all(_rotate(w, self.n) in self._packed_set for w in self.packed)

    def is_scalar_closed(self) -> bool:
        return all(
            _scalar_mul_packed(s, w, self.n) in self._packed_set
            for s in ALL_ELEMENTS
            for w in self.packed
        )

    def is_addition_closed(self) -> bool:
        """True iff the word set equals the additive group it generates."""
        if 0 not in self._packed_set:
            return False
        mask = int.from_bytes(bytes([_ADD_NIBBLE_MASK]) * self.n, "big")
        group = {0}
        for w in self.packed:
            if w in group:
                continue
            extension = [w]
            while extension:
                v = extension.pop()
                if v in group:
                    continue
                group.add(v)
                if len(group) > len(self.packed):
                    return False
                for h in list(group):
                    t = (h + v) & mask
                    if t not in group:
                        extension.append(t)
        return group == set(self._packed_set)

    def describe(self) -> dict:
        return {
            "cardinality": self.cardinality,
            "min_hamming_distance": self.min_hamming_distance,
            "weight_enumerator": list(self.weight_enumerator),
        }


def constant_word(element: RingElement, n: int) -> Codeword:
    return tuple([element] * n)
