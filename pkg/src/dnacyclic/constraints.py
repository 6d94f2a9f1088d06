"""Reversibility and reverse-complement analysis of enumerated codes.

Two independent sources of truth are kept side by side: brute-force verdicts
computed directly on the enumerated word set, and polynomial condition checks
on the generators.  Every checker returns both plus an agreement flag, so a
divergence between the generator conditions and the enumerated reality is
recorded rather than hidden.

DNA images: theta maps each coordinate to its 2-letter codon and
concatenates (length 2n); phi writes all a-digits then all b-digits as
letters (length 2n).  Published example tables match theta.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .codes import Code, CodeSpec, Codeword, DEFAULT_ENUMERATION_CAP, SpecError, constant_word
from .polynomials import PolyR
from .ring import NUCLEOTIDES, NUCLEOTIDE_COMPLEMENT, RingElement

#: Constant coordinate value of the complement of the zero word: 3*(1+u).
COMPLEMENT_MEMBERSHIP_ELEMENT = RingElement(3, 3)


# -- word-level transforms ------------------------------------------------------


def reverse_word(word: Codeword) -> Codeword:
    return tuple(reversed(word))


def complement_word(word: Codeword) -> Codeword:
    return tuple(e.complement() for e in word)


def reverse_complement_word(word: Codeword) -> Codeword:
    return tuple(e.complement() for e in reversed(word))


# -- DNA-string transforms ------------------------------------------------------


def dna_complement(strand: str) -> str:
    return "".join(NUCLEOTIDE_COMPLEMENT[c] for c in strand)


def dna_reverse_complement(strand: str) -> str:
    return "".join(NUCLEOTIDE_COMPLEMENT[c] for c in reversed(strand))


def theta_image(word: Codeword) -> str:
    """Per-coordinate codons, concatenated: length 2n."""
    return "".join(e.theta() for e in word)


def phi_image(word: Codeword) -> str:
    """All a-digits as letters, then all b-digits: length 2n."""
    return "".join(NUCLEOTIDES[e.a] for e in word) + "".join(
        NUCLEOTIDES[e.b] for e in word
    )


IMAGE_MAPS = {"theta": theta_image, "phi": phi_image}


def gc_content(strand: str) -> int:
    return sum(1 for c in strand if c in "GC")


def gc_spectrum(code: Code, image: str = "theta") -> dict[int, int]:
    """Multiplicity of each GC count over the code's DNA images."""
    image_map = IMAGE_MAPS[image]
    counts = Counter(gc_content(image_map(w)) for w in code.codewords)
    return dict(sorted(counts.items()))


# -- brute-force oracles ---------------------------------------------------------


def is_reversible_bruteforce(code: Code) -> bool:
    return all(reverse_word(w) in code for w in code.codewords)


def is_rc_closed_bruteforce(code: Code) -> bool:
    return all(reverse_complement_word(w) in code for w in code.codewords)


def rc_closed_without_fixed_points(words) -> bool:
    """Every word's reverse complement is in the set and differs from it.

    Works on any iterable of same-length tuples of ring elements (not only
    enumerated codes), since fixed points cannot occur at odd length.
    """
    pool = set(words)
    for w in pool:
        rc = reverse_complement_word(w)
        if rc == w or rc not in pool:
            return False
    return True


# -- generator condition checks ---------------------------------------------------


@dataclass
class ConditionReport:
    """Outcome of one checker: named conditions, the combined verdict they
    imply, the brute-force verdict on the enumerated code, and agreement."""

    kind: str
    conditions: dict[str, bool]
    theorem_verdict: bool
    brute_force: bool
    agreement: bool
    witnesses: dict = field(default_factory=dict)

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "conditions": dict(self.conditions),
            "theorem_verdict": self.theorem_verdict,
            "brute_force": self.brute_force,
            "agreement": self.agreement,
            "witnesses": {k: str(v) for k, v in self.witnesses.items()},
        }


def _single_generator_conditions(spec: CodeSpec):
    """Shared conditions for the single-generator checkers."""
    g1, g2 = spec.g1, spec.g2
    witness = g1.self_reciprocal_witness()
    conditions = {"g1_self_reciprocal": witness is not None}
    witnesses: dict = {}
    if witness is not None:
        witnesses["g1_reciprocal_unit"] = witness
    if g2.is_zero:
        conditions["g2_shift_reciprocal_equals_g2"] = True
        conditions["g2_shift_reciprocal_equals_g2_mod_fold"] = True
        conditions["g1_equals_shift_reciprocal_plus_g2"] = False
        return conditions, witnesses
    gap = g1.degree - g2.degree
    if gap < 0:
        raise SpecError(
            f"checker requires deg g2 <= deg g1 (got {g2.degree} > {g1.degree})"
        )
    witnesses["degree_gap"] = gap
    shifted = PolyR.monomial(gap) * g2.reciprocal()
    conditions["g2_shift_reciprocal_equals_g2"] = shifted == g2
    conditions["g2_shift_reciprocal_equals_g2_mod_fold"] = shifted.mod_xn_minus_1(
        spec.n
    ) == g2.mod_xn_minus_1(spec.n)
    conditions["g1_equals_shift_reciprocal_plus_g2"] = (
        g1.to_ring_poly() == shifted + g2
    )
    return conditions, witnesses


def _pair_generator_conditions(spec: CodeSpec):
    """Shared conditions for the two-generator checkers."""
    g1, g2, g3 = spec.g1, spec.g2, spec.g3
    w1 = g1.self_reciprocal_witness()
    w3 = g3.self_reciprocal_witness()
    conditions = {
        "g1_self_reciprocal": w1 is not None,
        "g3_self_reciprocal": w3 is not None,
    }
    witnesses: dict = {}
    if w1 is not None:
        witnesses["g1_reciprocal_unit"] = w1
    if w3 is not None:
        witnesses["g3_reciprocal_unit"] = w3
    if g2.is_zero:
        conditions["g3_divides_shift_reciprocal_minus_g2"] = True
        return conditions, witnesses
    gap = g1.degree - g2.degree
    if gap < 0:
        raise SpecError(
            f"checker requires deg g2 <= deg g1 (got {g2.degree} > {g1.degree})"
        )
    witnesses["degree_gap"] = gap
    difference = PolyR.monomial(gap) * g2.reciprocal() - g2
    quotient, remainder = difference.divmod_monic(g3.to_ring_poly())
    conditions["g3_divides_shift_reciprocal_minus_g2"] = remainder.is_zero
    if remainder.is_zero:
        witnesses["division_quotient"] = quotient
    return conditions, witnesses


def _resolve_code(spec: CodeSpec, code: "Code | None", cap: int) -> Code:
    if code is None:
        return Code.from_spec(spec, cap=cap)
    return code


def reversible_single_check(
    spec: CodeSpec, code: "Code | None" = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> ConditionReport:
    """Reversibility conditions for a single-generator spec: g1 self
    reciprocal, and either x^gap * reciprocal(g2) = g2 (evaluated literally;
    the folded variant is reported alongside) or g1 = x^gap * reciprocal(g2)
    + g2."""
    spec.require_valid()
    if not spec.is_single_generator:
        raise SpecError("single-generator checker requires a spec without g3")
    conditions, witnesses = _single_generator_conditions(spec)
    verdict = conditions["g1_self_reciprocal"] and (
        conditions["g2_shift_reciprocal_equals_g2"]
        or conditions["g1_equals_shift_reciprocal_plus_g2"]
    )
    brute = is_reversible_bruteforce(_resolve_code(spec, code, cap))
    return ConditionReport(
        kind="reversible-single-generator",
        conditions=conditions,
        theorem_verdict=verdict,
        brute_force=brute,
        agreement=verdict == brute,
        witnesses=witnesses,
    )


def reversible_pair_check(
    spec: CodeSpec, code: "Code | None" = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> ConditionReport:
    """Reversibility conditions for a two-generator spec: g1 and g3 self
    reciprocal, and g3 divides x^gap * reciprocal(g2) - g2 in R[x]."""
    spec.require_valid()
    if spec.is_single_generator:
        raise SpecError("two-generator checker requires g3")
    conditions, witnesses = _pair_generator_conditions(spec)
    verdict = all(
        conditions[k]
        for k in (
            "g1_self_reciprocal",
            "g3_self_reciprocal",
            "g3_divides_shift_reciprocal_minus_g2",
        )
    )
    brute = is_reversible_bruteforce(_resolve_code(spec, code, cap))
    return ConditionReport(
        kind="reversible-two-generator",
        conditions=conditions,
        theorem_verdict=verdict,
        brute_force=brute,
        agreement=verdict == brute,
        witnesses=witnesses,
    )


def _complement_membership(code: Code) -> bool:
    return constant_word(COMPLEMENT_MEMBERSHIP_ELEMENT, code.n) in code


def reverse_complement_single_check(
    spec: CodeSpec, code: "Code | None" = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> ConditionReport:
    """Reverse-complement closure for a single-generator spec: the
    reversibility conditions plus membership of the constant word with every
    coordinate 3*(1+u)."""
    spec.require_valid()
    if not spec.is_single_generator:
        raise SpecError("single-generator checker requires a spec without g3")
    enumerated = _resolve_code(spec, code, cap)
    conditions, witnesses = _single_generator_conditions(spec)
    conditions["complement_constant_in_code"] = _complement_membership(enumerated)
    verdict = (
        conditions["g1_self_reciprocal"]
        and conditions["complement_constant_in_code"]
        and (
            conditions["g2_shift_reciprocal_equals_g2"]
            or conditions["g1_equals_shift_reciprocal_plus_g2"]
        )
    )
    brute = is_rc_closed_bruteforce(enumerated)
    return ConditionReport(
        kind="reverse-complement-single-generator",
        conditions=conditions,
        theorem_verdict=verdict,
        brute_force=brute,
        agreement=verdict == brute,
        witnesses=witnesses,
    )


def reverse_complement_pair_check(
    spec: CodeSpec, code: "Code | None" = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> ConditionReport:
    """Reverse-complement closure for a two-generator spec: the two-generator
    reversibility conditions plus the same constant-word membership."""
    spec.require_valid()
    if spec.is_single_generator:
        raise SpecError("two-generator checker requires g3")
    enumerated = _resolve_code(spec, code, cap)
    conditions, witnesses = _pair_generator_conditions(spec)
    conditions["complement_constant_in_code"] = _complement_membership(enumerated)
    verdict = all(
        conditions[k]
        for k in (
            "g1_self_reciprocal",
            "g3_self_reciprocal",
            "g3_divides_shift_reciprocal_minus_g2",
            "complement_constant_in_code",
        )
    )
    brute = is_rc_closed_bruteforce(enumerated)
    return ConditionReport(
        kind="reverse-complement-two-generator",
        conditions=conditions,
        theorem_verdict=verdict,
        brute_force=brute,
        agreement=verdict == brute,
        witnesses=witnesses,
    )


def reversible_check(
    spec: CodeSpec, code: "Code | None" = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> ConditionReport:
    """Arity dispatch: single- or two-generator reversibility check."""
    if spec.is_single_generator:
        return reversible_single_check(spec, code=code, cap=cap)
    return reversible_pair_check(spec, code=code, cap=cap)


def reverse_complement_check(
    spec: CodeSpec, code: "Code | None" = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> ConditionReport:
    """Arity dispatch: single- or two-generator reverse-complement check."""
    if spec.is_single_generator:
        return reverse_complement_single_check(spec, code=code, cap=cap)
    return reverse_complement_pair_check(spec, code=code, cap=cap)
