"""Spec validation, code enumeration, and module-structure invariants."""

import itertools

import pytest

from dnacyclic.cli import iter_catalog_specs
from dnacyclic.codes import (
    Code,
    CodeSpec,
    EnumerationCapExceeded,
    SpecError,
    constant_word,
    decode_word,
    encode_word,
)
from dnacyclic.polynomials import PolyR, PolyZ4
from dnacyclic.ring import ALL_ELEMENTS, IDEAL_ONE_PLUS_U, ONE_PLUS_U, RingElement, ZERO


def p4(text):
    return PolyZ4.from_string(text)


def pr(text):
    return PolyR.from_string(text)


def spec_from(n, g1, g2="[]", g3=None, strict=False):
    return CodeSpec(
        n=n,
        g1=p4(g1),
        g2=pr(g2),
        g3=None if g3 is None else p4(g3),
        strict_z4_divisibility=strict,
    )


def direct_span(spec):
    """Independent enumeration: close the shift/scalar orbit of the
    generators under addition, entirely in polynomial arithmetic."""
    n = spec.n

    def to_word(p):
        coeffs = list(p.coeffs) + [ZERO] * (n - len(p.coeffs))
        return tuple(coeffs)

    seeds = set()
    for gen in spec.generator_polys():
        for k in range(n):
            shifted = (PolyR.monomial(k) * gen).mod_xn_minus_1(n)
            for s in ALL_ELEMENTS:
                seeds.add(to_word(s * shifted))
    words = {tuple([ZERO] * n)} | seeds
    frontier = set(words)
    while frontier:
        new = set()
        for w in frontier:
            for s in seeds:
                t = tuple(a + b for a, b in zip(w, s))
                if t not in words:
                    new.add(t)
        words |= new
        frontier = new
    return words


# -- validation ---------------------------------------------------------------------


def test_validate_rejects_even_or_nonpositive_length():
    assert "odd" in spec_from(4, "[3,1]").validate()[0]
    assert "odd" in spec_from(0, "[1]").validate()[0]
    assert "odd" in spec_from(-5, "[1]").validate()[0]
    assert spec_from(1, "[3,1]").validate() == []


def test_validate_requires_monic_generators():
    problems = spec_from(3, "[1,2]").validate()
    assert any("monic" in p for p in problems)
    problems = spec_from(3, "[1,1,1]", g3="[2]").validate()
    assert any("g3 must be monic" in p for p in problems)


def test_validate_requires_divisibility_chain_mod2():
    # g1 must divide x^n - 1 mod 2 and g3 must divide g1 mod 2.
    problems = spec_from(3, "[1,0,1]").validate()  # x^2+1 = (x+1)^2 splits wrong
    assert any("does not divide x^3 - 1" in p for p in problems)
    ok = spec_from(3, "[1,1,1]", g3="[3,1]").validate()
    assert any("does not divide g1" in p for p in ok)
    assert spec_from(3, "[1,1,1]", g3="[1,1,1]").validate() == []


def test_validate_strict_mode_tightens_to_z4():
    # x+1 divides x^3+1 mod 2 but not x^3-1 over Z4.
    assert spec_from(3, "[1,1]").validate() == []
    strict = spec_from(3, "[1,1]", strict=True).validate()
    assert any("over Z4" in p for p in strict)
    # Same tightening for the g3 | g1 link.
    assert spec_from(3, "[3,0,0,1]", g3="[1,1]").validate() == []
    strict = spec_from(3, "[3,0,0,1]", g3="[1,1]", strict=True).validate()
    assert any("over Z4" in p for p in strict)


def test_require_valid_raises_spec_error():
    with pytest.raises(SpecError):
        spec_from(4, "[3,1]").require_valid()
    spec_from(3, "[3,1]").require_valid()


def test_describe_and_sort_key_are_stable():
    spec = spec_from(3, "[1,1,1]", g2="[1,1,1]")
    assert spec.describe() == {
        "n": 3,
        "g1": "[1,1,1]",
        "g2": "[1,1,1]",
        "g3": None,
        "strict_z4_divisibility": False,
    }
    specs = [
        spec_from(3, "[3,0,0,1]"),
        spec_from(3, "[3,1]"),
        spec_from(3, "[3,1]", g3="[3,1]"),
        spec_from(3, "[3,1]", g2="[1]"),
    ]
    ordered = sorted(specs, key=CodeSpec.sort_key)
    assert [s.describe()["g1"] for s in ordered] == ["[3,1]", "[3,1]", "[3,1]", "[3,0,0,1]"]
    # Single-generator specs sort before pair specs with the same g1.
    assert ordered[2].g3 is not None


# -- word packing -------------------------------------------------------------------


def test_encode_decode_roundtrip_all_pairs():
    for x, y in itertools.product(ALL_ELEMENTS, repeat=2):
        word = (x, y, RingElement(3, 2))
        assert decode_word(encode_word(word), 3) == word


def test_packed_order_matches_lexicographic_word_order():
    words = [
        (ZERO, ZERO, RingElement(0, 1)),
        (ZERO, RingElement(1, 0), ZERO),
        (RingElement(1, 0), ZERO, ZERO),
    ]
    packed = [encode_word(w) for w in words]
    assert packed == sorted(packed)


def test_constant_word():
    w = constant_word(ONE_PLUS_U, 3)
    assert w == (ONE_PLUS_U, ONE_PLUS_U, ONE_PLUS_U)


# -- enumeration of the worked examples ----------------------------------------------


def test_single_generator_example_is_the_sixteen_constant_vectors():
    code = Code.from_spec(spec_from(3, "[1,1,1]", g2="[1,1,1]"))
    assert code.cardinality == 16
    expected = {constant_word(x, 3) for x in ALL_ELEMENTS}
    assert set(code.codewords) == expected
    assert code.min_hamming_distance == 3
    assert code.weight_enumerator == (1, 0, 0, 15)


def test_pair_generator_example_is_the_four_diagonal_multiples():
    # g1 = x^3 + 3 vanishes in the length-3 quotient, so the code collapses
    # to the multiples of (1+u)(x^2+x+1): exactly 4 constant vectors.
    code = Code.from_spec(spec_from(3, "[3,0,0,1]", g2="[3,0,0,1]", g3="[1,1,1]"))
    assert code.cardinality == 4
    expected = {constant_word(t, 3) for t in IDEAL_ONE_PLUS_U}
    assert set(code.codewords) == expected
    assert code.min_hamming_distance == 3
    assert code.weight_enumerator == (1, 0, 0, 3)


def test_length_nine_example():
    g = "[1,1,1,1,1,1,1,1,1]"
    code = Code.from_spec(spec_from(9, g, g2=g))
    assert code.cardinality == 16
    assert code.min_hamming_distance == 9
    assert code.weight_enumerator == (1,) + (0,) * 8 + (15,)
    assert set(code.codewords) == {constant_word(x, 9) for x in ALL_ELEMENTS}


def test_enumeration_matches_direct_span_oracle():
    cases = [
        spec_from(3, "[1,1,1]", g2="[1,1,1]"),
        spec_from(3, "[3,0,0,1]", g2="[3,0,0,1]", g3="[1,1,1]"),
        spec_from(3, "[3,1]"),
        spec_from(3, "[1,1,1]", g2="[1]"),
        spec_from(3, "[3,1]", g2="[u]", g3="[3,1]"),
        spec_from(5, "[1,1,1,1,1]", g2="[2u,1]"),
    ]
    for spec in cases:
        code = Code.from_spec(spec)
        assert set(code.codewords) == direct_span(spec), spec.describe()


def test_zero_code():
    # g1 = x^3 - 1 is 0 in the quotient and g2 = 0, so only the zero word.
    code = Code.from_spec(spec_from(3, "[3,0,0,1]"))
    assert code.cardinality == 1
    assert code.min_hamming_distance is None
    assert code.weight_enumerator == (1, 0, 0, 0)


def test_full_code():
    code = Code.from_spec(spec_from(3, "[1]"))
    assert code.cardinality == 16**3
    assert code.min_hamming_distance == 1


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        Code.from_spec(spec_from(3, "[1]"), cap=100)


def test_invalid_spec_is_rejected_at_enumeration():
    with pytest.raises(SpecError):
        Code.from_spec(spec_from(4, "[3,1]"))


# -- module structure ----------------------------------------------------------------


def test_codes_are_closed_under_module_operations():
    for spec in (
        spec_from(3, "[1,1,1]", g2="[1,1,1]"),
        spec_from(3, "[3,1]", g2="[1]"),
        spec_from(3, "[3,1]", g2="[2u,1]", g3="[3,1]"),
        spec_from(5, "[1,1,1,1,1]"),
    ):
        code = Code.from_spec(spec)
        assert code.is_shift_closed()
        assert code.is_scalar_closed()
        assert code.is_addition_closed()


def test_membership_and_equality():
    code = Code.from_spec(spec_from(3, "[1,1,1]", g2="[1,1,1]"))
    assert constant_word(RingElement(2, 1), 3) in code
    assert (RingElement(1, 0), ZERO, ZERO) not in code
    same = Code.from_spec(spec_from(3, "[1,1,1]", g2="[1,1,1]"))
    assert code == same and hash(code) == hash(same)
    other = Code.from_spec(spec_from(3, "[3,1]"))
    assert code != other
    assert len(code) == 16 and len(list(iter(code))) == 16


def test_cardinality_is_a_power_of_two():
    # |C| = 16^n / 4^(deg g1) * 2^(...): always a power of 2 for these specs.
    for spec in iter_catalog_specs(3):
        card = Code.from_spec(spec).cardinality
        assert card & (card - 1) == 0, spec.describe()


def test_subcode_of_diagonal_multiples():
    code = Code.from_spec(spec_from(3, "[1,1,1]", g2="[1,1,1]"))
    sub = code.subcode_one_plus_u()
    assert set(sub.codewords) == {constant_word(t, 3) for t in IDEAL_ONE_PLUS_U}
    assert sub.cardinality == 4
    assert sub.is_shift_closed() and sub.is_addition_closed()


# Specs (g1, g3, g2) whose diagonal subcode {(1+u)c : c in C} differs from
# the cyclic code generated by (1+u)g3 (resp. (1+u)g1 when g3 is absent).
# Frozen from a sweep of all 65 valid n=3 lattice specs; every violation has
# g2 outside {0, g1}, and the equality is confirmed on the whole safe family.
SUBCODE_IDENTITY_VIOLATIONS = {
    ("[3,1]", None, "[1]"),
    ("[3,1]", None, "[1,1,1]"),
    ("[3,1]", "[3,1]", "[1]"),
    ("[3,1]", "[3,1]", "[1,1,1]"),
    ("[1,1,1]", None, "[1]"),
    ("[1,1,1]", None, "[3,1]"),
    ("[1,1,1]", "[1,1,1]", "[1]"),
    ("[1,1,1]", "[1,1,1]", "[3,1]"),
    ("[3,0,0,1]", None, "[1]"),
    ("[3,0,0,1]", None, "[3,1]"),
    ("[3,0,0,1]", None, "[1,1,1]"),
    ("[3,0,0,1]", "[1,1,1]", "[1]"),
    ("[3,0,0,1]", "[1,1,1]", "[3,1]"),
    ("[3,0,0,1]", "[3,0,0,1]", "[1]"),
    ("[3,0,0,1]", "[3,0,0,1]", "[3,1]"),
    ("[3,0,0,1]", "[3,0,0,1]", "[1,1,1]"),
    ("[3,0,0,1]", "[3,1]", "[1]"),
    ("[3,0,0,1]", "[3,1]", "[1,1,1]"),
}


def test_subcode_identity_characterization_over_full_lattice():
    # The identity C_(1+u) = <(1+u)h> (h = g3, or g1 when single-generator)
    # holds for g2 in {0, g1} but not in general.  Pin the exact violation
    # set so any behavior change is visible.
    violations = set()
    for spec in iter_catalog_specs(3):
        code = Code.from_spec(spec)
        sub = code.subcode_one_plus_u()
        h = spec.g3 if spec.g3 is not None else spec.g1
        # <(1+u)h> as a spec: g1 = x^3 - 1 contributes nothing mod x^3 - 1.
        ideal = Code.from_spec(
            CodeSpec(n=3, g1=PolyZ4.xn_minus_1(3), g2=h.to_ring_poly())
        )
        key = (
            str(spec.g1),
            None if spec.g3 is None else str(spec.g3),
            str(spec.g2),
        )
        if sub != ideal:
            violations.add(key)
            assert not (
                spec.g2.is_zero or spec.g2 == spec.g1.to_ring_poly()
            ), f"violation inside the safe family: {key}"
    assert violations == SUBCODE_IDENTITY_VIOLATIONS


def test_describe_shape():
    code = Code.from_spec(spec_from(3, "[1,1,1]", g2="[1,1,1]"))
    doc = code.describe()
    assert doc["cardinality"] == 16
    assert doc["min_hamming_distance"] == 3
    assert doc["weight_enumerator"] == [1, 0, 0, 15]
