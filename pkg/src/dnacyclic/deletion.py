"""Deletion similarity (longest common subsequence) metrics on codes.

The similarity S(X, Y) of two sequences is the length of their longest
common subsequence; the deletion distance of a code whose sequences have
length L is D = L - 1 - max S(X, Y) over distinct pairs.  Both metrics are
computed at a chosen granularity:

  symbol      the length-n words over the ring (one symbol per coordinate),
  nucleotide  the length-2n theta images over the DNA alphabet.

The bond count of a strand against the reverse complement of another equals
their similarity, so hybridization_energy is an alias built on the string
reverse complement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Code
from .constraints import (
    dna_reverse_complement,
    rc_closed_without_fixed_points,
    reverse_complement_word,
    theta_image,
)

#: Default bound on the number of sequence pairs examined per report.
DEFAULT_PAIR_CAP = 250_000

GRANULARITIES = ("symbol", "nucleotide")


class PairCapExceeded(RuntimeError):
    """A pairwise sweep would examine more pairs than the configured cap."""


def lcs_length(x, y) -> int:
    """Longest-common-subsequence length, O(len(x)*len(y)) rolling rows."""
    if len(x) < len(y):
        x, y = y, x
    prev = [0] * (len(y) + 1)
    for xi in x:
        cur = [0]
        for j, yj in enumerate(y, start=1):
            if xi == yj:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def lcs_witness(x, y):
    """One longest common subsequence, as a list of elements.

    Full DP table plus backtracking; use lcs_length when only the number is
    needed.
    """
    nx, ny = len(x), len(y)
    table = [[0] * (ny + 1) for _ in range(nx + 1)]
    for i in range(1, nx + 1):
        row, prev_row = table[i], table[i - 1]
        xi = x[i - 1]
        for j in range(1, ny + 1):
            if xi == y[j - 1]:
                row[j] = prev_row[j - 1] + 1
            else:
                row[j] = max(prev_row[j], row[j - 1])
    out = []
    i, j = nx, ny
    while i > 0 and j > 0:
        if x[i - 1] == y[j - 1]:
            out.append(x[i - 1])
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return out


def deletion_similarity(x, y) -> int:
    """S(X, Y): the longest-common-subsequence length."""
    return lcs_length(x, y)


def hybridization_energy(x: str, y: str) -> int:
    """Bond count of strand x against strand y when they anneal.

    Matched positions pair where x runs along the reverse complement of y,
    so this is deletion_similarity(x, reverse_complement(y)).
    """
    return deletion_similarity(x, dna_reverse_complement(y))


def _sequences(code: Code, granularity: str):
    if granularity == "symbol":
        return list(code.codewords)
    if granularity == "nucleotide":
        return [theta_image(w) for w in code.codewords]
    raise ValueError(f"granularity must be one of {GRANULARITIES}, got {granularity!r}")


@dataclass
class SimilarityReport:
    """Max pairwise deletion similarity of a code at one granularity."""

    granularity: str
    sequence_length: int
    max_similarity: int
    achieving_pair: tuple
    deletion_distance: int
    pairs_examined: int

    def describe(self) -> dict:
        def render(seq):
            return seq if isinstance(seq, str) else " ".join(str(e) for e in seq)

        return {
            "granularity": self.granularity,
            "sequence_length": self.sequence_length,
            "max_similarity": self.max_similarity,
            "achieving_pair": [render(s) for s in self.achieving_pair],
            "deletion_distance": self.deletion_distance,
            "pairs_examined": self.pairs_examined,
        }


def code_similarity_report(
    code: Code, granularity: str = "symbol", pair_cap: int = DEFAULT_PAIR_CAP
) -> SimilarityReport:
    """Max S over distinct codeword pairs and D = L - 1 - max S.

    Deterministic: sequences follow the code's sorted word order and the
    reported pair is the first one attaining the maximum.
    """
    seqs = _sequences(code, granularity)
    if len(seqs) < 2:
        raise ValueError("similarity report needs a code with at least 2 words")
    n_pairs = len(seqs) * (len(seqs) - 1) // 2
    if n_pairs > pair_cap:
        raise PairCapExceeded(f"{n_pairs} pairs exceed the cap of {pair_cap}")
    length = len(seqs[0])
    # Distinct equal-length sequences can share at most length-1 symbols, so
    # the scan can stop as soon as that ceiling is attained; the first pair
    # reaching it is still the first pair attaining the maximum.
    ceiling = length - 1
    best = -1
    best_pair = None
    examined = 0
    for i in range(len(seqs)):
        for j in range(i + 1, len(seqs)):
            examined += 1
            s = lcs_length(seqs[i], seqs[j])
            if s > best:
                best = s
                best_pair = (seqs[i], seqs[j])
                if best == ceiling:
                    break
        if best == ceiling:
            break
    return SimilarityReport(
        granularity=granularity,
        sequence_length=length,
        max_similarity=best,
        achieving_pair=best_pair,
        deletion_distance=length - 1 - best,
        pairs_examined=examined,
    )


@dataclass
class DnaCodeReport:
    """Per-condition breakdown of the (length, D) DNA-code predicate."""

    granularity: str
    sequence_length: int
    required_distance: int
    closed_under_module_ops: bool
    rc_closed_without_fixed_points: bool
    similarity_within_bound: bool
    max_similarity: int

    @property
    def is_dna_code(self) -> bool:
        return (
            self.closed_under_module_ops
            and self.rc_closed_without_fixed_points
            and self.similarity_within_bound
        )

    def describe(self) -> dict:
        return {
            "granularity": self.granularity,
            "sequence_length": self.sequence_length,
            "required_distance": self.required_distance,
            "closed_under_module_ops": self.closed_under_module_ops,
            "rc_closed_without_fixed_points": self.rc_closed_without_fixed_points,
            "similarity_within_bound": self.similarity_within_bound,
            "max_similarity": self.max_similarity,
            "is_dna_code": self.is_dna_code,
        }


def _rc_condition(code: Code, granularity: str) -> bool:
    if granularity == "symbol":
        return rc_closed_without_fixed_points(code.codewords)
    images = set(_sequences(code, granularity))
    return all(
        (rc := dna_reverse_complement(s)) in images and rc != s for s in images
    )


def dna_code_report(
    code: Code,
    required_distance: int,
    granularity: str = "symbol",
    pair_cap: int = DEFAULT_PAIR_CAP,
) -> DnaCodeReport:
    """Check the three defining conditions of a DNA code with distance D:
    module closure (cyclic + additive + scalar), reverse-complement closure
    with no fixed point, and S(X, Y) <= L - D - 1 for all distinct pairs."""
    report = code_similarity_report(code, granularity=granularity, pair_cap=pair_cap)
    closed = (
        code.is_shift_closed() and code.is_addition_closed() and code.is_scalar_closed()
    )
    return DnaCodeReport(
        granularity=granularity,
        sequence_length=report.sequence_length,
        required_distance=required_distance,
        closed_under_module_ops=closed,
        rc_closed_without_fixed_points=_rc_condition(code, granularity),
        similarity_within_bound=report.max_similarity
        <= report.sequence_length - required_distance - 1,
        max_similarity=report.max_similarity,
    )


@dataclass
class SubcodeDistanceReport:
    """Deletion distance of a code next to that of its subcode of 1+u
    multiples, at one granularity."""

    granularity: str
    code_distance: int
    subcode_distance: int
    subcode_cardinality: int

    @property
    def equal(self) -> bool:
        return self.code_distance == self.subcode_distance

    def describe(self) -> dict:
        return {
            "granularity": self.granularity,
            "code_distance": self.code_distance,
            "subcode_distance": self.subcode_distance,
            "subcode_cardinality": self.subcode_cardinality,
            "equal": self.equal,
        }


def subcode_deletion_distance_check(
    code: Code, granularity: str = "symbol", pair_cap: int = DEFAULT_PAIR_CAP
) -> SubcodeDistanceReport:
    """D of the code and D of its 1+u-multiples subcode, side by side.

    Raises if either the code or the subcode has fewer than 2 words, since
    the distance is a pairwise quantity.
    """
    subcode = code.subcode_one_plus_u()
    if subcode.cardinality < 2:
        raise ValueError(
            f"subcode of 1+u multiples has {subcode.cardinality} word(s); "
            "deletion distance needs at least 2"
        )
    code_report = code_similarity_report(code, granularity=granularity, pair_cap=pair_cap)
    sub_report = code_similarity_report(subcode, granularity=granularity, pair_cap=pair_cap)
    return SubcodeDistanceReport(
        granularity=granularity,
        code_distance=code_report.deletion_distance,
        subcode_distance=sub_report.deletion_distance,
        subcode_cardinality=subcode.cardinality,
    )


def is_dna_code(
    code: Code,
    required_distance: int,
    granularity: str = "symbol",
    pair_cap: int = DEFAULT_PAIR_CAP,
) -> bool:
    return dna_code_report(
        code, required_distance, granularity=granularity, pair_cap=pair_cap
    ).is_dna_code
