"""Command-line interface.

Subcommands:
  factor   factor x^n - 1 mod 2 and over Z4
  check    validate a spec, enumerate its code, run requested analyses
  catalog  sweep all specs for one n over the divisor lattice
  tables   print the codon correspondence and the two worked code tables

Exit codes: 0 success (and every requested verdict true), 1 a requested
verdict is false or the spec is invalid, 2 usage or parse error, 3 a
configured resource cap was exceeded.

Config files are plain "key = value" lines (# comments allowed) with keys
max_n, enumeration_cap, pair_cap; explicit command-line options win over the
config file, which wins over the defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .codes import (
    Code,
    CodeSpec,
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    SpecError,
)
from .constraints import (
    gc_spectrum,
    reverse_complement_check,
    reversible_check,
    theta_image,
    phi_image,
)
from .deletion import (
    DEFAULT_PAIR_CAP,
    PairCapExceeded,
    code_similarity_report,
    dna_code_report,
    subcode_deletion_distance_check,
)
from .polynomials import (
    MAX_N_DEFAULT,
    PolyR,
    PolyZ4,
    all_monic_divisors,
    factor_xn_minus_1_mod2,
    factor_xn_minus_1_z4,
)
from .ring import ALL_ELEMENTS, RingElement, THETA_TABLE


class CliParseError(ValueError):
    """Bad user input that is not an argparse-level usage error."""


# The two worked code tables, in their published grid layout.  The length-6
# table is the theta image of the n=3 code with g1 = g2 = [1,1,1]; the
# length-18 table is the n=9 code with g1 = g2 = [1,1,1,1,1,1,1,1,1].
LENGTH6_CODE_TABLE = (
    ("AAAAAA", "TTTTTT", "CCCCCC", "GGGGGG"),
    ("ATATAT", "TATATA", "CTCTCT", "GAGAGA"),
    ("AGAGAG", "TCTCTC", "CGCGCG", "GCGCGC"),
    ("ACACAC", "TGTGTG", "CACACA", "GTGTGT"),
)
LENGTH18_CODE_TABLE = (
    ("AAAAAAAAAAAAAAAAAA", "TTTTTTTTTTTTTTTTTT"),
    ("CCCCCCCCCCCCCCCCCC", "GGGGGGGGGGGGGGGGGG"),
    ("ATATATATATATATATAT", "TATATATATATATATATA"),
    ("CTCTCTCTCTCTCTCTCT", "GAGAGAGAGAGAGAGAGA"),
    ("AGAGAGAGAGAGAGAGAG", "TCTCTCTCTCTCTCTCTC"),
    ("CGCGCGCGCGCGCGCGCG", "GCGCGCGCGCGCGCGCGC"),
    ("ACACACACACACACACAC", "TGTGTGTGTGTGTGTGTG"),
    ("CACACACACACACACACA", "GTGTGTGTGTGTGTGTGT"),
)


@dataclass
class Caps:
    max_n: int = MAX_N_DEFAULT
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    pair_cap: int = DEFAULT_PAIR_CAP


def load_caps(config_path: "str | None", args: argparse.Namespace) -> Caps:
    caps = Caps()
    if config_path:
        try:
            with open(config_path, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            raise CliParseError(f"cannot read config file: {exc}") from exc
        for lineno, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise CliParseError(
                    f"{config_path}:{lineno}: expected key = value, got {raw.rstrip()!r}"
                )
            key, _, value = (part.strip() for part in line.partition("="))
            if key not in ("max_n", "enumeration_cap", "pair_cap"):
                raise CliParseError(f"{config_path}:{lineno}: unknown key {key!r}")
            try:
                setattr(caps, key, int(value))
            except ValueError as exc:
                raise CliParseError(
                    f"{config_path}:{lineno}: {key} needs an integer, got {value!r}"
                ) from exc
    for key in ("max_n", "enumeration_cap", "pair_cap"):
        override = getattr(args, key, None)
        if override is not None:
            setattr(caps, key, override)
    return caps


def _parse_poly_z4(text: str, what: str) -> PolyZ4:
    try:
        return PolyZ4.from_string(text)
    except ValueError as exc:
        raise CliParseError(f"cannot parse {what}: {exc}") from exc


def _parse_poly_r(text: str, what: str) -> PolyR:
    try:
        return PolyR.from_string(text)
    except ValueError as exc:
        raise CliParseError(f"cannot parse {what}: {exc}") from exc


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# -- factor ---------------------------------------------------------------------


def cmd_factor(args: argparse.Namespace) -> int:
    caps = load_caps(args.config, args)
    mod2 = factor_xn_minus_1_mod2(args.n, max_n=caps.max_n)
    z4 = factor_xn_minus_1_z4(args.n, max_n=caps.max_n)
    if args.json:
        doc = {
            "command": "factor",
            "n": args.n,
            "mod2_factors": [str(f) for f in mod2],
            "z4_factors": [str(f) for f in z4],
            "z4_factors_power_form": [f.to_power_str() for f in z4],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"n {args.n}")
        print("binary factors: " + ", ".join(str(f) for f in mod2))
        print("z4 factors: " + ", ".join(str(f) for f in z4))
        print("z4 factors (power form): " + "; ".join(f.to_power_str() for f in z4))
    return 0


# -- check ----------------------------------------------------------------------


def _spec_from_args(args: argparse.Namespace) -> CodeSpec:
    g1 = _parse_poly_z4(args.g1, "--g1")
    g2 = _parse_poly_r(args.g2, "--g2")
    g3 = _parse_poly_z4(args.g3, "--g3") if args.g3 is not None else None
    return CodeSpec(
        n=args.n, g1=g1, g2=g2, g3=g3, strict_z4_divisibility=args.strict
    )


def _word_str(word) -> str:
    return ",".join(str(e) for e in word)


def cmd_check(args: argparse.Namespace) -> int:
    caps = load_caps(args.config, args)
    if args.n > caps.max_n:
        raise EnumerationCapExceeded(
            f"n = {args.n} exceeds the configured max_n = {caps.max_n}"
        )
    spec = _spec_from_args(args)
    doc: dict = {"command": "check", "spec": spec.describe()}
    lines: list[str] = []
    g3_text = "-" if spec.g3 is None else str(spec.g3)
    lines.append(f"spec n={spec.n} g1={spec.g1} g2={spec.g2} g3={g3_text}")

    problems = spec.validate()
    doc["valid"] = not problems
    doc["validation_errors"] = problems
    lines.append(f"valid {_yn(not problems)}")
    exit_code = 0
    if problems:
        for p in problems:
            lines.append(f"  problem: {p}")
        exit_code = 1
    else:
        code = Code.from_spec(spec, cap=caps.enumeration_cap)
        doc["code"] = code.describe()
        lines.append(f"cardinality {code.cardinality}")
        dist = code.min_hamming_distance
        lines.append(
            "min_hamming_distance "
            + ("undefined (zero code)" if dist is None else str(dist))
        )
        lines.append(
            "weight_enumerator ["
            + ",".join(str(c) for c in code.weight_enumerator)
            + "]"
        )

        if args.reversible:
            exit_code = max(
                exit_code, _run_condition_section(spec, code, doc, lines, reversible=True)
            )
        if args.rc:
            exit_code = max(
                exit_code, _run_condition_section(spec, code, doc, lines, reversible=False)
            )
        if args.gc:
            spectrum = gc_spectrum(code, image="theta")
            doc["gc_spectrum"] = {"theta": spectrum}
            lines.append(
                "gc_spectrum theta "
                + " ".join(f"{k}:{v}" for k, v in spectrum.items())
            )
        if args.deletion:
            exit_code = max(
                exit_code, _run_deletion_section(code, args.granularity, caps, doc, lines)
            )
        if args.emit_words:
            words_doc = []
            lines.append("words")
            for w in code.codewords:
                entry = {
                    "word": _word_str(w),
                    "theta": theta_image(w),
                    "phi": phi_image(w),
                }
                words_doc.append(entry)
                lines.append(
                    f"  word {entry['word']} theta {entry['theta']} phi {entry['phi']}"
                )
            doc["words"] = words_doc

    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))
    return exit_code


def _run_condition_section(spec, code, doc, lines, reversible: bool) -> int:
    name = "reversible" if reversible else "reverse_complement"
    checker = reversible_check if reversible else reverse_complement_check
    try:
        report = checker(spec, code=code)
    except SpecError as exc:
        doc[name] = {"error": str(exc)}
        lines.append(f"{name} error: {exc}")
        return 1
    doc[name] = report.describe()
    lines.append(
        f"{name} brute_force={_yn(report.brute_force)} "
        f"theorem_verdict={_yn(report.theorem_verdict)} "
        f"agreement={_yn(report.agreement)}"
    )
    for cond, value in report.conditions.items():
        lines.append(f"  {cond} {_yn(value)}")
    return 0 if report.brute_force else 1


def _run_deletion_section(code, granularity, caps, doc, lines) -> int:
    section: dict = {}
    doc["deletion"] = section
    if code.cardinality < 2:
        section["error"] = "deletion metrics need at least 2 codewords"
        lines.append("deletion unavailable: needs at least 2 codewords")
        return 0
    report = code_similarity_report(code, granularity, pair_cap=caps.pair_cap)
    section["similarity"] = report.describe()
    lines.append(
        f"deletion granularity={report.granularity} "
        f"sequence_length={report.sequence_length} "
        f"max_similarity={report.max_similarity} "
        f"deletion_distance={report.deletion_distance}"
    )
    pair = section["similarity"]["achieving_pair"]
    lines.append(f"  achieving_pair {pair[0]} | {pair[1]}")
    dna = dna_code_report(
        code, report.deletion_distance, granularity, pair_cap=caps.pair_cap
    )
    section["dna_code"] = dna.describe()
    lines.append(
        f"dna_code required_distance={dna.required_distance} "
        f"closed={_yn(dna.closed_under_module_ops)} "
        f"rc_no_fixed_points={_yn(dna.rc_closed_without_fixed_points)} "
        f"similarity_bound={_yn(dna.similarity_within_bound)} "
        f"verdict={_yn(dna.is_dna_code)}"
    )
    try:
        sub = subcode_deletion_distance_check(code, granularity, pair_cap=caps.pair_cap)
    except ValueError as exc:
        section["subcode"] = {"error": str(exc)}
        lines.append(f"subcode_deletion unavailable: {exc}")
        return 0
    section["subcode"] = sub.describe()
    lines.append(
        f"subcode_deletion code_distance={sub.code_distance} "
        f"subcode_distance={sub.subcode_distance} "
        f"subcode_words={sub.subcode_cardinality} equal={_yn(sub.equal)}"
    )
    return 0


# -- catalog ---------------------------------------------------------------------


def _dedupe_polys(family: "list[PolyR]") -> "list[PolyR]":
    unique = {g2.coeffs: g2 for g2 in family}
    return [
        unique[k]
        for k in sorted(unique, key=lambda cs: (len(cs), [c.pair for c in cs]))
    ]


def _default_g2_family(g1: PolyZ4, divisors: "list[PolyZ4]") -> "list[PolyR]":
    family = [PolyR()] + [d.to_ring_poly() for d in divisors]
    family.append(g1.to_ring_poly())
    return _dedupe_polys(family)


def _g2_candidates(args, g1: PolyZ4, divisors: "list[PolyZ4]") -> "list[PolyR]":
    if (args.g2_degree_bound is None) != (args.g2_coeffs is None):
        raise CliParseError(
            "--g2-degree-bound and --g2-coeffs must be given together"
        )
    if args.g2_degree_bound is None:
        return _default_g2_family(g1, divisors)
    try:
        coeffs = [RingElement.from_string(t) for t in args.g2_coeffs.split(",")]
    except ValueError as exc:
        raise CliParseError(f"cannot parse --g2-coeffs: {exc}") from exc
    if args.g2_degree_bound < 0:
        raise CliParseError("--g2-degree-bound must be >= 0")
    prefixes: list[list[RingElement]] = [[]]
    for _ in range(args.g2_degree_bound + 1):
        prefixes = [prefix + [c] for prefix in prefixes for c in coeffs]
    return _dedupe_polys([PolyR(prefix) for prefix in prefixes])


def iter_catalog_specs(n: int, g2_family_for=None, max_n: int = MAX_N_DEFAULT):
    """All valid specs for length n: g1 over the divisor lattice, g3 absent
    or a lattice divisor of g1, g2 from the candidate family (default
    {0} + {g1} + all divisors).  Deterministic order."""
    divisors = all_monic_divisors(n, max_n=max_n)
    specs = []
    for g1 in divisors:
        if g2_family_for is None:
            g2s = _default_g2_family(g1, divisors)
        else:
            g2s = g2_family_for(g1)
        g3s: list = [None] + [d for d in divisors if d.divides_mod2(g1)]
        for g3 in g3s:
            for g2 in g2s:
                spec = CodeSpec(n=n, g1=g1, g2=g2, g3=g3)
                if not spec.validate():
                    specs.append(spec)
    specs.sort(key=CodeSpec.sort_key)
    return specs


def cmd_catalog(args: argparse.Namespace) -> int:
    caps = load_caps(args.config, args)
    if args.n > caps.max_n:
        raise EnumerationCapExceeded(
            f"n = {args.n} exceeds the configured max_n = {caps.max_n}"
        )
    divisors = all_monic_divisors(args.n, max_n=caps.max_n)
    specs = iter_catalog_specs(
        args.n,
        g2_family_for=(lambda g1: _g2_candidates(args, g1, divisors)),
        max_n=caps.max_n,
    )
    entries = []
    skipped = 0
    for spec in specs:
        entry: dict = {"spec": spec.describe()}
        try:
            code = Code.from_spec(spec, cap=caps.enumeration_cap)
        except EnumerationCapExceeded as exc:
            entry["skipped"] = str(exc)
            entries.append(entry)
            skipped += 1
            continue
        entry["code"] = code.describe()
        for name, checker in (
            ("reversible", reversible_check),
            ("reverse_complement", reverse_complement_check),
        ):
            try:
                report = checker(spec, code=code)
                entry[name] = {
                    "brute_force": report.brute_force,
                    "theorem_verdict": report.theorem_verdict,
                    "agreement": report.agreement,
                }
            except SpecError as exc:
                entry[name] = {"error": str(exc)}
        entry["gc_spectrum"] = gc_spectrum(code, image="theta")
        for granularity in ("symbol", "nucleotide"):
            key = f"deletion_distance_{granularity}"
            if code.cardinality < 2:
                entry[key] = None
                continue
            try:
                report = code_similarity_report(code, granularity, pair_cap=caps.pair_cap)
                entry[key] = report.deletion_distance
            except PairCapExceeded as exc:
                entry[key] = f"skipped: {exc}"
        entries.append(entry)

    best_by_size: dict[int, dict] = {}
    for entry in entries:
        if "skipped" in entry or entry.get("deletion_distance_symbol") is None:
            continue
        d = entry["deletion_distance_symbol"]
        if not isinstance(d, int):
            continue
        size = entry["code"]["cardinality"]
        cur = best_by_size.get(size)
        if cur is None or d > cur["deletion_distance_symbol"]:
            best_by_size[size] = entry
    summary = {
        str(size): {
            "deletion_distance_symbol": best_by_size[size]["deletion_distance_symbol"],
            "spec": best_by_size[size]["spec"],
        }
        for size in sorted(best_by_size)
    }

    if args.json:
        doc = {
            "command": "catalog",
            "n": args.n,
            "entry_count": len(entries),
            "skipped_count": skipped,
            "entries": entries,
            "best_deletion_distance_by_cardinality": summary,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"catalog n={args.n} specs={len(entries)} skipped={skipped}")
        for entry in entries:
            spec = entry["spec"]
            head = f"g1={spec['g1']} g3={spec['g3'] or '-'} g2={spec['g2']}"
            if "skipped" in entry:
                print(f"{head} skipped ({entry['skipped']})")
                continue
            rev = entry["reversible"]
            rc = entry["reverse_complement"]
            rev_s = "err" if "error" in rev else _yn(rev["brute_force"])
            rc_s = "err" if "error" in rc else _yn(rc["brute_force"])
            gc = ",".join(f"{k}:{v}" for k, v in entry["gc_spectrum"].items())
            print(
                f"{head} words={entry['code']['cardinality']} "
                f"dmin={entry['code']['min_hamming_distance']} "
                f"reversible={rev_s} rc={rc_s} "
                f"D_symbol={entry['deletion_distance_symbol']} "
                f"D_nucleotide={entry['deletion_distance_nucleotide']} "
                f"gc={gc}"
            )
        print("best deletion distance by cardinality (symbol granularity):")
        for size, info in summary.items():
            spec = info["spec"]
            print(
                f"  {size} words: D={info['deletion_distance_symbol']} "
                f"(g1={spec['g1']} g3={spec['g3'] or '-'} g2={spec['g2']})"
            )
    return 0


# -- tables ----------------------------------------------------------------------


def cmd_tables(args: argparse.Namespace) -> int:
    correspondence = [
        (str(e), f"({e.a},{e.b})", THETA_TABLE[(e.a, e.b)]) for e in ALL_ELEMENTS
    ]
    if args.json:
        doc = {
            "command": "tables",
            "codon_correspondence": [list(row) for row in correspondence],
            "length6_code": [list(row) for row in LENGTH6_CODE_TABLE],
            "length18_code": [list(row) for row in LENGTH18_CODE_TABLE],
        }
        print(json.dumps(doc, indent=2))
        return 0
    print("codon correspondence")
    print("element  pair   codon")
    for element, pair, codon in correspondence:
        print(f"{element:<8} {pair:<6} {codon}")
    print()
    print("length-6 code: n=3, g1 = g2 = [1,1,1]")
    for row in LENGTH6_CODE_TABLE:
        print("  ".join(row))
    print()
    print("length-18 code: n=9, g1 = g2 = [1,1,1,1,1,1,1,1,1]")
    for row in LENGTH18_CODE_TABLE:
        print("  ".join(row))
    return 0


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnacyclic",
        description="Cyclic DNA codes of odd length over Z4 + u*Z4, u^2 = 1.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--config", metavar="FILE", help="key = value cap settings")
    common.add_argument("--max-n", dest="max_n", type=int, help="override the n bound")
    common.add_argument(
        "--cap",
        dest="enumeration_cap",
        type=int,
        help="override the enumeration word cap",
    )
    common.add_argument(
        "--pair-cap",
        dest="pair_cap",
        type=int,
        help="override the pairwise-similarity cap",
    )

    p_factor = sub.add_parser(
        "factor", parents=[common], help="factor x^n - 1 mod 2 and over Z4"
    )
    p_factor.add_argument("n", type=int)
    p_factor.set_defaults(func=cmd_factor)

    p_check = sub.add_parser(
        "check", parents=[common], help="analyze one code spec"
    )
    p_check.add_argument("--n", type=int, required=True)
    p_check.add_argument("--g1", required=True, metavar="POLY")
    p_check.add_argument("--g2", default="[]", metavar="POLY")
    p_check.add_argument("--g3", default=None, metavar="POLY")
    p_check.add_argument(
        "--strict", action="store_true", help="require divisibility over Z4, not just mod 2"
    )
    p_check.add_argument("--reversible", action="store_true")
    p_check.add_argument("--rc", action="store_true", help="reverse-complement closure")
    p_check.add_argument("--deletion", action="store_true")
    p_check.add_argument("--gc", action="store_true", help="GC-content spectrum")
    p_check.add_argument(
        "--granularity", choices=("symbol", "nucleotide"), default="symbol"
    )
    p_check.add_argument("--emit-words", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_catalog = sub.add_parser(
        "catalog", parents=[common], help="sweep all specs for one length"
    )
    p_catalog.add_argument("n", type=int)
    p_catalog.add_argument("--g2-degree-bound", type=int, default=None)
    p_catalog.add_argument(
        "--g2-coeffs",
        default=None,
        metavar="LIST",
        help="comma-separated ring elements for the widened g2 family",
    )
    p_catalog.set_defaults(func=cmd_catalog)

    p_tables = sub.add_parser(
        "tables", parents=[common], help="print the published-layout tables"
    )
    p_tables.set_defaults(func=cmd_tables)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        # Flush inside the try so a reader that went away (e.g. a closed
        # pipe) surfaces here instead of at interpreter shutdown.
        sys.stdout.flush()
        return result
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EnumerationCapExceeded, PairCapExceeded) as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # Reader went away (e.g. piped into head); suppress the traceback.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
