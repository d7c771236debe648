"""Command-line surface: counts, sequences, verification batteries, and the
decompose/reconstruct pair, one JSON object per stdout line.

Exit codes: 0 success, 1 usage error (bad flags or inputs outside a command's
domain), 2 verification failure (two methods for the same quantity disagreed,
which would falsify a formula or the bijection).  Counts are serialized as
decimal strings because they outgrow 64-bit integers quickly.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import permutations
from typing import Sequence

from .decompose import (
    InternalInconsistency,
    InvalidRecord,
    InvariantViolation,
    NotAlternating,
    NotExactlyOne,
    enumerate_by_decomposition,
    format_record,
    parse_record,
    reconstruct,
    split,
)
from .enumeration import GenerationFilter, count, euler_zigzag, generate, table1_oracle
from .formulas import (
    STATISTICS,
    OutOfValidityRange,
    SequenceSpec,
    a_n,
    closed_form_even_321,
    closed_form_odd,
    convolution_even_321,
    convolution_odd_321,
    decomposition_sum,
    table1_formula,
)
from .perm_core import (
    AlternationClass,
    PATTERN_123,
    PATTERN_321,
    Pattern,
    count_occurrences,
    format_perm,
    parse_perm,
    reverse,
)

OK = 0
USAGE_ERROR = 1
VERIFICATION_FAILURE = 2

_PATTERNS = {"321": PATTERN_321, "123": PATTERN_123}
_METHODS = ("closed_form", "convolution", "decomposition_sum", "oracle", "bijection")


class UsageError(Exception):
    """Bad flags or inputs; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2; usage errors must exit 1
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _emit(command: str, inputs: dict, value: str, method: str, started: float, **extra) -> None:
    line = {
        "command": command,
        "inputs": inputs,
        "value": value,
        "method": method,
        "elapsed_ms": int((time.perf_counter() - started) * 1000),
    }
    line.update(extra)
    print(json.dumps(line))


def _emit_mismatch(command: str, inputs: dict, expected, actual, started: float) -> None:
    line = {
        "command": command,
        "inputs": inputs,
        "error": "mismatch",
        "expected": str(expected),
        "actual": str(actual),
        "elapsed_ms": int((time.perf_counter() - started) * 1000),
    }
    print(json.dumps(line))
    print(f"{command}: mismatch at {inputs}: expected {expected}, got {actual}", file=sys.stderr)


def _host_class(pattern: Pattern, cls: AlternationClass) -> AlternationClass:
    """Class whose one-321 hosts are counted by a (pattern, class) query.

    Complementation flips both the class and the monotone pattern, so
    exactly-one-123 counts equal exactly-one-321 counts in the other class.
    """
    return cls.flipped if pattern == PATTERN_123 else cls


def _count_exactly_one(pattern: Pattern, cls: AlternationClass, n: int, method: str) -> int:
    if method == "oracle":
        return count(GenerationFilter(cls=cls, length=n, exact_occurrences=(pattern, 1)))
    if method == "closed_form":
        return a_n(SequenceSpec(pattern, cls), n)
    host = _host_class(pattern, cls)
    if method == "decomposition_sum":
        return decomposition_sum(n, host) if n >= 3 else 0
    if method == "bijection":
        return sum(1 for _ in enumerate_by_decomposition(n, host))
    if method == "convolution":
        m, odd = divmod(n, 2)
        if odd:
            return convolution_odd_321(m) if m >= 1 else 0
        if host is not AlternationClass.UP_DOWN:
            raise UsageError(
                "--method convolution: no displayed sum covers even-length 123 counts; "
                "use decomposition_sum or closed_form"
            )
        return convolution_even_321(m) if m >= 2 else 0
    raise UsageError(f"--method: unknown method {method!r}")


def _cmd_count(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    cls = AlternationClass.from_code(args.cls)
    inputs: dict = {"class": args.cls, "n": args.n}
    if args.exactly is None:
        if args.pattern is not None:
            raise UsageError("--pattern requires --exactly (occurrence target)")
        method = args.method or "oracle"
        if method != "oracle":
            raise UsageError(f"--method {method}: unrestricted counts only support oracle")
        value = count(GenerationFilter(cls=cls, length=args.n))
        _emit("count", inputs, str(value), method, started)
        return OK
    if args.pattern is None:
        raise UsageError("--exactly requires --pattern")
    pattern = _PATTERNS[args.pattern]
    inputs.update({"pattern": args.pattern, "exactly": args.exactly})
    if args.exactly == 1:
        method = args.method or "closed_form"
        value = _count_exactly_one(pattern, cls, args.n, method)
    else:
        method = args.method or "oracle"
        if method != "oracle":
            raise UsageError(f"--method {method}: only --exactly 1 has formula backing")
        value = count(GenerationFilter(cls=cls, length=args.n, exact_occurrences=(pattern, args.exactly)))
    _emit("count", inputs, str(value), method, started)
    return OK


def _cmd_sequence(args: argparse.Namespace) -> int:
    cls = AlternationClass.from_code(args.cls)
    pattern = _PATTERNS[args.pattern]
    method = args.method or "closed_form"
    if method not in ("closed_form", "oracle"):
        raise UsageError(f"--method {method}: sequence supports closed_form or oracle")
    for n in range(3, args.n_max + 1):
        started = time.perf_counter()
        if method == "closed_form":
            value = a_n(SequenceSpec(pattern, cls), n)
        else:
            value = count(GenerationFilter(cls=cls, length=n, exact_occurrences=(pattern, 1)))
        inputs = {"pattern": args.pattern, "class": args.cls, "n": n}
        _emit("sequence", inputs, str(value), method, started)
    return OK


def _cmd_verify_table(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    checks = 0
    for n in range(0, args.n_max + 1):
        for cls in AlternationClass:
            for statistic in STATISTICS:
                t0 = time.perf_counter()
                inputs = {"class": cls.value, "n": n, "statistic": statistic}
                actual = table1_oracle(cls, n, statistic)
                checks += 1
                try:
                    expected = table1_formula(cls, n, statistic)
                except OutOfValidityRange:
                    _emit("verify-table", inputs, str(actual), "oracle", t0, note="out_of_validity")
                    continue
                if expected != actual:
                    _emit_mismatch("verify-table", inputs, expected, actual, t0)
                    return VERIFICATION_FAILURE
                _emit("verify-table", inputs, str(actual), "closed_form", t0)
    _emit("verify-table", {"n_max": args.n_max}, str(checks), "oracle", started)
    return OK


def _cmd_verify_identity(args: argparse.Namespace) -> int:
    bound = args.n_max
    started = time.perf_counter()
    for m in range(2, bound + 1):
        expected, actual = closed_form_even_321(m), convolution_even_321(m)
        if expected != actual:
            _emit_mismatch("verify-identity", {"family": "even_321", "m": m}, expected, actual, started)
            return VERIFICATION_FAILURE
    _emit("verify-identity", {"family": "even_321", "m_max": bound}, str(max(bound - 1, 0)), "convolution", started)

    started = time.perf_counter()
    for m in range(1, bound + 1):
        expected, actual = closed_form_odd(m), convolution_odd_321(m)
        if expected != actual:
            _emit_mismatch("verify-identity", {"family": "odd", "m": m}, expected, actual, started)
            return VERIFICATION_FAILURE
    _emit("verify-identity", {"family": "odd", "m_max": bound}, str(bound), "convolution", started)

    for cls, label, pattern in (
        (AlternationClass.UP_DOWN, "decomposition_UD", PATTERN_321),
        (AlternationClass.DOWN_UP, "decomposition_DU", PATTERN_123),
    ):
        started = time.perf_counter()
        for n in range(3, bound + 1):
            expected = a_n(SequenceSpec(pattern, AlternationClass.UP_DOWN), n)
            actual = decomposition_sum(n, cls)
            if expected != actual:
                _emit_mismatch("verify-identity", {"family": label, "n": n}, expected, actual, started)
                return VERIFICATION_FAILURE
        _emit("verify-identity", {"family": label, "n_max": bound}, str(max(bound - 2, 0)), "decomposition_sum", started)
    return OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    w = parse_perm(args.perm)
    try:
        record = split(w)
    except NotExactlyOne:
        if count_occurrences(w, PATTERN_123) == 1:
            # 123-hosts are out of the engine's domain; reversal maps them to 321-hosts
            print(
                f"hint: {args.perm} contains 123 exactly once; decompose its reversal "
                f"{format_perm(reverse(w))} instead",
                file=sys.stderr,
            )
        raise
    _emit("decompose", {"perm": args.perm}, format_record(record), "bijection", started)
    return OK


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    record = parse_record(args.record)
    w = reconstruct(record)
    _emit("reconstruct", {"record": args.record}, format_perm(w), "bijection", started)
    return OK


def _suite_closed_form_vs_oracle(n_max: int):
    checks = 0
    for code, pattern in _PATTERNS.items():
        for cls in AlternationClass:
            for n in range(3, n_max + 1):
                expected = a_n(SequenceSpec(pattern, cls), n)
                actual = count(GenerationFilter(cls=cls, length=n, exact_occurrences=(pattern, 1)))
                checks += 1
                if expected != actual:
                    inputs = {"pattern": code, "class": cls.value, "n": n}
                    return checks, (inputs, expected, actual)
    return checks, None


def _suite_table1(n_max: int):
    checks = 0
    for n in range(0, n_max + 1):
        for cls in AlternationClass:
            for statistic in STATISTICS:
                actual = table1_oracle(cls, n, statistic)
                checks += 1
                try:
                    expected = table1_formula(cls, n, statistic)
                except OutOfValidityRange:
                    continue
                if expected != actual:
                    inputs = {"class": cls.value, "n": n, "statistic": statistic}
                    return checks, (inputs, expected, actual)
    return checks, None


def _suite_identities(_n_max: int, bound: int = 200):
    checks = 0
    for m in range(2, bound + 1):
        checks += 1
        if convolution_even_321(m) != closed_form_even_321(m):
            return checks, ({"family": "even_321", "m": m}, closed_form_even_321(m), convolution_even_321(m))
    for m in range(1, bound + 1):
        checks += 1
        if convolution_odd_321(m) != closed_form_odd(m):
            return checks, ({"family": "odd", "m": m}, closed_form_odd(m), convolution_odd_321(m))
    for cls, pattern in ((AlternationClass.UP_DOWN, PATTERN_321), (AlternationClass.DOWN_UP, PATTERN_123)):
        for n in range(3, bound + 1):
            checks += 1
            expected = a_n(SequenceSpec(pattern, AlternationClass.UP_DOWN), n)
            if decomposition_sum(n, cls) != expected:
                inputs = {"family": f"decomposition_{cls.value}", "n": n}
                return checks, (inputs, expected, decomposition_sum(n, cls))
    return checks, None


def _suite_bijection(n_max: int):
    checks = 0
    for n in range(3, n_max + 1):
        for cls in AlternationClass:
            oracle = set(generate(GenerationFilter(cls=cls, length=n, exact_occurrences=(PATTERN_321, 1))))
            built = list(enumerate_by_decomposition(n, cls))
            checks += 1
            if len(built) != len(set(built)) or set(built) != oracle:
                inputs = {"class": cls.value, "n": n}
                return checks, (inputs, f"{len(oracle)} distinct hosts", f"{len(built)} built")
            for w in sorted(oracle):
                record = split(w)
                checks += 1
                if reconstruct(record) != w or w[record.j - 1] != record.j:
                    inputs = {"class": cls.value, "perm": format_perm(w)}
                    return checks, (inputs, format_perm(w), format_record(record))
    return checks, None


def _suite_zigzag(n_max: int):
    checks = 0
    for n in range(0, n_max + 1):
        expected = euler_zigzag(n)
        actual = count(GenerationFilter(cls=AlternationClass.UP_DOWN, length=n))
        checks += 1
        if expected != actual:
            return checks, ({"n": n}, expected, actual)
    return checks, None


def _suite_symmetry(n_max: int):
    checks = 0
    for n in range(0, min(n_max, 8) + 1):
        for w in permutations(range(1, n + 1)):
            checks += 1
            if count_occurrences(w, PATTERN_123) != count_occurrences(reverse(w), PATTERN_321):
                return checks, ({"perm": format_perm(w)}, "equal counts", "unequal")
        if n >= 4 and n % 2 == 0:
            ud_123 = set(generate(GenerationFilter(cls=AlternationClass.UP_DOWN, length=n,
                                                   exact_occurrences=(PATTERN_123, 1))))
            du_321 = set(generate(GenerationFilter(cls=AlternationClass.DOWN_UP, length=n,
                                                   exact_occurrences=(PATTERN_321, 1))))
            checks += 1
            if {reverse(w) for w in ud_123} != du_321:
                return checks, ({"n": n}, "reversal maps UD one-123 onto DU one-321", "sets differ")
    return checks, None


_SUITES = (
    ("closed_form_vs_oracle", "closed_form", _suite_closed_form_vs_oracle),
    ("table1", "closed_form", _suite_table1),
    ("identities", "convolution", _suite_identities),
    ("bijection", "bijection", _suite_bijection),
    ("zigzag", "oracle", _suite_zigzag),
    ("symmetry", "oracle", _suite_symmetry),
)


def _cmd_selftest(args: argparse.Namespace) -> int:
    for name, method, suite in _SUITES:
        started = time.perf_counter()
        checks, failure = suite(args.n_max)
        inputs = {"suite": name, "n_max": args.n_max}
        if failure is not None:
            where, expected, actual = failure
            _emit_mismatch("selftest", {"suite": name, **where}, expected, actual, started)
            _emit("selftest", inputs, "fail", method, started, checks=checks)
            return VERIFICATION_FAILURE
        _emit("selftest", inputs, "pass", method, started, checks=checks)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="altperms", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("count", _cmd_count, help="count alternating permutations, optionally by occurrence target")
    p.add_argument("--pattern", choices=sorted(_PATTERNS))
    p.add_argument("--class", dest="cls", choices=["UD", "DU"], default="UD")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--exactly", type=_nonnegative)
    p.add_argument("--method", choices=_METHODS)

    p = add("sequence", _cmd_sequence, help="exactly-once counts for n = 3..n-max")
    p.add_argument("--pattern", choices=sorted(_PATTERNS), required=True)
    p.add_argument("--class", dest="cls", choices=["UD", "DU"], default="UD")
    p.add_argument("--n-max", type=_positive, default=10)
    p.add_argument("--method", choices=_METHODS)

    p = add("verify-table", _cmd_verify_table, help="tabulated 321-avoiding counts vs the oracle")
    p.add_argument("--n-max", type=_positive, default=10)

    p = add("verify-identity", _cmd_verify_identity, help="convolutions and decomposition sums vs closed forms")
    p.add_argument("--n-max", type=_positive, default=200)

    p = add("decompose", _cmd_decompose, help="split a one-321 alternating permutation into its record")
    p.add_argument("--perm", required=True)

    p = add("reconstruct", _cmd_reconstruct, help="rebuild the host permutation from a record")
    p.add_argument("--record", required=True)

    p = add("selftest", _cmd_selftest, help="run all verification suites")
    p.add_argument("--n-max", type=_positive, default=10)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, execute one subcommand, and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except (NotExactlyOne, NotAlternating, InvalidRecord, OutOfValidityRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (InvariantViolation, InternalInconsistency) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return VERIFICATION_FAILURE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
