"""Constructive bijection for alternating permutations with exactly one 321.

Such a host w, with its unique occurrence at positions i < j < k, splits into
u = w_1..w_{j-1} w_k and v = w_i w_{j+1}..w_n.  Standardizing u and v gives a
pair (U, V) of 321-avoiding blocks whose boundary and shape constraints
characterize the host completely, so the host can be rebuilt from (n, j, U, V)
alone.  The value-assignment rules of the rebuild (middle entry w_j = j, rank
formulas for w_i and w_k) are derived, not quoted, so `reconstruct` re-splits
its own output and aborts loudly on any disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .enumeration import GenerationFilter, generate
from .perm_core import (
    AlternationClass,
    Occurrence,
    PATTERN_321,
    Perm,
    classify,
    count_occurrences,
    find_occurrences,
    format_perm,
    is_alternating,
    is_permutation,
    parse_perm,
    standardize,
    suffix_class,
)


class NotExactlyOne(ValueError):
    """The host's 321-occurrence count differs from 1 (outside the bijection's domain)."""

    def __init__(self, count: int):
        super().__init__(f"expected exactly one 321 occurrence, found {count}")
        self.count = count


class NotAlternating(ValueError):
    """The host satisfies neither alternation class."""


class InvalidRecord(ValueError):
    """A decomposition record violates the characterization's constraints."""


class InvariantViolation(RuntimeError):
    """A host with a unique 321 failed a condition the characterization guarantees.

    Never recoverable: it would falsify the decomposition characterization (or expose a
    transcription bug), so callers must not catch and continue.
    """


class InternalInconsistency(RuntimeError):
    """A rebuilt host failed its split round trip; derivation and split disagree."""


@dataclass(frozen=True)
class DecompositionRecord:
    """Right-hand side of the bijection: host length and class, the 1-based
    position j of the occurrence's middle entry, and the standardized blocks
    U (length j) and V (length n-j+1)."""

    n: int
    cls: AlternationClass
    j: int
    u: Perm
    v: Perm


def format_record(record: DecompositionRecord) -> str:
    """Text form, e.g. "n=6;class=UD;j=3;U=1,3,2;V=2,3,1,4"."""
    return (
        f"n={record.n};class={record.cls.value};j={record.j};"
        f"U={format_perm(record.u)};V={format_perm(record.v)}"
    )


def parse_record(text: str) -> DecompositionRecord:
    """Inverse of format_record; raises ValueError on malformed text."""
    parts = text.strip().split(";")
    keys = ("n", "class", "j", "U", "V")
    if len(parts) != 5 or [p.split("=", 1)[0] for p in parts] != list(keys):
        raise ValueError(
            f"malformed record text {text!r}: expected fields n;class;j;U;V in that order"
        )
    fields = dict(part.split("=", 1) for part in parts)
    return DecompositionRecord(
        n=int(fields["n"]),
        cls=AlternationClass.from_code(fields["class"]),
        j=int(fields["j"]),
        u=parse_perm(fields["U"]),
        v=parse_perm(fields["V"]),
    )


def locate_unique_321(w: Perm) -> Occurrence:
    """The (i, j, k) of the single 321 occurrence; NotExactlyOne otherwise.

    >>> locate_unique_321((1, 4, 3, 5, 2, 6))
    (2, 3, 5)
    """
    found = count_occurrences(w, PATTERN_321)
    if found != 1:
        raise NotExactlyOne(found)
    return find_occurrences(w, PATTERN_321, 1)[0]


def _record_problems(record: DecompositionRecord) -> list[str]:
    """All constraint violations of a record (empty list when valid)."""
    n, j, u, v = record.n, record.j, record.u, record.v
    problems = []
    if not 2 <= j <= n - 1:
        problems.append(f"j={j} outside 2..{n - 1}")
    if not is_permutation(u):
        problems.append("U is not a permutation")
    if not is_permutation(v):
        problems.append("V is not a permutation")
    if problems:
        return problems
    if len(u) != j:
        problems.append(f"U has length {len(u)}, expected j={j}")
    if len(v) != n - j + 1:
        problems.append(f"V has length {len(v)}, expected n-j+1={n - j + 1}")
    if problems:
        return problems
    if find_occurrences(u, PATTERN_321, 1):
        problems.append("U contains 321")
    if find_occurrences(v, PATTERN_321, 1):
        problems.append("V contains 321")
    if not is_alternating(u, record.cls):
        problems.append(f"U is not {record.cls.value}-alternating")
    v_cls = suffix_class(record.cls, j)
    if not is_alternating(v, v_cls):
        problems.append(f"V is not {v_cls.value}-alternating (required for j={j})")
    if u[-1] == j:
        problems.append("U ends in its largest entry")
    if v[0] == 1:
        problems.append("V begins with its smallest entry")
    return problems


def validate_record(record: DecompositionRecord) -> None:
    """Raise InvalidRecord unless every record constraint holds."""
    problems = _record_problems(record)
    if problems:
        raise InvalidRecord(f"{format_record(record)}: " + "; ".join(problems))


def split(w: Perm) -> DecompositionRecord:
    """Decompose an alternating host with exactly one 321 into its record.

    Re-checks every condition the characterization promises (the prefix/suffix
    value bounds, both blocks 321-avoiding with the right shapes and
    boundaries, middle entry w_j = j) and raises InvariantViolation if any
    fails despite a unique occurrence.

    >>> format_record(split((1, 4, 3, 5, 2, 6)))
    'n=6;class=UD;j=3;U=1,3,2;V=2,3,1,4'
    """
    classes = classify(w)
    if not classes:
        raise NotAlternating(f"{format_perm(w)} fits neither alternation class")
    i, j, k = locate_unique_321(w)
    n = len(w)
    cls = AlternationClass.UP_DOWN if AlternationClass.UP_DOWN in classes else AlternationClass.DOWN_UP

    wj = w[j - 1]
    for t in range(1, j):
        if t != i and w[t - 1] >= wj:
            raise InvariantViolation(f"entry w_{t}={w[t - 1]} before position j is not below w_j={wj}")
    for t in range(j + 1, n + 1):
        if t != k and w[t - 1] <= wj:
            raise InvariantViolation(f"entry w_{t}={w[t - 1]} after position j is not above w_j={wj}")
    if wj != j:
        raise InvariantViolation(f"middle entry w_j={wj} differs from its position j={j}")

    u = standardize(w[: j - 1] + (w[k - 1],))
    v = standardize((w[i - 1],) + w[j:])
    record = DecompositionRecord(n=n, cls=cls, j=j, u=u, v=v)
    problems = _record_problems(record)
    if problems:
        raise InvariantViolation(
            f"unique-321 host {format_perm(w)} produced an invalid record: " + "; ".join(problems)
        )
    return record


def _rebuild(record: DecompositionRecord) -> Perm:
    """Value assignment derived from the characterization (no verification)."""
    n, j, u, v = record.n, record.j, record.u, record.v
    w_i = j - 1 + v[0]  # v's first entry ranks w_i among {w_k} u {j+1..n}
    w_k = u[-1]  # u's values are {1..j-1} u {w_i}, so ranks below j are literal
    left_values = list(range(1, j)) + [w_i]  # rank r -> left_values[r-1]
    right_values = [w_k] + list(range(j + 1, n + 1))
    prefix = tuple(left_values[r - 1] for r in u[:-1])
    suffix = tuple(right_values[r - 1] for r in v[1:])
    return prefix + (j,) + suffix


def reconstruct(record: DecompositionRecord) -> Perm:
    """The unique host whose split is `record`.

    Validates the record (InvalidRecord), rebuilds the host, then re-splits it
    and compares; any disagreement means the derived value-assignment rules
    contradict split, and raises InternalInconsistency.

    >>> rec = parse_record("n=6;class=UD;j=3;U=1,3,2;V=2,3,1,4")
    >>> reconstruct(rec)
    (1, 4, 3, 5, 2, 6)
    """
    validate_record(record)
    w = _rebuild(record)
    try:
        roundtrip = split(w)
    except (NotAlternating, NotExactlyOne, InvariantViolation) as exc:
        raise InternalInconsistency(
            f"rebuilt host {format_perm(w)} of {format_record(record)} does not split: {exc}"
        ) from exc
    if roundtrip != record:
        raise InternalInconsistency(
            f"rebuilt host {format_perm(w)} splits to {format_record(roundtrip)}, "
            f"not to {format_record(record)}"
        )
    return w


def enumerate_by_decomposition(n: int, cls: AlternationClass) -> Iterator[Perm]:
    """All length-n `cls` hosts with exactly one 321, built from records.

    Iterates j ascending and the valid (U, V) block pairs lexicographically,
    reconstructing each; every emitted host has already survived its split
    round trip.
    """
    for j in range(2, n):
        right_blocks = list(
            generate(
                GenerationFilter(
                    cls=suffix_class(cls, j),
                    length=n - j + 1,
                    avoid=PATTERN_321,
                    begins_with_smallest=False,
                )
            )
        )
        if not right_blocks:
            continue
        left_filter = GenerationFilter(
            cls=cls, length=j, avoid=PATTERN_321, ends_in_largest=False
        )
        for u in generate(left_filter):
            for v in right_blocks:
                yield reconstruct(DecompositionRecord(n=n, cls=cls, j=j, u=u, v=v))
