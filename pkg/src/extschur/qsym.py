"""Quasisymmetric functions of one degree, in exact integer arithmetic.

Supports the monomial and fundamental bases, the change of basis through
refinement, the expansions indexed by standard extended tableaux, the
descent-count matrix recording those expansions, and an independent
standard-Young-tableau route for partition shapes used as a cross-check.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import factorial

from .compositions import (
    Composition,
    compositions_of,
    format_composition,
    is_partition,
    refinements,
)
from .linalg import determinant
from .tableaux import descent_composition, enumerate_set

BASES = ("M", "F")


@dataclass(frozen=True)
class QSymElement:
    """A homogeneous element: integer coefficients on the compositions of
    one degree, tagged with the basis the coefficients refer to.

    Zero coefficients are never stored, so equality is plain field
    equality.
    """

    degree: int
    basis: str
    coeffs: dict

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, got {self.basis!r}")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Composition, int] = {}
        for key, value in self.coeffs.items():
            alpha = Composition(key)
            if alpha.weight != self.degree:
                raise ValueError(
                    f"key {alpha} has weight {alpha.weight}, expected degree {self.degree}"
                )
            if not isinstance(value, int):
                raise ValueError(f"coefficients must be integers, got {value!r}")
            if value:
                clean[alpha] = value
        object.__setattr__(self, "coeffs", clean)

    def terms(self) -> list[tuple[Composition, int]]:
        """Terms sorted lexicographically by composition."""
        return sorted(self.coeffs.items())

    def coefficient(self, alpha) -> int:
        return self.coeffs.get(Composition(alpha), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"composition": list(alpha), "coefficient": c}
                for alpha, c in self.terms()
            ],
        }


def monomial(alpha) -> QSymElement:
    """The monomial basis element indexed by alpha."""
    alpha = Composition(alpha)
    return QSymElement(alpha.weight, "M", {alpha: 1})


def fundamental(alpha) -> QSymElement:
    """The fundamental basis element indexed by alpha."""
    alpha = Composition(alpha)
    return QSymElement(alpha.weight, "F", {alpha: 1})


def fundamental_to_monomial(x: QSymElement) -> QSymElement:
    """Expand each fundamental term as the sum of monomials over all
    refinements of its index."""
    if x.basis != "F":
        raise ValueError("expected a fundamental-basis element")
    out: dict[Composition, int] = {}
    for alpha, c in x.coeffs.items():
        for beta in refinements(alpha):
            out[beta] = out.get(beta, 0) + c
    return QSymElement(x.degree, "M", out)


def monomial_to_fundamental(x: QSymElement) -> QSymElement:
    """Invert the refinement expansion by a triangular solve.

    Refining strictly increases length, so the change of basis is
    unitriangular once compositions are ordered by length; peeling off the
    shortest remaining index at each step solves the system exactly.
    """
    if x.basis != "M":
        raise ValueError("expected a monomial-basis element")
    remaining = dict(x.coeffs)
    result: dict[Composition, int] = {}
    while remaining:
        alpha = min(remaining, key=lambda a: (len(a), a))
        c = remaining.pop(alpha)
        if not c:
            continue
        result[alpha] = c
        for beta in refinements(alpha):
            if beta != alpha:
                remaining[beta] = remaining.get(beta, 0) - c
    return QSymElement(x.degree, "F", result)


def extended_schur_in_F(alpha) -> QSymElement:
    """Fundamental expansion of the extended Schur function of alpha:
    one term per standard extended tableau, indexed by its descent
    composition."""
    alpha = Composition(alpha)
    counts = Counter(descent_composition(t) for t in enumerate_set(alpha))
    return QSymElement(alpha.weight, "F", dict(counts))


def extended_schur_in_M(alpha) -> QSymElement:
    """Monomial expansion of the extended Schur function; all
    coefficients are nonnegative."""
    return fundamental_to_monomial(extended_schur_in_F(alpha))


def specialize(x: QSymElement, k: int) -> dict[tuple[int, ...], int]:
    """Restrict a monomial-basis element to k variables.

    Each term spreads its parts over the increasing placements among
    positions 1..k; indices longer than k contribute nothing.  Keys are
    exponent vectors of length k.
    """
    if x.basis != "M":
        raise ValueError("expected a monomial-basis element")
    if k < 0:
        raise ValueError("k must be nonnegative")
    poly: dict[tuple[int, ...], int] = {}
    for alpha, c in x.coeffs.items():
        if len(alpha) > k:
            continue
        for places in combinations(range(k), len(alpha)):
            exponents = [0] * k
            for position, part in zip(places, alpha):
                exponents[position] = part
            key = tuple(exponents)
            poly[key] = poly.get(key, 0) + c
    return poly


@dataclass(frozen=True)
class KMatrix:
    """Counts of standard extended tableaux by (shape, descent) pair.

    Rows and columns are indexed by the compositions of n in lexicographic
    order; entry (alpha, beta) counts tableaux of shape alpha with descent
    composition beta.  The diagonal is all ones and the determinant is
    +-1, so the recorded expansions are invertible over the integers.
    """

    n: int
    compositions: tuple[Composition, ...]
    entries: tuple[tuple[int, ...], ...]

    @cached_property
    def index(self) -> dict[Composition, int]:
        return {alpha: i for i, alpha in enumerate(self.compositions)}

    def entry(self, alpha, beta) -> int:
        return self.entries[self.index[Composition(alpha)]][self.index[Composition(beta)]]

    def determinant(self) -> int:
        return determinant(self.entries)

    def to_csv(self) -> str:
        """Header row and column of composition strings, integer entries."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        labels = [format_composition(alpha) for alpha in self.compositions]
        writer.writerow([""] + labels)
        for label, row in zip(labels, self.entries):
            writer.writerow([label] + list(row))
        return buffer.getvalue()


def k_matrix(n: int) -> KMatrix:
    """The full descent-count matrix in degree n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    comps = compositions_of(n)
    index = {alpha: i for i, alpha in enumerate(comps)}
    rows = []
    for alpha in comps:
        row = [0] * len(comps)
        for t in enumerate_set(alpha):
            row[index[descent_composition(t)]] += 1
        rows.append(tuple(row))
    return KMatrix(n, tuple(comps), tuple(rows))


def ribbon_in_shin(beta) -> dict[Composition, int]:
    """Expansion coefficients of the ribbon indexed by beta on the dual
    side of the descent-count pairing: alpha maps to the number of
    standard extended tableaux of shape alpha with descent composition
    beta (the beta column of the descent-count matrix), nonzero values
    only."""
    beta = Composition(beta)
    out: dict[Composition, int] = {}
    for alpha in compositions_of(beta.weight):
        count = sum(1 for t in enumerate_set(alpha) if descent_composition(t) == beta)
        if count:
            out[alpha] = count
    return out


def schur_in_F(lmbda) -> QSymElement:
    """Fundamental expansion of the Schur function of a partition shape.

    Enumerates standard Young tableaux independently of the extended
    machinery (growth by adding one box at a time) and uses the row form
    of the descent rule: i is a descent when i+1 lies in a strictly
    higher row.  Serves as a cross-check for :func:`extended_schur_in_F`
    on partitions.
    """
    lmbda = Composition(lmbda)
    if not is_partition(lmbda):
        raise ValueError(f"{lmbda} is not a partition")
    n = lmbda.weight
    counts: Counter = Counter()
    for row_of in _syt_row_assignments(tuple(lmbda)):
        if n == 0:
            key = Composition()
        else:
            descents = [i for i in range(1, n) if row_of[i + 1] > row_of[i]]
            parts = []
            previous = 0
            for d in descents + [n]:
                parts.append(d - previous)
                previous = d
            key = Composition(parts)
        counts[key] += 1
    return QSymElement(n, "F", dict(counts))


def _syt_row_assignments(shape: tuple[int, ...]):
    """Yield, for every standard Young tableau of the partition shape,
    the tuple whose v-th entry is the (1-based) row of v.

    Entries are inserted in increasing order; a box is available in row r
    when the row is not full and the box below it is already filled, which
    forces rows and columns to increase.
    """
    n = sum(shape)
    counts = [0] * len(shape)
    row_of = [0] * (n + 1)

    def place(v: int):
        if v > n:
            yield tuple(row_of)
            return
        for r, part in enumerate(shape):
            if counts[r] < part and (r == 0 or counts[r - 1] > counts[r]):
                counts[r] += 1
                row_of[v] = r + 1
                yield from place(v + 1)
                counts[r] -= 1

    yield from place(1)


def hook_length_count(lmbda) -> int:
    """Number of standard Young tableaux of a partition shape, by the
    hook length formula."""
    lmbda = Composition(lmbda)
    if not is_partition(lmbda):
        raise ValueError(f"{lmbda} is not a partition")
    product = 1
    for r, part in enumerate(lmbda):
        for c in range(part):
            arm = part - c - 1
            leg = sum(1 for upper in lmbda[r + 1:] if upper > c)
            product *= arm + leg + 1
    return factorial(lmbda.weight) // product
