# HopfChains/algebra.py
# From HopfChains
# Copyright 2026 HopfChains contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# DESCRIPTION
# Exact building blocks shared by every other module: rational scalars,
# graded generators, words and monomials over them, finite linear
# combinations, partitions and compositions, and a bridge to SymPy's exact
# matrices over QQ.
from __future__ import annotations
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial, lcm, prod
from typing import Callable, Iterable, Iterator, Mapping, Sequence
import numpy as np
from sympy import Matrix, Rational, QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions as sympy_partitions

type Partition = tuple[int, ...]
type Composition = tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# A generator of a graded connected Hopf algebra. Ordering compares the
# degree first, so the order refines the ordering by degree; ties are
# broken by the instance supplied key.
@dataclass(frozen=True, order=True)
class GeneratorId:
    degree: int
    key: tuple[int, ...]
    label: str
    payload: object = field(default=None, compare=False, repr=False)

    @cached_property
    def _hash(self) -> int:
        return hash((self.degree, self.key, self.label))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self.label


def _join_labels(letters: Sequence[GeneratorId], separator: str) -> str:
    if not letters:
        return "()"
    labels = [letter.label for letter in letters]
    if separator == "" and any(len(label) != 1 for label in labels):
        separator = "|"
    return separator.join(labels)


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple[GeneratorId, ...] = ()

    @cached_property
    def _hash(self) -> int:
        return hash(self.letters)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def degree(self) -> int:
        return sum(letter.degree for letter in self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def label(self) -> str:
        return _join_labels(self.letters, "")

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        return self.label


# Letters are kept weakly decreasing so equal multisets are equal objects
@dataclass(frozen=True, order=True)
class Monomial:
    letters: tuple[GeneratorId, ...] = ()

    @classmethod
    def of(cls, generators: Iterable[GeneratorId]) -> Monomial:
        return cls(tuple(sorted(generators, reverse=True)))

    @cached_property
    def _hash(self) -> int:
        return hash(("monomial", self.letters))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def degree(self) -> int:
        return sum(letter.degree for letter in self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def label(self) -> str:
        return _join_labels(self.letters, ",")

    def multiplicity(self, generator: GeneratorId) -> int:
        return self.letters.count(generator)

    def multiplicities(self) -> Counter[GeneratorId]:
        return Counter(self.letters)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial.of(self.letters + other.letters)

    def __str__(self) -> str:
        return self.label


type BasisElement = Word | Monomial
type Tensor = tuple[BasisElement, ...]


# Canonical order of a degree-n basis: longest factorization first, ties
# broken lexicographically on the stored factor sequence
def basis_sort_key(element: BasisElement) -> tuple:
    return -element.length, element.letters


def multiplicity_factorial(letters: Iterable[object]) -> int:
    return prod(factorial(count) for count in Counter(letters).values())


class LinComb[K]:
    """A finite linear combination of keys with exact rational coefficients.

    Zero coefficients are never stored. Keys are basis elements or tensors
    (tuples of basis elements of a fixed arity)."""
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, Fraction | int] | None = None):
        self._terms: dict[K, Fraction] = {}
        if terms:
            for key, coefficient in terms.items():
                if coefficient != 0:
                    self._terms[key] = Fraction(coefficient)

    @classmethod
    def single(cls, key: K, coefficient: Fraction | int = 1) -> LinComb[K]:
        return cls({key: coefficient})

    @classmethod
    def accumulate(cls, pairs: Iterable[tuple[K, Fraction | int]]) -> LinComb[K]:
        totals: dict[K, Fraction] = {}
        for key, coefficient in pairs:
            totals[key] = totals.get(key, ZERO) + coefficient
        return cls(totals)

    def __getitem__(self, key: K) -> Fraction:
        return self._terms.get(key, ZERO)

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator[K]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def as_dict(self) -> dict[K, Fraction]:
        return dict(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: Fraction(v) for k, v in other.items() if v != 0}
        return NotImplemented

    __hash__ = None

    def __add__(self, other: LinComb[K]) -> LinComb[K]:
        totals = dict(self._terms)
        for key, coefficient in other.items():
            totals[key] = totals.get(key, ZERO) + coefficient
        return LinComb(totals)

    def __neg__(self) -> LinComb[K]:
        return self.scale(-1)

    def __sub__(self, other: LinComb[K]) -> LinComb[K]:
        return self + (-other)

    def scale(self, factor: Fraction | int) -> LinComb[K]:
        return LinComb({key: coefficient * factor for key, coefficient in self._terms.items()})

    def __rmul__(self, factor: Fraction | int) -> LinComb[K]:
        return self.scale(factor)

    def times(self, other: LinComb[K], product: Callable[[K, K], K]) -> LinComb[K]:
        totals: dict[K, Fraction] = {}
        for left, left_coefficient in self._terms.items():
            for right, right_coefficient in other.items():
                key = product(left, right)
                totals[key] = totals.get(key, ZERO) + left_coefficient * right_coefficient
        return LinComb(totals)

    def map_keys[T](self, function: Callable[[K], T]) -> LinComb[T]:
        return LinComb.accumulate((function(key), coefficient)
                                  for key, coefficient in self._terms.items())

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), ZERO)

    def support(self) -> set[K]:
        return set(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{format_rational(c)}*{key}" for key, c in self._terms.items())


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(parts[i] >= parts[i + 1]
                                              for i in range(len(parts) - 1))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, longest first, ties in ascending lexicographic order."""
    return list(_partitions(n))


@lru_cache(maxsize=64)
def _partitions(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    result = []
    for multiplicities in sympy_partitions(n):
        parts = [part for part, count in multiplicities.items() for _ in range(count)]
        result.append(tuple(sorted(parts, reverse=True)))
    return tuple(sorted(result, key=lambda p: (-len(p), p)))


def compositions_of(n: int, length: int | None = None) -> list[Composition]:
    """Compositions of n into positive parts, optionally of a fixed length."""
    if n == 0:
        return [()] if length in (None, 0) else []
    lengths = range(1, n + 1) if length is None else [length]
    result = []
    for k in lengths:
        if k < 1 or k > n:
            continue
        for cuts in combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            result.append(tuple(bounds[i + 1] - bounds[i] for i in range(k)))
    return result


def weak_compositions_of(n: int, length: int) -> list[Composition]:
    """Compositions of n into exactly `length` nonnegative parts."""
    if length == 0:
        return [()] if n == 0 else []
    result = []
    for bars in combinations(range(n + length - 1), length - 1):
        bounds = (-1,) + bars + (n + length - 1,)
        result.append(tuple(bounds[i + 1] - bounds[i] - 1 for i in range(length)))
    return result


# Exact matrices over QQ

def _to_qq(value: Fraction | int):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_domain_matrix(rows: Sequence[Sequence[Fraction | int]]) -> DomainMatrix:
    height = len(rows)
    width = len(rows[0]) if rows else 0
    return DomainMatrix([[_to_qq(x) for x in row] for row in rows], (height, width), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> list[list[Fraction]]:
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in matrix.to_Matrix().tolist()]


def exact_inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return from_domain_matrix(to_domain_matrix(rows).inv())


def exact_nullspace(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    matrix = Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row]
                     for row in rows])
    return [[Fraction(int(x.p), int(x.q)) for x in vector] for vector in matrix.nullspace()]


# Products of integer matrices are exact in float64 while every partial sum
# stays below 2^53, and in int64 below 2^63
FLOAT_EXACT = 2 ** 53
INT64_EXACT = 2 ** 63


def _largest_entry(numerators: np.ndarray) -> int:
    return max((abs(v) for v in numerators.flat), default=0)


def _largest_row_sum(numerators: np.ndarray) -> int:
    return max((sum(abs(v) for v in row) for row in numerators), default=0)


@dataclass(frozen=True, eq=False)
class IntegerMatrix:
    """A rational matrix stored as Python integer numerators over one common denominator.

    Products run through numpy in float64 or int64 whenever the entries are
    small enough for the result to be exact, and fall back to Python
    integers otherwise."""
    numerators: np.ndarray  # dtype object
    denominator: int = 1

    @classmethod
    def from_sparse(cls, rows: Sequence[Mapping[int, Fraction | int]], width: int) -> IntegerMatrix:
        denominator = 1
        for row in rows:
            for value in row.values():
                denominator = lcm(denominator, Fraction(value).denominator)
        numerators = np.zeros((len(rows), width), dtype=object)
        for i, row in enumerate(rows):
            for j, value in row.items():
                value = Fraction(value)
                numerators[i, j] = value.numerator * (denominator // value.denominator)
        return cls(numerators, denominator)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> IntegerMatrix:
        width = len(rows[0]) if rows else 0
        return cls.from_sparse([{j: v for j, v in enumerate(row) if v} for row in rows], width)

    @property
    def shape(self) -> tuple[int, int]:
        return self.numerators.shape

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.numerators[i, j]), self.denominator)

    def to_rows(self) -> list[list[Fraction]]:
        return [[Fraction(int(v), self.denominator) for v in row] for row in self.numerators]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(self.numerators.T.copy(), self.denominator)

    def is_identity(self) -> bool:
        height, width = self.shape
        return height == width and np.array_equal(
            self.numerators, np.identity(height, dtype=object) * self.denominator)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        left, right = _largest_row_sum(self.numerators), _largest_entry(other.numerators)
        if left < FLOAT_EXACT and right < FLOAT_EXACT and left * right < FLOAT_EXACT:
            product = self.numerators.astype(np.float64) @ other.numerators.astype(np.float64)
            numerators = np.rint(product).astype(np.int64).astype(object)
        elif left < INT64_EXACT and right < INT64_EXACT and left * right < INT64_EXACT:
            product = self.numerators.astype(np.int64) @ other.numerators.astype(np.int64)
            numerators = product.astype(object)
        else:
            numerators = np.dot(self.numerators, other.numerators)
        return IntegerMatrix(numerators, self.denominator * other.denominator)
