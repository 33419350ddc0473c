# HopfChains/rock.py
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
# Closed forms for the rock-breaking chain on partitions of n: eigenfunctions
# as sums over ways to split μ into pieces of the parts of λ, the balls in
# boxes law of k binary breaks, absorption curves and tail bounds, and the
# left eigenfunctions written through power sums.
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence
from HopfChains.algebra import ONE, ZERO, Partition, is_partition, partitions_of
from HopfChains.errors import InvalidInputError

type PartitionPolynomial = dict[Partition, Fraction]


def _check_sizes(mu: Sequence[int], lam: Sequence[int]) -> None:
    for p in (mu, lam):
        if not is_partition(tuple(p)):
            raise InvalidInputError("Not a partition.", tuple(p))
    if sum(mu) != sum(lam):
        raise InvalidInputError("Partitions of different sizes.", (tuple(mu), tuple(lam)))


def decompositions(mu: Sequence[int], lam: Sequence[int]) -> Iterator[tuple[Partition, ...]]:
    """Sequences (μ^1, ..., μ^l) with μ^j a partition of λ_j whose multiset union is μ."""
    remaining = Counter(mu)

    def extend(j: int, chosen: list[Partition]) -> Iterator[tuple[Partition, ...]]:
        if j == len(lam):
            if not +remaining:
                yield tuple(chosen)
            return
        for piece in partitions_of(lam[j]):
            needed = Counter(piece)
            if all(remaining[part] >= count for part, count in needed.items()):
                remaining.subtract(needed)
                chosen.append(piece)
                yield from extend(j + 1, chosen)
                chosen.pop()
                remaining.update(needed)

    yield from extend(0, [])


def refines(mu: Sequence[int], lam: Sequence[int]) -> bool:
    return next(decompositions(mu, lam), None) is not None


def _multiplicity_factorial(p: Partition) -> int:
    return prod(factorial(count) for count in Counter(p).values())


def rock_f(mu: Sequence[int], lam: Sequence[int]) -> Fraction:
    """The μ-th right eigenfunction evaluated at λ."""
    _check_sizes(mu, lam)
    total = sum((Fraction(prod(factorial(part) for part in lam),
                          prod(_multiplicity_factorial(piece) for piece in pieces))
                 for pieces in decompositions(mu, lam)), ZERO)
    return total / prod(factorial(part) for part in mu)


def rock_g(lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """The λ-th left eigenfunction evaluated at μ."""
    _check_sizes(mu, lam)
    total = sum((prod((Fraction(factorial(len(piece) - 1), _multiplicity_factorial(piece))
                       for piece in pieces), start=ONE)
                 for pieces in decompositions(mu, lam)), ZERO)
    sign = (-1) ** (len(mu) - len(lam))
    return (sign * total * prod(factorial(part) for part in lam)
            / prod(factorial(part) for part in mu))


def balls_in_boxes(n: int, k: int) -> dict[Partition, Fraction]:
    """Law of the partition after k binary breaks of (n): n balls dropped into 2^k boxes."""
    boxes = 2 ** k
    law = {}
    for lam in partitions_of(n):
        if len(lam) > boxes:
            continue
        counts = Counter(lam)
        arrangements = factorial(boxes) // (factorial(boxes - len(lam))
                                             * prod(factorial(c) for c in counts.values()))
        fillings = factorial(n) // prod(factorial(part) for part in lam)
        law[lam] = Fraction(arrangements * fillings, boxes ** n)
    return law


def balls_in_boxes_from(mu: Sequence[int], k: int) -> dict[Partition, Fraction]:
    """Convolution of the per-part laws; pieces of different parts are pooled."""
    law: dict[Partition, Fraction] = {(): ONE}
    for part in mu:
        piece_law = balls_in_boxes(part, k)
        pooled: dict[Partition, Fraction] = {}
        for lam, p in law.items():
            for piece, q in piece_law.items():
                key = tuple(sorted(lam + piece, reverse=True))
                pooled[key] = pooled.get(key, ZERO) + p * q
        law = pooled
    return law


def absorption_probability(n: int, k: int) -> Fraction:
    """P(X_k = 1^n) from (n): every ball in its own box."""
    return prod((1 - Fraction(i, 2 ** k) for i in range(1, n)), start=ONE)


def absorption_bound(n: int, k: int) -> Fraction:
    return Fraction(comb(n, 2), 2 ** k)


def absorption_curve(n: int, steps: int) -> list[tuple[int, Fraction, Fraction]]:
    """(k, exact absorption probability, bound on non-absorption) for k = 0..steps."""
    return [(k, absorption_probability(n, k), absorption_bound(n, k)) for k in range(steps + 1)]


def tail_bound(n: int, r: int, k: int) -> Fraction:
    """Bound on P(largest piece >= r) after k breaks of (n)."""
    return Fraction(comb(n, r), 2 ** ((r - 1) * k))


def tail_probability(n: int, r: int, k: int) -> Fraction:
    return sum((p for lam, p in balls_in_boxes(n, k).items() if lam[0] >= r), ZERO)


def _multiply(x: PartitionPolynomial, y: PartitionPolynomial) -> PartitionPolynomial:
    result: PartitionPolynomial = {}
    for p, a in x.items():
        for q, b in y.items():
            key = tuple(sorted(p + q, reverse=True))
            result[key] = result.get(key, ZERO) + a * b
    return {key: value for key, value in result.items() if value != 0}


@lru_cache(maxsize=64)
def power_sum(m: int) -> PartitionPolynomial:
    """p_m in the basis ê_λ = ∏ λ_i! e_λ, from Newton's identities."""
    # e_i = ê_i / i!
    result: PartitionPolynomial = {(m,): Fraction((-1) ** (m - 1) * m, factorial(m))}
    for i in range(1, m):
        e_i = {(i,): Fraction((-1) ** (i - 1), factorial(i))}
        for key, value in _multiply(e_i, power_sum(m - i)).items():
            result[key] = result.get(key, ZERO) + value
    return {key: value for key, value in result.items() if value != 0}


def power_sum_left_vector(lam: Sequence[int]) -> PartitionPolynomial:
    """(-1)^(n - l(λ)) ∏ (λ_i - 1)! p_λ, the λ-th left eigenfunction."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise InvalidInputError("Not a partition.", lam)
    vector: PartitionPolynomial = {(): ONE}
    for part in lam:
        vector = _multiply(vector, power_sum(part))
    scale = (-1) ** (sum(lam) - len(lam)) * prod(factorial(part - 1) for part in lam)
    return {key: value * scale for key, value in vector.items()}
