# HopfChains/chain.py
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
# Turns the Hopf power map into a Markov chain. Generators are rescaled
# degree by degree until every row of a^-n Ψ^a sums to one; the chain then
# lives on the rescaled basis. Also here: stationary and quasi-stationary
# distributions, distances to stationarity, expectations and simulation.
from __future__ import annotations
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence
import numpy as np
from HopfChains.algebra import (BasisElement, GeneratorId, IntegerMatrix, LinComb, Tensor, ONE,
                                ZERO, basis_sort_key, exact_nullspace, format_rational)
from HopfChains.errors import (InternalInconsistencyError, InvalidInputError,
                               NoMarkovRescalingError, NotApplicableError, NotNonnegativeError)
from HopfChains.hopf import AlgebraKind, Grading, HopfInstance

log = logging.getLogger(__name__)

type Distribution = dict[BasisElement, Fraction]


class RescaleMap:
    """φ on generators, computed lazily by induction on degree, extended multiplicatively.

    A basis element b of the original algebra equals φ(b) times the
    corresponding element of the rescaled basis."""

    def __init__(self, instance: HopfInstance) -> None:
        self.instance = instance
        self._values: dict[GeneratorId, Fraction] = {}

    def __getitem__(self, c: GeneratorId) -> Fraction:
        if c not in self._values:
            self._values[c] = self._compute(c)
        return self._values[c]

    def of(self, b: BasisElement) -> Fraction:
        value = ONE
        for c in self.instance.factorize(b):
            value *= self[c]
        return value

    def computed(self) -> dict[GeneratorId, Fraction]:
        return dict(self._values)

    def _compute(self, c: GeneratorId) -> Fraction:
        coproduct = self.instance.generator_coproduct(c)
        for (x, y), coefficient in coproduct.items():
            if coefficient < 0:
                raise NotNonnegativeError("Generator coproduct has a negative coefficient.",
                                          f"{c.label} -> {x.label} (x) {y.label}")
        if c.degree == 1:
            return ONE
        reduced = [(x, y, coefficient) for (x, y), coefficient in coproduct.items()
                   if x.degree > 0 and y.degree > 0]
        if not reduced:
            raise NoMarkovRescalingError("Generator is primitive in degree above one; "
                                         "no rescaling makes the chain stochastic.", c.label)
        # Mass that K_2 moves away from c, weighted by φ of the targets
        leaving = sum((coefficient * self.of(x) * self.of(y) for x, y, coefficient in reduced),
                      ZERO) / 2 ** c.degree
        value = leaving / (1 - Fraction(2, 2 ** c.degree))
        log.debug("rescale %s: phi = %s", c.label, format_rational(value))
        return value


def rescale(instance: HopfInstance, max_degree: int) -> RescaleMap:
    """Compute φ for every generator up to max_degree."""
    phi = RescaleMap(instance)
    instance.check_degree(max_degree)
    for degree in range(1, max_degree + 1):
        for c in instance.generators(degree):
            _ = phi[c]
    log.info("rescaled %d generators of %s up to degree %d",
             len(phi.computed()), instance.name, max_degree)
    return phi


class RescaledInstance(HopfInstance):
    """The same algebra written in the rescaled basis, where Ψ^a / a^n is stochastic."""

    def __init__(self, base: HopfInstance, phi: RescaleMap | None = None) -> None:
        super().__init__(base.max_degree)
        self.base = base
        self.phi = phi if phi is not None else RescaleMap(base)
        self.name = base.name
        self.kind = base.kind

    def __getattr__(self, attribute: str):
        # Instance specific helpers (state builders, gradings, Lyndon counts)
        if attribute == "base":
            raise AttributeError(attribute)
        return getattr(self.base, attribute)

    def generators(self, degree: int) -> list[GeneratorId]:
        return self.base.generators(degree)

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        scale = self.phi[c]
        return LinComb({(x, y): coefficient * self.phi.of(x) * self.phi.of(y) / scale
                        for (x, y), coefficient in self.base.generator_coproduct(c).items()})

    def grading(self, b: BasisElement) -> Grading:
        return self.base.grading(b)

    def basis(self, n: int) -> list[BasisElement]:
        return self.base.basis(n)

    def component(self, b: BasisElement) -> list[BasisElement]:
        return self.base.component(b)

    def grading_targets(self, n: int) -> list[Grading]:
        return self.base.grading_targets(n)

    def lyndon_counts(self, target: Grading) -> dict[Grading, int]:
        return self.base.lyndon_counts(target)

    def sample_step(self, b: BasisElement, a: int, rng) -> BasisElement | None:
        return self.base.sample_step(b, a, rng)

    def describe(self) -> dict[str, object]:
        return self.base.describe()


def markov_instance(instance: HopfInstance) -> HopfInstance:
    """The instance in its rescaled basis, built once and kept on the instance."""
    if isinstance(instance, RescaledInstance) or instance.primitive_letters:
        return instance
    if instance._rescaled is None:
        instance._rescaled = RescaledInstance(instance)
    return instance._rescaled


def chain_states(instance: HopfInstance, n: int, start: BasisElement | None = None,
                 a: int = 2) -> list[BasisElement]:
    """The degree-n basis, or the states reachable from start, in canonical order."""
    markov = markov_instance(instance)
    if start is None:
        return markov.basis(n)
    markov.check_degree(n)
    if start.degree != n:
        raise InvalidInputError(f"Start state is not of degree {n}.", start.label)
    seen = {start}
    frontier = [start]
    while frontier:
        b = frontier.pop()
        for target in markov.hopf_power(b, a):
            if target not in seen:
                seen.add(target)
                frontier.append(target)
    return sorted(seen, key=basis_sort_key)


class Direction(Enum):
    POWER_MAP = "power-map"  # rows are a^-n Ψ^a, inverse shuffling for words
    DUAL = "dual"  # transpose, forward shuffling for words


@dataclass(frozen=True)
class TransitionMatrix:
    n: int
    a: int
    states: tuple[BasisElement, ...]
    rows: tuple[dict[int, Fraction], ...]
    direction: Direction = Direction.POWER_MAP
    instance_name: str = ""

    @cached_property
    def positions(self) -> dict[BasisElement, int]:
        return {s: i for i, s in enumerate(self.states)}

    @cached_property
    def integers(self) -> IntegerMatrix:
        return IntegerMatrix.from_sparse(self.rows, self.size)

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def labels(self) -> list[str]:
        return [s.label for s in self.states]

    def index(self, b: BasisElement) -> int:
        if b not in self.positions:
            raise InvalidInputError("State is not in the chain's state set.", b.label)
        return self.positions[b]

    def entry(self, b: BasisElement, b2: BasisElement) -> Fraction:
        return self.rows[self.index(b)].get(self.index(b2), ZERO)

    def row(self, b: BasisElement) -> Distribution:
        return {self.states[j]: v for j, v in self.rows[self.index(b)].items()}

    def dense(self) -> list[list[Fraction]]:
        return [[row.get(j, ZERO) for j in range(self.size)] for row in self.rows]

    def diagonal(self) -> list[Fraction]:
        return [row.get(i, ZERO) for i, row in enumerate(self.rows)]

    def eigenvalue(self, exponent: int) -> Fraction:
        return Fraction(self.a) ** (exponent - self.n)

    def is_stochastic(self) -> bool:
        return all(all(v >= 0 for v in row.values()) and sum(row.values(), ZERO) == 1
                   for row in self.rows)

    def is_lower_triangular(self) -> bool:
        return all(j <= i for i, row in enumerate(self.rows) for j in row)

    def matmul(self, other: TransitionMatrix) -> TransitionMatrix:
        if self.states != other.states or self.direction != other.direction:
            raise InvalidInputError("Matrices act on different state sets.")
        rows = []
        for row in self.rows:
            product: dict[int, Fraction] = {}
            for k, v in row.items():
                for j, w in other.rows[k].items():
                    product[j] = product.get(j, ZERO) + v * w
            rows.append({j: v for j, v in product.items() if v != 0})
        return TransitionMatrix(self.n, self.a * other.a, self.states, tuple(rows),
                                self.direction, self.instance_name)

    def power(self, steps: int) -> TransitionMatrix:
        if steps < 0:
            raise InvalidInputError("Matrix powers need a nonnegative exponent.", steps)
        result = TransitionMatrix(self.n, 1, self.states,
                                  tuple({i: ONE} for i in range(self.size)),
                                  self.direction, self.instance_name)
        for _ in range(steps):
            result = result.matmul(self)
        return result

    def transpose(self) -> TransitionMatrix:
        columns: list[dict[int, Fraction]] = [{} for _ in self.states]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                columns[j][i] = v
        flipped = Direction.DUAL if self.direction is Direction.POWER_MAP else Direction.POWER_MAP
        return TransitionMatrix(self.n, self.a, self.states, tuple(columns), flipped,
                                self.instance_name)

    # (K f)(x) = sum over y of K(x, y) f(y)
    def apply_right(self, f: Mapping[BasisElement, Fraction]) -> Distribution:
        values = [f.get(s, ZERO) for s in self.states]
        result = {}
        for i, row in enumerate(self.rows):
            total = sum((v * values[j] for j, v in row.items()), ZERO)
            if total != 0:
                result[self.states[i]] = total
        return result

    # (g K)(y) = sum over x of g(x) K(x, y)
    def apply_left(self, g: Mapping[BasisElement, Fraction]) -> Distribution:
        totals: dict[int, Fraction] = {}
        for x, weight in g.items():
            if weight == 0:
                continue
            for j, v in self.rows[self.index(x)].items():
                totals[j] = totals.get(j, ZERO) + weight * v
        return {self.states[j]: v for j, v in totals.items() if v != 0}


def transition_matrix(instance: HopfInstance, n: int, a: int = 2,
                      states: Iterable[BasisElement] | None = None) -> TransitionMatrix:
    if a < 1:
        raise InvalidInputError("The number of pieces a must be at least 1.", a)
    markov = markov_instance(instance)
    states = tuple(states) if states is not None else tuple(chain_states(markov, n, a=a))
    positions = {s: i for i, s in enumerate(states)}
    scale = Fraction(1, a ** n)
    rows = []
    for s in states:
        if s.degree != n:
            raise InvalidInputError(f"State is not of degree {n}.", s.label)
        row = {}
        for target, coefficient in markov.hopf_power(s, a).items():
            if coefficient < 0:
                raise NotNonnegativeError("Hopf power has a negative coefficient.",
                                          f"{s.label} -> {target.label}")
            if target not in positions:
                raise InvalidInputError("State set is not closed under the chain.", target.label)
            row[positions[target]] = coefficient * scale
        if sum(row.values(), ZERO) != 1:
            raise InternalInconsistencyError("Transition row does not sum to one.", s.label)
        rows.append(row)
    log.info("built %s transition matrix: n=%d a=%d states=%d", markov.name, n, a, len(states))
    return TransitionMatrix(n, a, states, tuple(rows), Direction.POWER_MAP, markov.name)


def forward_matrix(instance: HopfInstance, n: int, a: int = 2,
                   states: Iterable[BasisElement] | None = None) -> TransitionMatrix:
    """Time reversal of the Hopf power chain. For decks this is forward riffle shuffling."""
    forward = transition_matrix(instance, n, a, states).transpose()
    if not forward.is_stochastic():
        raise NotApplicableError("The dual chain is not stochastic for this instance.",
                                 instance.name)
    return forward


def power_law_check(instance: HopfInstance, n: int, a: int, b: int,
                    states: Sequence[BasisElement] | None = None) -> bool:
    if states is None:
        states = chain_states(instance, n)
    composed = transition_matrix(instance, n, a, states).matmul(transition_matrix(instance, n, b, states))
    return composed.rows == transition_matrix(instance, n, a * b, states).rows


def _vectors(K: TransitionMatrix, vectors: Sequence[Mapping[BasisElement, Fraction]]) -> IntegerMatrix:
    return IntegerMatrix.from_sparse([{K.index(x): v for x, v in vector.items() if v}
                                      for vector in vectors], K.size)


def _mismatches(image: IntegerMatrix, V: IntegerMatrix, scale: int,
                eigenvalues: Sequence[Fraction]) -> list[int]:
    # image = V K (or its transpose) over V.denominator * scale
    failures = []
    for i, beta in enumerate(eigenvalues):
        beta = Fraction(beta)
        if not np.array_equal(image.numerators[i] * beta.denominator,
                              V.numerators[i] * (beta.numerator * scale)):
            failures.append(i)
    return failures


def left_eigen_failures(K: TransitionMatrix, vectors: Sequence[Mapping[BasisElement, Fraction]],
                        eigenvalues: Sequence[Fraction]) -> list[int]:
    """Positions i where vectors[i] K differs from eigenvalues[i] vectors[i], exactly."""
    V = _vectors(K, vectors)
    return _mismatches(V @ K.integers, V, K.integers.denominator, eigenvalues)


def right_eigen_failures(K: TransitionMatrix, vectors: Sequence[Mapping[BasisElement, Fraction]],
                         eigenvalues: Sequence[Fraction]) -> list[int]:
    """Positions i where K vectors[i] differs from eigenvalues[i] vectors[i], exactly."""
    V = _vectors(K, vectors)
    image = (K.integers @ V.transpose()).transpose()
    return _mismatches(image, V, K.integers.denominator, eigenvalues)


@dataclass(frozen=True)
class StationarySet:
    absorbing: tuple[BasisElement, ...]
    distributions: tuple[Distribution, ...]


def stationary_set(instance: HopfInstance, n: int,
                   states: Sequence[BasisElement] | None = None) -> StationarySet:
    markov = markov_instance(instance)
    states = list(states) if states is not None else chain_states(markov, n)
    # Products of degree-one generators are the only candidates
    candidates = [b for b in states if all(c.degree == 1 for c in b.letters)]
    if markov.kind is AlgebraKind.POLYNOMIAL:
        return StationarySet(tuple(candidates), tuple({b: ONE} for b in candidates))
    groups: dict[tuple[GeneratorId, ...], list[BasisElement]] = {}
    for b in candidates:
        groups.setdefault(tuple(sorted(b.letters)), []).append(b)
    distributions = tuple({b: Fraction(1, len(group)) for b in group} for group in groups.values())
    absorbing = tuple(group[0] for group in groups.values() if len(group) == 1)
    return StationarySet(absorbing, distributions)


def quasi_stationary(K: TransitionMatrix) -> tuple[Distribution, Distribution]:
    """π¹ ∝ g and π² ∝ g·f off the absorbing state, for the eigenvalue just below one."""
    absorbing = [i for i, row in enumerate(K.rows) if row.get(i) == 1]
    if len(absorbing) != 1:
        raise NotApplicableError("Quasi-stationarity needs exactly one absorbing state.",
                                 len(absorbing))
    dense = K.dense()
    for j in range(1, K.n + 1):
        beta = Fraction(1, K.a ** j)
        shifted = [[dense[r][c] - (beta if r == c else 0) for c in range(K.size)]
                   for r in range(K.size)]
        right = exact_nullspace(shifted)
        if right:
            break
    else:
        raise NotApplicableError("The chain has no eigenvalue below one.")
    if len(right) > 1:
        raise NotApplicableError("The second eigenvalue is not simple.", format_rational(beta))
    left = exact_nullspace([list(column) for column in zip(*shifted)])
    g, f = left[0], right[0]
    alive = [i for i in range(K.size) if i != absorbing[0]]
    first_total = sum((g[i] for i in alive), ZERO)
    second_total = sum((g[i] * f[i] for i in alive), ZERO)
    if first_total == 0 or second_total == 0:
        raise NotApplicableError("Second eigenvectors vanish off the absorbing state.")
    first = {K.states[i]: g[i] / first_total for i in alive if g[i] != 0}
    second = {K.states[i]: g[i] * f[i] / second_total for i in alive if g[i] * f[i] != 0}
    log.info("quasi-stationary at eigenvalue %s", format_rational(beta))
    return first, second


@dataclass(frozen=True)
class Distances:
    tv: Fraction
    separation: Fraction | None  # None when π vanishes somewhere
    sup: Fraction | None


def distances(row: Mapping[BasisElement, Fraction], pi: Mapping[BasisElement, Fraction]) -> Distances:
    support = set(row) | set(pi)
    tv = sum((abs(row.get(y, ZERO) - pi.get(y, ZERO)) for y in support), ZERO) / 2
    if any(pi.get(y, ZERO) == 0 for y in support):
        return Distances(tv, None, None)
    separation = max(1 - row.get(y, ZERO) / pi[y] for y in support)
    sup = max(abs(row.get(y, ZERO) - pi[y]) / pi[y] for y in support)
    if not tv <= separation <= sup:
        raise InternalInconsistencyError("Distances violate tv <= sep <= l-infinity.")
    return Distances(tv, separation, sup)


def distance_curve(K: TransitionMatrix, start: BasisElement, pi: Mapping[BasisElement, Fraction],
                   steps: int) -> list[Distances]:
    current: Distribution = {start: ONE}
    curve = []
    for _ in range(steps):
        current = K.apply_left(current)
        curve.append(distances(current, pi))
    return curve


def expectation(K: TransitionMatrix, f: Mapping[BasisElement, Fraction], start: BasisElement,
                steps: int) -> Fraction:
    """E f(X_steps) for the chain started at start."""
    values = dict(f)
    for _ in range(steps):
        values = K.apply_right(values)
    return values.get(start, ZERO)


# Sampling

def make_rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _categorical_step(markov: HopfInstance, b: BasisElement, a: int,
                      rng: np.random.Generator) -> BasisElement:
    image = markov.hopf_power(b, a)
    targets = sorted(image.keys(), key=basis_sort_key)
    weights = np.array([float(image[t]) for t in targets])
    choice = rng.choice(len(targets), p=weights / weights.sum())
    return targets[int(choice)]


def step(instance: HopfInstance, b: BasisElement, a: int, rng: np.random.Generator) -> BasisElement:
    markov = markov_instance(instance)
    following = markov.sample_step(b, a, rng)
    return following if following is not None else _categorical_step(markov, b, a, rng)


def simulate(instance: HopfInstance, n: int, a: int, start: BasisElement, steps: int,
             seed: int | None = None, rng: np.random.Generator | None = None) -> list[BasisElement]:
    if start.degree != n:
        raise InvalidInputError(f"Start state is not of degree {n}.", start.label)
    if steps < 0:
        raise InvalidInputError("Steps must be nonnegative.", steps)
    if rng is None:
        if seed is None:
            raise InvalidInputError("Simulation needs a seed.")
        rng = make_rng(seed)
    trajectory = [start]
    for _ in range(steps):
        trajectory.append(step(instance, trajectory[-1], a, rng))
    return trajectory


def simulate_many(instance: HopfInstance, n: int, a: int, start: BasisElement, steps: int,
                  seed: int, trajectories: int) -> list[list[BasisElement]]:
    """One independent Philox stream per trajectory, spawned from one seed."""
    children = np.random.SeedSequence(seed).spawn(trajectories)
    return [simulate(instance, n, a, start, steps, rng=make_rng(child)) for child in children]


def step_frequencies(instance: HopfInstance, start: BasisElement, a: int, samples: int,
                     seed: int) -> Counter[BasisElement]:
    rng = make_rng(seed)
    return Counter(step(instance, start, a, rng) for _ in range(samples))


def within_standard_errors(counts: Mapping[BasisElement, int], exact: Mapping[BasisElement, Fraction],
                           samples: int, sigmas: float = 4.0) -> bool:
    """Whether every empirical frequency is within `sigmas` standard errors of the exact row."""
    for state in set(counts) | set(exact):
        p = float(exact.get(state, ZERO))
        frequency = counts.get(state, 0) / samples
        if p == 0.0:
            if frequency != 0.0:
                return False
            continue
        if abs(frequency - p) > sigmas * np.sqrt(p * (1 - p) / samples):
            return False
    return True
