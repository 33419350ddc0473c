# HopfChains/verify.py
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
# The acceptance suite behind the verify command. Each check recomputes a
# known result exactly (golden matrices, closed forms, cross-checks between
# independent constructions) and reports pass or fail with a short detail.
import logging
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable
from sympy.functions.combinatorial.numbers import stirling
from HopfChains import absorption, rock
from HopfChains.algebra import compositions_of, partitions_of
from HopfChains.chain import (forward_matrix, quasi_stationary, step_frequencies,
                              transition_matrix, within_standard_errors)
from HopfChains.errors import HopfChainsError, NoMarkovRescalingError
from HopfChains.free import FreeAssocInstance
from HopfChains.graphs import Graph, GraphInstance, all_graphs
from HopfChains.hopf import HopfInstance
from HopfChains.qshuffle import (q_path_distribution, q_shuffle_distribution,
                                 q_shuffle_probability, q_shuffle_samples)
from HopfChains.shuffle import (all_permutations, convolve, gsr_matrix, gsr_measure,
                                gsr_probability, inverse, named_eigenfunctions)
from HopfChains.simplicial import SimplicialComplex, SimplicialInstance
from HopfChains.spectral import eigen_equation_check, eigen_system, multiplicities
from HopfChains.symmetric import QuotientSymFnInstance, SymFnInstance

log = logging.getLogger(__name__)


def rows(*lines: str) -> list[list[Fraction]]:
    return [[Fraction(token) for token in line.split()] for line in lines]


# Rows and columns in the order (1^n, ..., (n)): longest first, then lexicographic
GOLDEN_K = {
    2: rows("1 0", "1/2 1/2"),
    3: rows("1 0 0", "1/2 1/2 0", "0 3/4 1/4"),
    4: rows("1 0 0 0 0", "1/2 1/2 0 0 0", "1/4 1/2 1/4 0 0", "0 3/4 0 1/4 0",
            "0 0 3/8 1/2 1/8"),
}
# Row λ holds g_λ
GOLDEN_LEFT = {
    2: rows("1 0", "-1 1"),
    3: rows("1 0 0", "-1 1 0", "2 -3 1"),
    4: rows("1 0 0 0 0", "-1 1 0 0 0", "1 -2 1 0 0", "2 -3 0 1 0", "-6 12 -3 -4 1"),
}
# Row λ holds f_μ(λ) across μ
GOLDEN_RIGHT = {
    2: rows("1 0", "1 1"),
    3: rows("1 0 0", "1 1 0", "1 3 1"),
    4: rows("1 0 0 0 0", "1 1 0 0 0", "1 2 1 0 0", "1 3 0 1 0", "1 6 3 4 1"),
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def golden_matrices() -> str:
    for n, expected in GOLDEN_K.items():
        K = transition_matrix(SymFnInstance(n), n, 2)
        if K.dense() != expected:
            raise AssertionError(f"rock n={n} matrix differs")
    return "rock n=2..4 exact"


def golden_eigenbases() -> str:
    for n in GOLDEN_K:
        system = eigen_system(SymFnInstance(n), n)
        left = [[g.value(s) for s in system.states] for g in system.left]
        right = [[f.value(s) for f in system.right] for s in system.states]
        if left != GOLDEN_LEFT[n] or right != GOLDEN_RIGHT[n]:
            raise AssertionError(f"rock n={n} eigenbasis differs")
        if not system.certificate:
            raise AssertionError(f"rock n={n} duality certificate failed")
    return "rock n=2..4 exact, certificate pass"


def _eigen_checked(instance: HopfInstance, n: int, label: str) -> int:
    """Check one eigenbasis against the chains with a = 2 and a = 3."""
    system = eigen_system(instance, n)
    for a in (2, 3):
        report = eigen_equation_check(transition_matrix(instance, n, a), system)
        if not report.passed:
            raise AssertionError(f"{label} a={a}: {report.failures[0]}")
    return 2


def eigen_equations() -> str:
    checked = 0
    for n in range(1, 9):
        checked += _eigen_checked(SymFnInstance(n), n, f"rock n={n}")
    for n in range(1, 7):
        for nu in compositions_of(n):
            checked += _eigen_checked(FreeAssocInstance.deck(nu), n, f"deck {nu}")
    return f"{checked} chains: rock n<=8, every deck with n<=6, a in {{2,3}}"


def closed_forms() -> str:
    if rock.rock_f((2, 1, 1, 1), (3, 2)) != 4 or rock.rock_g((3, 2), (2, 1, 1, 1)) != 5:
        raise AssertionError("worked examples differ")
    for n in range(1, 9):
        instance = SymFnInstance(n)
        system = eigen_system(instance, n)
        parts = {s: instance.partition_of(s) for s in system.states}
        for g, f in zip(system.left, system.right):
            for s in system.states:
                if g.value(s) != rock.rock_g(parts[g.index], parts[s]):
                    raise AssertionError(f"g_{parts[g.index]} at {parts[s]}")
                if f.value(s) != rock.rock_f(parts[f.index], parts[s]):
                    raise AssertionError(f"f_{parts[f.index]} at {parts[s]}")
            powers = rock.power_sum_left_vector(parts[g.index])
            if powers != {parts[s]: v for s, v in g.as_dict().items()}:
                raise AssertionError(f"power sum form of g_{parts[g.index]}")
    return "n<=8 against generic eigenbases"


def gsr() -> str:
    for n in range(1, 6):
        for a in (2, 3):
            if gsr_matrix(n, a).rows != forward_matrix(FreeAssocInstance.distinct_deck(n), n, a).rows:
                raise AssertionError(f"forward shuffle n={n} a={a}")
            for b in (2, 3):
                if convolve(gsr_measure(n, a), gsr_measure(n, b)) != gsr_measure(n, a * b):
                    raise AssertionError(f"convolution n={n} a={a} b={b}")
    for a in (2, 3):
        for w, top in (((1, 2, 3), a + 2), ((1, 3, 2), a + 1), ((3, 2, 1), a)):
            if gsr_probability(3, a, w) != Fraction(comb(top, 3), a ** 3):
                raise AssertionError(f"n=3 table a={a} at {w}")
    return "n<=5, a,b in {2,3}"


def named() -> str:
    count = 0
    for n in range(1, 7):
        for nu in compositions_of(n):
            for a in (2, 3):
                count += len(named_eigenfunctions(nu, a))
            if len(nu) >= 2:
                found = multiplicities(FreeAssocInstance.deck(nu), n).get(n - 1, 0)
                if found != comb(len(nu), 2):
                    raise AssertionError(f"multiplicity of 1/a for {nu}: {found}")
    return f"{count} eigenfunctions verified"


def spectrum_counts() -> str:
    for n in range(1, 11):
        by_length = Counter(len(p) for p in partitions_of(n))
        if multiplicities(SymFnInstance(n), n) != dict(sorted(by_length.items())):
            raise AssertionError(f"rock n={n}")
    for n in range(1, 8):
        expected = {k: int(stirling(n, k, kind=1)) for k in range(1, n + 1)}
        if multiplicities(FreeAssocInstance.distinct_deck(n), n) != expected:
            raise AssertionError(f"distinct deck n={n}")
    for instance, n in ((SymFnInstance(5), 5), (FreeAssocInstance.deck((2, 1, 1)), 4)):
        if Counter(multiplicities(instance, n)) != eigen_system(instance, n).exponents():
            raise AssertionError(f"{instance.name} n={n} generating function")
    return "rock n<=10, distinct decks n<=7"


def _octahedron() -> SimplicialComplex:
    # one vertex from each opposite pair (0, 1), (2, 3), (4, 5)
    return SimplicialComplex.from_faces(6, [(u, v, w) for u in (0, 1) for v in (2, 3)
                                            for w in (4, 5)])


COMPLEXES = [
    *(SimplicialComplex.simplex(v) for v in range(1, 7)),
    SimplicialComplex.points(6),
    SimplicialComplex.from_faces(4, [(0, 1, 2), (2, 3)]),
    SimplicialComplex.from_faces(6, [(0, 1, 2), (2, 3), (3, 4), (4, 5)]),
    SimplicialComplex.from_graph(Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])),
    _octahedron(),
]


def _absorption_against_matrix(instance: HopfInstance, n: int,
                               character: absorption.CharacterSpec, label: str) -> None:
    for a in (2, 3):
        K = transition_matrix(instance, n, a)
        for b in K.states:
            if absorption.absorption_probability(instance, b, a, character) != \
                    absorption.absorbed_mass(K, b, character):
                raise AssertionError(f"{label} {b.label} a={a}")


def absorption_checks() -> str:
    for n in range(1, 7):
        instance = SymFnInstance(n)
        _absorption_against_matrix(instance, n, absorption.CharacterSpec.of(
            [instance.generator(1)]), "rock")
    for n in range(1, 6):
        instance = GraphInstance(n)
        _absorption_against_matrix(instance, n, absorption.CharacterSpec.of(
            [instance.generator_for(Graph.empty(1))]), "graph")
    for n in range(1, 9):
        instance = SymFnInstance(n)
        character = absorption.CharacterSpec.of([instance.generator(1)])
        chi = absorption.chromatic_quasisym(instance, instance.monomial((n,)), character)
        for k in range(13):
            exact = rock.absorption_probability(n, k)
            if chi.evaluate_uniform(2 ** k) != exact:
                raise AssertionError(f"rock product formula n={n} k={k}")
            if 1 - exact > rock.absorption_bound(n, k):
                raise AssertionError(f"rock bound n={n} k={k}")
    for vertices in range(1, 6):
        for g in all_graphs(vertices):
            polynomial = absorption.chromatic_polynomial(g)
            for colors in range(1, 5):
                if polynomial.eval(colors) != absorption.brute_force_colorings(g, colors):
                    raise AssertionError(f"chromatic polynomial {g.bit_string()}")
    simplicial = SimplicialInstance(6)
    character = absorption.CharacterSpec.of([simplicial.point()])
    for c in COMPLEXES:
        for k in range(4):
            exact = absorption.simplex_absorption(c, k)
            if k < 3 and exact != Fraction(
                    absorption.brute_force_colorings(c.skeleton(), 2 ** k), 2 ** (c.vertices * k)):
                raise AssertionError(f"simplicial colorings {c.masks()} k={k}")
            if exact != absorption.absorption_probability(simplicial, simplicial.state(c),
                                                          2 ** k, character):
                raise AssertionError(f"simplicial chain {c.masks()} k={k}")
    return ("rock n<=6 and graphs <=5 vertices against K, product formula n<=8 k<=12, "
            "complexes <=6 vertices")


def quasi_stationarity() -> str:
    for n in range(2, 9):
        instance = SymFnInstance(n)
        first, _ = quasi_stationary(transition_matrix(instance, n, 2))
        if first != {instance.monomial((2,) + (1,) * (n - 2)): 1}:
            raise AssertionError(f"rock n={n}")
    return "point mass at 21^(n-2), n<=8"


def balls_in_boxes() -> str:
    for n in range(1, 7):
        instance = SymFnInstance(n)
        K = transition_matrix(instance, n, 2)
        for k in range(4):
            row = K.power(k).row(instance.monomial((n,)))
            if {instance.partition_of(s): p for s, p in row.items()} != rock.balls_in_boxes(n, k):
                raise AssertionError(f"n={n} k={k}")
    return "n<=6, k<=3"


def q_shuffles(samples: int = 100_000, seed: int = 2026) -> str:
    for q in (Fraction(1, 2), Fraction(1), Fraction(2)):
        for n in range(1, 6):
            if q_path_distribution(n, q) != q_shuffle_distribution(n, q):
                raise AssertionError(f"sampler law n={n} q={q}")
    for n in range(1, 6):
        for w in all_permutations(n):
            if q_shuffle_probability(n, 1, w) != gsr_probability(n, 2, inverse(w)):
                raise AssertionError(f"q=1 reduction at {w}")
    counts = Counter(q_shuffle_samples(4, Fraction(1, 2), samples, seed))
    if not within_standard_errors(counts, q_shuffle_distribution(4, Fraction(1, 2)), samples):
        raise AssertionError("Monte Carlo frequencies outside 4 sigma")
    return f"n<=5, {samples} samples"


def rescaling_failure() -> str:
    try:
        transition_matrix(QuotientSymFnInstance(2), 2)
    except NoMarkovRescalingError as error:
        if error.subject != "2" or error.exit_code != 3:
            raise AssertionError(f"unexpected failure report: {error}")
        return "no rescaling at e_2, exit code 3"
    raise AssertionError("quotient chain was built")


def native_sampler() -> str:
    instance = SymFnInstance(5)
    start = instance.monomial((5,))
    samples = 20_000
    counts = step_frequencies(instance, start, 2, samples, seed=7)
    if not within_standard_errors(counts, transition_matrix(instance, 5, 2).row(start), samples):
        raise AssertionError("rock-breaking step frequencies outside 4 sigma")
    return f"{samples} samples"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("golden-matrices", golden_matrices),
    ("golden-eigenbases", golden_eigenbases),
    ("eigen-equations", eigen_equations),
    ("closed-forms", closed_forms),
    ("gsr", gsr),
    ("named-eigenfunctions", named),
    ("multiplicities", spectrum_counts),
    ("absorption", absorption_checks),
    ("quasi-stationary", quasi_stationarity),
    ("balls-in-boxes", balls_in_boxes),
    ("q-shuffles", q_shuffles),
    ("rescaling-failure", rescaling_failure),
    ("native-sampler", native_sampler),
]


def run_checks(names: list[str] | None = None) -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        if names and name not in names:
            continue
        started = time.perf_counter()
        try:
            detail, passed = check(), True
        except (AssertionError, HopfChainsError) as error:
            detail, passed = str(error), False
        elapsed = time.perf_counter() - started
        log.info("verify %s: %s (%.2fs)", name, "pass" if passed else "FAIL", elapsed)
        results.append(CheckResult(name, passed, detail, elapsed))
    return results
