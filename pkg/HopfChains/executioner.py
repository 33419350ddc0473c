# HopfChains/executioner.py
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
# Runs one command from a RunConfig: builds the instance, computes the
# result, and hands tables to the writers. Library errors become a message
# on stderr and the exit status their class carries.
import logging
import sys
from collections import Counter
from HopfChains import absorption, rock
from HopfChains.algebra import ONE
from HopfChains.chain import (chain_states, distance_curve, forward_matrix, markov_instance,
                              simulate_many, stationary_set, transition_matrix)
from HopfChains.config import Command, RunConfig
from HopfChains.emit import Table, emit
from HopfChains.errors import HopfChainsError, InvalidInputError, VerificationError
from HopfChains.hopf import AlgebraKind
from HopfChains.instances import Setup, build
from HopfChains.qshuffle import (BilinearForm, quantized_inverse_shuffle_matrix,
                                 q_shuffle_distribution, q_shuffle_samples)
from HopfChains.shuffle import (descents, gsr_distance_curve, gsr_measure, inversions,
                                named_eigenfunctions, rising_sequences)
from HopfChains.spectral import eigen_equation_check, eigen_system
from HopfChains.symmetric import SymFnInstance
from HopfChains.verify import run_checks

log = logging.getLogger(__name__)


def _states(setup: Setup, a: int):
    start = setup.start if setup.closed_from_start else None
    return chain_states(setup.instance, setup.n, start, a)


def _matrix_table(K) -> Table:
    table = Table("matrix", ["state"] + K.labels)
    for label, row in zip(K.labels, K.dense()):
        table.add(label, *row)
    return table


def _instance_data(setup: Setup, a: int) -> dict[str, object]:
    data = setup.instance.describe()
    # Needs the whole of H_n, so only reported when the chain runs on it
    if not setup.closed_from_start:
        data["sum_preserving"] = markov_instance(setup.instance).sum_preserving(setup.n, a)
    return data


def run_matrix(config: RunConfig) -> None:
    setup = build(config)
    states = _states(setup, config.a)
    maker = forward_matrix if config.forward else transition_matrix
    K = maker(setup.instance, setup.n, config.a, states)
    emit([_matrix_table(K)], config, {"direction": K.direction.value,
                                      "instance": _instance_data(setup, config.a)})


def run_eigen(config: RunConfig) -> None:
    setup = build(config)
    states = _states(setup, config.a)
    system = eigen_system(setup.instance, setup.n, states)
    report = eigen_equation_check(transition_matrix(setup.instance, setup.n, config.a, states),
                                  system)
    labels = [s.label for s in states]
    left = Table("left", ["index", "exponent"] + labels)
    for g in system.left:
        left.add(g.index.label, g.exponent, *(g.value(s) for s in states))
    right = Table("right", ["index", "exponent"] + labels)
    for f in system.right:
        right.add(f.index.label, f.exponent, *(f.value(s) for s in states))
    certificate = system.certificate
    emit([left, right], config, {"certificate": "pass" if certificate else "fail",
                                 "eigen_equations": "pass" if report.passed else "fail",
                                 "instance": _instance_data(setup, config.a)})
    if not certificate or not report.passed:
        raise VerificationError("Eigenbasis failed its checks.", setup.instance.name)


def run_simulate(config: RunConfig) -> None:
    setup = build(config)
    runs = simulate_many(setup.instance, setup.n, config.a, setup.start, config.steps,
                         config.seed, config.trajectories)
    table = Table("trajectory", ["trajectory", "step", "state"])
    for index, trajectory in enumerate(runs):
        for step, state in enumerate(trajectory):
            table.add(index, step, state.label)
    emit([table], config)


def _stationary_for(setup: Setup, states):
    markov = markov_instance(setup.instance)
    found = stationary_set(markov, setup.n, states)
    grading = markov.grading(setup.start)
    for pi in found.distributions:
        if markov.kind is AlgebraKind.POLYNOMIAL or \
                all(markov.grading(s) == grading for s in pi):
            return pi
    raise InvalidInputError("No stationary distribution reachable from the start.",
                            setup.start.label)


def run_distance(config: RunConfig) -> None:
    setup = build(config)
    states = _states(setup, config.a)
    K = transition_matrix(setup.instance, setup.n, config.a, states)
    pi = _stationary_for(setup, states)
    table = Table("distance", ["step", "tv", "separation", "sup"])
    for step, d in enumerate(distance_curve(K, setup.start, pi, config.steps), start=1):
        table.add(step, d.tv, d.separation, d.sup)
    emit([table], config)


def run_absorb(config: RunConfig) -> None:
    setup = build(config)
    markov = markov_instance(setup.instance)
    points = markov.generators(1)
    character = absorption.CharacterSpec.of(points)
    chi = absorption.chromatic_quasisym(markov, setup.start, character)
    table = Table("absorption", ["steps", "probability", "bound"])
    for k in range(config.steps + 1):
        bound = None
        # Non-absorption bound for breaking a single rock in two
        if isinstance(setup.instance, SymFnInstance) and setup.start.length == 1 and config.a == 2:
            bound = rock.absorption_bound(setup.n, k)
        table.add(k, chi.evaluate_uniform(config.a ** k), bound)
    emit([table], config, {"chi": chi.as_json(), "start": setup.start.label,
                           "targets": character.labels()})


def _deck(config: RunConfig) -> tuple[int, ...]:
    if config.nu is not None:
        return config.nu
    if config.n is None:
        raise InvalidInputError("shuffle needs --n or --nu.")
    return (1,) * config.n


def run_shuffle(config: RunConfig) -> None:
    nu = _deck(config)
    n = sum(nu)
    tables = []
    match config.table:
        case "law" if config.q is not None:
            table = Table("q-shuffle", ["permutation", "inversions", "rising", "probability"])
            for w, p in sorted(q_shuffle_distribution(n, config.q).items()):
                table.add("".join(map(str, w)), inversions(w), rising_sequences(w), p)
            tables.append(table)
            if config.samples:
                counts = Counter(q_shuffle_samples(n, config.q, config.samples, config.seed))
                sampled = Table("q-shuffle-samples", ["permutation", "count"])
                for w, count in sorted(counts.items()):
                    sampled.add("".join(map(str, w)), count)
                tables.append(sampled)
        case "law":
            table = Table("gsr", ["permutation", "descents", "probability"])
            for w, p in sorted(gsr_measure(n, config.a).items()):
                table.add("".join(map(str, w)), descents(w), p)
            tables.append(table)
        case "eigenfunctions":
            table = Table("named", ["name", "exponent", "deck", "value"])
            for f in named_eigenfunctions(nu, config.a):
                for deck, value in sorted(f.values.items(), key=lambda item: item[0].label):
                    table.add(f.name, f.exponent, deck.label, value)
            tables.append(table)
        case "distance":
            table = Table("distance", ["shuffles", "tv", "separation", "sup"])
            for l, d in enumerate(gsr_distance_curve(n, config.a, config.steps), start=1):
                table.add(l, d.tv, d.separation, d.sup)
            tables.append(table)
        case "quantized":
            form = (BilinearForm.from_file(config.form_file) if config.form_file is not None
                    else BilinearForm.ones(len(nu)))
            K = quantized_inverse_shuffle_matrix(nu, config.q if config.q is not None else ONE, form)
            tables.append(_matrix_table(K))
        case _:
            raise InvalidInputError("Unknown shuffle table.", config.table)
    emit(tables, config)


def run_verify(config: RunConfig) -> None:
    results = run_checks()
    table = Table("verify", ["check", "status", "detail"])
    for result in results:
        table.add(result.name, result.passed, result.detail)
    emit([table], config)
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise VerificationError("Acceptance checks failed.", ", ".join(failed))


COMMANDS = {
    Command.MATRIX: run_matrix,
    Command.EIGEN: run_eigen,
    Command.SIMULATE: run_simulate,
    Command.DISTANCE: run_distance,
    Command.ABSORB: run_absorb,
    Command.SHUFFLE: run_shuffle,
    Command.VERIFY: run_verify,
}


def run(config: RunConfig) -> int:
    """Run one command; returns the process exit status."""
    try:
        COMMANDS[config.command](config)
    except HopfChainsError as error:
        print(f"error: {error}", file=sys.stderr)
        log.debug("command %s failed", config.command.value, exc_info=True)
        return error.exit_code
    return 0
