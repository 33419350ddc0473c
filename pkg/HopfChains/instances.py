# HopfChains/instances.py
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
# Maps instance names on the command line to Hopf algebra instances, and
# builds the degree and start state a run works with.
from dataclasses import dataclass
from HopfChains.algebra import BasisElement
from HopfChains.config import RunConfig
from HopfChains.errors import InvalidInputError
from HopfChains.free import FreeAssocInstance
from HopfChains.graphs import Graph, GraphInstance, LabeledGraphInstance, read_edge_list
from HopfChains.hopf import HopfInstance
from HopfChains.simplicial import SimplicialComplex, SimplicialInstance, read_face_list
from HopfChains.symmetric import QuotientSymFnInstance, SymFnInstance

INSTANCE_NAMES = ("rock", "sym", "quotient-sym", "free", "deck", "graph", "labeled-graph",
                  "simplicial")


@dataclass(frozen=True)
class Setup:
    instance: HopfInstance
    n: int
    start: BasisElement
    closed_from_start: bool  # states are those reachable from start, not all of H_n


def _size(config: RunConfig, default: int | None = None) -> int:
    n = config.n if config.n is not None else default
    if n is None:
        raise InvalidInputError("This instance needs --n.", config.instance)
    return n


def _graph(config: RunConfig) -> Graph:
    if config.graph_file is not None:
        return read_edge_list(config.graph_file)
    return Graph.path(_size(config))


def _complex(config: RunConfig) -> SimplicialComplex:
    if config.complex_file is not None:
        return read_face_list(config.complex_file)
    return SimplicialComplex.simplex(_size(config))


def build(config: RunConfig) -> Setup:
    """The instance named in the config, its degree and the start state."""
    match config.instance:
        case "rock" | "sym":
            n = _size(config)
            instance = SymFnInstance(max(n, config.degree or n), rescaled=config.instance == "sym")
            start = instance.monomial(config.start or (n,))
            return Setup(instance, n, start, False)
        case "quotient-sym":
            n = _size(config)
            instance = QuotientSymFnInstance(max(n, config.degree or n))
            start = instance.monomial(config.start or (n,))
            return Setup(instance, n, start, False)
        case "free":
            n = _size(config)
            instance = FreeAssocInstance(config.letters, max(n, config.degree or n))
            start = instance.word(config.start or sorted(((i % config.letters) + 1
                                                          for i in range(n))))
            return Setup(instance, n, start, False)
        case "deck":
            nu = config.nu if config.nu is not None else (1,) * _size(config)
            instance = FreeAssocInstance.deck(nu)
            n = sum(instance.nu)
            if config.n is not None and config.n != n:
                raise InvalidInputError("--n disagrees with the deck composition.", config.n)
            values = config.start or [v for v, count in enumerate(nu, start=1)
                                      for _ in range(count)]
            start = instance.word(values)
            if instance.grading(start) != instance.nu:
                raise InvalidInputError("Start deck does not match the composition.", values)
            return Setup(instance, n, start, False)
        case "graph":
            g = _graph(config)
            instance = GraphInstance(max(g.vertices, config.degree or 0))
            return Setup(instance, g.vertices, instance.state(g), True)
        case "labeled-graph":
            g = _graph(config)
            instance = LabeledGraphInstance(max(g.vertices, config.degree or 0))
            return Setup(instance, g.vertices, instance.state(g), True)
        case "simplicial":
            c = _complex(config)
            instance = SimplicialInstance(max(c.vertices, config.degree or 0))
            return Setup(instance, c.vertices, instance.state(c), True)
        case _:
            raise InvalidInputError("Unknown instance.", config.instance)
