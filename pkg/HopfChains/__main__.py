# HopfChains/__main__.py
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
import logging
import sys
from argparse import ArgumentParser
from HopfChains.config import RunConfig
from HopfChains.errors import HopfChainsError
from HopfChains.executioner import run
from HopfChains.instances import INSTANCE_NAMES


def make_parser() -> ArgumentParser:
    argument_parser = ArgumentParser("HopfChains")
    argument_parser.add_argument("-v", "--verbose", default=False, action="store_true",
                                 help="Log debugging detail to stderr.")
    commands = argument_parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> ArgumentParser:
        parser = commands.add_parser(name, help=help_text)
        parser.add_argument("--format", choices=["csv", "json"], default="csv",
                            help="Output format.")
        parser.add_argument("-o", "--output", default=None,
                            help="Output file, or a directory to name the file in.")
        return parser

    def chain_options(parser: ArgumentParser) -> None:
        parser.add_argument("--instance", choices=INSTANCE_NAMES, default="rock",
                            help="Which Hopf algebra the chain comes from.")
        parser.add_argument("--n", type=int, default=None, help="Degree of the state space.")
        parser.add_argument("--nu", default=None, help="Deck composition, e.g. 2,1,1.")
        parser.add_argument("--letters", type=int, default=2, help="Alphabet size for free.")
        parser.add_argument("--degree", type=int, default=None, help="Working degree cap.")
        parser.add_argument("--a", type=int, default=2, help="Number of pieces per step.")
        parser.add_argument("--start", default=None,
                            help="Start state: a partition or a deck of card values.")
        parser.add_argument("--graph-file", default=None, help="Edge list, vertices from 1.")
        parser.add_argument("--complex-file", default=None, help="Face list, vertices from 1.")

    matrix = command("matrix", "Print the transition matrix.")
    chain_options(matrix)
    matrix.add_argument("--forward", default=False, action="store_true",
                        help="Print the time reversed chain instead.")
    chain_options(command("eigen", "Print left and right eigenbases and their certificate."))
    simulate = command("simulate", "Sample trajectories.")
    chain_options(simulate)
    simulate.add_argument("--steps", type=int, default=10)
    simulate.add_argument("--seed", type=int, default=None)
    simulate.add_argument("--trajectories", type=int, default=1)
    distance = command("distance", "Distances to stationarity after each step.")
    chain_options(distance)
    distance.add_argument("--steps", type=int, default=10)
    absorb = command("absorb", "Absorption probabilities from the start state.")
    chain_options(absorb)
    absorb.add_argument("--steps", type=int, default=10)
    shuffle = command("shuffle", "Riffle shuffle laws, eigenfunctions and distances.")
    shuffle.add_argument("--n", type=int, default=None, help="Number of distinct cards.")
    shuffle.add_argument("--nu", default=None, help="Deck composition, e.g. 2,1,1.")
    shuffle.add_argument("--a", type=int, default=2)
    shuffle.add_argument("--q", default=None, help="Rational q for q-shuffles, e.g. 1/2.")
    shuffle.add_argument("--table", default="law",
                         choices=["law", "eigenfunctions", "distance", "quantized"])
    shuffle.add_argument("--steps", type=int, default=10)
    shuffle.add_argument("--samples", type=int, default=0)
    shuffle.add_argument("--seed", type=int, default=None)
    shuffle.add_argument("--form", default=None, help="Bilinear form file.")
    command("verify", "Run the acceptance checks.")
    return argument_parser


if __name__ == "__main__":
    arguments = make_parser().parse_args()
    logging.basicConfig(level=logging.DEBUG if arguments.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = RunConfig.from_arguments(arguments)
    except (HopfChainsError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        sys.exit(2)
    sys.exit(run(config))
