# HopfChains/config.py
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
# The run configuration shared by every command. It is built once from the
# parsed command line, checked, and echoed into every artifact.
from __future__ import annotations
import os
from argparse import Namespace
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from HopfChains.algebra import format_rational, parse_rational
from HopfChains.errors import InvalidInputError

VERSION = "1.0.0"
OUTPUT_DIR_VARIABLE = "HOPFCHAINS_OUTPUT_DIR"
SAMPLING_COMMANDS = {"simulate"}


class Command(Enum):
    MATRIX = "matrix"
    EIGEN = "eigen"
    SIMULATE = "simulate"
    DISTANCE = "distance"
    ABSORB = "absorb"
    SHUFFLE = "shuffle"
    VERIFY = "verify"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


def parse_parts(text: str | None) -> tuple[int, ...] | None:
    """"3,2,1" or "3 2 1" as a tuple of integers."""
    if text is None:
        return None
    try:
        return tuple(int(token) for token in text.replace(",", " ").split())
    except ValueError as error:
        raise InvalidInputError("Expected a list of integers.", text) from error


@dataclass(frozen=True)
class RunConfig:
    command: Command
    instance: str = "rock"
    n: int | None = None
    nu: tuple[int, ...] | None = None
    letters: int = 2
    degree: int | None = None  # working degree, defaults to n
    a: int = 2
    steps: int = 10
    seed: int | None = None
    trajectories: int = 1
    samples: int = 0
    q: Fraction | None = None
    start: tuple[int, ...] | None = None
    form_file: Path | None = None
    graph_file: Path | None = None
    complex_file: Path | None = None
    table: str = "law"
    forward: bool = False
    output_format: OutputFormat = OutputFormat.CSV
    output: Path | None = None

    def __post_init__(self) -> None:
        if self.n is not None and self.n < 1:
            raise InvalidInputError("n must be positive.", self.n)
        if self.a < 1:
            raise InvalidInputError("a must be at least 1.", self.a)
        if self.steps < 0:
            raise InvalidInputError("steps must be nonnegative.", self.steps)
        if self.trajectories < 1:
            raise InvalidInputError("trajectories must be positive.", self.trajectories)
        if self.samples < 0:
            raise InvalidInputError("samples must be nonnegative.", self.samples)
        if self.q is not None and self.q <= 0:
            raise InvalidInputError("q must be positive.", format_rational(self.q))
        sampling = self.command.value in SAMPLING_COMMANDS or self.samples > 0
        if sampling and self.seed is None:
            raise InvalidInputError("Sampling commands need --seed.", self.command.value)

    @classmethod
    def from_arguments(cls, arguments: Namespace) -> RunConfig:
        def path(value: str | None) -> Path | None:
            return Path(value) if value else None

        output = path(getattr(arguments, "output", None))
        if output is None and os.environ.get(OUTPUT_DIR_VARIABLE):
            output = Path(os.environ[OUTPUT_DIR_VARIABLE])
        q = getattr(arguments, "q", None)
        return cls(command=Command(arguments.command),
                   instance=getattr(arguments, "instance", "rock"),
                   n=getattr(arguments, "n", None),
                   nu=parse_parts(getattr(arguments, "nu", None)),
                   letters=getattr(arguments, "letters", 2),
                   degree=getattr(arguments, "degree", None),
                   a=getattr(arguments, "a", 2),
                   steps=getattr(arguments, "steps", 10),
                   seed=getattr(arguments, "seed", None),
                   trajectories=getattr(arguments, "trajectories", 1),
                   samples=getattr(arguments, "samples", 0),
                   q=parse_rational(q) if q is not None else None,
                   start=parse_parts(getattr(arguments, "start", None)),
                   form_file=path(getattr(arguments, "form", None)),
                   graph_file=path(getattr(arguments, "graph_file", None)),
                   complex_file=path(getattr(arguments, "complex_file", None)),
                   table=getattr(arguments, "table", "law"),
                   forward=getattr(arguments, "forward", False),
                   output_format=OutputFormat(getattr(arguments, "format", "csv")),
                   output=output)

    # An output naming a directory gets a file name derived from the config
    def output_path(self) -> Path | None:
        if self.output is None:
            return None
        if self.output.suffix:
            return self.output
        size = f"-n{self.n}" if self.n is not None else ""
        return self.output / f"{self.command.value}-{self.instance}{size}.{self.output_format.value}"

    def metadata(self) -> dict[str, str]:
        echoed = {}
        for key, value in asdict(self).items():
            if key == "output" or value is None:
                continue
            match value:
                case Enum():
                    echoed[key] = value.value
                case Fraction():
                    echoed[key] = format_rational(value)
                case tuple():
                    echoed[key] = ",".join(str(v) for v in value)
                case Path():
                    echoed[key] = value.name
                case _:
                    echoed[key] = str(value)
        echoed["version"] = VERSION
        return echoed
