# HopfChains/emit.py
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
# Writes command results as CSV or JSON. Every artifact starts with the run
# configuration and the library version. Probabilities are written as exact
# "p/q" strings.
import csv
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, TextIO
from HopfChains.algebra import format_rational
from HopfChains.config import OutputFormat, RunConfig


@dataclass
class Table:
    name: str
    header: list[str]
    rows: list[list[object]] = field(default_factory=list)

    def add(self, *cells: object) -> None:
        self.rows.append(list(cells))


def cell(value: object) -> str:
    match value:
        case None:
            return ""
        case bool():
            return "pass" if value else "fail"
        case Fraction() | int():
            return format_rational(value)
        case _:
            return str(value)


@contextmanager
def open_output(config: RunConfig) -> Iterator[TextIO]:
    path = config.output_path()
    if path is None:
        yield sys.stdout
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as stream:
        yield stream


def write_csv(tables: list[Table], config: RunConfig, stream: TextIO) -> None:
    for key, value in config.metadata().items():
        stream.write(f"# {key}={value}\n")
    writer = csv.writer(stream, lineterminator="\n")
    for table in tables:
        stream.write(f"# table={table.name}\n")
        writer.writerow(table.header)
        writer.writerows([cell(c) for c in row] for row in table.rows)


def write_json(tables: list[Table], extra: dict[str, object], config: RunConfig,
               stream: TextIO) -> None:
    document: dict[str, object] = {"config": config.metadata()}
    for table in tables:
        document[table.name] = [dict(zip(table.header, (cell(c) for c in row)))
                                for row in table.rows]
    document.update(extra)
    json.dump(document, stream, indent=2, sort_keys=False)
    stream.write("\n")


def emit(tables: list[Table], config: RunConfig, extra: dict[str, object] | None = None) -> None:
    with open_output(config) as stream:
        if config.output_format is OutputFormat.JSON:
            write_json(tables, extra or {}, config, stream)
        else:
            write_csv(tables, config, stream)
            for key, value in (extra or {}).items():
                stream.write(f"# {key}={json.dumps(value, sort_keys=True)}\n")
