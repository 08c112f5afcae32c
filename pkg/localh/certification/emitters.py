"""
Output formats for records.
"""

from __future__ import annotations

import csv
import json
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, TextIO

from termcolor import colored

from localh.certification.records import Record
from localh.errors import ConfigurationError

FORMATS = ("json-lines", "csv", "pretty")

_VERDICT_KEYS = ("real_rooted", "passed")


class EmitterFactory:
    """
    Emitter Factory responsible for creating and returning an instance of
    the requested output format. All emitters created from this factory
    adhere to the interface specified in :class:`Emitter`, so the command
    line code never needs to know which format it writes.

    Example:
        >>> emitter = EmitterFactory.create_emitter('json-lines', sys.stdout)
    """

    @staticmethod
    def create_emitter(fmt: str, stream: TextIO) -> Emitter:
        """
        :param fmt: One of json-lines, csv, pretty.
        :type fmt: str
        :param stream: Open text stream the records are written to.
        :type stream: TextIO
        :return: Instance of the requested emitter.
        :rtype: Emitter
        :raises ConfigurationError:
        """
        if fmt == "json-lines":
            return JsonLinesEmitter(stream)
        if fmt == "csv":
            return CsvEmitter(stream)
        if fmt == "pretty":
            return PrettyEmitter(stream)
        raise ConfigurationError("format", fmt, FORMATS)


class Emitter(ABC):
    """Abstract Base Class for all emitters. Records are written in the
    order :meth:`emit` is called and flushed one by one."""

    def __init__(self, stream: TextIO) -> None:
        self.stream = stream

    @abstractmethod
    def emit(self, record: Record) -> None:
        """Write a single record."""

    def close(self) -> None:
        self.stream.flush()


class JsonLinesEmitter(Emitter):
    def emit(self, record: Record) -> None:
        self.stream.write(json.dumps(record, separators=(",", ":")) + "\n")
        self.stream.flush()


def _flatten(record: Record, prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, name + "."))
        elif isinstance(value, list):
            flat[name] = ";".join(
                json.dumps(v, separators=(",", ":")) if isinstance(v, dict) else str(v)
                for v in value
            )
        elif value is None:
            flat[name] = ""
        else:
            flat[name] = value
    return flat


class CsvEmitter(Emitter):
    """
    Nested dictionaries become dotted columns and lists are joined with
    ``;``. The header is taken from the first record; later records fill
    missing columns with empty cells and drop unknown ones.
    """

    def __init__(self, stream: TextIO) -> None:
        super().__init__(stream)
        self._writer: Optional[csv.DictWriter[str]] = None

    def emit(self, record: Record) -> None:
        flat = _flatten(record)
        if self._writer is None:
            self._writer = csv.DictWriter(
                self.stream, fieldnames=list(flat), extrasaction="ignore", lineterminator="\n"
            )
            self._writer.writeheader()
        self._writer.writerow(flat)
        self.stream.flush()


class PrettyEmitter(Emitter):
    def emit(self, record: Record) -> None:
        lines: List[str] = []
        for key, value in _flatten(record).items():
            if key in _VERDICT_KEYS and isinstance(value, bool):
                shown = colored("PASS", "green") if value else colored("FAIL", "red")
            else:
                shown = str(value)
            lines.append(f"{key}".ljust(24, ".") + f" {shown}")
        self.stream.write("\n".join(lines) + "\n\n")
        self.stream.flush()
