"""
Run configuration of the command line.

Values come from an optional YAML file and from command line flags; the
flags are merged over the file with :func:`update_params_dict` and the
result is validated as a :class:`RunConfig`.
"""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from localh.combinatorics.chebyshev import DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS
from localh.combinatorics.multiplier import DEFAULT_DEPTH
from localh.errors import ConfigurationError
from localh.set_up import default_workers, get_config_dir

COMMANDS = (
    "xi",
    "local-h",
    "certify",
    "ms-test",
    "chebyshev",
    "narayana-check",
    "transfer-check",
)

Command = Literal[
    "xi",
    "local-h",
    "certify",
    "ms-test",
    "chebyshev",
    "narayana-check",
    "transfer-check",
]
OutputFormat = Literal["json-lines", "csv", "pretty"]


def update_params_dict(
    params: Dict[str, Any], update_params: Optional[Dict[str, Any]]
) -> Dict[str, Any]:
    """
    Update the parameters dictonary. This is done via recursion to reach
    nested parameter dicts without overwriting the full config.

    :param params: Full configuration dictionary to be updated.
    :type param: Dict[str, Any]
    :param update_params: Dictionary with the values to be updated.
    :type update_params: Dict[str, Any]
    """
    if update_params is None:
        return params
    for key, value in update_params.items():
        if isinstance(value, dict):
            params[key] = update_params_dict(params.get(key, {}), value)
        else:
            params[key] = value
    return params


def parse_rank_range(text: str) -> Tuple[int, int]:
    """
    ``"A..B"`` to ``(A, B)``; a single integer gives ``(A, A)``.

    :raises ValueError: On malformed text.
    """
    lo, sep, hi = text.partition("..")
    if not sep:
        return int(text), int(text)
    return int(lo), int(hi)


class RunConfig(BaseModel):
    """
    Validated configuration of a single invocation.

    Field names double as the keys of a YAML run configuration, e.g.::

        command: certify
        types: [A, B, D]
        ranks: [2, 32]
        format: json-lines
        workers: 4
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    command: Command
    types: List[str] = Field(default_factory=list)
    ranks: Optional[Tuple[int, int]] = None
    params: List[int] = Field(default_factory=list)
    depth: int = DEFAULT_DEPTH
    precision_bits: int = Field(default=DEFAULT_PRECISION_BITS, ge=MIN_PRECISION_BITS)
    output_format: OutputFormat = Field(default="json-lines", alias="format")
    out: Optional[Path] = None
    show_roots: bool = False
    workers: int = Field(default_factory=default_workers, ge=1)
    timings: bool = False
    verbose: bool = False
    seq: Optional[str] = None
    explicit: Optional[List[str]] = None
    xi: Optional[List[str]] = None
    n: Optional[int] = None
    k: Optional[int] = None

    @field_validator("ranks", mode="before")
    @classmethod
    def _parse_ranks(cls, value: Any) -> Any:
        if isinstance(value, str):
            return parse_rank_range(value)
        if isinstance(value, int):
            return (value, value)
        return value

    @field_validator("explicit", "xi", mode="before")
    @classmethod
    def _split_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [v.strip() for v in value.split(",") if v.strip()]
        if isinstance(value, list):
            return [str(v) for v in value]
        return value

    @model_validator(mode="after")
    def _check_ranks(self) -> "RunConfig":
        if self.ranks is not None and self.ranks[0] > self.ranks[1]:
            raise ValueError(f"Empty rank range {self.ranks[0]}..{self.ranks[1]}")
        return self

    def orders(self) -> List[int]:
        """``n`` values for the commands indexed by a plain integer."""
        if self.n is not None:
            return [self.n]
        if self.ranks is not None:
            return list(range(self.ranks[0], self.ranks[1] + 1))
        raise ConfigurationError("n", None, "--n N or --ranks A..B")


def load_config(path: Path) -> Dict[str, Any]:
    """
    Read a YAML run configuration. A bare file name that does not exist in
    the working directory is looked up in the user config directory.

    :raises ConfigurationError: If the file holds anything but a mapping.
    """
    if not path.exists() and path.parent == Path("."):
        path = get_config_dir() / path
    with open(path, "r", encoding="utf-8") as file:
        params = yaml.safe_load(file)
    if params is None:
        return {}
    if not isinstance(params, dict):
        raise ConfigurationError("config file", path, "a YAML mapping of RunConfig fields")
    return params
