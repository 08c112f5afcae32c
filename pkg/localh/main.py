# pylint: disable=logging-format-interpolation
# pylint: disable=logging-not-lazy
"""
Command line entry point. Builds the root systems or orders requested,
runs the checks through the ordered batch runner and writes the records.

Exit codes: 0 when every check passed, 1 when a mathematical check
failed, 2 on invalid usage.
"""
import argparse
import logging
import sys
from datetime import date
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, TextIO

from pydantic import ValidationError

from localh.certification.emitters import FORMATS, EmitterFactory
from localh.certification.records import (
    Record,
    polya_schur_records,
    rational_str,
    record_passed,
    transfer_record,
)
from localh.certification.run_certification import (
    CertifyTask,
    ChebyshevTask,
    certify_task,
    chebyshev_task,
    local_h_task,
    narayana_task,
    run_ordered,
    transfer_task,
    xi_task,
)
from localh.combinatorics.basis_transforms import XiVector, realrootedness_transfer_check
from localh.combinatorics.chebyshev import h_root_oracle
from localh.combinatorics.cluster_xi import (
    EXCEPTIONAL_TYPES,
    INFINITE_FAMILIES,
    MIN_PARAMETER,
    CartanType,
    RootSystem,
    all_exceptional,
)
from localh.combinatorics.multiplier import MultiplierSequenceFactory, polya_schur_report
from localh.config import COMMANDS, RunConfig, load_config, update_params_dict
from localh.errors import (
    ConfigurationError,
    DegreeTooLarge,
    IndexOutOfRange,
    InvalidDepth,
    InvalidRank,
    LocalHError,
    NegativeOrder,
    NotInBasisSpan,
    UnknownSequence,
    UnsupportedXiZero,
    ZeroInput,
)
from localh.set_up import get_log_dir, make_userdirs

USAGE_ERRORS = (
    ConfigurationError,
    ValidationError,
    InvalidRank,
    NegativeOrder,
    UnknownSequence,
    InvalidDepth,
    IndexOutOfRange,
    UnsupportedXiZero,
    ZeroInput,
    NotInBasisSpan,
    DegreeTooLarge,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localh",
        description="Build and certify local h-polynomials of cluster subdivisions",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "--type",
        dest="types",
        action="append",
        help="root system type (A, B, D, I2, G2, H3, H4, F4, E6, E7, E8 or all); repeatable",
    )
    parser.add_argument("--rank", dest="ranks", help="single rank")
    parser.add_argument("--ranks", dest="ranks", help="inclusive rank range A..B")
    parser.add_argument(
        "--param",
        dest="params",
        type=int,
        action="append",
        help="dihedral order m for I2, or the n of a named sequence; repeatable",
    )
    parser.add_argument("--depth", type=int, help="Polya-Schur test depth")
    parser.add_argument("--precision-bits", dest="precision_bits", type=int)
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--show-roots", dest="show_roots", action="store_true", default=None)
    parser.add_argument("--out", type=Path, help="output file instead of stdout")
    parser.add_argument("--config", type=Path, help="YAML run configuration")
    parser.add_argument(
        "--verbose", action="store_true", default=None, help="activate logging output to screen"
    )
    parser.add_argument("--workers", type=int, help="worker processes (default LOCALH_WORKERS)")
    parser.add_argument(
        "--timings", action="store_true", default=None, help="fill in runtime_ms"
    )
    parser.add_argument("--seq", help="named multiplier sequence")
    parser.add_argument("--explicit", help="comma separated sequence values")
    parser.add_argument("--xi", help="comma separated expansion for transfer-check")
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int, help="single oracle root index for chebyshev")
    return parser


def make_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    config_path = args.pop("config")
    params: Dict[str, Any] = load_config(config_path) if config_path else {}
    cli_values = {key: value for key, value in args.items() if value is not None}
    update_params_dict(params, cli_values)
    return RunConfig.model_validate(params)


def _setup_logging(verbose: bool) -> None:
    make_userdirs()
    logfile = get_log_dir() / f"log_{date.today()}.log"
    handlers: list[logging.Handler] = [logging.FileHandler(logfile, encoding="utf-8")]
    if verbose:
        handlers.append(logging.StreamHandler())
    logging.basicConfig(
        handlers=handlers,
        format="%(levelname)s\t%(asctime)s %(message)s",
        datefmt="%Y/%m/%d %I:%M:%S %p",
        level=logging.INFO,
        force=True,
    )


def select_systems(config: RunConfig) -> List[RootSystem]:
    """
    Root systems named by ``--type`` over the requested ranks or dihedral
    orders, sorted by type and rank without repeats.

    :raises ConfigurationError: If no type is given or a family lacks ranks.
    :raises InvalidRank:
    """
    if not config.types:
        raise ConfigurationError("type", None, "one of A, B, D, I2, G2, H3, H4, F4, E6, E7, E8, all")
    systems = set()
    for name in config.types:
        key = name.strip().upper()
        if key == "ALL":
            if config.ranks is not None:
                for family in INFINITE_FAMILIES:
                    low = max(config.ranks[0], MIN_PARAMETER[family])
                    systems.update(
                        RootSystem(family, r) for r in range(low, config.ranks[1] + 1)
                    )
            systems.update(RootSystem(CartanType.I2, m) for m in config.params)
            systems.update(all_exceptional())
            continue
        if key == "I2":
            if not config.params:
                raise ConfigurationError("param", None, "--param m with m >= 3 for I2")
            systems.update(RootSystem.parse(key, m) for m in config.params)
            continue
        if key in (f.value for f in EXCEPTIONAL_TYPES) or key == "G2":
            if config.ranks is None:
                systems.add(RootSystem.parse(key, None))
            else:
                systems.update(
                    RootSystem.parse(key, r) for r in range(config.ranks[0], config.ranks[1] + 1)
                )
            continue
        if config.ranks is None:
            raise ConfigurationError("rank", None, f"--rank N or --ranks A..B for type {name}")
        systems.update(
            RootSystem.parse(key, r) for r in range(config.ranks[0], config.ranks[1] + 1)
        )
    return sorted(systems, key=lambda rs: rs.sort_key())


def _explicit_values(values: Optional[List[str]]) -> Optional[List[Fraction]]:
    if values is None:
        return None
    try:
        return [Fraction(v) for v in values]
    except ValueError as exc:
        raise ConfigurationError("explicit", values, "comma separated rationals like 1,0,1/2") from exc


def _ms_test_records(config: RunConfig) -> List[Record]:
    if config.explicit is not None:
        name = "explicit"
    elif config.seq is not None:
        name = config.seq
    else:
        raise ConfigurationError("seq", None, "--seq NAME or --explicit v0,v1,...")
    sequence = MultiplierSequenceFactory.create_sequence(
        name,
        param=config.params[0] if config.params else None,
        explicit=_explicit_values(config.explicit),
    )
    return polya_schur_records(polya_schur_report(sequence, config.depth))


def _oracle_value_record(n: int, k: int, precision_bits: int) -> Record:
    value = h_root_oracle(n, k, precision_bits)
    lo, hi = value.enclosure()
    return {
        "check": "oracle_value",
        "n": n,
        "k": k,
        "value": str(value),
        "enclosure": [rational_str(lo), rational_str(hi)],
    }


def collect_records(config: RunConfig) -> Iterator[Record]:
    """Records of the configured command, in output order."""
    progress = config.verbose
    if config.command == "xi":
        yield from run_ordered(xi_task, select_systems(config), config.workers, progress, "xi")
    elif config.command == "local-h":
        yield from run_ordered(
            local_h_task, select_systems(config), config.workers, progress, "local-h"
        )
    elif config.command == "certify":
        tasks = [
            CertifyTask(rs, config.show_roots, config.timings) for rs in select_systems(config)
        ]
        yield from run_ordered(certify_task, tasks, config.workers, progress, "certify")
    elif config.command == "transfer-check":
        if config.xi is not None:
            if config.n is None:
                raise ConfigurationError("n", None, "--n with --xi")
            try:
                vector = XiVector.of(config.n, _explicit_values(config.xi) or [])
            except ValueError as exc:
                raise ConfigurationError("xi", config.xi, f"{config.n // 2 + 1} entries") from exc
            yield transfer_record(str(vector), realrootedness_transfer_check(vector))
        else:
            yield from run_ordered(
                transfer_task, select_systems(config), config.workers, progress, "transfer"
            )
    elif config.command == "narayana-check":
        yield from run_ordered(
            narayana_task, config.orders(), config.workers, progress, "narayana"
        )
    elif config.command == "chebyshev":
        if config.k is not None:
            if config.n is None:
                raise ConfigurationError("n", None, "--n with --k")
            yield _oracle_value_record(config.n, config.k, config.precision_bits)
            return
        tasks = [
            ChebyshevTask(n, config.precision_bits, config.show_roots) for n in config.orders()
        ]
        yield from run_ordered(chebyshev_task, tasks, config.workers, progress, "chebyshev")
    else:
        yield from _ms_test_records(config)


def _emit_all(config: RunConfig, stream: TextIO) -> bool:
    emitter = EmitterFactory.create_emitter(config.output_format, stream)
    passed = True
    for record in collect_records(config):
        emitter.emit(record)
        passed = record_passed(record) and passed
    emitter.close()
    return passed


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    :return: Process exit code.
    :rtype: int
    """
    try:
        config = make_config(argv)
    except (ConfigurationError, ValidationError, ValueError, OSError) as exc:
        print(f"localh: {exc}", file=sys.stderr)
        return 2
    _setup_logging(config.verbose)
    logging.info(f"STARTED {config.command}".ljust(65, "=") + "[START]")
    try:
        if config.out is not None:
            try:
                file = open(config.out, "w", encoding="utf-8", newline="")
            except OSError as exc:
                raise ConfigurationError("out", config.out, "a writable file path") from exc
            with file:
                passed = _emit_all(config, file)
        else:
            passed = _emit_all(config, sys.stdout)
    except USAGE_ERRORS as exc:
        logging.error(f"{config.command} rejected its input".ljust(65, ".") + "[failed]")
        print(f"localh: {exc}", file=sys.stderr)
        return 2
    except LocalHError as exc:
        logging.exception(f"{config.command} failed")
        print(f"localh: {exc}", file=sys.stderr)
        return 1
    logging.info(
        f"FINISHED {config.command}".ljust(65, "=") + ("[done]" if passed else "[failed]")
    )
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
