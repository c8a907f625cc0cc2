"""
Command-Line Input and Output

Sequence and configuration loaders and the CSV/JSON report writers.

Sequence files are either JSON, {"offset": 1, "values": [[re, im], ...]}
(bare reals are accepted as values), or CSV with the header index,re,im.
Rule flags follow the grammar NAME[:PARAM], e.g. power:-0.5, const:1,
sqrt, geometric:0.5, fischer:3, table:weights.json.
"""

import csv
import json
import math
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Mapping, Union

import numpy as np

from ..core.errors import InputError
from ..core.rules import (
    ConstRule,
    CopsonRule,
    FischerRule,
    GeometricRule,
    KellerRule,
    LinearRule,
    LogRule,
    PowerRule,
    SequenceRule,
    SqrtRule,
    TableRule,
    TriangularRule,
    rule_from_dict,
)
from ..core.sequences import FiniteSequence
from ..gamma_space.config import GammaSpaceConfig

PathLike = Union[str, Path]


def _finite(value: float, where: str) -> float:
    number = float(value)
    if not math.isfinite(number):
        raise InputError(f"non-finite number {value!r} in {where}")
    return number


def _complex_entry(entry, where: str) -> complex:
    if isinstance(entry, (list, tuple)):
        if len(entry) != 2:
            raise InputError(f"complex entries are [re, im] pairs in {where}, got {entry!r}")
        return complex(_finite(entry[0], where), _finite(entry[1], where))
    if isinstance(entry, bool) or not isinstance(entry, (int, float)):
        raise InputError(f"expected a number or [re, im] pair in {where}, got {entry!r}")
    return complex(_finite(entry, where), 0.0)


def _read_text(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _sequence_from_json(path: Path) -> FiniteSequence:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict) or "values" not in data:
        raise InputError(f"{path}: expected an object with a 'values' list")
    if not isinstance(data["values"], list):
        raise InputError(f"{path}: 'values' must be a list")
    values = [_complex_entry(v, str(path)) for v in data["values"]]
    offset = data.get("offset", 1)
    if isinstance(offset, bool) or not isinstance(offset, int):
        raise InputError(f"{path}: offset must be an integer, got {offset!r}")
    plateau = _complex_entry(data.get("plateau", 0), str(path))
    return FiniteSequence.from_values(values, offset=offset, plateau=plateau)


def _sequence_from_csv(path: Path) -> FiniteSequence:
    rows = list(csv.DictReader(_read_text(path).splitlines()))
    if not rows:
        return FiniteSequence.zeros()
    missing = {"index", "re", "im"} - set(rows[0])
    if missing:
        raise InputError(f"{path}: missing CSV columns {sorted(missing)}")
    entries: Dict[int, complex] = {}
    for line, row in enumerate(rows, start=2):
        where = f"{path}:{line}"
        try:
            index = int(row["index"])
            value = complex(_finite(row["re"], where), _finite(row["im"], where))
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"{where}: unparsable row {dict(row)}") from exc
        if index < 1:
            raise InputError(f"{where}: indices start at 1, got {index}")
        if index in entries:
            raise InputError(f"{where}: duplicate index {index}")
        entries[index] = value
    start, stop = min(entries), max(entries)
    values = [entries.get(n, 0j) for n in range(start, stop + 1)]
    return FiniteSequence.from_values(values, offset=start)


def load_sequence(path: PathLike) -> FiniteSequence:
    """
    Read a sequence file.

    Args:
        path: JSON or CSV file (chosen by suffix)

    Returns:
        Normalized FiniteSequence

    Raises:
        InputError: unreadable file, malformed content or non-finite values
    """
    path = Path(path)
    if path.suffix.lower() == ".csv":
        sequence = _sequence_from_csv(path)
    else:
        sequence = _sequence_from_json(path)
    return sequence.normalized()


def load_table(path: PathLike) -> List[float]:
    """
    Read explicit values: a JSON list, a JSON object with "values", or a CSV
    with a "value" column.
    """
    path = Path(path)
    text = _read_text(path)
    if path.suffix.lower() == ".csv":
        rows = list(csv.DictReader(text.splitlines()))
        if rows and "value" not in rows[0]:
            raise InputError(f"{path}: table CSV needs a 'value' column")
        raw = [row["value"] for row in rows]
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc.msg})") from exc
        raw = data.get("values") if isinstance(data, dict) else data
        if not isinstance(raw, list):
            raise InputError(f"{path}: expected a list of values")
    try:
        values = [_finite(v, str(path)) for v in raw]
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{path}: table values must be numbers") from exc
    if not values:
        raise InputError(f"{path}: empty table")
    return values


def _number(param: str, name: str) -> float:
    try:
        return _finite(param, f"rule '{name}'")
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"rule '{name}' needs a numeric parameter, got {param!r}") from exc


RULE_PARSERS: Dict[str, Callable[[str], SequenceRule]] = {
    "const": lambda param: ConstRule(value=_number(param, "const")) if param else ConstRule(),
    "power": lambda param: PowerRule(exponent=_number(param, "power")),
    "sqrt": lambda param: SqrtRule(),
    "linear": lambda param: LinearRule(),
    "triangular": lambda param: TriangularRule(),
    "log": lambda param: LogRule(),
    "geometric": lambda param: GeometricRule(ratio=_number(param, "geometric")),
    "keller": lambda param: KellerRule(),
    "fischer": lambda param: FischerRule(p=_number(param, "fischer")),
    "copson": lambda param: CopsonRule(c=_number(param, "copson")),
    "table": lambda param: TableRule(values=load_table(param)),
}

_NEEDS_PARAM = {"power", "geometric", "fischer", "copson", "table"}


def parse_rule(text: str) -> SequenceRule:
    """
    Parse a NAME[:PARAM] rule flag.

    Raises:
        InputError: unknown rule name or missing parameter
        pydantic.ValidationError: parameter out of range (e.g. const:-1)
    """
    name, _, param = text.strip().partition(":")
    parser = RULE_PARSERS.get(name)
    if parser is None:
        choices = ", ".join(sorted(RULE_PARSERS))
        raise InputError(f"unknown rule '{name}' (choose from {choices})")
    if name in _NEEDS_PARAM and not param:
        raise InputError(f"rule '{name}' needs a parameter, e.g. {name}:VALUE")
    return parser(param)


def load_config(path: PathLike) -> GammaSpaceConfig:
    """
    Read a space configuration {"p": 2, "gamma": RULE, "q": RULE}.

    Rules are JSON objects ({"rule": "power", "exponent": -2}) or flag
    strings ("power:-2"); {"preset": "W", "p": 2} selects a named space.
    """
    path = Path(path)
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    if "preset" in data:
        return GammaSpaceConfig.preset(str(data["preset"]), float(data.get("p", 2.0)))
    fields = dict(data)
    for key in ("gamma", "q"):
        if isinstance(fields.get(key), str):
            fields[key] = parse_rule(fields[key])
        elif isinstance(fields.get(key), dict):
            fields[key] = rule_from_dict(fields[key])
    return GammaSpaceConfig(**fields)


def parse_range(text: str) -> range:
    """'A:B' -> indices A..B inclusive."""
    lo, sep, hi = text.partition(":")
    try:
        start, stop = int(lo), int(hi)
    except ValueError:
        raise InputError(f"expected a range A:B, got {text!r}") from None
    if not sep or start < 1 or stop < start:
        raise InputError(f"invalid index range {text!r}")
    return range(start, stop + 1)


def parse_grid(text: str) -> List[float]:
    """'LO:HI:STEP' -> LO, LO+STEP, ..., HI (HI included up to rounding)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise InputError(f"expected a grid LO:HI:STEP, got {text!r}")
    lo, hi, step = (_number(part, "grid") for part in parts)
    if step <= 0.0 or hi < lo:
        raise InputError(f"invalid grid {text!r}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + i * step, 12) for i in range(count)]


def parse_int_list(text: str) -> List[int]:
    """'10,100,1000' -> [10, 100, 1000]."""
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _cell(value):
    if isinstance(value, (np.floating, np.integer)):
        value = value.item()
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return value


def write_csv(path: PathLike, rows: Iterable[Mapping[str, object]]) -> Path:
    """Write rows with the columns of the first row; returns the path."""
    path = Path(path)
    rows = list(rows)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        if not rows:
            return path
        writer = csv.DictWriter(handle, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(value) for key, value in row.items()})
    return path


def write_json(path: PathLike, rows: Iterable[Mapping[str, object]]) -> Path:
    """Write rows as a JSON array with sorted keys; returns the path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = [{key: _cell(value) if not isinstance(value, float) else value
                for key, value in row.items()} for row in rows]
    path.write_text(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
    return path


WRITERS = {"csv": write_csv, "json": write_json}
