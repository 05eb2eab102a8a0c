"""
Instance and Certificate Files
JSON serialisation of problems, error profiles, codes and certificates (1-based indices)

Instance file:
    {"name": ..., "q": 2, "n": 3, "m": 3,
     "side_info": [[2], [1, 3], [1, 2]], "demands": [1, 2, 3],
     "deltas": [2, 1, 1], "code": [[...], ...]}

Certificate file:
    {"q": 2, "representation": [[...], ...], "labels": [...],
     "message_labels": [...], "code_labels": [...], "basis": [...], "basis_tail": [...]}
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..bridge import Certificate, GroundMap
from ..coding import Problem, ErrorProfile, IndexCode
from ..exceptions import InstanceParseError, InvalidArgumentError
from ..field import PrimeField, FieldMatrix
from ..matroid import VectorMatroid

logger = logging.getLogger("InstanceFiles")

PathLike = Union[str, Path]


@dataclass(frozen=True)
class InstanceFile:
    """A parsed instance: problem, error profile and optional code"""
    name: str
    problem: Problem
    profile: ErrorProfile
    code: Optional[IndexCode] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {'name': self.name}
        data.update(self.problem.to_dict())
        data['deltas'] = list(self.profile.deltas)
        if self.code is not None:
            data['code'] = self.code.to_lists()
        return data

    def with_code(self, code: IndexCode) -> 'InstanceFile':
        return InstanceFile(self.name, self.problem, self.profile, code)


def _read_json(path: Path) -> Dict[str, Any]:
    try:
        text = path.read_text()
    except OSError as e:
        raise InstanceParseError(str(path), f"cannot read file: {e.strerror or e}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceParseError(str(path), f"invalid JSON: {e.msg}", line=e.lineno)
    if not isinstance(data, dict):
        raise InstanceParseError(str(path), "top level must be a JSON object")
    return data


def _int(path: Path, data: Dict[str, Any], key: str, required: bool = True) -> Optional[int]:
    if key not in data:
        if required:
            raise InstanceParseError(str(path), "missing field", field=key)
        return None
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise InstanceParseError(str(path), f"expected an integer, got {value!r}", field=key)
    return value


def _int_list(path: Path, value: Any, key: str) -> List[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InstanceParseError(str(path), f"expected a list of integers, got {value!r}", field=key)
    return list(value)


def _matrix_rows(path: Path, value: Any, key: str) -> List[List[int]]:
    if not isinstance(value, list) or not value:
        raise InstanceParseError(str(path), "expected a non-empty list of rows", field=key)
    rows = [_int_list(path, row, f"{key}[{r + 1}]") for r, row in enumerate(value)]
    if len({len(row) for row in rows}) != 1:
        raise InstanceParseError(str(path), "rows have different lengths", field=key)
    return rows


def _field(path: Path, q: int) -> PrimeField:
    try:
        return PrimeField(q)
    except InvalidArgumentError as e:
        raise InstanceParseError(str(path), str(e), field='q')


def load_instance(path: PathLike) -> InstanceFile:
    """
    Parse an instance file

    Raises:
        InstanceParseError: bad JSON, missing or mistyped fields, inconsistent sizes
        ProblemValidationError: the problem itself violates an invariant
    """
    path = Path(path)
    data = _read_json(path)

    field_ = _field(path, _int(path, data, 'q'))
    n = _int(path, data, 'n')
    if 'side_info' not in data:
        raise InstanceParseError(str(path), "missing field", field='side_info')
    if not isinstance(data['side_info'], list):
        raise InstanceParseError(str(path), "expected a list of index lists", field='side_info')
    side_info = [_int_list(path, s, f"side_info[{i + 1}]") for i, s in enumerate(data['side_info'])]
    demands = _int_list(path, data.get('demands'), 'demands')
    m = _int(path, data, 'm', required=False)
    m = len(demands) if m is None else m
    if len(side_info) != m or len(demands) != m:
        raise InstanceParseError(
            str(path), f"m={m} but {len(side_info)} side-information sets and {len(demands)} demands"
        )
    deltas = _int_list(path, data.get('deltas', [0] * m), 'deltas')
    if len(deltas) != m or any(d < 0 for d in deltas):
        raise InstanceParseError(str(path), f"expected {m} non-negative error demands", field='deltas')

    problem = Problem(field_, m, n, tuple(side_info), tuple(demands))
    problem.validate()
    profile = ErrorProfile(tuple(deltas))

    code = None
    if data.get('code') is not None:
        rows = _matrix_rows(path, data['code'], 'code')
        if len(rows) != n:
            raise InstanceParseError(str(path), f"code has {len(rows)} rows, expected n={n}", field='code')
        code = IndexCode(FieldMatrix.from_rows(field_, rows))

    name = data.get('name', path.stem)
    logger.debug(f"✅ Loaded instance {name} from {path}")
    return InstanceFile(str(name), problem, profile, code)


def save_instance(instance: InstanceFile, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(instance.to_dict(), indent=2) + "\n")
    logger.info(f"✅ Instance saved: {path}")
    return path


def load_certificate(path: PathLike) -> Certificate:
    """
    Parse a certificate file

    Shape violations (ground-set size, rank, basis) are left to the checker,
    which reports them as MalformedCertificateError.

    Raises:
        InstanceParseError: bad JSON, missing or mistyped fields
    """
    path = Path(path)
    data = _read_json(path)

    field_ = _field(path, _int(path, data, 'q'))
    for key in ('representation', 'labels', 'message_labels', 'code_labels', 'basis', 'basis_tail'):
        if key not in data:
            raise InstanceParseError(str(path), "missing field", field=key)
    rows = _matrix_rows(path, data['representation'], 'representation')
    labels = _int_list(path, data['labels'], 'labels')

    try:
        matroid = VectorMatroid(FieldMatrix.from_rows(field_, rows), tuple(labels))
    except InvalidArgumentError as e:
        raise InstanceParseError(str(path), str(e), field='labels')

    ground_map = GroundMap(
        tuple(_int_list(path, data['message_labels'], 'message_labels')),
        tuple(_int_list(path, data['code_labels'], 'code_labels')),
    )
    certificate = Certificate(
        matroid=matroid,
        ground_map=ground_map,
        basis=frozenset(_int_list(path, data['basis'], 'basis')),
        basis_tail=tuple(_int_list(path, data['basis_tail'], 'basis_tail')),
    )
    logger.debug(f"✅ Loaded certificate from {path}")
    return certificate


def save_certificate(certificate: Certificate, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(certificate.to_dict(), indent=2) + "\n")
    logger.info(f"✅ Certificate saved: {path}")
    return path


def list_instances(directory: PathLike) -> List[Path]:
    """Instance files (*.json holding a "side_info" field) in a directory, sorted by name"""
    found = []
    for candidate in sorted(Path(directory).glob("*.json")):
        try:
            data = json.loads(candidate.read_text())
        except (OSError, json.JSONDecodeError):
            continue
        if isinstance(data, dict) and 'side_info' in data:
            found.append(candidate)
    return found
