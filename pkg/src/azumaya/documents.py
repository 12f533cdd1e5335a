"""Structure-constant documents: the JSON exchange format.

Documents carry one Hopf algebra (basis labels, unit, counit, mult
tensor, comult triples, antipode matrix) plus optional named functional
blocks tagged ``cocycle`` or ``rform``.  Validation runs the shipped JSON
schema first and exact semantic checks second; every complaint cites a
JSON-pointer path.
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .convolution import Functional2
from .fields import FieldError, field_from_name, scalar_to_str
from .hopf import HopfAlgebraData
from .linalg import ExactMatrix

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Invalid document; ``errors`` holds pointer-tagged messages."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors[:3]) + ("; ..." if len(errors) > 3 else ""))
        self.errors = errors


def _schema() -> dict:
    text = (
        resources.files("azumaya") / "schemas" / "structure_constants.schema.json"
    ).read_text()
    return json.loads(text)


def schema_path() -> str:
    return str(resources.files("azumaya") / "schemas" / "structure_constants.schema.json")


def _pointer(path) -> str:
    return "/" + "/".join(str(p) for p in path) if path else "/"


def validate_document(doc: dict) -> None:
    """Schema validation, then exact shape and scalar checks."""
    validator = jsonschema.Draft202012Validator(_schema())
    errors = [
        f"{_pointer(e.absolute_path)}: {e.message}"
        for e in sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    ]
    if errors:
        raise DocumentError(errors)

    errors = []
    d = doc["dim"]
    try:
        field = field_from_name(doc["field"])
    except FieldError as exc:
        raise DocumentError([f"/field: {exc}"]) from exc

    def check_scalar(value, pointer):
        try:
            field(value)
        except FieldError as exc:
            errors.append(f"{pointer}: {exc}")

    if len(doc["basis"]) != d:
        errors.append(f"/basis: expected {d} labels, got {len(doc['basis'])}")
    for name, vec in (("unit", doc["unit"]), ("counit", doc["counit"])):
        if len(vec) != d:
            errors.append(f"/{name}: expected length {d}")
        for i, x in enumerate(vec):
            check_scalar(x, f"/{name}/{i}")
    if len(doc["mult"]) != d:
        errors.append(f"/mult: expected {d} rows")
    for i, row in enumerate(doc["mult"]):
        if len(row) != d:
            errors.append(f"/mult/{i}: expected {d} entries")
            continue
        for j, vec in enumerate(row):
            if len(vec) != d:
                errors.append(f"/mult/{i}/{j}: expected length {d}")
                continue
            for k, x in enumerate(vec):
                check_scalar(x, f"/mult/{i}/{j}/{k}")
    if len(doc["comult"]) != d:
        errors.append(f"/comult: expected {d} rows")
    for h, triples in enumerate(doc["comult"]):
        for t, (c, i, j) in enumerate(triples):
            check_scalar(c, f"/comult/{h}/{t}/0")
            if not (0 <= i < d and 0 <= j < d):
                errors.append(f"/comult/{h}/{t}: index out of range")
    if len(doc["antipode"]) != d:
        errors.append(f"/antipode: expected {d} rows")
    for i, row in enumerate(doc["antipode"]):
        if len(row) != d:
            errors.append(f"/antipode/{i}: expected {d} entries")
            continue
        for j, x in enumerate(row):
            check_scalar(x, f"/antipode/{i}/{j}")
    for name, block in doc.get("functionals", {}).items():
        if "matrix" in block:
            mat = block["matrix"]
            if len(mat) != d:
                errors.append(f"/functionals/{name}/matrix: expected {d} rows")
            for i, row in enumerate(mat):
                if len(row) != d:
                    errors.append(f"/functionals/{name}/matrix/{i}: expected {d} entries")
                    continue
                for j, x in enumerate(row):
                    check_scalar(x, f"/functionals/{name}/matrix/{i}/{j}")
        else:
            for key, x in block["pairs"].items():
                parts = key.split("|")
                if len(parts) != 2 or any(p not in doc["basis"] for p in parts):
                    errors.append(
                        f"/functionals/{name}/pairs/{key}: key must be 'label|label'"
                    )
                check_scalar(x, f"/functionals/{name}/pairs/{key}")
    if errors:
        raise DocumentError(errors)


def load_document(source) -> dict:
    """Parse and validate a document from a path, JSON text, or dict."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if "{" not in str(source):
            with open(source) as fh:
                text = fh.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError([f"/: not valid JSON ({exc})"]) from exc
    validate_document(doc)
    return doc


def hopf_from_document(doc: dict) -> tuple[HopfAlgebraData, dict[str, tuple[str, Functional2]]]:
    """Build the Hopf algebra and its named functionals from a document."""
    field = field_from_name(doc["field"])
    d = doc["dim"]
    labels = tuple(doc["basis"])
    antipode = ExactMatrix.from_rows(field, doc["antipode"])
    H = HopfAlgebraData(
        field=field,
        dim=d,
        mult=tuple(tuple(tuple(vec) for vec in row) for row in doc["mult"]),
        unit=tuple(doc["unit"]),
        comult=tuple(
            tuple((c, i, j) for c, i, j in triples) for triples in doc["comult"]
        ),
        counit=tuple(doc["counit"]),
        antipode=antipode,
        labels=labels,
    )
    functionals: dict[str, tuple[str, Functional2]] = {}
    for name, block in doc.get("functionals", {}).items():
        if "matrix" in block:
            values = block["matrix"]
        else:
            index = {lab: i for i, lab in enumerate(labels)}
            grid = [[field.zero] * d for _ in range(d)]
            for key, x in block["pairs"].items():
                left, right = key.split("|")
                grid[index[left]][index[right]] = field(x)
            values = grid
        functionals[name] = (block["role"], Functional2(field, tuple(tuple(r) for r in values)))
    return H, functionals


def document_from_hopf(
    H: HopfAlgebraData,
    functionals: dict[str, tuple[str, Functional2]] | None = None,
) -> dict:
    """Serialize a Hopf algebra (and optional functionals) to a document."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": H.field.name,
        "dim": H.dim,
        "basis": list(H.labels),
        "unit": [scalar_to_str(x) for x in H.unit],
        "counit": [scalar_to_str(x) for x in H.counit],
        "mult": [
            [[scalar_to_str(x) for x in vec] for vec in row] for row in H.mult
        ],
        "comult": [
            [[scalar_to_str(c), i, j] for c, i, j in triples] for triples in H.comult
        ],
        "antipode": [
            [scalar_to_str(H.antipode.entry(i, j)) for j in range(H.dim)]
            for i in range(H.dim)
        ],
    }
    if functionals:
        doc["functionals"] = {
            name: {
                "role": role,
                "matrix": [[scalar_to_str(x) for x in row] for row in func.values],
            }
            for name, (role, func) in functionals.items()
        }
    return doc
