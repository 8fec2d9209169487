"""This module validates fauxcrypt documents against the JSON schemas shipped in `schemas/`."""
import json
import pkgutil
import typing as t
from functools import lru_cache
from pathlib import Path

import jsonschema.exceptions
from jsonschema import Draft4Validator
from referencing import Registry, Resource
from referencing.jsonschema import DRAFT4

from fauxcrypt.core.exceptions import FauxcryptException

_SCHEMA_DIR = Path(__file__).parent / "schemas"


def _retrieve_from_filesystem(uri: str) -> Resource:
    path = _SCHEMA_DIR / uri
    contents = json.loads(path.read_text())
    return Resource.from_contents(contents, default_specification=DRAFT4)


@lru_cache(maxsize=None)
def _validator(schema_name: str) -> Draft4Validator:
    schema_data = pkgutil.get_data("fauxcrypt", f"core/schemas/{schema_name}")

    if schema_data is None:
        msg = f"schemas/{schema_name} not found"
        raise FileNotFoundError(msg)

    schema = json.loads(schema_data.decode("utf-8"))
    registry = Registry(retrieve=_retrieve_from_filesystem)  # type: ignore
    return Draft4Validator(schema, registry=registry)  # type: ignore


def validate(
    instance: t.Mapping[str, t.Any],
    *,
    schema_name: str,
    error_cls: t.Type[jsonschema.exceptions.ValidationError],
) -> None:
    """Validate a document against one of the packaged schemas.

    Args:
        instance: The document to validate, as a Python dict.
        schema_name: File name of the schema inside `core/schemas`.
        error_cls: Validation error subclass raised when the document is invalid.

    Raises:
        error_cls: when the document does not match the schema.
    """
    if not issubclass(error_cls, FauxcryptException):
        msg = f"{error_cls.__name__} is not a fauxcrypt exception"
        raise TypeError(msg)

    try:
        _validator(schema_name).validate(instance)
    except jsonschema.exceptions.ValidationError as e:
        raise error_cls.create_from(e)
