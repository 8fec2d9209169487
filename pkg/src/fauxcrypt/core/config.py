"""This module defines the configuration of the obfuscation pipeline."""
import copy
import logging
import secrets
import typing as t
from dataclasses import asdict, dataclass, field
from pathlib import Path

import yaml
from fsspec import open as fs_open

from fauxcrypt.core.exceptions import InvalidObfuscationConfig
from fauxcrypt.core.schema import validate

logger = logging.getLogger(__name__)

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class ObfuscationConfig:
    """
    Settings of the obfuscation pipeline. Instances are validated on creation.

    Args:
        seed: seed from which every per-word random stream is derived. Drawn from system
            entropy when not provided.
        consonant_swap_min_len: words with more letters than this get one consonant pair
            swapped.
        vowel_shift_prob: probability that a free vowel is shifted over a neighbouring
            consonant.
        extreme: whether a single letter is additionally moved over a larger distance.
        extreme_max_move: maximum number of positions that letter moves.
        workers: number of threads used to obfuscate the words of a text.
    """

    seed: int = field(default_factory=lambda: ObfuscationConfig.random_seed())
    consonant_swap_min_len: int = 5
    vowel_shift_prob: float = 0.5
    extreme: bool = False
    extreme_max_move: int = 3
    workers: int = 1

    def __post_init__(self):
        validate(
            self.to_dict(),
            schema_name="obfuscation_config.json",
            error_cls=InvalidObfuscationConfig,
        )

    @staticmethod
    def random_seed() -> int:
        return secrets.randbits(64)

    def to_dict(self) -> t.Dict[str, t.Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: t.Mapping[str, t.Any]) -> "ObfuscationConfig":
        """Create a config from a mapping. Unknown keys are rejected by the schema."""
        data = copy.deepcopy(dict(data))
        validate(
            data,
            schema_name="obfuscation_config.json",
            error_cls=InvalidObfuscationConfig,
        )
        return cls(**data)

    @classmethod
    def from_file(cls, path: t.Union[str, Path]) -> "ObfuscationConfig":
        """Load the config from the YAML file specified by the provided path."""
        with fs_open(path, "r", encoding="utf-8") as file_:
            data = yaml.safe_load(file_) or {}

        if not isinstance(data, dict):
            msg = f"Expected a mapping in {path}, found {type(data).__name__}"
            raise InvalidObfuscationConfig(msg)

        logger.debug(f"Loaded obfuscation config from {path}: {data}")
        return cls.from_dict(data)

    def to_file(self, path: t.Union[str, Path]) -> None:
        """Dump the config to the YAML file specified by the provided path."""
        with fs_open(path, "w", encoding="utf-8", auto_mkdir=True) as file_:
            yaml.safe_dump(self.to_dict(), file_, sort_keys=False)

    def replace(self, **changes: t.Any) -> "ObfuscationConfig":
        """Return a copy with the given fields replaced. `None` values are ignored."""
        data = self.to_dict()
        data.update({key: value for key, value in changes.items() if value is not None})
        return self.from_dict(data)
