"""
Deterministic per-word random streams.

Every word gets its own `random.Random` (Mersenne Twister) instance seeded from the run seed
and the word's token index. Streams therefore do not depend on the order in which words are
processed, so serial and threaded runs produce the same output.
"""
import random
import typing as t

# 64-bit FNV-1a; builtin hash() is salted per process.
_FNV_OFFSET64 = 0xCBF29CE484222325
_FNV_PRIME64 = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN_GAMMA64 = 0x9E3779B97F4A7C15


def _fnv1a64(data: bytes) -> int:
    value = _FNV_OFFSET64
    for byte in data:
        value ^= byte
        value = (value * _FNV_PRIME64) & _MASK64
    return value


def _to_bytes(part: t.Union[int, str, bytes]) -> bytes:
    if isinstance(part, bytes):
        return part
    if isinstance(part, int):
        return (part & _MASK64).to_bytes(8, "little", signed=False)
    return part.encode("utf-8")


def _fmix64(value: int) -> int:
    """MurmurHash3 64-bit finalizer."""
    value = ((value ^ (value >> 33)) * 0xFF51AFD7ED558CCD) & _MASK64
    value = ((value ^ (value >> 33)) * 0xC4CEB9FE1A85EC53) & _MASK64
    return value ^ (value >> 33)


def derive_seed(seed: int, *parts: t.Union[int, str, bytes]) -> int:
    """Mix a base seed with any number of parts into a new 64-bit seed."""
    value = _fnv1a64(_to_bytes(seed))
    for part in parts:
        value ^= _fnv1a64(_to_bytes(part))
        value = (value * _FNV_PRIME64) & _MASK64
    return value ^ (value >> 33)


class WordStreams:
    """
    Random streams of the words of a single run.

    The run seed is hashed once; the seed of every word only adds its token index and runs a
    finalizer over the result.

    Args:
        seed: seed of the run
    """

    __slots__ = ("seed", "_base")

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self._base = derive_seed(seed)

    def seed_of(self, index: int) -> int:
        return _fmix64((self._base + (index + 1) * _GOLDEN_GAMMA64) & _MASK64)

    def stream(self, index: int) -> random.Random:
        """Random stream of the word at the given token index."""
        return random.Random(self.seed_of(index))  # noqa: S311
