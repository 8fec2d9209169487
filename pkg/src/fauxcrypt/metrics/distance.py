"""
Edit distances between a word and its obfuscated form.

Both distances use unit costs. `damerau_levenshtein` is the optimal string alignment variant:
an adjacent transposition counts as one operation, but a transposed pair is not edited again.
"""


def levenshtein(a: str, b: str) -> int:
    """Minimum number of single character insertions, deletions and substitutions."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)

    previous = list(range(len(b) + 1))
    for i, char_a in enumerate(a, start=1):
        current = [i]
        for j, char_b in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (char_a != char_b),
                ),
            )
        previous = current

    return previous[-1]


def damerau_levenshtein(a: str, b: str) -> int:
    """Levenshtein distance that also counts swapping two adjacent characters as one edit."""
    if a == b:
        return 0
    if not a or not b:
        return len(a) + len(b)

    before_previous = [0] * (len(b) + 1)
    previous = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        current = [i] + [0] * len(b)
        for j in range(1, len(b) + 1):
            cost = a[i - 1] != b[j - 1]
            value = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + cost,
            )
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                value = min(value, before_previous[j - 2] + 1)
            current[j] = value
        before_previous, previous = previous, current

    return previous[-1]


def hamming(a: str, b: str) -> int:
    """Number of positions holding different characters; both strings must be equally long."""
    if len(a) != len(b):
        msg = f"Hamming distance needs equal lengths, got {len(a)} and {len(b)}"
        raise ValueError(msg)
    return sum(char_a != char_b for char_a, char_b in zip(a, b))
