"""Bit-packed {±1}-sequences and their correlations via XOR and popcount.

A sequence of length n is an integer word: entry r sits at bit n-1-r, and a set
bit means -1. Numeric order of words is then lexicographic order with + < -.
"""

from collections.abc import Iterable

import numpy as np

from .data_models.enums import CorrelationKind, SymmetryRequirement


def full_mask(n: int) -> int:
    return (1 << n) - 1


def pack_signs(signs: Iterable[int]) -> int:
    word = 0
    for s in signs:
        word = (word << 1) | (1 if s < 0 else 0)
    return word


def unpack_word(word: int, n: int) -> list[int]:
    return [-1 if (int(word) >> (n - 1 - r)) & 1 else 1 for r in range(n)]


def rotl(words: np.ndarray, t: int, n: int) -> np.ndarray:
    """New entry r is old entry (r + t) mod n."""
    t %= n
    if t == 0:
        return words
    return ((words << t) | (words >> (n - t))) & full_mask(n)


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def cross(a: np.ndarray, b: np.ndarray, t: int, n: int, kind: CorrelationKind) -> np.ndarray:
    """Correlation of words `a` with words `b` at shift t, elementwise."""
    if kind is CorrelationKind.APERIODIC:
        diff = (a ^ rotl(b, t, n)) >> t
        return (n - t) - 2 * _popcount(diff)
    diff = a ^ rotl(b, t, n)
    if kind is CorrelationKind.NEGAPERIODIC:
        # Entries r >= n - t wrapped around and pick up a sign flip.
        diff = diff ^ ((1 << t) - 1)
    return n - 2 * _popcount(diff)


def auto(words: np.ndarray, t: int, n: int, kind: CorrelationKind) -> np.ndarray:
    return cross(words, words, t, n, kind)


def profiles(words: np.ndarray, n: int, kind: CorrelationKind) -> np.ndarray:
    """Autocorrelations at shifts 1..n-1 as an (len(words), n-1) array."""
    columns = [auto(words, t, n, kind) for t in range(1, n)]
    if not columns:
        return np.zeros((len(words), 0), dtype=np.int64)
    return np.stack(columns, axis=1)


def symmetry_layout(n: int, symmetry: SymmetryRequirement) -> tuple[list[int], list[bool], int]:
    """For each position: the free entry it copies and whether it is negated.

    The free entries are always positions 0..k-1, so the order of free values
    matches lexicographic order of the full sequence.
    """
    source: list[int] = []
    flip: list[bool] = []
    for p in range(n):
        match symmetry:
            case SymmetryRequirement.SYMMETRIC:
                source.append(min(p, (n - p) % n))
                flip.append(False)
            case SymmetryRequirement.PALINDROMIC:
                source.append(min(p, n - 1 - p))
                flip.append(False)
            case SymmetryRequirement.ANTIPALINDROMIC:
                source.append(min(p, n - 1 - p))
                flip.append(p > n - 1 - p)
            case _:
                source.append(p)
                flip.append(False)
    return source, flip, max(source) + 1


def class_words(n: int, symmetry: SymmetryRequirement) -> np.ndarray:
    """Every word of length n in the symmetry class, ascending."""
    source, flip, free = symmetry_layout(n, symmetry)
    masks = np.arange(1 << free, dtype=np.int64)
    words = np.zeros_like(masks)
    for p in range(n):
        bit = (masks >> (free - 1 - source[p])) & 1
        if flip[p]:
            bit ^= 1
        words |= bit << (n - 1 - p)
    return words


def amicability_matrix(words: np.ndarray, n: int) -> np.ndarray:
    """M[i, j] is True when R_{X_i,X_j}(t) = R_{X_j,X_i}(t) for every t."""
    a = words[:, None]
    b = words[None, :]
    result = np.ones((len(words), len(words)), dtype=bool)
    for t in range(1, n):
        result &= cross(a, b, t, n, CorrelationKind.PERIODIC) == cross(
            b, a, t, n, CorrelationKind.PERIODIC
        )
    return result
