"""Descriptor similarity.

All confusability math in the package reduces to one primitive: Jaccard
overlap between token sets of descriptor strings. Tokens are lowercased
whitespace tokens with leading/trailing punctuation stripped, so "total." and
"Total" compare equal. The measure is symmetric, in [0, 1], and 1.0 for
identical descriptors.
"""

from __future__ import annotations

import string

_STRIP = string.punctuation


def tokens(text: str) -> frozenset[str]:
    """Token set used for all similarity computations."""
    out = []
    for tok in text.lower().split():
        tok = tok.strip(_STRIP)
        if tok:
            out.append(tok)
    return frozenset(out)


def jaccard(a: str, b: str) -> float:
    """Jaccard similarity between the token sets of two strings."""
    ta, tb = tokens(a), tokens(b)
    if not ta and not tb:
        return 1.0
    union = len(ta | tb)
    if union == 0:
        return 1.0
    return len(ta & tb) / union


def mean_pairwise(texts: list[str]) -> float:
    """Mean Jaccard over all unordered pairs; 0.0 when fewer than two texts."""
    n = len(texts)
    if n < 2:
        return 0.0
    sets = [tokens(t) for t in texts]
    total = 0.0
    pairs = 0
    for i in range(n):
        for j in range(i + 1, n):
            si, sj = sets[i], sets[j]
            union = len(si | sj)
            total += (len(si & sj) / union) if union else 1.0
            pairs += 1
    return total / pairs


def mean_to_others(target: str, others: list[str]) -> float:
    """Mean Jaccard between one string and each of the others; 0.0 if empty."""
    if not others:
        return 0.0
    return sum(jaccard(target, o) for o in others) / len(others)
