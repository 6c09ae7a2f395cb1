"""Edit-distance primitives shared by the line and AST similarity channels."""

from __future__ import annotations

import re
from collections.abc import Sequence

_WS = re.compile(r"\s+")


def levenshtein(a: Sequence, b: Sequence) -> int:
    """Unit-cost edit distance (substitution, insertion, deletion).

    Works on any pair of sequences with comparable elements: strings,
    token lists, AST label sequences.
    """
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    cur = [0] * (len(b) + 1)
    for i, ca in enumerate(a, start=1):
        cur[0] = i
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev, cur = cur, prev
    return prev[len(b)]


def similarity_ratio(a: Sequence, b: Sequence) -> float:
    """1 - editdistance/max(len); two empty sequences count as identical."""
    if not a and not b:
        return 1.0
    longest = max(len(a), len(b))
    return 1.0 - levenshtein(a, b) / longest


def squeeze_ws(text: str) -> str:
    """Collapse all whitespace runs to single spaces and strip the ends."""
    return _WS.sub(" ", text).strip()


def line_similarity(sv_text: str, candidate: str) -> float:
    """Text similarity of two statements after whitespace squeezing.

    This is the pre-filter channel gated by theta1: cheap, purely
    syntactic, and deliberately blind to semantics.
    """
    return similarity_ratio(squeeze_ws(sv_text), squeeze_ws(candidate))
