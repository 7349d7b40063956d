"""Partitions and dominant weights.

A weight is a plain tuple of ints in non-increasing order.  Partitions are
weights with non-negative entries; trailing zeros are allowed and are
ignored by :func:`strip` / :func:`same_partition`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Weight = tuple[int, ...]


def as_weight(entries: Iterable[int]) -> Weight:
    w = tuple(int(x) for x in entries)
    if not is_dominant(w):
        raise ValueError(f"weight {w} is not non-increasing")
    return w


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def is_partition(w: Sequence[int]) -> bool:
    return is_dominant(w) and all(x >= 0 for x in w)


def strip(p: Sequence[int]) -> Weight:
    """Drop trailing zeros."""
    p = tuple(p)
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def same_partition(p: Sequence[int], q: Sequence[int]) -> bool:
    return strip(p) == strip(q)


def pad(p: Sequence[int], n: int, fill: int = 0) -> Weight:
    p = tuple(p)
    if len(p) > n:
        if any(x != fill for x in p[n:]):
            raise ValueError(f"{p} has more than {n} nonzero parts")
        return p[:n]
    return p + (fill,) * (n - len(p))


def size(p: Sequence[int]) -> int:
    return sum(p)


def conjugate(p: Sequence[int]) -> Weight:
    """Transpose of the Young diagram: ``p'_k = #{j : p_j >= k}``."""
    if not is_partition(p):
        raise ValueError(f"conjugate needs a partition, got {tuple(p)}")
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def nu_prime(nu: Sequence[int], k: int) -> int:
    """Number of indices j with ``nu[j] >= k``; defined for any integer k."""
    return sum(1 for x in nu if x >= k)


def complement_in_box(nu: Sequence[int], e: int) -> Weight:
    """``(e - nu[-1], ..., e - nu[0])``, the complement inside a box of width e."""
    return tuple(e - x for x in reversed(nu))


def weyl_dim(w: Sequence[int], n: int) -> int:
    """Dimension of the GL_n Schur module with highest weight ``w``.

    ``w`` may be shorter than ``n``; it is padded with zeros, so a weight
    whose last entry is negative must be given at full length.  The result
    is invariant under shifting every entry by the same integer.
    """
    w = pad(w, n)
    if not is_dominant(w):
        raise ValueError(f"weyl_dim needs a dominant weight, got {w}")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def enumerate_in_box(rows: int, cols: int) -> list[Weight]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    Partitions come back padded to length ``rows``, in lexicographically
    decreasing order.  There are ``binomial(rows + cols, rows)`` of them.
    """
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be non-negative")
    return list(_box(rows, cols))


def _box(rows: int, cols: int) -> Iterator[Weight]:
    if rows == 0:
        yield ()
        return
    for first in range(cols, -1, -1):
        for rest in _box(rows - 1, first):
            yield (first,) + rest


def partitions_of_size_at_most(total: int, parts: int) -> Iterator[Weight]:
    """Partitions with at most ``parts`` parts and size <= total, padded."""

    def rec(remaining: int, slots: int, cap: int) -> Iterator[Weight]:
        if slots == 0:
            yield ()
            return
        for first in range(min(cap, remaining), -1, -1):
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest

    yield from rec(total, parts, total)


def exterior_weight(k: int, n: int) -> Weight:
    """The weight ``(1^k, 0^(n-k))`` of the k-th exterior power."""
    return (1,) * k + (0,) * (n - k)


def is_exterior_weight(w: Sequence[int]) -> int | None:
    """Return s when ``w == (1^s, 0^(n-s))``, else None."""
    if any(x not in (0, 1) for x in w) or not is_dominant(w):
        return None
    return sum(w)


__all__ = [
    "Weight",
    "as_weight",
    "complement_in_box",
    "conjugate",
    "enumerate_in_box",
    "exterior_weight",
    "is_dominant",
    "is_exterior_weight",
    "is_partition",
    "nu_prime",
    "pad",
    "partitions_of_size_at_most",
    "same_partition",
    "size",
    "strip",
    "weyl_dim",
]
