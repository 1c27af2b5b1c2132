"""Integer-vector combinatorics: dominant weights, straightening, strips.

Weights are plain tuples of ints.  The empty tuple is a legal weight of
length 0 (it indexes the identity operator).  All functions are pure.
"""

from __future__ import annotations

import itertools

Weight = tuple


def rho(k: int) -> tuple:
    """The staircase (k-1, k-2, ..., 0)."""
    if k < 1:
        raise ValueError("rho needs k >= 1")
    return tuple(range(k - 1, -1, -1))


def is_dominant(w) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def is_partition(w) -> bool:
    return is_dominant(w) and (not w or w[-1] >= 0)


def trim_zeros(w) -> tuple:
    w = tuple(w)
    n = len(w)
    while n and w[n - 1] == 0:
        n -= 1
    return w[:n]


def pad_zeros(w, k: int) -> tuple:
    w = tuple(w)
    if len(w) > k:
        raise ValueError(f"weight {w} longer than {k}")
    return w + (0,) * (k - len(w))


def dual_weight(v) -> tuple:
    """Reversed negation (-v_k, ..., -v_1); an involution."""
    return tuple(-x for x in reversed(v))


def straighten(v):
    """Signed sorting of v through the rho shift.

    Returns (sign, nu) with sign in {+1, -1} and nu the dominant weight
    such that sorting v + rho strictly decreasing and subtracting rho
    gives nu.  Returns (0, None) when v + rho has two equal entries, in
    which case the indexed operator vanishes; the zero sign propagates
    through any multiplicative use.
    """
    v = tuple(v)
    k = len(v)
    if k == 0:
        return 1, ()
    w = [v[i] + (k - 1 - i) for i in range(k)]
    if len(set(w)) < k:
        return 0, None
    inversions = 0
    for i in range(k):
        for j in range(i + 1, k):
            if w[i] < w[j]:
                inversions += 1
    w.sort(reverse=True)
    nu = tuple(w[i] - (k - 1 - i) for i in range(k))
    return (-1) ** inversions, nu


def is_vertical_strip(nu, mu) -> bool:
    """True when every coordinate of nu - mu is 0 or 1."""
    if len(nu) != len(mu):
        raise ValueError(f"length mismatch: {nu} vs {mu}")
    return all(a - b in (0, 1) for a, b in zip(nu, mu))


def vertical_strip_shrink(nu) -> tuple:
    """All dominant beta of the same length with nu/beta a vertical strip."""
    nu = tuple(nu)
    out = []
    for drops in itertools.product((0, 1), repeat=len(nu)):
        beta = tuple(a - d for a, d in zip(nu, drops))
        if is_dominant(beta):
            out.append(beta)
    return tuple(sorted(set(out), reverse=True))


def vertical_strip_grow(mu) -> tuple:
    """All dominant alpha of the same length with alpha/mu a vertical strip."""
    mu = tuple(mu)
    out = []
    for adds in itertools.product((0, 1), repeat=len(mu)):
        alpha = tuple(a + d for a, d in zip(mu, adds))
        if is_dominant(alpha):
            out.append(alpha)
    return tuple(sorted(set(out), reverse=True))


def alpha_beta(gamma):
    """Split a dominant weight into its positive part and the reversed
    negation of its negative part.

    Both components are returned at the full length of gamma (compare
    them modulo trailing zeros, or through trim_zeros).
    """
    gamma = tuple(gamma)
    if not is_dominant(gamma):
        raise ValueError(f"{gamma} is not dominant")
    k = len(gamma)
    alpha = tuple(max(x, 0) for x in gamma)
    beta = tuple(-min(gamma[k - 1 - i], 0) for i in range(k))
    return alpha, beta


def conjugate(part) -> tuple:
    """Transpose of a partition."""
    part = trim_zeros(part)
    if not part:
        return ()
    return tuple(sum(1 for p in part if p > j) for j in range(part[0]))


# -- enumeration helpers ------------------------------------------------


def subpartitions(mu):
    """All partitions contained in mu (componentwise)."""
    mu = trim_zeros(mu)

    def rec(i, cap):
        if i == len(mu):
            yield ()
            return
        for first in range(min(cap, mu[i]), -1, -1):
            if first == 0:
                yield ()
                return
            for rest in rec(i + 1, first):
                yield (first,) + rest

    yield from rec(0, mu[0] if mu else 0)


def partitions_of(n: int, max_len=None, max_part=None):
    """Yield the partitions of n (trimmed tuples), largest part first."""
    if n < 0:
        return
    if max_len is None:
        max_len = n
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len <= 0 or max_part <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, max_len - 1, first):
            yield (first,) + rest


def dominant_weights(length: int, lo: int, hi: int):
    """Yield all weakly decreasing tuples of the given length with entries
    in [lo, hi]."""
    if length == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in dominant_weights(length - 1, lo, first):
            yield (first,) + rest


# -- text notation ------------------------------------------------------


def parse_weight(text: str) -> tuple:
    """Parse comma-separated integers; the empty string is the empty weight."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for pos, tok in enumerate(text.split(",")):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"invalid integer {tok!r} at entry {pos} of {text!r}") from None
    return tuple(out)


def format_weight(w) -> str:
    return ",".join(str(x) for x in w)


def parse_blocked(text: str) -> tuple:
    """Parse `;`-separated blocks of comma-separated integers."""
    return tuple(parse_weight(part) for part in text.split(";"))


def format_blocked(blocks) -> str:
    return ";".join(format_weight(b) for b in blocks)
