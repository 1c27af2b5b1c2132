"""Generalized Kostka polynomials by two independent engines.

The Kostant engine antisymmetrizes a block-triangular partition-function
count; the vertex engine reads Schur coefficients off a composite of
Hall-Littlewood vertex operators applied to 1.  Agreement of the two is
the library's central cross-check.
"""

from __future__ import annotations

import itertools
import logging

from .coeffs import QPoly
from .symfunc import one
from .vertexop import apply_H_word
from .weights import (
    is_dominant,
    is_partition,
    pad_zeros,
    partitions_of,
    trim_zeros,
    vertical_strip_grow,
    vertical_strip_shrink,
)

log = logging.getLogger(__name__)

_SERIES_CACHE: dict = {}
_KOSTANT_CACHE: dict = {}
_WORD_CACHE: dict = {}


def shape_of(gamma) -> tuple:
    """Block sizes of a blocked weight."""
    return tuple(len(b) for b in gamma)


def roots_set(eta) -> tuple:
    """Strictly upper block-triangular positions (1-indexed pairs) for
    diagonal block sizes eta."""
    eta = tuple(eta)
    if any(e < 1 for e in eta):
        raise ValueError("block sizes must be positive")
    n = sum(eta)
    block_of = []
    for b, size in enumerate(eta):
        block_of.extend([b] * size)
    return tuple((i + 1, j + 1)
                 for i in range(n) for j in range(i + 1, n)
                 if block_of[i] < block_of[j])


def kostant_series(eta, d) -> QPoly:
    """Generating polynomial sum q^{|m|} over maps m from the block
    root set to the naturals whose weight sum(i,j) m(i,j)(e_i - e_j)
    equals d.

    Enumerated positionwise: crossing each cut p is forced to carry
    exactly the prefix sum d_1 + ... + d_p, which prunes the search and
    detects infeasibility (negative prefix, nonzero total) outright.
    """
    eta, d = tuple(eta), tuple(d)
    n = sum(eta)
    if len(d) != n:
        raise ValueError("weight length must match the shape")
    key = (eta, d)
    cached = _SERIES_CACHE.get(key)
    if cached is not None:
        return cached
    prefix = list(itertools.accumulate(d))
    if (prefix and prefix[-1] != 0) or any(p < 0 for p in prefix):
        _SERIES_CACHE[key] = QPoly.zero()
        return QPoly.zero()
    block_of = []
    for b, size in enumerate(eta):
        block_of.extend([b] * size)
    block_end = [0] * n
    pos = 0
    for size in eta:
        for j in range(pos, pos + size):
            block_end[j] = pos + size - 1
        pos += size
    # units leaving position j cross every cut from j to the end of its block
    cap = [min(prefix[p] for p in range(j, block_end[j] + 1)) for j in range(n)]

    supplies = [0] * n
    coeffs: dict = {}

    def visit(j: int, units: int):
        if j == n:
            coeffs[units] = coeffs.get(units, 0) + 1
            return
        sources = [i for i in range(j) if block_of[i] < block_of[j] and supplies[i] > 0]
        max_in = cap[j] - d[j]
        if max_in < 0:
            return

        def distribute(si: int, taken: int):
            if si == len(sources):
                supply = d[j] + taken
                if supply < 0 or supply > cap[j]:
                    return
                supplies[j] = supply
                visit(j + 1, units + taken)
                supplies[j] = 0
                return
            i = sources[si]
            hi = min(supplies[i], max_in - taken)
            for take in range(hi + 1):
                supplies[i] -= take
                distribute(si + 1, taken + take)
                supplies[i] += take

        distribute(0, 0)

    visit(0, 0)
    out = QPoly(coeffs)
    _SERIES_CACHE[key] = out
    return out


def _validate_key(lam, gamma):
    lam = tuple(lam)
    gamma = tuple(tuple(b) for b in gamma)
    eta = shape_of(gamma)
    n = sum(eta)
    if len(lam) != n:
        raise ValueError(f"lambda must have length {n}")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    for b in gamma:
        if not is_dominant(b):
            raise ValueError(f"block {b} is not dominant")
    return lam, gamma, eta


def kostka_kostant(lam, gamma) -> QPoly:
    """K(lam, gamma, eta)(q) by signed summation of kostant_series over
    the symmetric group."""
    lam, gamma, eta = _validate_key(lam, gamma)
    key = (lam, gamma)
    cached = _KOSTANT_CACHE.get(key)
    if cached is not None:
        return cached
    n = sum(eta)
    flat = tuple(x for b in gamma for x in b)
    if sum(lam) != sum(flat):
        _KOSTANT_CACHE[key] = QPoly.zero()
        return QPoly.zero()
    lam_rho = tuple(lam[i] + (n - 1 - i) for i in range(n))
    gamma_rho = tuple(flat[i] + (n - 1 - i) for i in range(n))
    total = QPoly.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n)
                         if perm[a] > perm[b])
        d = tuple(lam_rho[perm[i]] - gamma_rho[i] for i in range(n))
        series = kostant_series(eta, d)
        if series.is_zero():
            continue
        total = total + (series if inversions % 2 == 0 else -series)
    _KOSTANT_CACHE[key] = total
    return total


def kostka_vertex(lam, gamma) -> QPoly:
    """K(lam, gamma, eta)(q) as the coefficient of the Schur function
    indexed by lam in the composite vertex operator word applied to 1.

    Keys are first shifted by a constant vector so every block is a
    partition; the polynomial is invariant under that shift.
    """
    lam, gamma, eta = _validate_key(lam, gamma)
    n = sum(eta)
    flat = tuple(x for b in gamma for x in b)
    if sum(lam) != sum(flat):
        return QPoly.zero()
    lows = [lam[-1]] + [b[-1] for b in gamma]
    a = max(0, -min(lows))
    lam_s = tuple(x + a for x in lam)
    gamma_s = tuple(tuple(x + a for x in b) for b in gamma)
    word_key = gamma_s
    series = _WORD_CACHE.get(word_key)
    if series is None:
        series = apply_H_word(gamma_s, one())
        _WORD_CACHE[word_key] = series
    coeff = series.coefficient(trim_zeros(lam_s))
    poly = coeff.integral_polynomial()
    if poly is None:
        raise ArithmeticError(
            f"vertex engine produced a non-polynomial value for {lam}, {gamma}")
    return poly


def kostka(lam, gamma, method: str = "both") -> QPoly:
    """Dispatch on engine; method 'both' computes the two independently
    and raises on disagreement."""
    if method == "kostant":
        return kostka_kostant(lam, gamma)
    if method == "vertex":
        return kostka_vertex(lam, gamma)
    if method == "both":
        a = kostka_kostant(lam, gamma)
        b = kostka_vertex(lam, gamma)
        if a != b:
            raise RuntimeError(
                f"engine disagreement at lam={lam} gamma={gamma}: "
                f"kostant={a} vertex={b}")
        return a
    raise ValueError(f"unknown method {method!r}")


def kostka_foulkes(lam, mu) -> QPoly:
    """The classical one-column-blocks case: mu is split into singleton
    blocks and the shape is all ones."""
    lam, mu = trim_zeros(lam), trim_zeros(mu)
    if not is_partition(lam) or not is_partition(mu):
        raise ValueError("kostka_foulkes expects partitions")
    if sum(lam) != sum(mu):
        raise ValueError("kostka_foulkes needs |lam| == |mu|")
    n = max(len(lam), len(mu), 1)
    lam_p = pad_zeros(lam, n)
    mu_p = pad_zeros(mu, n)
    gamma = tuple((x,) for x in mu_p)
    return kostka_kostant(lam_p, gamma)


def blocked_weights(eta, degree: int, max_part: int | None = None):
    """All blocked weights on eta whose blocks are partitions with the
    given total size (entries bounded by max_part when supplied)."""
    eta = tuple(eta)

    def rec(blocks_left, total):
        if not blocks_left:
            if total == 0:
                yield ()
            return
        size = blocks_left[0]
        for d in range(total + 1):
            for part in partitions_of(d, max_len=size, max_part=max_part):
                head = pad_zeros(part, size)
                for rest in rec(blocks_left[1:], total - d):
                    yield (head,) + rest

    yield from rec(eta, degree)


def kostka_table(eta, degree_bound: int, method: str = "both") -> list:
    """Nonzero K values for all keys with nonnegative entries, dominant
    concatenated gamma, and 1 <= |lam| = |gamma| <= degree_bound.

    With method 'both' every key is computed by the two engines and any
    disagreement raises.  Rows are dicts sorted by (degree, lam, gamma);
    negative coefficients are legal but unexpected for these keys and are
    logged as warnings.
    """
    eta = tuple(eta)
    n = sum(eta)
    rows = []
    for d in range(1, degree_bound + 1):
        lams = [pad_zeros(p, n) for p in partitions_of(d, max_len=n)]
        for gamma in blocked_weights(eta, d):
            flat = tuple(x for b in gamma for x in b)
            if not is_dominant(flat):
                continue
            for lam in lams:
                value = kostka(lam, gamma, method=method)
                if value.is_zero():
                    continue
                if any(c < 0 for _, c in value.items()):
                    log.warning("negative coefficient in K at lam=%s gamma=%s: %s",
                                lam, gamma, value)
                rows.append({"lambda": lam, "gamma": gamma, "eta": eta, "K": value})
    rows.sort(key=lambda r: (sum(r["lambda"]), r["lambda"], r["gamma"]))
    return rows


def check_col_skew(alpha, gamma, k: int) -> bool:
    """Column-skew recurrence: the sum of K(alpha, nu) over blockwise
    vertical co-strips nu of gamma with |gamma| - |nu| = k equals the sum
    of K(lam, gamma) over vertical strips lam over alpha with
    |lam| - |alpha| = k.  Evaluated exactly through the Kostant engine."""
    alpha = tuple(alpha)
    gamma = tuple(tuple(b) for b in gamma)
    flat = tuple(x for b in gamma for x in b)
    if sum(flat) - sum(alpha) != k:
        raise ValueError("need |gamma| - |alpha| == k")
    left = QPoly.zero()
    per_block = [vertical_strip_shrink(b) for b in gamma]
    for choice in itertools.product(*per_block):
        dropped = sum(sum(g) - sum(c) for g, c in zip(gamma, choice))
        if dropped != k:
            continue
        left = left + kostka_kostant(alpha, choice)
    right = QPoly.zero()
    for lam in vertical_strip_grow(alpha):
        if sum(lam) - sum(alpha) != k:
            continue
        right = right + kostka_kostant(lam, gamma)
    return left == right


def compositions(n: int):
    """All sequences of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest
