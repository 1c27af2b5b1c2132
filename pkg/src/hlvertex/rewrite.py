"""Formal sums of vertex-operator words and constructive rewriting.

An operator word is a tuple of weight blocks standing for a composite of
vertex operators (applied right to left); an OpSum is a finite linear
combination of such words with QRat coefficients, kept with every block
straightened to dominant form.  The rewriting algorithms work on
two-factor words:

* rewrite_dominant turns a word with dominant factors into a sum of
  words whose concatenated index is dominant,
* shift_support moves one slot from the longer factor to the shorter,
* swap_factors exchanges the factor lengths.

Each algorithm eliminates its input word from an exact operator relation
and substitutes repeatedly, with an explicit termination measure checked
at every step.  Correctness of any produced sum can be certified through
the evaluator, which is an independent oracle.
"""

from __future__ import annotations

from .coeffs import QPoly, QRat
from .symfunc import SCHUR, SymFunc, format_linear, schur
from .vertexop import apply_H
from .weights import (
    is_dominant,
    partitions_of,
    straighten,
    vertical_strip_grow,
    vertical_strip_shrink,
)

_MAX_STEPS = 100000


def _as_word(word) -> tuple:
    return tuple(tuple(int(x) for x in block) for block in word)


def _minus_q_power(j: int) -> QRat:
    return QRat(QPoly.monomial(j, (-1) ** j))


class OpSum:
    """Linear combination of operator words with straightened blocks."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for word, c in terms.items():
                word = _as_word(word)
                for block in word:
                    if not is_dominant(block):
                        raise ValueError(f"block {block} not dominant; use normalize")
                if not isinstance(c, QRat):
                    c = QRat(c)
                if not c.is_zero():
                    t[word] = c
        self._terms = t

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, word) -> QRat:
        return self._terms.get(_as_word(word), QRat.zero())

    def words(self):
        return sorted(self._terms)

    def terms(self):
        return sorted(self._terms.items())

    def __add__(self, other):
        t = dict(self._terms)
        for w, c in other._terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(w, None)
            else:
                t[w] = s
        out = OpSum.__new__(OpSum)
        out._terms = t
        return out

    def __neg__(self):
        out = OpSum.__new__(OpSum)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "OpSum":
        if not isinstance(c, QRat):
            c = QRat(c)
        out = OpSum.__new__(OpSum)
        out._terms = {} if c.is_zero() else {w: v * c for w, v in self._terms.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, OpSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __str__(self):
        return format_linear([(c, format_word(w)) for w, c in self.terms()])

    def __repr__(self):
        return f"OpSum<{self}>"

    def to_json(self) -> dict:
        return {"terms": [{"word": [list(b) for b in w], "coeff": c.to_json()}
                          for w, c in self.terms()]}


def normalize(raw: dict) -> OpSum:
    """Straighten every block of every word, folding signs into the
    coefficients, dropping vanishing words and combining like terms."""
    out: dict = {}
    for word, c in raw.items():
        if not isinstance(c, QRat):
            c = QRat(c)
        if c.is_zero():
            continue
        sign = 1
        blocks = []
        for block in _as_word(word):
            s, dom = straighten(block)
            if s == 0:
                sign = 0
                break
            sign *= s
            blocks.append(dom)
        if sign == 0:
            continue
        key = tuple(blocks)
        v = c if sign > 0 else -c
        s = out.get(key)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    result = OpSum.__new__(OpSum)
    result._terms = out
    return result


# -- word notation --------------------------------------------------------


def format_word(word) -> str:
    return "".join("H[" + ",".join(str(x) for x in b) + "]" for b in word) or "H[]"


def parse_word(text: str) -> tuple:
    """Parse `H[2,2]H[4,1]`-style notation into a tuple of blocks."""
    text = text.strip()
    blocks = []
    pos = 0
    while pos < len(text):
        if not text.startswith("H[", pos):
            raise ValueError(f"expected 'H[' at position {pos} in {text!r}")
        close = text.find("]", pos + 2)
        if close < 0:
            raise ValueError(f"unclosed block at position {pos} in {text!r}")
        inner = text[pos + 2:close].strip()
        if inner:
            try:
                blocks.append(tuple(int(t.strip()) for t in inner.split(",")))
            except ValueError:
                raise ValueError(
                    f"invalid weight {inner!r} at position {pos} in {text!r}") from None
        else:
            blocks.append(())
        pos = close + 1
    if not blocks:
        raise ValueError(f"no operator blocks in {text!r}")
    return tuple(blocks)


# -- relation generators ---------------------------------------------------


def _add(raw: dict, word, coeff: QRat):
    s = raw.get(word)
    raw[word] = coeff if s is None else s + coeff


def _com1_relation(mu, a: int, b: int, nu) -> OpSum:
    """Four-term strip relation; specializing b = a+1 collapses it to the
    two-term one.  The returned sum is the zero operator."""
    raw: dict = {}
    for alpha in vertical_strip_grow(mu):
        ja = sum(alpha) - sum(mu)
        for beta in vertical_strip_shrink(nu):
            jb = sum(nu) - sum(beta)
            c = _minus_q_power(ja + jb)
            qc = c * QRat.q()
            _add(raw, (alpha + (a + jb,), (b - ja,) + beta), c)
            _add(raw, (alpha + (a + jb + 1,), (b - ja - 1,) + beta), -qc)
            _add(raw, (alpha + (b + jb,), (a - ja,) + beta), -qc)
            _add(raw, (alpha + (b + jb - 1,), (a - ja + 1,) + beta), c)
    return normalize(raw)


def _com2_relation(mu, a: int, nu) -> OpSum:
    raw: dict = {}
    for alpha in vertical_strip_grow(mu):
        ja = sum(alpha) - sum(mu)
        for beta in vertical_strip_shrink(nu):
            jb = sum(nu) - sum(beta)
            c = _minus_q_power(ja + jb)
            _add(raw, (alpha + (a + jb,), (a + 1 - ja,) + beta), c)
            _add(raw, (alpha + (a + jb + 1,), (a - ja,) + beta), -(c * QRat.q()))
    return normalize(raw)


def _move_relation(mu, a: int, nu) -> OpSum:
    """Slot-moving relation between factor lengths (k+1, n) and (k, n+1)."""
    raw: dict = {}
    mu, nu = tuple(mu), tuple(nu)
    for beta in vertical_strip_shrink(nu):
        jb = sum(nu) - sum(beta)
        _add(raw, (mu + (a + jb,), beta), _minus_q_power(jb))
    for alpha in vertical_strip_grow(mu):
        ja = sum(alpha) - sum(mu)
        _add(raw, (alpha, (a - ja,) + nu), -_minus_q_power(ja))
    return normalize(raw)


def _box_partitions(max_len: int, max_part: int):
    for d in range(max_len * max_part + 1):
        yield from partitions_of(d, max_len=max_len, max_part=max_part)


def _conjugate(theta) -> tuple:
    if not theta:
        return ()
    return tuple(sum(1 for part in theta if part > j) for j in range(theta[0]))


_SSYT_CACHE: dict = {}


def _ssyt_contents(theta, nvars: int) -> dict:
    """Content vectors (length nvars) with multiplicity, over semistandard
    fillings of theta with entries at most nvars."""
    key = (theta, nvars)
    cached = _SSYT_CACHE.get(key)
    if cached is not None:
        return cached
    if not theta:
        out = {(0,) * nvars: 1}
        _SSYT_CACHE[key] = out
        return out
    if len(theta) > nvars:
        _SSYT_CACHE[key] = {}
        return {}
    out: dict = {}
    rows: list = []

    def fill(i: int):
        if i == len(theta):
            content = [0] * nvars
            for row in rows:
                for v in row:
                    content[v - 1] += 1
            t = tuple(content)
            out[t] = out.get(t, 0) + 1
            return
        above = rows[i - 1] if i else None
        row = [0] * theta[i]

        def cell(j: int):
            if j == theta[i]:
                rows.append(tuple(row))
                fill(i + 1)
                rows.pop()
                return
            lo = 1 if j == 0 else row[j - 1]
            if above is not None and j < len(above):
                lo = max(lo, above[j] + 1)
            for v in range(lo, nvars + 1):
                row[j] = v
                cell(j + 1)

        cell(0)

    fill(0)
    _SSYT_CACHE[key] = out
    return out


def _bigmove_relation(alpha, beta, gamma) -> OpSum:
    """Factor-swapping relation obtained from the full Cauchy-twisted
    commutation of generating series, expanded through the finite dual
    Cauchy sums over partitions in a box.  Zero as an operator."""
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    k, l = len(gamma), len(beta)
    if len(alpha) != k:
        raise ValueError("first and third weights must have equal length")
    raw: dict = {}
    for theta in _box_partitions(l, k):
        c = _minus_q_power(sum(theta))
        theta_c = _conjugate(theta)
        for mv, c1 in _ssyt_contents(theta, l).items():
            first = alpha + tuple(beta[i] + mv[i] for i in range(l))
            for mz, c2 in _ssyt_contents(theta_c, k).items():
                second = tuple(gamma[i] - mz[i] for i in range(k))
                _add(raw, (first, second), c * (c1 * c2))
    for theta in _box_partitions(k, l):
        c = _minus_q_power(sum(theta))
        theta_c = _conjugate(theta)
        for mu_, c1 in _ssyt_contents(theta, k).items():
            first = tuple(alpha[i] + mu_[i] for i in range(k))
            for mv2, c2 in _ssyt_contents(theta_c, l).items():
                second = tuple(beta[i] - mv2[i] for i in range(l)) + gamma
                _add(raw, (first, second), -(c * (c1 * c2)))
    return normalize(raw)


def relation_instance(kind: str, **params) -> OpSum:
    """A relation instance as a normalized OpSum equal to the zero
    operator; certify with operators_equal against the empty sum."""
    kind = kind.lower()
    if kind == "com1":
        return _com1_relation(params["mu"], params["a"], params["b"], params["nu"])
    if kind == "com2":
        return _com2_relation(params["mu"], params["a"], params["nu"])
    if kind == "move":
        return _move_relation(params["mu"], params["a"], params["nu"])
    if kind == "bigmove":
        return _bigmove_relation(params["alpha"], params["beta"], params["gamma"])
    raise ValueError(f"unknown relation kind {kind!r}")


# -- evaluation (the independent certificate) ------------------------------


def evaluate_word(word, f: SymFunc) -> SymFunc:
    """Apply a word of arbitrary integer blocks, rightmost first."""
    out = f
    for block in reversed(_as_word(word)):
        sign, dom = straighten(block)
        if sign == 0:
            return SymFunc.zero(SCHUR)
        out = apply_H(dom, out)
        if sign < 0:
            out = -out
    return out


def evaluate(opsum: OpSum, f: SymFunc) -> SymFunc:
    total = SymFunc.zero(SCHUR)
    for word, c in opsum.terms():
        total = total + evaluate_word(word, f).scale(c)
    return total


def operators_equal(a: OpSum, b: OpSum, max_degree: int) -> bool:
    """Evaluation certificate: equal action on every Schur function of
    degree at most max_degree."""
    diff = a - b
    if diff.is_zero():
        return True
    for d in range(max_degree + 1):
        for tau in partitions_of(d):
            if not evaluate(diff, schur(tau)).is_zero():
                return False
    return True


def is_zero_operator(s: OpSum, max_degree: int) -> bool:
    return operators_equal(s, OpSum(), max_degree)


# -- the three rewriting algorithms ---------------------------------------


def _check_two_dominant_factors(word):
    word = _as_word(word)
    if len(word) != 2:
        raise ValueError("rewriting operates on two-factor words")
    for block in word:
        if not is_dominant(block):
            raise ValueError(f"factor {block} is not dominant")
    return word


def _concat_dominant(word) -> bool:
    f1, f2 = word
    if not f1 or not f2:
        return True
    return f1[-1] >= f2[0]


def _replacement(rel: OpSum, word) -> dict:
    """Solve rel == 0 for word: word == sum of -(c/c0) * other words."""
    c0 = rel.coeff(word)
    if c0.is_zero():
        raise RuntimeError(f"relation does not contain {format_word(word)}")
    return {w: -(c / c0) for w, c in rel._terms.items() if w != word}


def _assert_integral(terms: dict, what: str) -> None:
    for w, c in terms.items():
        if c.integral_polynomial() is None:
            raise RuntimeError(
                f"{what} produced a non-polynomial coefficient {c} at {format_word(w)}")


def rewrite_dominant(word) -> OpSum:
    """Rewrite a word with dominant factors as an operator-equal sum of
    words whose concatenated weight is dominant.

    Among unresolved words the one with the largest gap between the head
    of the second factor and the tail of the first is eliminated through
    a strip relation; the gap strictly decreases, which is checked as a
    hard termination guard.
    """
    word = _check_two_dominant_factors(word)
    pending: dict = {word: QRat.one()}
    done: dict = {}
    steps = 0
    while pending:
        nondom = [w for w in pending if not _concat_dominant(w)]
        if not nondom:
            for w, c in pending.items():
                s = done.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    done.pop(w, None)
                else:
                    done[w] = s
            break
        current = max(nondom, key=lambda w: (w[1][0] - w[0][-1], w))
        coeff = pending.pop(current)
        if coeff.is_zero():
            continue
        steps += 1
        if steps > _MAX_STEPS:
            raise RuntimeError("rewrite_dominant exceeded the step budget")
        f1, f2 = current
        a, b = f1[-1], f2[0]
        measure = b - a
        if b == a + 1:
            rel = _com2_relation(f1[:-1], a, f2[1:])
        else:
            rel = _com1_relation(f1[:-1], a, b, f2[1:])
        for w, c in _replacement(rel, current).items():
            if not _concat_dominant(w) and w[1][0] - w[0][-1] >= measure:
                raise RuntimeError(
                    f"termination measure failed to decrease at {format_word(w)}")
            s = pending.get(w)
            s = coeff * c if s is None else s + coeff * c
            if s.is_zero():
                pending.pop(w, None)
            else:
                pending[w] = s
    _assert_integral(done, "rewrite_dominant")
    out = OpSum.__new__(OpSum)
    out._terms = done
    return out


def shift_support(word, direction: str) -> OpSum:
    """Rewrite a two-factor word as an operator-equal sum over words with
    one slot moved out of the designated factor (which must be strictly
    longer than the other).  direction is 'left' or 'right'."""
    word = _check_two_dominant_factors(word)
    f1, f2 = word
    p, r = len(f1), len(f2)
    if direction not in ("left", "right"):
        raise ValueError("direction must be 'left' or 'right'")
    if direction == "left":
        if p <= r:
            raise ValueError("left factor must be strictly longer")
        target = (p - 1, r + 1)

        def measure(w):
            return w[0][0] - w[0][-1]

        def relation(w):
            return _move_relation(w[0][:-1], w[0][-1], w[1])
    else:
        if r <= p:
            raise ValueError("right factor must be strictly longer")
        target = (p + 1, r - 1)

        def measure(w):
            return w[1][0] - w[1][-1]

        def relation(w):
            return _move_relation(w[0], w[1][0], w[1][1:])

    pending: dict = {word: QRat.one()}
    done: dict = {}
    steps = 0
    while pending:
        current = max(pending, key=lambda w: (measure(w), w))
        coeff = pending.pop(current)
        if coeff.is_zero():
            continue
        steps += 1
        if steps > _MAX_STEPS:
            raise RuntimeError("shift_support exceeded the step budget")
        m = measure(current)
        for w, c in _replacement(relation(current), current).items():
            lengths = (len(w[0]), len(w[1]))
            v = coeff * c
            if lengths == target:
                s = done.get(w)
                s = v if s is None else s + v
                if s.is_zero():
                    done.pop(w, None)
                else:
                    done[w] = s
            elif lengths == (p, r):
                if measure(w) >= m:
                    raise RuntimeError(
                        f"termination measure failed to decrease at {format_word(w)}")
                s = pending.get(w)
                s = v if s is None else s + v
                if s.is_zero():
                    pending.pop(w, None)
                else:
                    pending[w] = s
            else:
                raise RuntimeError(f"unexpected factor lengths {lengths}")
    _assert_integral(done, "shift_support")
    out = OpSum.__new__(OpSum)
    out._terms = done
    return out


def swap_factors(word) -> OpSum:
    """Rewrite a two-factor word as an operator-equal sum of words with
    the factor lengths exchanged.  Words whose factors already have equal
    lengths are returned unchanged."""
    word = _check_two_dominant_factors(word)
    f1, f2 = word
    p, r = len(f1), len(f2)
    if p == r:
        return OpSum({word: QRat.one()})
    if p > r:
        k, l = r, p - r

        def relation(w):
            return _bigmove_relation(w[0][:k], w[0][k:], w[1])
    else:
        k, l = p, r - p

        def relation(w):
            return _bigmove_relation(w[0], w[1][:l], w[1][l:])

    pending: dict = {word: QRat.one()}
    done: dict = {}
    steps = 0
    while pending:
        current = min(pending, key=lambda w: (sum(w[0]), w))
        coeff = pending.pop(current)
        if coeff.is_zero():
            continue
        steps += 1
        if steps > _MAX_STEPS:
            raise RuntimeError("swap_factors exceeded the step budget")
        first_weight = sum(current[0])
        for w, c in _replacement(relation(current), current).items():
            lengths = (len(w[0]), len(w[1]))
            v = coeff * c
            if lengths == (r, p):
                s = done.get(w)
                s = v if s is None else s + v
                if s.is_zero():
                    done.pop(w, None)
                else:
                    done[w] = s
            elif lengths == (p, r):
                if sum(w[0]) <= first_weight:
                    raise RuntimeError(
                        f"termination measure failed to increase at {format_word(w)}")
                s = pending.get(w)
                s = v if s is None else s + v
                if s.is_zero():
                    pending.pop(w, None)
                else:
                    pending[w] = s
            else:
                raise RuntimeError(f"unexpected factor lengths {lengths}")
    _assert_integral(done, "swap_factors")
    out = OpSum.__new__(OpSum)
    out._terms = done
    return out
