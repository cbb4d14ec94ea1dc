"""Edelman-Greene insertion, flagged tableaux, reverse plane partitions and
the Fomin-Kirillov identities for dominant permutations."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, prod
from typing import Sequence

from .macdonald import inverse_macdonald, macdonald_map
from .perm import Permutation, dominant_from_partition, shift_embed
from .pipedream import PipeDream, enumerate_pipe_dreams, schubert_via_transition
from .polynomial import QPoly, principal_specialization
from .qanalog import q_factorial, q_int
from .words import Word, comaj, enumerate_reduced_words, evaluate, is_reduced

Tableau = tuple[tuple[int, ...], ...]
Shape = tuple[int, ...]


def shape_of(t: Tableau) -> Shape:
    return tuple(len(row) for row in t)


def transpose(t: Tableau) -> Tableau:
    if not t:
        return ()
    return tuple(tuple(row[c] for row in t if len(row) > c) for c in range(len(t[0])))


def check_partition(shape: Sequence[int]) -> Shape:
    shape = tuple(shape)
    if any(x < 1 for x in shape) or any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"not a partition: {shape}")
    return shape


def b_statistic(shape: Sequence[int]) -> int:
    """b(lambda) = sum (i-1) lambda_i."""
    return sum(i * part for i, part in enumerate(shape))


# ---- Edelman-Greene insertion ----------------------------------------------


def eg_insert(a: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Edelman-Greene row insertion of a reduced word; returns ``(P, Q)``.

    Inserting ``x`` into a row: if ``x`` exceeds every entry it is appended.
    Otherwise the smallest entry ``y > x`` is bumped to the next row; it is
    replaced by ``x`` unless ``y = x + 1`` and ``x`` is already present, in
    which case the row is left unchanged.
    """
    a = tuple(a)
    if not is_reduced(a):
        raise ValueError(f"{a} is not reduced")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, letter in enumerate(a, start=1):
        x = letter
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            current = p_rows[row]
            pos = bisect_right(current, x)
            if pos == len(current):
                current.append(x)
                q_rows[row].append(step)
                break
            y = current[pos]
            if not (y == x + 1 and pos > 0 and current[pos - 1] == x):
                current[pos] = x
            x = y
            row += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


# ---- flagged tableaux and reverse plane partitions -------------------------


def is_flagged(t: Tableau, x: int) -> bool:
    """Rows weakly increasing, columns strictly increasing, row u bounded by u + x."""
    for u, row in enumerate(t, start=1):
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if any(v < 1 or v > u + x for v in row):
            return False
    for u in range(1, len(t)):
        if any(t[u][c] <= t[u - 1][c] for c in range(len(t[u]))):
            return False
    return True


def is_rpp(k: Tableau, x: int) -> bool:
    for u, row in enumerate(k):
        if any(v < 0 or v > x for v in row):
            return False
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if u and any(row[c] < k[u - 1][c] for c in range(len(row))):
            return False
    return True


def pipedream_to_flagged(d: PipeDream, shape: Sequence[int], x: int = 0) -> Tableau:
    """I_D: the transposed recording tableau of r_D with entry t replaced by i_t."""
    shape = check_partition(shape) if shape else ()
    r, _ = d.biword
    rows = d.rows
    _, q = eg_insert(r)
    qt = transpose(q)
    if shape_of(qt) != shape:
        raise ValueError(f"recording tableau has shape {shape_of(qt)}, expected {shape}")
    t = tuple(tuple(rows[entry - 1] for entry in row) for row in qt)
    if not is_flagged(t, x):
        raise ValueError(f"{t} is not {x}-flagged")
    return t


def flagged_to_rpp(t: Tableau, shape: Sequence[int], x: int) -> Tableau:
    """Subtract u from every entry of row u."""
    if shape_of(t) != tuple(shape) or not is_flagged(t, x):
        raise ValueError(f"{t} is not an {x}-flagged tableau of shape {tuple(shape)}")
    return tuple(tuple(v - u for v in row) for u, row in enumerate(t, start=1))


def rpp_to_flagged(k: Tableau, shape: Sequence[int], x: int) -> Tableau:
    if shape_of(k) != tuple(shape) or not is_rpp(k, x):
        raise ValueError(f"{k} is not a reverse plane partition of shape {tuple(shape)} bounded by {x}")
    return tuple(tuple(v + u for v in row) for u, row in enumerate(k, start=1))


def enumerate_rpp(shape: Sequence[int], x: int) -> list[Tableau]:
    """Weak reverse plane partitions of ``shape`` with entries in [0, x], by backtracking."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    shape = check_partition(shape) if shape else ()
    cells = [(u, c) for u, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Tableau] = []

    def fill(n: int) -> None:
        if n == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        u, c = cells[n]
        low = max(grid[u][c - 1] if c else 0, grid[u - 1][c] if u else 0)
        for v in range(low, x + 1):
            grid[u][c] = v
            fill(n + 1)

    fill(0)
    return out


def rpp_q_weight(shape: Sequence[int], x: int) -> QPoly:
    degrees: dict[int, int] = {}
    for k in enumerate_rpp(shape, x):
        s = sum(map(sum, k))
        degrees[s] = degrees.get(s, 0) + 1
    return QPoly.from_degrees(degrees)


def enumerate_flagged(shape: Sequence[int], x: int) -> list[Tableau]:
    return [rpp_to_flagged(k, shape, x) for k in enumerate_rpp(shape, x)]


# ---- the FK bijection ------------------------------------------------------


def fk_permutation(shape: Sequence[int], x: int) -> Permutation:
    """1^x x sigma_lambda."""
    return shift_embed(x, dominant_from_partition(shape) if shape else Permutation.identity())


def _check_fk_input(a: Word, b: Word, shape: Shape, x: int) -> None:
    sigma = dominant_from_partition(shape) if shape else Permutation.identity()
    if evaluate(a) != sigma:
        raise ValueError(f"{a} is not a reduced word for {sigma}")
    if not is_reduced(a):
        raise ValueError(f"{a} is not reduced")
    if len(b) != len(a) or any(not 1 <= y <= v + x for v, y in zip(a, b)):
        raise ValueError(f"{b} is not bounded by {a} shifted by {x}")


def fk_map(a: Sequence[int], b: Sequence[int], shape: Sequence[int], x: int = 0) -> tuple[Word, Tableau]:
    """FK(a, b) = (c, K_D) for ``a`` in R(sigma_lambda) and ``b_i <= a_i + x``."""
    a, b = tuple(a), tuple(b)
    shape = check_partition(shape) if shape else ()
    _check_fk_input(a, b, shape, x)
    cd = macdonald_map(tuple(v + x for v in a), b)
    flagged = pipedream_to_flagged(cd.D, shape, x)
    return cd.c, flagged_to_rpp(flagged, shape, x)


def _flagged_index(shape: Shape, x: int) -> dict[Tableau, PipeDream]:
    table: dict[Tableau, PipeDream] = {}
    for d in enumerate_pipe_dreams(fk_permutation(shape, x)):
        t = pipedream_to_flagged(d, shape, x)
        if t in table:
            raise AssertionError(f"two pipe dreams share the flagged tableau {t}")
        table[t] = d
    return table


def fk_inverse(c: Sequence[int], k: Tableau, shape: Sequence[int], x: int = 0) -> tuple[Word, Word]:
    """Inverse of :func:`fk_map`; the pipe dream is recovered from its flagged tableau."""
    shape = check_partition(shape) if shape else ()
    t = rpp_to_flagged(k, shape, x)
    d = _flagged_index(shape, x).get(t)
    if d is None:
        raise ValueError(f"no pipe dream has flagged tableau {t}")
    pair = inverse_macdonald(c, d)
    return tuple(v - x for v in pair.a), pair.b


# ---- identities --------------------------------------------------------------


def staircase_rhs(n: int, x: int) -> Fraction:
    """binom(n,2)! * prod_{i<j} (2x+i+j-1)/(i+j-1)."""
    if n < 1 or x < 0:
        raise ValueError("need n >= 1 and x >= 0")
    value = Fraction(factorial(n * (n - 1) // 2))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            value *= Fraction(2 * x + i + j - 1, i + j - 1)
    return value


def staircase_lhs(n: int, x: int) -> int:
    """Sum over R(w_0) of (x + a_1) ... (x + a_p)."""
    w0 = Permutation(range(n, 0, -1))
    return sum(prod(x + v for v in a) for a in enumerate_reduced_words(w0))


def fk_lhs(shape: Sequence[int], x: int) -> QPoly:
    sigma = dominant_from_partition(shape) if shape else Permutation.identity()
    total = QPoly()
    for a in enumerate_reduced_words(sigma):
        term = QPoly.monomial(comaj(a))
        for v in a:
            term = term * q_int(x + v)
        total = total + term
    return total


@dataclass(frozen=True)
class FKReport:
    shape: Shape
    x: int
    lhs: QPoly
    schubert_side: QPoly
    rpp_side: QPoly
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return self.lhs == self.schubert_side == self.rpp_side and all(ok for _, ok in self.checks)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.shape),
            "x": self.x,
            "lhs": list(self.lhs.coeffs),
            "schubert": list(self.schubert_side.coeffs),
            "rpp": list(self.rpp_side.coeffs),
            "checks": dict(self.checks),
            "pass": self.passed,
        }


def verify_fk(shape: Sequence[int], x: int, bijection: bool = True) -> FKReport:
    """The three-way q-identity, plus exhaustive checks of the FK bijection."""
    shape = check_partition(shape) if shape else ()
    p = sum(shape)
    sigma = dominant_from_partition(shape) if shape else Permutation.identity()
    target = fk_permutation(shape, x)
    lhs = fk_lhs(shape, x)
    schubert_side = q_factorial(p) * principal_specialization(schubert_via_transition(target))
    rpps = enumerate_rpp(shape, x)
    rpp_side = q_factorial(p) * QPoly.monomial(b_statistic(shape)) * rpp_q_weight(shape, x)
    checks: list[tuple[str, bool]] = []
    if bijection:
        dreams = enumerate_pipe_dreams(target)
        flagged = {}
        weight_ok = True
        for d in dreams:
            t = pipedream_to_flagged(d, shape, x)
            k = flagged_to_rpp(t, shape, x)
            flagged[t] = d
            degree = sum(i - 1 for i in d.rows)
            weight_ok &= degree == b_statistic(shape) + sum(map(sum, k))
        checks.append(("flagged_bijection", set(flagged) == set(enumerate_flagged(shape, x)) and len(flagged) == len(dreams)))
        checks.append(("weight", weight_ok))
        images = {}
        roundtrip = True
        for a in enumerate_reduced_words(sigma):
            for b in product(*(range(1, v + x + 1) for v in a)):
                c, k = fk_map(a, b, shape, x)
                images[(c, k)] = (a, b)
        # invert each image through the pipe dream table
        for (c, k), (a, b) in images.items():
            d = flagged[rpp_to_flagged(k, shape, x)]
            pair = inverse_macdonald(c, d)
            roundtrip &= (tuple(v - x for v in pair.a), pair.b) == (a, b)
        domain = sum(prod(v + x for v in a) for a in enumerate_reduced_words(sigma))
        checks.append(("injective", len(images) == domain))
        checks.append(("surjective", len(images) == factorial(p) * len(rpps)))
        checks.append(("roundtrip", roundtrip))
    return FKReport(shape, x, lhs, schubert_side, rpp_side, tuple(checks))
