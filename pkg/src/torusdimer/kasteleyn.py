"""The matching operator as a signed matrix over Z[w, z, 1/w, 1/z].

Each edge gets a sign in {+1, -1} chosen so that around every face of
length 2k the product of edge signs is (-1)^(k+1); such a signing always
exists on a cellular torus embedding and is found by solving a linear system
over GF(2).  The operator matrix has entry (white, black) equal to the sum of
sign * w^dx * z^dy over the parallel edges, and its determinant collects each
matching's contribution at the exponent of its homology vector.  With a valid
signing the contributions inside one coefficient never cancel, so the
absolute value of the coefficient at (i, j) counts the matchings of homology
exponent (i, j); the total count is recovered from the four evaluations at
(w, z) in {+1, -1}^2 by one of the sixteen sign patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    NoPatternFound,
    NotCellular,
    SigningInconsistent,
    SigningMismatch,
    Unbalanced,
)
from .torus_graph import TorusGraph, compute_faces, require_valid

EVALUATION_POINTS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


class LaurentPoly2:
    """Bivariate Laurent polynomial with exact integer coefficients.

    Terms are stored sparsely as {(i, j): c} with zero coefficients dropped.
    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in dict(terms).items():
                if c:
                    clean[(int(i), int(j))] = int(c)
        self.terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "LaurentPoly2":
        return cls({(i, j): c})

    @classmethod
    def from_int(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.from_int(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.from_int(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        result = LaurentPoly2.__new__(LaurentPoly2)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        result = LaurentPoly2.__new__(LaurentPoly2)
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.from_int(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            result = LaurentPoly2.__new__(LaurentPoly2)
            result.terms = {k: c * other for k, c in self.terms.items()} if other else {}
            return result
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        result = LaurentPoly2.__new__(LaurentPoly2)
        result.terms = out
        return result

    __rmul__ = __mul__

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def items_sorted(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.terms.items())

    def abs_coefficient_sum(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def evaluate_at_signs(self, sw: int, sz: int) -> int:
        """Exact value at (w, z) = (sw, sz) with sw, sz in {+1, -1}."""
        if sw not in (1, -1) or sz not in (1, -1):
            raise ValueError("evaluation points must be +-1")
        total = 0
        for (i, j), c in self.terms.items():
            sign = 1
            if sw == -1 and i % 2:
                sign = -sign
            if sz == -1 and j % 2:
                sign = -sign
            total += sign * c
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (i, j), c in self.items_sorted():
            mono = "".join(
                f"{name}^{e}" if e not in (0, 1) else (name if e == 1 else "")
                for name, e in (("w", i), ("z", j))
            )
            if mono:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                bits.append(f"{coef}{mono}")
            else:
                bits.append(str(c))
        return " + ".join(bits).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# signing

def kasteleyn_signing(g: TorusGraph) -> tuple[int, ...]:
    """Edge signs with product (-1)^(k+1) around every face of length 2k.

    Solved as a GF(2) system with one equation per face; free variables are
    set to +1, so the result is deterministic.  The returned signing is
    audited before being returned.
    """
    fs = compute_faces(g)
    if not (fs.cellular and fs.closed):
        raise NotCellular("Kasteleyn signing needs a cellular torus embedding")
    n = len(g.edges)
    rows = []
    for face in fs.faces:
        mask = 0
        for d in face:
            mask ^= 1 << (d >> 1)
        k = len(face) // 2
        rhs = (k + 1) & 1
        rows.append((mask, rhs))
    solution = _solve_gf2(rows, n)
    signing = tuple(-1 if (solution >> e) & 1 else 1 for e in range(n))
    audit_signing(g, signing)
    return signing


def _solve_gf2(rows: list[tuple[int, int]], n: int) -> int:
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        for col, (pmask, prhs) in pivots.items():
            if (mask >> col) & 1:
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                raise SigningInconsistent("face-parity system has no solution")
            continue
        col = mask.bit_length() - 1
        pivots[col] = (mask, rhs)
    # Back-substitute with free variables at 0.  Each pivot column is the
    # highest bit of its row, so ascending order sees lower bits first.
    solution = 0
    for col in sorted(pivots):
        mask, rhs = pivots[col]
        value = rhs
        rest = mask & ~(1 << col)
        while rest:
            c = rest.bit_length() - 1
            value ^= (solution >> c) & 1
            rest &= ~(1 << c)
        if value:
            solution |= 1 << col
    return solution


def audit_signing(g: TorusGraph, signing) -> None:
    """Raise SigningMismatch unless every face satisfies the parity rule."""
    fs = compute_faces(g)
    if len(signing) != len(g.edges):
        raise SigningMismatch("one sign per edge required")
    for idx, face in enumerate(fs.faces):
        prod = 1
        for d in face:
            prod *= signing[d >> 1]
        k = len(face) // 2
        want = -1 if k % 2 == 0 else 1  # (-1)^(k+1)
        if prod != want:
            raise SigningMismatch(f"face {idx} of length {len(face)} has sign product {prod}")


# ---------------------------------------------------------------------------
# operator and determinant

def operator_matrix(g: TorusGraph, signing) -> list[list[LaurentPoly2]]:
    """Matrix K with K[w][b] = sum over parallel edges of sign * w^dx z^dy."""
    require_valid(g)
    mat = [[LaurentPoly2.zero() for _ in range(g.num_black)] for _ in range(g.num_white)]
    for eid, e in enumerate(g.edges):
        mat[e.white][e.black] = mat[e.white][e.black] + LaurentPoly2.monomial(
            e.offset[0], e.offset[1], signing[eid]
        )
    return mat


def determinant_leibniz(matrix) -> LaurentPoly2:
    """Determinant by permutation expansion, pruning zero entries."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly2.from_int(1)
    total = LaurentPoly2.zero()

    def expand(row: int, cols: tuple[int, ...], acc: LaurentPoly2, sign: int) -> None:
        nonlocal total
        if row == n:
            total = total + (acc * sign)
            return
        for t, col in enumerate(cols):
            entry = matrix[row][col]
            if not entry:
                continue
            rest = cols[:t] + cols[t + 1 :]
            expand(row + 1, rest, acc * entry, sign if t % 2 == 0 else -sign)

    expand(0, tuple(range(n)), LaurentPoly2.from_int(1), 1)
    return total


def determinant_bareiss(matrix) -> LaurentPoly2:
    """Fraction-free elimination over the Laurent ring; cross-check path."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly2.from_int(1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = LaurentPoly2.from_int(1)
    for k in range(n - 1):
        if not m[k][k]:
            pivot_row = next((r for r in range(k + 1, n) if m[r][k]), None)
            if pivot_row is None:
                return LaurentPoly2.zero()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = divide_exact(num, prev)
            m[i][k] = LaurentPoly2.zero()
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def divide_exact(num: LaurentPoly2, den: LaurentPoly2) -> LaurentPoly2:
    """Exact division in the Laurent ring; raises ValueError if inexact."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return LaurentPoly2.zero()
    lead_d = max(den.terms)
    lead_c = den.terms[lead_d]
    quotient: dict = {}
    rest = num
    for _ in range(len(num.terms) * (len(den.terms) + 1) + 1):
        if not rest:
            return LaurentPoly2(quotient)
        lt = max(rest.terms)
        c = rest.terms[lt]
        if c % lead_c:
            raise ValueError("inexact polynomial division")
        mono = (lt[0] - lead_d[0], lt[1] - lead_d[1])
        q = c // lead_c
        quotient[mono] = quotient.get(mono, 0) + q
        rest = rest - (den * LaurentPoly2.monomial(mono[0], mono[1], q))
    raise ValueError("inexact polynomial division")


def kasteleyn_polynomial(g: TorusGraph, signing=None) -> LaurentPoly2:
    """det K as a Laurent polynomial; each matching lands at exponent phi."""
    if g.num_white != g.num_black:
        raise Unbalanced(f"{g.num_white} whites vs {g.num_black} blacks")
    if signing is None:
        signing = kasteleyn_signing(g)
    else:
        audit_signing(g, signing)
    return determinant_leibniz(operator_matrix(g, signing))


# ---------------------------------------------------------------------------
# four evaluations

@dataclass(frozen=True)
class FourEvalReport:
    values: tuple[int, int, int, int]  # at (1,1), (-1,1), (1,-1), (-1,-1)
    count: int
    patterns: tuple[tuple[int, int, int, int], ...]


def count_from_four_evaluations(p: LaurentPoly2, true_count: int) -> FourEvalReport:
    """Find the sign patterns eps with |sum eps_k P(sigma_k)| / 2 = count.

    All sixteen patterns are tried and every hit is reported; none hitting
    the enumerated count raises NoPatternFound.
    """
    values = tuple(p.evaluate_at_signs(sw, sz) for sw, sz in EVALUATION_POINTS)
    hits = []
    for eps in product((1, -1), repeat=4):
        total = sum(e * v for e, v in zip(eps, values))
        if total % 2 == 0 and abs(total) // 2 == true_count:
            hits.append(eps)
    if not hits:
        raise NoPatternFound(f"no pattern recovers {true_count} from {values}")
    return FourEvalReport(values, true_count, tuple(hits))
