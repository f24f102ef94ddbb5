"""Constructive finiteness certificates for the coordinate-ring pullback.

The pullback of base change on one symmetric-power factor is the ring
map t_i -> t_i^f on S_r-invariant Laurent polynomials.  Finiteness of
the morphism means the invariant ring A is a finitely generated module
over the image subring B (invariant Laurent polynomials in the t_i^f).
A certificate makes that statement checkable at desk scale: it exhibits
module generators and, for every invariant orbit-sum monomial m_lam
with exponents bounded by a window, an exact expression

    m_lam  =  sum_j  b_j * g_j,      b_j in B,

with all coefficients exact rationals.

Generating set.  Symmetrised monomials with exponents in [0, f) alone
do not generate (already for r = f = 2 the class (2,1) is outside their
B-span, by a parity count), so candidates are drawn from the free-basis
product: t^(a + f*c) with 0 <= a_i < f and c in the staircase
0 <= c_i <= r - i.  Plainly, the t-Laurent ring is free over the
f-th-power Laurent ring with basis t^a, and that ring is free over B
with the staircase basis; averaging over S_r (a B-linear projection
onto A) turns the combined basis into the module generators
m_sort(a + f*c).  The inverse (t_1...t_r)^{-f} of the f-th power of the
full product, which lies in B and shifts exponents into range, is
carried along as a candidate and always reduces away.

The per-monomial expressions come from the same free-basis argument run
forwards (no search): decompose t^lam = s^q * t^a with s_i = t_i^f,
expand s^q over the staircase via exact divided differences, and
average.  Candidates that are redundant over the earlier ones are
pruned by small exact linear solves, and the stored expressions are
rewritten over the pruned set.  A window violation raises
WindowTooSmall with a suggested larger window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .laurent import (
    ExponentVector,
    InvariantLaurentPoly,
    sort_class,
    stabilizer_order,
    staircase_basis,
    staircase_decompose,
)

MAX_RANK = 3
MAX_POWER = 4


class WindowTooSmall(ValueError):
    """No in-window expression exists; retry with suggested_window."""

    def __init__(self, message: str, suggested_window: int):
        super().__init__(message)
        self.suggested_window = suggested_window


Expression = dict[ExponentVector, InvariantLaurentPoly]  # generator class -> B-coefficient


def candidate_generators(r: int, f: int) -> list[ExponentVector]:
    """Candidate module generators, smallest first.

    sort(a + f*c) over remainders a in [0, f)^r and staircase c, plus
    the inverse product class (-f, ..., -f).  Ordered by total absolute
    exponent so pruning sees cheap candidates before expensive ones.
    """
    classes = {(-f,) * r}
    remainders = _tuples_in_box(r, 0, f - 1)
    for c in staircase_basis(r):
        for a in remainders:
            classes.add(sort_class(tuple(f * ci + ai for ci, ai in zip(c, a))))
    return sorted(classes, key=lambda g: (sum(abs(x) for x in g), g))


def _tuples_in_box(r: int, lo: int, hi: int) -> list[ExponentVector]:
    out: list[ExponentVector] = [()]
    for _ in range(r):
        out = [t + (v,) for t in out for v in range(lo, hi + 1)]
    return out


def sorted_tuples(r: int, lo: int, hi: int, total: Optional[int] = None) -> Iterator[ExponentVector]:
    """Weakly decreasing r-tuples with entries in [lo, hi], optionally of fixed sum."""

    def rec(length: int, cap: int, remaining: Optional[int]) -> Iterator[tuple[int, ...]]:
        if length == 0:
            if remaining is None or remaining == 0:
                yield ()
            return
        for v in range(cap, lo - 1, -1):
            if remaining is not None:
                rest = remaining - v
                if rest < (length - 1) * lo or rest > (length - 1) * v:
                    continue
                yield from ((v,) + t for t in rec(length - 1, v, rest))
            else:
                yield from ((v,) + t for t in rec(length - 1, v, None))

    yield from rec(r, hi, total)


def residue_pattern(vec: ExponentVector, f: int) -> ExponentVector:
    return tuple(sorted(x % f for x in vec))


def constructive_reduction(lam: ExponentVector, f: int) -> Expression:
    """Express m_lam over the full candidate set, with coefficients in B.

    Exact and search-free; coefficients are invariant Laurent
    polynomials whose exponents are all multiples of f (the B-membership
    witness).
    """
    r = len(lam)
    a = tuple(x % f for x in lam)
    q = tuple((x - ai) // f for x, ai in zip(lam, a))
    stab_lam = stabilizer_order(lam)
    terms: Expression = {}
    for c, b_coeff in staircase_decompose(q).items():
        if b_coeff.is_zero():
            continue
        w = tuple(f * ci + ai for ci, ai in zip(c, a))
        gamma = sort_class(w)
        scaled = b_coeff.pullback(f).scale(Fraction(stabilizer_order(w), stab_lam))
        acc = terms.get(gamma)
        terms[gamma] = scaled if acc is None else acc + scaled
    return {g: b for g, b in terms.items() if not b.is_zero()}


def expand_expression(r: int, expr: Expression) -> InvariantLaurentPoly:
    total = InvariantLaurentPoly.zero(r)
    for gamma, coeff in expr.items():
        total = total + coeff * InvariantLaurentPoly.orbit_sum(gamma)
    return total


def _solve_exact(columns: list[InvariantLaurentPoly], target: InvariantLaurentPoly) -> Optional[list[Fraction]]:
    """One exact solution x of sum_j x_j * columns[j] = target, or None."""
    support = set(target.terms)
    for col in columns:
        support.update(col.terms)
    rows = sorted(support)
    if not rows:
        return [Fraction(0)] * len(columns)
    index = {cls: i for i, cls in enumerate(rows)}
    m, n = len(rows), len(columns)
    mat = [[Fraction(0)] * (n + 1) for _ in range(m)]
    for j, col in enumerate(columns):
        for cls, c in col.terms.items():
            mat[index[cls]][j] = c
    for cls, c in target.terms.items():
        mat[index[cls]][n] = c
    pivot_cols: list[int] = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for i in range(m):
            if i != row and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[row])]
        pivot_cols.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if mat[i][n] != 0:
            return None
    solution = [Fraction(0)] * n
    for i, col in enumerate(pivot_cols):
        solution[col] = mat[i][n]
    return solution


def linear_reduction(
    target: ExponentVector,
    generators: list[ExponentVector],
    f: int,
    coeff_bound: int,
) -> Optional[Expression]:
    """Search for m_target = sum b_j g_j with B-monomial exponents <= coeff_bound.

    Columns are the products (pullback monomial class f*mu) * m_gamma
    whose degree and residue pattern match the target; both filters are
    exact invariants of such products.
    """
    r = len(target)
    degree = sum(target)
    pattern = residue_pattern(target, f)
    columns: list[InvariantLaurentPoly] = []
    labels: list[tuple[ExponentVector, ExponentVector]] = []
    mu_hi = coeff_bound // f
    for gamma in generators:
        if residue_pattern(gamma, f) != pattern:
            continue
        gap = degree - sum(gamma)
        if gap % f != 0:
            continue
        gen_poly = InvariantLaurentPoly.orbit_sum(gamma)
        for mu in sorted_tuples(r, -mu_hi, mu_hi, total=gap // f):
            scaled_mu = tuple(f * x for x in mu)
            columns.append(InvariantLaurentPoly.orbit_sum(scaled_mu) * gen_poly)
            labels.append((gamma, scaled_mu))
    solution = _solve_exact(columns, InvariantLaurentPoly.orbit_sum(target))
    if solution is None:
        return None
    expr: Expression = {}
    for x, (gamma, scaled_mu) in zip(solution, labels):
        if x == 0:
            continue
        piece = InvariantLaurentPoly(r, {scaled_mu: x})
        acc = expr.get(gamma)
        expr[gamma] = piece if acc is None else acc + piece
    return {g: b for g, b in expr.items() if not b.is_zero()}


@dataclass
class FinitenessCertificate:
    """Generators plus a complete in-window reduction table.

    reductions[lam] expresses the orbit sum m_lam over ``generators``
    with coefficients in the pullback subring; ``pruned`` records the
    removed candidates with their own expressions, and
    ``coefficient_window`` bounds every exponent appearing in any
    coefficient.
    """

    r: int
    f: int
    window: int
    coefficient_window: int
    generators: list[ExponentVector]
    inverse_product: ExponentVector
    pruned: dict[ExponentVector, Expression]
    reductions: dict[ExponentVector, Expression]
    fallback_targets: list[ExponentVector] = field(default_factory=list)

    def verify(self) -> bool:
        """Re-expand every stored expression and check it exactly.

        Also checks the B-membership witness: every coefficient exponent
        is a multiple of f.
        """
        tables: Iterable[tuple[ExponentVector, Expression]] = list(
            self.pruned.items()
        ) + list(self.reductions.items())
        for lam, expr in tables:
            for coeff in expr.values():
                for cls in coeff.terms:
                    if any(x % self.f != 0 for x in cls):
                        return False
            if expand_expression(self.r, expr) != InvariantLaurentPoly.orbit_sum(lam):
                return False
        return True

    def max_coefficient_exponent(self) -> int:
        return max(
            (c.max_abs_exponent() for e in self.reductions.values() for c in e.values()),
            default=0,
        )

    def to_json(self) -> dict:
        def expr_json(expr: Expression) -> list[dict]:
            return [
                {
                    "generator": list(gamma),
                    "coefficient": [
                        {"exponents": list(cls), "value": f"{c.numerator}/{c.denominator}"}
                        for cls, c in sorted(expr[gamma].terms.items())
                    ],
                }
                for gamma in sorted(expr)
            ]

        return {
            "r": self.r,
            "f": self.f,
            "window": self.window,
            "coefficient_window": self.coefficient_window,
            "generators": [list(g) for g in self.generators],
            "inverse_product": list(self.inverse_product),
            "pruned": [
                {"class": list(g), "terms": expr_json(e)} for g, e in sorted(self.pruned.items())
            ],
            "reductions": [
                {"target": list(t), "terms": expr_json(e)}
                for t, e in sorted(self.reductions.items())
            ],
        }


def _substitute_pruned(expr: Expression, pruned: dict[ExponentVector, Expression], r: int) -> Expression:
    out: Expression = {}

    def add(gamma: ExponentVector, coeff: InvariantLaurentPoly):
        acc = out.get(gamma)
        out[gamma] = coeff if acc is None else acc + coeff

    for gamma, coeff in expr.items():
        replacement = pruned.get(gamma)
        if replacement is None:
            add(gamma, coeff)
        else:
            for inner_gamma, inner_coeff in replacement.items():
                add(inner_gamma, coeff * inner_coeff)
    return {g: b for g, b in out.items() if not b.is_zero()}


def finiteness_certificate(r: int, f: int, window: int) -> FinitenessCertificate:
    """Build and return the complete certificate for (r, f) at the window.

    Raises WindowTooSmall when some in-window monomial admits no
    expression with generators and coefficients inside the window
    bounds.
    """
    if not 1 <= r <= MAX_RANK:
        raise ValueError(f"r must be in [1, {MAX_RANK}]")
    if not 1 <= f <= MAX_POWER:
        raise ValueError(f"f must be in [1, {MAX_POWER}]")
    if window < 1:
        raise ValueError("window must be >= 1")

    coeff_window = window + f * r
    kept: list[ExponentVector] = []
    pruned: dict[ExponentVector, Expression] = {}
    for gamma in candidate_generators(r, f):
        if max(abs(x) for x in gamma) > window:
            continue  # outside the window; never available
        bound = max(abs(x) for x in gamma) + f * r
        expr = linear_reduction(gamma, kept, f, min(bound, coeff_window))
        if expr is None:
            kept.append(gamma)
        else:
            pruned[gamma] = expr

    reductions: dict[ExponentVector, Expression] = {}
    fallbacks: list[ExponentVector] = []
    kept_set = set(kept)
    for lam in sorted_tuples(r, -window, window):
        expr = _substitute_pruned(constructive_reduction(lam, f), pruned, r)
        in_window = all(g in kept_set for g in expr) and all(
            c.max_abs_exponent() <= coeff_window for c in expr.values()
        )
        if not in_window:
            expr = linear_reduction(lam, kept, f, coeff_window)
            fallbacks.append(lam)
            if expr is None:
                raise WindowTooSmall(
                    f"no expression for class {lam} with generators and coefficients "
                    f"inside window {window}; retry with window {window + f}",
                    suggested_window=window + f,
                )
        reductions[lam] = expr

    return FinitenessCertificate(
        r=r,
        f=f,
        window=window,
        coefficient_window=coeff_window,
        generators=kept,
        inverse_product=(-f,) * r,
        pruned=pruned,
        reductions=reductions,
        fallback_targets=fallbacks,
    )
