"""Sparse multivariate polynomials with exact rational coefficients.

Terms are keyed by exponent tuples aligned with a fixed variable-name
tuple; two polynomials combine only when their variable tuples agree.
"""

from __future__ import annotations

from fractions import Fraction


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            n = len(self.vars)
            for exp, c in dict(terms).items():
                c = Fraction(c)
                if not c:
                    continue
                exp = tuple(int(e) for e in exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not fit variables {self.vars}")
                self.terms[exp] = c

    @classmethod
    def constant(cls, vars, c) -> "MultiPoly":
        return cls(vars, {(0,) * len(tuple(vars)): Fraction(c)})

    @classmethod
    def zero(cls, vars) -> "MultiPoly":
        return cls(vars)

    @classmethod
    def variable(cls, vars, name) -> "MultiPoly":
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls(vars, {tuple(exp): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return MultiPoly(self.vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def min_total_degree(self) -> int:
        """Least sum of exponents over stored terms (every variable weight 1)."""
        if not self.terms:
            raise ValueError("zero polynomial has no minimal degree")
        return min(sum(e) for e in self.terms)

    def lowest_form(self) -> "MultiPoly":
        d = self.min_total_degree()
        return MultiPoly(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def degree_in(self, name) -> int:
        """Degree in one variable; zero polynomial gives -1."""
        if not self.terms:
            return -1
        k = self.vars.index(name)
        return max(e[k] for e in self.terms)

    def diff(self, name) -> "MultiPoly":
        k = self.vars.index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            if exp[k]:
                e = list(exp)
                e[k] -= 1
                out[tuple(e)] = c * exp[k]
        return MultiPoly(self.vars, out)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, exp)
                if e
            ]
            mono = "*".join(factors) if factors else "1"
            coef = str(c) if c.denominator != 1 or not factors else (
                str(c.numerator) if abs(c) != 1 or not factors else ("-" if c < 0 else "")
            )
            if factors and abs(c) == 1 and c.denominator == 1:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{coef}*{mono}" if factors else str(c))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def det(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant by Laplace expansion with a subset DP over columns."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    vars = matrix[0][0].vars
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    # dp[mask] = determinant of the processed rows on the column subset `mask`
    dp = {0: MultiPoly.constant(vars, 1)}
    for r, row in enumerate(matrix):
        ndp: dict[int, MultiPoly] = {}
        for mask, minor in dp.items():
            if minor.is_zero():
                continue
            used_below = 0
            for col in range(n):
                bit = 1 << col
                if mask & bit:
                    used_below += 1
                    continue
                entry = row[col]
                if not entry.is_zero():
                    term = minor * entry
                    if (r + used_below) % 2:
                        term = -term
                    key = mask | bit
                    ndp[key] = ndp.get(key, MultiPoly.zero(vars)) + term
        dp = ndp
    return dp.get((1 << n) - 1, MultiPoly.zero(vars))
