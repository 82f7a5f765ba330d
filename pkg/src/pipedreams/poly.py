"""Exact sparse multivariate polynomials with integer coefficients.

A polynomial is a map from exponent vectors to coefficients over a fixed,
ordered tuple of variable names.  Coefficients are Python ints, so there is
no overflow; all arithmetic and comparisons are exact.  Instances are
immutable: every operation returns a new polynomial.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union


class MultiPolynomial:
    """Polynomial over a declared variable tuple, e.g. ("x1", "y1", "b").

    >>> x = MultiPolynomial.variable("x", ("x", "y"))
    >>> y = MultiPolynomial.variable("y", ("x", "y"))
    >>> print((x - y) * (x + y))
    x^2 - y^2
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str], terms: Union[Mapping, Iterable] = ()):
        self.vars = tuple(vars)
        nv = len(self.vars)
        clean: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coef in items:
            exps = tuple(exps)
            if len(exps) != nv:
                raise ValueError(f"exponent vector {exps} does not match {self.vars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = clean.get(exps, 0) + coef
            if c:
                clean[exps] = c
            elif exps in clean:
                del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Iterable[str]) -> "MultiPolynomial":
        return cls(vars)

    @classmethod
    def constant(cls, c: int, vars: Iterable[str]) -> "MultiPolynomial":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def one(cls, vars: Iterable[str]) -> "MultiPolynomial":
        return cls.constant(1, vars)

    @classmethod
    def variable(cls, name: str, vars: Iterable[str]) -> "MultiPolynomial":
        vars = tuple(vars)
        i = vars.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, {exps: 1})

    @classmethod
    def monomial(cls, vars: Iterable[str], exps: Iterable[int], coef: int = 1) -> "MultiPolynomial":
        return cls(vars, {tuple(exps): coef})

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "MultiPolynomial") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPolynomial.constant(other, self.vars)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        out = MultiPolynomial.__new__(MultiPolynomial)
        out.vars = self.vars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPolynomial.__new__(MultiPolynomial)
        out.vars = self.vars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPolynomial.constant(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPolynomial.zero(self.vars)
            out = MultiPolynomial.__new__(MultiPolynomial)
            out.vars = self.vars
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        self._check(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        out = MultiPolynomial.__new__(MultiPolynomial)
        out.vars = self.vars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPolynomial.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, MultiPolynomial)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> int:
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return next(iter(self.terms.values()))

    def depends_on(self, name: str) -> bool:
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    def coefficient_vector(self) -> tuple[int, ...]:
        """Coefficients (c_0, c_1, ..., c_d) of a univariate polynomial."""
        if len(self.vars) != 1:
            raise ValueError("coefficient_vector needs a univariate polynomial")
        d = self.degree()
        out = [0] * (d + 1 if d >= 0 else 1)
        for (e,), c in self.terms.items():
            out[e] = c
        return tuple(out)

    def evaluate(self, values: Mapping[str, int]) -> int:
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        point = [values[v] for v in self.vars]
        total = 0
        for exps, c in self.terms.items():
            t = c
            for x, e in zip(point, exps):
                if e:
                    t *= x**e
            total += t
        return total

    # -- substitution ------------------------------------------------------

    def substitute(
        self,
        images: Mapping[str, Union["MultiPolynomial", int]],
        target_vars: Iterable[str],
    ) -> "MultiPolynomial":
        """Map each variable to a polynomial over `target_vars`.

        Variables absent from `images` are carried through unchanged and
        must therefore appear in `target_vars`.
        """
        target = tuple(target_vars)
        imgs: dict[int, MultiPolynomial] = {}

        def image(i: int) -> MultiPolynomial:
            if i not in imgs:
                v = self.vars[i]
                img = images.get(v)
                if img is None:
                    img = MultiPolynomial.variable(v, target)
                elif isinstance(img, int):
                    img = MultiPolynomial.constant(img, target)
                elif img.vars != target:
                    raise ValueError(f"image of {v} is over {img.vars}, not {target}")
                imgs[i] = img
            return imgs[i]

        powers: dict[tuple[int, int], MultiPolynomial] = {}

        def power(i: int, e: int) -> MultiPolynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = image(i) ** e
            return powers[key]

        acc: dict[tuple[int, ...], int] = {}
        for exps, coef in self.terms.items():
            term = MultiPolynomial.constant(coef, target)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            for e2, c2 in term.terms.items():
                s = acc.get(e2, 0) + c2
                if s:
                    acc[e2] = s
                elif e2 in acc:
                    del acc[e2]
        out = MultiPolynomial.__new__(MultiPolynomial)
        out.vars = target
        out.terms = acc
        return out

    def rename(self, mapping: Mapping[str, str]) -> "MultiPolynomial":
        """Rename variables in place (the exponent data is untouched)."""
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise ValueError(f"renaming collides: {new_vars}")
        out = MultiPolynomial.__new__(MultiPolynomial)
        out.vars = new_vars
        out.terms = dict(self.terms)
        return out

    # -- presentation ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted by descending total degree, then descending exponents."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            a = abs(coef)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPolynomial({self.vars!r}, {self.terms!r})"

    # -- serialization -----------------------------------------------------

    def to_jsonable(self) -> dict:
        terms = [
            {"exp": list(exps), "coef": str(coef)}
            for exps, coef in sorted(self.terms.items())
        ]
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_jsonable(cls, data: Mapping) -> "MultiPolynomial":
        return cls(
            tuple(data["vars"]),
            {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]},
        )


def poly_diff(a: MultiPolynomial, b: MultiPolynomial) -> dict:
    """Structured difference of two polynomials, for failure reports."""
    if a.vars != b.vars:
        return {"vars_left": list(a.vars), "vars_right": list(b.vars)}
    mism = {}
    for e in set(a.terms) | set(b.terms):
        ca, cb = a.terms.get(e, 0), b.terms.get(e, 0)
        if ca != cb:
            mism[str(tuple(e))] = {"left": str(ca), "right": str(cb)}
    return {"mismatched_terms": mism}
