"""Double beta-Grothendieck polynomials from pipe dreams and their
specializations.

The double beta-Grothendieck polynomial of w is the sum over all pipe
dreams P of w of b^codim(P) times the weight of P, where codim(P) is the
number of crosses beyond l(w).  Setting b = -1 recovers the double
Grothendieck polynomial; setting all x to q and all y to t collapses every
weight to a power of (q - t); setting x = 1, y = 0 leaves the generating
function of pipe dreams by codimension.

Everything here is an exact identity, so the checks compare expanded
polynomials, never sampled values.
"""

from __future__ import annotations

from .complexes import build_pdc, h_polynomial
from .dreams import (
    DEFAULT_LIMIT_N,
    enumerate_pipe_dreams,
    weight,
    xy_beta_vars,
)
from .perms import Permutation
from .poly import MultiPolynomial, poly_diff
from .report import VerifyResult

QT_VARS = ("q", "t", "b")


def double_beta_grothendieck(
    w: Permutation, limit_n: int = DEFAULT_LIMIT_N
) -> MultiPolynomial:
    """Sum over Pipes(w) of b^codim * product of (x_i - y_j) over crosses.

    >>> print(double_beta_grothendieck(Permutation((2, 1))))
    x1 - y1
    """
    vars = xy_beta_vars(w.n)
    l = w.length()
    b = MultiPolynomial.variable("b", vars)
    total = MultiPolynomial.zero(vars)
    for P in enumerate_pipe_dreams(w, limit_n):
        total = total + b ** (P.size - l) * weight(P, vars)
    return total


def double_grothendieck(
    w: Permutation, limit_n: int = DEFAULT_LIMIT_N
) -> MultiPolynomial:
    """The b = -1 specialization, over the x, y variables only."""
    vars = xy_beta_vars(w.n)
    target = vars[:-1]
    return double_beta_grothendieck(w, limit_n).substitute({"b": -1}, target)


def specialize_qt(w: Permutation, limit_n: int = DEFAULT_LIMIT_N) -> MultiPolynomial:
    """All x set to q, all y set to t:
    (q-t)^l(w) * sum over Pipes(w) of [b(q-t)]^codim, expanded."""
    q = MultiPolynomial.variable("q", QT_VARS)
    t = MultiPolynomial.variable("t", QT_VARS)
    b = MultiPolynomial.variable("b", QT_VARS)
    qt = q - t
    l = w.length()
    total = MultiPolynomial.zero(QT_VARS)
    for P in enumerate_pipe_dreams(w, limit_n):
        total = total + (b * qt) ** (P.size - l)
    return qt**l * total


def groth_beta(w: Permutation, limit_n: int = DEFAULT_LIMIT_N) -> MultiPolynomial:
    """x = 1, y = 0 specialization: the codimension generating function
    sum over Pipes(w) of b^codim.

    >>> print(groth_beta(Permutation((1, 4, 3, 2))))
    b^2 + 5*b + 5
    """
    l = w.length()
    terms: dict[tuple[int, ...], int] = {}
    for P in enumerate_pipe_dreams(w, limit_n):
        key = (P.size - l,)
        terms[key] = terms.get(key, 0) + 1
    return MultiPolynomial(("b",), terms)


def shifted_groth_beta(w: Permutation, limit_n: int = DEFAULT_LIMIT_N) -> MultiPolynomial:
    """groth_beta with b -> b - 1 applied; equals the h-polynomial of the
    pipe dream complex in the variable b."""
    b = MultiPolynomial.variable("b", ("b",))
    return groth_beta(w, limit_n).substitute({"b": b - 1}, ("b",))


def verify_groth_h(w: Permutation, limit_n: int = DEFAULT_LIMIT_N) -> VerifyResult:
    """Check that substituting b -> b-1, x_i -> q, y_j -> q-1 into the
    expanded double beta-Grothendieck polynomial is q-free and equals the
    h-polynomial of the pipe dream complex of w."""
    name = f"groth-h:{w}"
    vars = xy_beta_vars(w.n)
    target = ("q", "b")
    q = MultiPolynomial.variable("q", target)
    b = MultiPolynomial.variable("b", target)
    images: dict[str, MultiPolynomial] = {"b": b - 1}
    for v in vars[:-1]:
        images[v] = q if v.startswith("x") else q - 1
    substituted = double_beta_grothendieck(w, limit_n).substitute(images, target)
    if substituted.depends_on("q"):
        return VerifyResult(name, False, {"reason": "q survives", "poly": str(substituted)})
    collapsed = MultiPolynomial(
        ("b",), {(e[1],): c for e, c in substituted.terms.items()}
    )
    h = h_polynomial(build_pdc(w, limit_n)).rename({"x": "b"})
    if collapsed != h:
        return VerifyResult(
            name, False, {"reason": "mismatch", "diff": poly_diff(collapsed, h)}
        )
    return VerifyResult(name, True, {"h": str(h)})
