import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import Poly, Rational, Symbol

from util.number_utils import partitions_of

logger = logging.getLogger(__name__)

x = Symbol('x')


class EdgePolynomial:
    """Edge-counting refinement b_{m,n}(x) of unlabeled bicolored graphs."""

    @staticmethod
    @lru_cache(maxsize=None)
    def edge_gf(m: int, n: int) -> Poly:
        """Σ over cycle types (λ, μ) of Π (1 + x^{lcm(k,l)})^{c_k c_l gcd(k,l)} / (z_λ z_μ).

        Args:
            m: Number of white vertices.
            n: Number of black vertices.

        Returns:
            Integer polynomial whose x^e coefficient counts unlabeled (m, n)-bicolored
            graphs with e edges.

        Raises:
            ArithmeticError: If a coefficient fails to cancel to an integer.
        """
        if m < 0 or n < 0:
            raise ValueError(f"Vertex counts must be nonnegative, got ({m}, {n})")
        total = Poly(0, x, domain='QQ')
        for lam in partitions_of(m):
            for mu in partitions_of(n):
                term = Poly(1, x, domain='QQ')
                for k, ck in lam.multiplicities.items():
                    for l, cl in mu.multiplicities.items():
                        term *= Poly(1 + x ** lcm(k, l), x, domain='QQ') ** (ck * cl * gcd(k, l))
                weight = Fraction(1, lam.z() * mu.z())
                total += term * Rational(weight.numerator, weight.denominator)
        if any(not c.is_integer for c in total.all_coeffs()):
            raise ArithmeticError(f"b_{{{m},{n}}} has non-integral coefficients: {total.all_coeffs()}")
        logger.debug("edge polynomial for (%d, %d) has degree %d", m, n, total.degree())
        return Poly(total.as_expr(), x, domain='ZZ')

    @staticmethod
    def coefficients(poly: Poly) -> list:
        """Coefficients from x^0 upward."""
        return [int(c) for c in reversed(poly.all_coeffs())]
