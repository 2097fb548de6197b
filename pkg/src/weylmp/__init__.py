"""weylmp: exact verification of operator orderings in the Weyl algebra.

The core package normalizes elements of the algebra generated by p, q with
pq - qp = 1 into canonical q-before-p form using exact rational arithmetic,
and mechanically checks a catalog of ordering identities whose closed forms
are Meixner-Pollaczek polynomials evaluated at the symmetric element
T = pq + qp.  A FastAPI service exposes the operations over HTTP and the
``weylmp`` command line drives the service as a thin client.
"""

__version__ = "0.1.0"

from .scalars import GaussianRational, Rational, binomial, pochhammer
from .weyl import (
    ONE,
    P,
    Q,
    T_ELEMENT,
    WeylElement,
    monomial,
    normal_order_word,
    render,
)
from .polynomials import Polynomial, mp_real_form
from .parsing import ParseError, parse_element
from .identities import CheckReport, run_suite, sweep

__all__ = [
    "GaussianRational",
    "Rational",
    "binomial",
    "pochhammer",
    "ONE",
    "P",
    "Q",
    "T_ELEMENT",
    "WeylElement",
    "monomial",
    "normal_order_word",
    "render",
    "Polynomial",
    "mp_real_form",
    "ParseError",
    "parse_element",
    "CheckReport",
    "run_suite",
    "sweep",
    "__version__",
]
