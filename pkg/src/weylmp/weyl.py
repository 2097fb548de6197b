"""Canonical-form arithmetic in the rational Weyl algebra.

The algebra has two generators p, q subject to the single relation
pq - qp = 1.  Every element has a unique normally ordered (PBW) form

    sum of c_{a,b} * q^a * p^b        (a, b >= 0, c_{a,b} rational)

and a ``WeylElement`` is exactly that: a finite map from exponent pairs
(a, b) to nonzero rational coefficients.  Two elements are equal iff their
maps are equal, so every identity check in this package bottoms out in a
dictionary comparison.

Products are normalized through the closed form

    p^b q^c = sum_k k! * C(b,k) * C(c,k) * q^(c-k) p^(b-k)

which is O(min(b,c)) terms.  ``rewrite_normal_order`` implements the naive
alternative (replace one adjacent pq by qp + 1 until sorted); it is kept as
an independent oracle for tests and as the baseline for benchmarks, never
as the production path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping

from .scalars import binomial, factorial

Exponents = tuple[int, int]

# A word over the two-letter alphabet; "" is the algebra unit.
Word = str

_SCALARS = (int, Fraction)


class WeylElement:
    """An element of the Weyl algebra in canonical q-before-p form.

    Instances are immutable; all arithmetic returns fresh elements with
    zero coefficients pruned.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, Fraction] | None = None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for (a, b), coeff in terms.items():
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent in term q^{a}*p^{b}")
                coeff = Fraction(coeff)
                if coeff:
                    clean[(int(a), int(b))] = coeff
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    # -- inspection ----------------------------------------------------

    def items(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    def terms(self) -> dict[Exponents, Fraction]:
        """A copy of the underlying exponent-pair -> coefficient map."""
        return dict(self._terms)

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Largest a + b over stored terms; -1 for the zero element."""
        if not self._terms:
            return -1
        return max(a + b for a, b in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, _SCALARS):
            other = monomial(0, 0, other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._terms == other._terms

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "WeylElement") -> "WeylElement":
        if isinstance(other, _SCALARS):
            other = monomial(0, 0, other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            acc = merged.get(key, 0) + coeff
            if acc:
                merged[key] = acc
            else:
                merged.pop(key, None)
        return _raw(merged)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return _raw({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other) -> "WeylElement":
        if isinstance(other, _SCALARS):
            other = monomial(0, 0, other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "WeylElement":
        return (-self) + other

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, _SCALARS):
            return scale(other, self)
        if not isinstance(other, WeylElement):
            return NotImplemented
        result: dict[Exponents, Fraction] = {}
        for (a, b), cx in self._terms.items():
            for (c, d), cy in other._terms.items():
                cxy = cx * cy
                # (q^a p^b)(q^c p^d): normalize the inner p^b q^c block and
                # shift its exponents by the outer q^a, p^d.
                for qa, pb, k_coeff in _pq_block_terms(b, c):
                    key = (a + qa, pb + d)
                    acc = result.get(key, 0) + cxy * k_coeff
                    if acc:
                        result[key] = acc
                    else:
                        result.pop(key, None)
        return _raw(result)

    def __rmul__(self, other) -> "WeylElement":
        if isinstance(other, _SCALARS):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, exponent: int) -> "WeylElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"<WeylElement {render(self)}>"


def _raw(terms: dict[Exponents, Fraction]) -> WeylElement:
    """Wrap an already-clean term dict without re-validating it."""
    element = WeylElement.__new__(WeylElement)
    object.__setattr__(element, "_terms", terms)
    return element


def monomial(a: int, b: int, coeff=1) -> WeylElement:
    """c * q^a * p^b in canonical form; a zero coefficient gives 0."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    coeff = Fraction(coeff)
    if not coeff:
        return ZERO
    return _raw({(a, b): coeff})


def scale(coeff, element: WeylElement) -> WeylElement:
    coeff = Fraction(coeff)
    if not coeff:
        return ZERO
    return _raw({key: coeff * value for key, value in element.items()})


def element_sum(elements: Iterable[WeylElement]) -> WeylElement:
    """Sum of many elements, accumulated in a single map."""
    total: dict[Exponents, Fraction] = {}
    for element in elements:
        for key, coeff in element.items():
            acc = total.get(key, 0) + coeff
            if acc:
                total[key] = acc
            else:
                total.pop(key, None)
    return _raw(total)


ZERO = _raw({})
ONE = monomial(0, 0)
P = monomial(0, 1)
Q = monomial(1, 0)
# T = pq + qp = 2qp + 1, the symmetric quadratic element.
T_ELEMENT = _raw({(1, 1): Fraction(2), (0, 0): Fraction(1)})


@lru_cache(maxsize=None)
def _pq_block_terms(b: int, c: int) -> tuple[tuple[int, int, int], ...]:
    """Expansion of p^b q^c as tuples (q-exponent, p-exponent, coefficient)."""
    return tuple(
        (c - k, b - k, factorial(k) * binomial(b, k) * binomial(c, k))
        for k in range(min(b, c) + 1)
    )


def reduce_pq_block(b: int, c: int) -> WeylElement:
    """Canonical form of p^b q^c via the closed rook-number formula."""
    if b < 0 or c < 0:
        raise ValueError("exponents must be non-negative")
    return _raw({(qa, pb): Fraction(coeff) for qa, pb, coeff in _pq_block_terms(b, c)})


# -- words over {p, q} -------------------------------------------------


def check_word(word: Word) -> Word:
    word = word.lower()
    if any(letter not in "pq" for letter in word):
        raise ValueError(f"word must use only letters p and q, got {word!r}")
    return word


def words_with_counts(m: int, n: int) -> Iterator[Word]:
    """All distinct words with m letters p and n letters q.

    Enumerated by choosing the subset of positions that carry p, so the
    number of words is exactly C(m+n, m) with no permutation duplicates.
    """
    total = m + n
    for p_positions in combinations(range(total), m):
        letters = ["q"] * total
        for index in p_positions:
            letters[index] = "p"
        yield "".join(letters)


def normal_order_word(word: Word) -> WeylElement:
    """Canonical form of the product of the letters of the word, in order."""
    word = check_word(word)
    result = ONE
    for letter in word:
        result = result * (P if letter == "p" else Q)
    return result


def rewrite_normal_order(word: Word, memo: dict[Word, WeylElement] | None = None) -> WeylElement:
    """Normalize a word by single-step rewriting: one adjacent pq -> qp + 1.

    Deliberately naive; serves as the independent oracle for
    ``reduce_pq_block``/``normal_order_word`` and as the benchmark baseline.
    A shared memo dict may be passed in when normalizing many related words.
    """
    word = check_word(word)
    if memo is None:
        memo = {}

    def norm(w: Word) -> WeylElement:
        cached = memo.get(w)
        if cached is not None:
            return cached
        cut = w.find("pq")
        if cut < 0:
            # no p immediately before q anywhere, so w = q^a p^b
            result = monomial(w.count("q"), w.count("p"))
        else:
            swapped = w[:cut] + "qp" + w[cut + 2 :]
            dropped = w[:cut] + w[cut + 2 :]
            result = norm(swapped) + norm(dropped)
        memo[w] = result
        return result

    return norm(word)


# -- operator calculus -------------------------------------------------


def anticommutator(a: WeylElement, x: WeylElement) -> WeylElement:
    """The two-sided multiplication x -> a*x + x*a."""
    return a * x + x * a


def anticommutator_power(a: WeylElement, m: int, x: WeylElement) -> WeylElement:
    """m-fold iterate of the two-sided multiplication by a."""
    if m < 0:
        raise ValueError("iteration count must be non-negative")
    for _ in range(m):
        x = anticommutator(a, x)
    return x


def substitute_T(f) -> WeylElement:
    """Evaluate a rational polynomial at the element T = 2qp + 1 (Horner)."""
    result = ZERO
    for coeff in reversed(tuple(f.coefficients())):
        result = result * T_ELEMENT + monomial(0, 0, coeff)
    return result


def symmetrized_product(elements: list[WeylElement]) -> WeylElement:
    """Sum over all len(elements)! permutation products (repeats included)."""
    if not elements:
        raise ValueError("symmetrized product needs at least one factor")

    def product(order):
        result = ONE
        for element in order:
            result = result * element
        return result

    return element_sum(product(order) for order in permutations(elements))


def pq_transpose(x: WeylElement) -> WeylElement:
    """The anti-automorphism that swaps p and q and reverses every product.

    On canonical monomials it sends q^a p^b to q^b p^a.
    """
    return _raw({(b, a): coeff for (a, b), coeff in x.items()})


# -- rendering ----------------------------------------------------------


def _render_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("p" if b == 1 else f"p^{b}")
    return "*".join(parts)


def render(x: WeylElement) -> str:
    """Deterministic canonical rendering, e.g. ``q^2*p^2 + 4*q*p + 2``.

    Terms are sorted by total degree descending, then q-exponent descending;
    unit coefficients are omitted and integer coefficients carry no
    denominator.
    """
    if x.is_zero:
        return "0"
    ordered = sorted(x.items(), key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0]))
    pieces = []
    for index, ((a, b), coeff) in enumerate(ordered):
        sign = "-" if coeff < 0 else "+"
        magnitude = -coeff if coeff < 0 else coeff
        body = _render_monomial(a, b)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if index == 0:
            pieces.append(text if sign == "+" else f"-{text}")
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces)
