"""The identity harness: one checker per verified operator-ordering identity.

Each checker builds both (or all) sides of one identity as canonical
``WeylElement``s or exact scalars and reports whether they coincide.  The
catalog of identity tags:

    THM1            the two binomial ordering sums
                    2^n * sum_k C(m,k) p^k q^n p^(m-k)
                    = 2^m * sum_k C(n,k) q^k p^m q^(n-k),
                    their Meixner-Pollaczek closed form, and the
                    anticommutator chain ad~(p)^m ad~(q)^n . 1
    THM2            T_{m,n} (the sum of all C(m+n,m) words with m letters p
                    and n letters q) against its closed form and the
                    rescaled anticommutator chain
    LEM1            per-coefficient content of the binomial identity
                    (t1*ad~(p) + t2*ad~(q))^N . 1 = 2^N (t1*p + t2*q)^N
    LEM2_COMMUTANT  ad~(p) and ad~(q) commute as operators
    PROP_EXPAN      the anticommutator chain equals both binomial sums
    LEM3_1          p^l f(T) = f(T+2l) p^l and q^l f(T) = f(T-2l) q^l
    LEM3_2          p^l q^l = ((1+T)/2)_l and q^l p^l = (-1)^l ((1-T)/2)_l
    PROP_GENFUN     the two evaluation routes to Q_n^(alpha) agree and the
                    hypergeometric transformation chain closes
    PROP_TMN        T_{m,n} = C(m+n,m)/2^(m+n) * ad~(p)^m ad~(q)^n . 1
    REMARK_14       T_{m,n} q^(m-n) = C(m+n,n)/2^n ((1+T)/2)_{m-n}
                    Q_n(T+m-n) for m >= n, plus derived mirrored forms
    REMARK_15       the explicit normally ordered expansion of T_{m,n}

Here ad~(a) denotes the two-sided multiplication x -> a*x + x*a.  Checkers
are pure and deterministic; randomized ones (LEM2_COMMUTANT) derive their
inputs from an explicit seed.  Sweeps aggregate per-cell resource and
parameter errors into the report stream instead of aborting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import (
    ParameterError,
    Polynomial,
    mp_real_form,
    mp_via_definition_real,
    pochhammer_poly,
    transformation_chain,
)
from .scalars import binomial, factorial, pochhammer
from .weyl import (
    ONE,
    P,
    Q,
    WeylElement,
    anticommutator,
    anticommutator_power,
    element_sum,
    monomial,
    normal_order_word,
    render,
    rewrite_normal_order,
    substitute_T,
    words_with_counts,
)

# Largest word count enumerated by default: all words of length 16.
DEFAULT_WORD_CAP = binomial(16, 8)

ALPHA_GRID = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2))
T_GRID = tuple(range(-3, 4))

HALF_PLUS = Polynomial((Fraction(1, 2), Fraction(1, 2)))  # (1 + x) / 2
HALF_MINUS = Polynomial((Fraction(1, 2), Fraction(-1, 2)))  # (1 - x) / 2

IDENTITY_TAGS = (
    "THM1",
    "THM2",
    "LEM1",
    "LEM2_COMMUTANT",
    "PROP_EXPAN",
    "LEM3_1",
    "LEM3_2",
    "PROP_GENFUN",
    "PROP_TMN",
    "REMARK_14",
    "REMARK_15",
)


class CapExceededError(Exception):
    """A brute-force enumeration would exceed the configured word cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} words, cap is {cap}")
        self.required = required
        self.cap = cap


@dataclass(frozen=True)
class CheckReport:
    """Structured outcome of one identity verification cell."""

    identity: str
    params: dict
    verdict: str  # "pass" | "fail" | "error"
    lhs: str
    rhs: str
    detail: str = ""
    code: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "verdict": self.verdict,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
            "code": self.code,
        }


def _compare(identity: str, params: dict, values, note: str = "") -> CheckReport:
    """Build a report from named values that must all be equal.

    ``values`` is a sequence of (name, value) pairs; the first entry renders
    as lhs.  On failure rhs shows the first deviating value and the detail
    names it.
    """
    names = [name for name, _ in values]
    first_name, first_value = values[0]
    lhs = str(first_value)
    for name, value in values[1:]:
        if value != first_value:
            detail = f"{name} deviates from {first_name}"
            if note:
                detail = f"{detail}; {note}"
            return CheckReport(identity, params, "fail", lhs, str(value), detail)
    detail = " = ".join(names)
    if note:
        detail = f"{detail}; {note}"
    return CheckReport(identity, params, "pass", lhs, lhs, detail)


# -- building blocks ------------------------------------------------------


def thm1_sum_p_outside(m: int, n: int) -> WeylElement:
    """2^n * sum_{k=0}^{m} C(m,k) p^k q^n p^(m-k) in canonical form."""
    total = element_sum(
        binomial(m, k) * ((P**k) * (Q**n) * (P ** (m - k))) for k in range(m + 1)
    )
    return (2**n) * total


def thm1_sum_q_outside(m: int, n: int) -> WeylElement:
    """2^m * sum_{k=0}^{n} C(n,k) q^k p^m q^(n-k) in canonical form."""
    total = element_sum(
        binomial(n, k) * ((Q**k) * (P**m) * (Q ** (n - k))) for k in range(n + 1)
    )
    return (2**m) * total


def anticommutator_chain(m: int, n: int) -> WeylElement:
    """ad~(p)^m ad~(q)^n . 1."""
    return anticommutator_power(P, m, anticommutator_power(Q, n, ONE))


def _mp_factor(degree: int, excess: int) -> WeylElement:
    """Q_degree^((1+excess)/2)(T + excess) as an algebra element."""
    poly = mp_real_form(degree, Fraction(1 + excess, 2)).shift(excess)
    return substitute_T(poly)


def thm1_closed_form(m: int, n: int) -> WeylElement:
    """The Meixner-Pollaczek closed form of the ordering sums.

    For m >= n this is 2^m * Q_n^((1+m-n)/2)(T + m - n) * p^(m-n); the
    mirrored branch applies for n >= m.  At m = n the two branches are the
    same expression and are asserted to coincide.
    """
    if m < 0 or n < 0:
        raise ValueError("exponents must be non-negative")
    p_branch = None
    q_branch = None
    if m >= n:
        p_branch = (2**m) * (_mp_factor(n, m - n) * (P ** (m - n)))
    if n >= m:
        q_branch = (2**n) * ((Q ** (n - m)) * _mp_factor(m, n - m))
    if m == n:
        assert p_branch == q_branch
    return p_branch if p_branch is not None else q_branch


def tmn_bruteforce(
    m: int, n: int, cap: int = DEFAULT_WORD_CAP, strategy: str = "closed"
) -> WeylElement:
    """Sum of all C(m+n,m) distinct words with m p's and n q's, normalized.

    ``strategy`` selects the normalizer: "closed" uses the production
    rook-number path, "rewrite" the single-step rewriting baseline (with a
    memo shared across the words of this cell).
    """
    if m < 0 or n < 0:
        raise ValueError("letter counts must be non-negative")
    required = binomial(m + n, m)
    if required > cap:
        raise CapExceededError(required, cap)
    if strategy == "rewrite":
        memo: dict = {}
        return element_sum(rewrite_normal_order(w, memo) for w in words_with_counts(m, n))
    if strategy != "closed":
        raise ValueError(f"unknown strategy {strategy!r}")
    return element_sum(normal_order_word(w) for w in words_with_counts(m, n))


def thm2_closed_form(m: int, n: int) -> WeylElement:
    """Closed form of T_{m,n}: C(m+n,n)/2^n * Q_n(T+m-n) * p^(m-n) for m >= n."""
    if m >= n:
        factor = Fraction(binomial(m + n, n), 2**n)
        return factor * (_mp_factor(n, m - n) * (P ** (m - n)))
    factor = Fraction(binomial(m + n, m), 2**m)
    return factor * ((Q ** (n - m)) * _mp_factor(m, n - m))


def random_element(
    rng: random.Random, max_terms: int = 3, max_exponent: int = 3, coeff_bound: int = 9
) -> WeylElement:
    """A sparse random element with small exponents and rational coefficients."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(0, max_exponent), rng.randint(0, max_exponent))
        coeff = Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, 4))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return WeylElement(terms)


# -- checkers --------------------------------------------------------------


def check_thm1(m: int, n: int) -> CheckReport:
    """Four-way equality of the ordering sums, closed form and chain."""
    return _compare(
        "THM1",
        {"m": m, "n": n},
        (
            ("p_outside_sum", thm1_sum_p_outside(m, n)),
            ("q_outside_sum", thm1_sum_q_outside(m, n)),
            ("mp_closed_form", thm1_closed_form(m, n)),
            ("anticommutator_chain", anticommutator_chain(m, n)),
        ),
    )


def check_thm2(m: int, n: int, cap: int = DEFAULT_WORD_CAP) -> CheckReport:
    """Brute-force T_{m,n} against its closed form and the rescaled chain."""
    rescaled = Fraction(binomial(m + n, m), 2 ** (m + n)) * anticommutator_chain(m, n)
    return _compare(
        "THM2",
        {"m": m, "n": n},
        (
            ("word_sum", tmn_bruteforce(m, n, cap)),
            ("mp_closed_form", thm2_closed_form(m, n)),
            ("rescaled_chain", rescaled),
        ),
    )


def check_prop_expan(m: int, n: int) -> CheckReport:
    """The anticommutator chain equals both binomial ordering sums."""
    return _compare(
        "PROP_EXPAN",
        {"m": m, "n": n},
        (
            ("anticommutator_chain", anticommutator_chain(m, n)),
            ("p_outside_sum", thm1_sum_p_outside(m, n)),
            ("q_outside_sum", thm1_sum_q_outside(m, n)),
        ),
    )


def check_prop_tmn(m: int, n: int, cap: int = DEFAULT_WORD_CAP) -> CheckReport:
    """T_{m,n} equals C(m+n,m)/2^(m+n) times the anticommutator chain."""
    rescaled = Fraction(binomial(m + n, m), 2 ** (m + n)) * anticommutator_chain(m, n)
    return _compare(
        "PROP_TMN",
        {"m": m, "n": n},
        (("word_sum", tmn_bruteforce(m, n, cap)), ("rescaled_chain", rescaled)),
    )


def check_lemma1(N: int, cap: int = DEFAULT_WORD_CAP) -> CheckReport:
    """Coefficient content of the two-variable binomial expansion at order N.

    For every split m + n = N the chain must be order-independent (the two
    generators' two-sided multiplications commute) and satisfy
    C(N,m) * ad~(p)^m ad~(q)^n . 1 = 2^N * T_{m,n}.
    """
    params = {"N": N}
    for m in range(N + 1):
        n = N - m
        chain_pq = anticommutator_chain(m, n)
        chain_qp = anticommutator_power(Q, n, anticommutator_power(P, m, ONE))
        if chain_pq != chain_qp:
            return CheckReport(
                params=params,
                identity="LEM1",
                verdict="fail",
                lhs=render(chain_pq),
                rhs=render(chain_qp),
                detail=f"chain order changed the value at split m={m}, n={n}",
            )
        scaled_chain = binomial(N, m) * chain_pq
        scaled_words = (2**N) * tmn_bruteforce(m, n, cap)
        if scaled_chain != scaled_words:
            return CheckReport(
                params=params,
                identity="LEM1",
                verdict="fail",
                lhs=render(scaled_chain),
                rhs=render(scaled_words),
                detail=f"coefficient cell m={m}, n={n} deviates",
            )
    summary = f"all {N + 1} coefficient cells of order {N} agree"
    return CheckReport("LEM1", params, "pass", summary, summary)


def check_commutant(trial: int, seed: int = 0) -> CheckReport:
    """ad~(p) ad~(q) . X = ad~(q) ad~(p) . X on a seeded random element."""
    rng = random.Random(f"commutant:{seed}:{trial}")
    x = random_element(rng)
    return _compare(
        "LEM2_COMMUTANT",
        {"trial": trial, "seed": seed},
        (
            ("p_then_q", anticommutator(P, anticommutator(Q, x))),
            ("q_then_p", anticommutator(Q, anticommutator(P, x))),
        ),
        note=f"X = {render(x)}",
    )


def check_lemma3_commutation(l: int, j: int) -> CheckReport:
    """p^l f(T) = f(T+2l) p^l and q^l f(T) = f(T-2l) q^l for f(x) = x^j."""
    f = Polynomial([0] * j + [1])
    p_lhs = (P**l) * substitute_T(f)
    p_rhs = substitute_T(f.shift(2 * l)) * (P**l)
    q_lhs = (Q**l) * substitute_T(f)
    q_rhs = substitute_T(f.shift(-2 * l)) * (Q**l)
    params = {"l": l, "j": j}
    if p_lhs != p_rhs:
        return CheckReport(
            "LEM3_1", params, "fail", render(p_lhs), render(p_rhs), "p-side deviates"
        )
    if q_lhs != q_rhs:
        return CheckReport(
            "LEM3_1", params, "fail", render(q_lhs), render(q_rhs), "q-side deviates"
        )
    return CheckReport(
        "LEM3_1",
        params,
        "pass",
        render(p_lhs),
        render(p_lhs),
        f"both shift identities hold for f(x) = x^{j}",
    )


def check_lemma3_factorization(l: int) -> CheckReport:
    """p^l q^l = ((1+T)/2)_l and q^l p^l = (-1)^l ((1-T)/2)_l."""
    plus_lhs = (P**l) * (Q**l)
    plus_rhs = substitute_T(pochhammer_poly(HALF_PLUS, l))
    minus_lhs = (Q**l) * (P**l)
    minus_rhs = substitute_T(((-1) ** l) * pochhammer_poly(HALF_MINUS, l))
    params = {"l": l}
    if plus_lhs != plus_rhs:
        return CheckReport(
            "LEM3_2", params, "fail", render(plus_lhs), render(plus_rhs), "p^l q^l side deviates"
        )
    if minus_lhs != minus_rhs:
        return CheckReport(
            "LEM3_2", params, "fail", render(minus_lhs), render(minus_rhs), "q^l p^l side deviates"
        )
    return CheckReport(
        "LEM3_2", params, "pass", render(plus_lhs), render(plus_lhs), "both factorizations hold"
    )


def check_genfun(n: int, alpha, t) -> CheckReport:
    """All evaluation routes to Q_n^(alpha)(t) agree, exactly.

    Compares the real closed form, the definitional hypergeometric route
    (whose imaginary part must vanish identically), and both stages of the
    series transformation chain.
    """
    alpha = Fraction(alpha)
    t = Fraction(t)
    params = {"n": n, "alpha": str(alpha), "t": str(t)}
    closed = mp_real_form(n, alpha)(t)
    definitional = mp_via_definition_real(n, alpha, t)
    chain = transformation_chain(n, alpha, t)
    note = "middle stage evaluated as a rational-function limit" if chain.middle_is_limit else ""
    return _compare(
        "PROP_GENFUN",
        params,
        (
            ("closed_form", closed),
            ("definitional", definitional),
            ("series_first_stage", chain.first),
            ("series_middle_stage", chain.middle),
        ),
        note=note,
    )


def check_remark14(m: int, n: int, cap: int = DEFAULT_WORD_CAP) -> CheckReport:
    """Pochhammer-weighted closed form of T_{m,n} q^(m-n) (and mirrors).

    For m >= n the direct statement is checked.  For n > m no explicit
    statement is given, so two derived mirrored forms are verified: the
    image under the p<->q anti-automorphism (left multiplication by
    p^(n-m), using ((1+T)/2)_l) and the right-multiplication variant
    (using (-1)^l ((1-T)/2)_l with shifted argument).
    """
    words = tmn_bruteforce(m, n, cap)
    if m >= n:
        excess = m - n
        lhs = words * (Q**excess)
        poly = pochhammer_poly(HALF_PLUS, excess) * mp_real_form(
            n, Fraction(1 + excess, 2)
        ).shift(excess)
        rhs = Fraction(binomial(m + n, n), 2**n) * substitute_T(poly)
        return _compare(
            "REMARK_14",
            {"m": m, "n": n, "variant": "direct"},
            (("word_sum_times_q_power", lhs), ("pochhammer_closed_form", rhs)),
        )
    excess = n - m
    factor = Fraction(binomial(m + n, m), 2**m)
    base = mp_real_form(m, Fraction(1 + excess, 2))
    left_lhs = (P**excess) * words
    left_rhs = factor * substitute_T(
        pochhammer_poly(HALF_PLUS, excess) * base.shift(excess)
    )
    right_lhs = words * (P**excess)
    right_rhs = (factor * (-1) ** excess) * substitute_T(
        pochhammer_poly(HALF_MINUS, excess) * base.shift(-excess)
    )
    params = {"m": m, "n": n, "variant": "mirrored"}
    note = "derived mirrored forms (left and right factorizations)"
    if left_lhs != left_rhs:
        return CheckReport(
            "REMARK_14", params, "fail", render(left_lhs), render(left_rhs),
            f"left-multiplied form deviates; {note}",
        )
    if right_lhs != right_rhs:
        return CheckReport(
            "REMARK_14", params, "fail", render(right_lhs), render(right_rhs),
            f"right-multiplied form deviates; {note}",
        )
    return CheckReport(
        "REMARK_14", params, "pass", render(left_lhs), render(left_lhs), note
    )


def _pbw_expansion(outer: int, inner: int, q_shift: int, p_shift: int) -> WeylElement:
    """sum_k C(inner,k) 2^k / (1+outer-inner)_k * q^(k+q_shift) p^(k+p_shift)."""
    excess = outer - inner
    return element_sum(
        monomial(
            k + q_shift,
            k + p_shift,
            Fraction(binomial(inner, k) * 2**k) / pochhammer(Fraction(1 + excess), k),
        )
        for k in range(inner + 1)
    )


def check_remark15(m: int, n: int, cap: int = DEFAULT_WORD_CAP) -> CheckReport:
    """Explicit normally ordered (PBW) expansion of T_{m,n} (and mirror)."""
    words = tmn_bruteforce(m, n, cap)
    if m >= n:
        factor = Fraction(factorial(m), factorial(m - n) * 2**n) * binomial(m + n, n)
        expansion = factor * _pbw_expansion(m, n, 0, m - n)
        variant = "direct"
        note = ""
    else:
        factor = Fraction(factorial(n), factorial(n - m) * 2**m) * binomial(m + n, m)
        expansion = factor * _pbw_expansion(n, m, n - m, 0)
        variant = "mirrored"
        note = "derived mirrored form"
    return _compare(
        "REMARK_15",
        {"m": m, "n": n, "variant": variant},
        (("word_sum", words), ("pbw_expansion", expansion)),
        note=note,
    )


# -- sweeps ----------------------------------------------------------------


@dataclass(frozen=True)
class SuiteCaps:
    """Resource knobs for sweep execution."""

    word_cap: int = DEFAULT_WORD_CAP
    commutant_trials: int = 10
    seed: int = 0


@dataclass(frozen=True)
class IdentityInfo:
    """CLI/service-facing description of one identity's sweep parameters."""

    tag: str
    summary: str
    m_name: str
    m_default: tuple[int, int]
    n_name: str | None = None
    n_default: tuple[int, int] | None = None
    fixed: str = ""


IDENTITY_INFO = {
    "THM1": IdentityInfo(
        "THM1",
        "binomial ordering sums = MP closed form = anticommutator chain",
        "m", (0, 4), "n", (0, 4),
    ),
    "THM2": IdentityInfo(
        "THM2",
        "word sum T_{m,n} = MP closed form = rescaled chain",
        "m", (0, 4), "n", (0, 4),
    ),
    "LEM1": IdentityInfo(
        "LEM1",
        "coefficient cells of the order-N two-variable binomial expansion",
        "N", (0, 6),
    ),
    "LEM2_COMMUTANT": IdentityInfo(
        "LEM2_COMMUTANT",
        "two-sided multiplications by p and q commute (randomized)",
        "trial", (0, 49),
    ),
    "PROP_EXPAN": IdentityInfo(
        "PROP_EXPAN",
        "anticommutator chain equals both binomial ordering sums",
        "m", (0, 4), "n", (0, 4),
    ),
    "LEM3_1": IdentityInfo(
        "LEM3_1",
        "power-shift commutation p^l f(T) = f(T+2l) p^l and mirror",
        "l", (0, 6), "j", (0, 5),
    ),
    "LEM3_2": IdentityInfo(
        "LEM3_2",
        "Pochhammer factorizations of p^l q^l and q^l p^l",
        "l", (0, 8),
    ),
    "PROP_GENFUN": IdentityInfo(
        "PROP_GENFUN",
        "MP evaluation routes and series transformation chain agree",
        "n", (0, 10),
        fixed="alpha in {1/2, 1, 3/2, 2, 5/2}, t in {-3..3}",
    ),
    "PROP_TMN": IdentityInfo(
        "PROP_TMN",
        "word sum equals rescaled anticommutator chain",
        "m", (0, 4), "n", (0, 4),
    ),
    "REMARK_14": IdentityInfo(
        "REMARK_14",
        "Pochhammer-weighted closed form of T_{m,n} q^(m-n) and mirrors",
        "m", (0, 4), "n", (0, 4),
    ),
    "REMARK_15": IdentityInfo(
        "REMARK_15",
        "explicit normally ordered expansion of T_{m,n} and mirror",
        "m", (0, 4), "n", (0, 4),
    ),
}


def _guarded(identity: str, params: dict, thunk) -> CheckReport:
    try:
        return thunk()
    except CapExceededError as exc:
        return CheckReport(
            identity, params, "error", "", "",
            f"word enumeration needs {exc.required} words, cap is {exc.cap}",
            code="cap_exceeded",
        )
    except ParameterError as exc:
        return CheckReport(identity, params, "error", "", "", str(exc), code="parameter_error")


def _span(bounds: tuple[int, int]) -> range:
    lo, hi = bounds
    if lo < 0 or hi < lo:
        raise ValueError(f"invalid range {lo}..{hi}")
    return range(lo, hi + 1)


def sweep(
    identity: str,
    m_range: tuple[int, int] | None = None,
    n_range: tuple[int, int] | None = None,
    cap: int = DEFAULT_WORD_CAP,
    seed: int = 0,
) -> list[CheckReport]:
    """Run one identity's checker over a parameter grid, deterministically.

    The two CLI ranges map onto each identity's natural parameters (see
    ``IDENTITY_INFO``): grid identities use them as the m and n ranges,
    LEM1 reads its order N from the first, LEM2_COMMUTANT its trial indices,
    LEM3_1 its power l and monomial degree j, LEM3_2 its power l, and
    PROP_GENFUN its degree n (alpha and t stay on their fixed grids).
    """
    if identity not in IDENTITY_INFO:
        raise ValueError(f"unknown identity {identity!r}")
    info = IDENTITY_INFO[identity]
    first = _span(m_range or info.m_default)
    second = _span(n_range or info.n_default) if info.n_default else None

    reports: list[CheckReport] = []
    if identity in ("THM1", "PROP_EXPAN"):
        checker = check_thm1 if identity == "THM1" else check_prop_expan
        for m in first:
            for n in second:
                reports.append(_guarded(identity, {"m": m, "n": n}, lambda m=m, n=n: checker(m, n)))
    elif identity in ("THM2", "PROP_TMN", "REMARK_14", "REMARK_15"):
        checker = {
            "THM2": check_thm2,
            "PROP_TMN": check_prop_tmn,
            "REMARK_14": check_remark14,
            "REMARK_15": check_remark15,
        }[identity]
        for m in first:
            for n in second:
                reports.append(
                    _guarded(identity, {"m": m, "n": n}, lambda m=m, n=n: checker(m, n, cap))
                )
    elif identity == "LEM1":
        for N in first:
            reports.append(_guarded(identity, {"N": N}, lambda N=N: check_lemma1(N, cap)))
    elif identity == "LEM2_COMMUTANT":
        for trial in first:
            reports.append(check_commutant(trial, seed))
    elif identity == "LEM3_1":
        for l in first:
            for j in second:
                reports.append(check_lemma3_commutation(l, j))
    elif identity == "LEM3_2":
        for l in first:
            reports.append(check_lemma3_factorization(l))
    elif identity == "PROP_GENFUN":
        for n in first:
            for alpha in ALPHA_GRID:
                for t in T_GRID:
                    params = {"n": n, "alpha": str(alpha), "t": str(t)}
                    reports.append(
                        _guarded(
                            identity, params,
                            lambda n=n, alpha=alpha, t=t: check_genfun(n, alpha, t),
                        )
                    )
    return reports


def run_suite(max_total_degree: int = 6, caps: SuiteCaps | None = None) -> list[CheckReport]:
    """Every checker over its default grid bounded by the total degree.

    Grid identities run over all m + n <= max_total_degree; LEM1 over
    N <= max_total_degree; the lemma and polynomial grids are clamped to
    their standard desk-scale bounds.  Per-cell errors become error reports
    and the sweep always completes.
    """
    if max_total_degree < 0:
        raise ValueError("max_total_degree must be non-negative")
    caps = caps or SuiteCaps()
    degree = max_total_degree
    pairs = [(m, n) for m in range(degree + 1) for n in range(degree + 1 - m)]

    reports: list[CheckReport] = []
    for m, n in pairs:
        reports.append(_guarded("THM1", {"m": m, "n": n}, lambda m=m, n=n: check_thm1(m, n)))
    for m, n in pairs:
        reports.append(
            _guarded("THM2", {"m": m, "n": n}, lambda m=m, n=n: check_thm2(m, n, caps.word_cap))
        )
    for N in range(degree + 1):
        reports.append(_guarded("LEM1", {"N": N}, lambda N=N: check_lemma1(N, caps.word_cap)))
    for trial in range(caps.commutant_trials):
        reports.append(check_commutant(trial, caps.seed))
    for m, n in pairs:
        reports.append(
            _guarded("PROP_EXPAN", {"m": m, "n": n}, lambda m=m, n=n: check_prop_expan(m, n))
        )
    for l in range(min(degree, 6) + 1):
        for j in range(6):
            reports.append(check_lemma3_commutation(l, j))
    for l in range(min(degree, 8) + 1):
        reports.append(check_lemma3_factorization(l))
    for n in range(min(degree, 10) + 1):
        for alpha in ALPHA_GRID:
            for t in T_GRID:
                params = {"n": n, "alpha": str(alpha), "t": str(t)}
                reports.append(
                    _guarded(
                        "PROP_GENFUN", params,
                        lambda n=n, alpha=alpha, t=t: check_genfun(n, alpha, t),
                    )
                )
    for m, n in pairs:
        reports.append(
            _guarded(
                "PROP_TMN", {"m": m, "n": n}, lambda m=m, n=n: check_prop_tmn(m, n, caps.word_cap)
            )
        )
    for m, n in pairs:
        reports.append(
            _guarded(
                "REMARK_14", {"m": m, "n": n}, lambda m=m, n=n: check_remark14(m, n, caps.word_cap)
            )
        )
    for m, n in pairs:
        reports.append(
            _guarded(
                "REMARK_15", {"m": m, "n": n}, lambda m=m, n=n: check_remark15(m, n, caps.word_cap)
            )
        )
    return reports
