"""
Exact polynomials in b, q, t with integer coefficients, and the generating
functions built from path and rank-word statistics.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from types import MappingProxyType
from typing import Iterable, Mapping

from .lattice import CoprimePair, enumerate_paths
from .rankword import enumerate_rank_words, word_stats
from .statistics import stat_triple

VARIABLES = ("b", "q", "t")
COEFF_LIMIT = 2**63 - 1


class WorkBoundExceeded(RuntimeError):
    """An enumeration would visit more paths than the configured bound."""


class BqtPolynomial:
    """Sparse map ``(e_b, e_q, e_t) -> coefficient``; zero terms are never stored.

    Coefficients are checked against the signed 64-bit range so that
    results stay exchangeable with fixed-width consumers.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0:
                raise ValueError(f"bad exponent triple {exps}")
            acc[exps] += int(coeff)
        clean = {}
        for exps, coeff in acc.items():
            if coeff == 0:
                continue
            if abs(coeff) > COEFF_LIMIT:
                raise OverflowError(f"coefficient {coeff} exceeds 64-bit range")
            clean[exps] = coeff
        self._terms = MappingProxyType(clean)

    @classmethod
    def monomial(cls, b=0, q=0, t=0, coeff=1) -> "BqtPolynomial":
        return cls({(b, q, t): coeff})

    @classmethod
    def one(cls) -> "BqtPolynomial":
        return cls.monomial()

    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self) -> list:
        """Terms in canonical order: exponent triples descending."""
        return sorted(self._terms.items(), reverse=True)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BqtPolynomial.monomial(coeff=other)
        if not isinstance(other, BqtPolynomial):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = BqtPolynomial.monomial(coeff=other)
        if not isinstance(other, BqtPolynomial):
            return NotImplemented
        return BqtPolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return BqtPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = BqtPolynomial.monomial(coeff=other)
        if not isinstance(other, BqtPolynomial):
            return NotImplemented
        out = []
        for (b1, q1, t1), c1 in self._terms.items():
            for (b2, q2, t2), c2 in other._terms.items():
                out.append(((b1 + b2, q1 + q2, t1 + t2), c1 * c2))
        return BqtPolynomial(out)

    __rmul__ = __mul__

    def substitute(self, variable: str, value: int = 1) -> "BqtPolynomial":
        """Set one variable to 1, collapsing its grading."""
        if value != 1:
            raise ValueError("only substitution by 1 is supported")
        i = VARIABLES.index(variable)
        out = []
        for exps, coeff in self._terms.items():
            exps = list(exps)
            exps[i] = 0
            out.append((exps, coeff))
        return BqtPolynomial(out)

    def swap_qt(self) -> "BqtPolynomial":
        return BqtPolynomial({(b, t, q): c for (b, q, t), c in self._terms.items()})

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def degrees(self) -> set:
        """Set of total degrees appearing."""
        return {sum(e) for e in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for exps, coeff in self.items():
            factors = [
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARIABLES, exps) if e
            ]
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            if not out:
                out = term if coeff > 0 else "-" + term
            else:
                out += (" + " if coeff > 0 else " - ") + term
        return out

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for exps, coeff in self.items():
            body = "".join(
                v if e == 1 else f"{v}^{{{e}}}" for v, e in zip(VARIABLES, exps) if e
            )
            mag = abs(coeff)
            if mag != 1 or not body:
                body = f"{mag}{body}"
            if not out:
                out = body if coeff > 0 else "-" + body
            else:
                out += (" + " if coeff > 0 else " - ") + body
        return out

    def to_json_obj(self) -> list:
        return [{"b": b, "q": q, "t": t, "coeff": c} for (b, q, t), c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list) -> "BqtPolynomial":
        return cls([((d["b"], d["q"], d["t"]), d["coeff"]) for d in obj])

    @classmethod
    def from_json(cls, text: str) -> "BqtPolynomial":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def from_text(cls, text: str) -> "BqtPolynomial":
        text = text.strip()
        if text == "0":
            return cls()
        out = []
        for sign, term in re.findall(r"(^-?|[+-] )\s*([^ ]+)", text):
            coeff = -1 if sign.strip() == "-" else 1
            exps = [0, 0, 0]
            for factor in term.split("*"):
                name, _, power = factor.partition("^")
                if name in VARIABLES:
                    exps[VARIABLES.index(name)] += int(power or 1)
                else:
                    coeff *= int(factor)
            out.append((exps, coeff))
        poly = cls(out)
        if poly.to_text() != text:
            raise ValueError(f"not a canonical polynomial rendering: {text!r}")
        return poly

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BqtPolynomial({self.to_text()!r})"


def _check_bound(pair: CoprimePair, work_bound: int | None):
    if work_bound is not None and pair.catalan_number > work_bound:
        raise WorkBoundExceeded(
            f"({pair}) has {pair.catalan_number} paths, above the bound {work_bound}"
        )


def genfun_W(pair: CoprimePair, work_bound: int | None = None) -> BqtPolynomial:
    """Sum of b^skips q^dinv t^area over all rank words, using word statistics."""
    _check_bound(pair, work_bound)
    acc = defaultdict(int)
    for word in enumerate_rank_words(pair):
        area, dinv, skips = word_stats(word)
        acc[skips, dinv, area] += 1
    return BqtPolynomial(acc)


def catalan_C(pair: CoprimePair, work_bound: int | None = None) -> BqtPolynomial:
    """Sum of q^dinv t^area over all Dyck paths, using path statistics."""
    _check_bound(pair, work_bound)
    acc = defaultdict(int)
    for path in enumerate_paths(pair):
        area, dinv, _ = stat_triple(path)
        acc[0, dinv, area] += 1
    return BqtPolynomial(acc)


def schur_two_var(lambda1: int, lambda2: int) -> BqtPolynomial:
    """Schur polynomial s_(lambda1, lambda2) in the two variables q, t."""
    if lambda2 < 0 or lambda1 < lambda2:
        raise ValueError(f"need lambda1 >= lambda2 >= 0, got ({lambda1},{lambda2})")
    return BqtPolynomial(
        {(0, lambda2 + j, lambda1 - j): 1 for j in range(lambda1 - lambda2 + 1)}
    )
