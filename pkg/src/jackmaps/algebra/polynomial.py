"""Sparse multivariate polynomials over named variables.

Coefficients are :class:`fractions.Fraction` in the common case, but any
ring element supporting ``+ - *`` and truth testing works; the package
uses :class:`~jackmaps.algebra.laurent.LaurentA` coefficients for
intermediate results that still depend on ``A``.

Terms print in graded lexicographic order on the declared variable order,
which is the golden text format used by the CLI and the tests, e.g.
``3*p1^2*q1*g - 1/2*p2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .laurent import LaurentA, format_rational

__all__ = ["MultiPoly", "var_sort_key", "canonical_vars", "parse_expression", "parse_poly"]

_VAR_GROUPS = {"p": 0, "q": 1, "c": 2, "l": 3, "g": 4, "d": 5}
_VAR_RE = re.compile(r"^([a-zA-Z]+)(\d*)$")


def var_sort_key(name: str):
    m = _VAR_RE.match(name)
    if not m:
        return (9, name, 0)
    head, idx = m.groups()
    return (_VAR_GROUPS.get(head, 8), head, int(idx) if idx else 0)


def canonical_vars(names) -> tuple:
    return tuple(sorted(set(names), key=var_sort_key))


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Rational, LaurentA))


def _fmt_coeff(c):
    """Return (negative, text) for a coefficient, text '' meaning unit."""
    if isinstance(c, LaurentA):
        if c.is_constant():
            c = c.constant_value()
        else:
            if len(c.terms) == 1:
                (e, v), = c.terms.items()
                if v < 0:
                    return True, str(LaurentA({e: -v}))
                return False, str(c)
            return False, f"({c})"
    c = Fraction(c)
    neg = c < 0
    a = -c if neg else c
    return neg, ("" if a == 1 else format_rational(a))


class MultiPoly:
    """Polynomial ``{exponent tuple: coefficient}`` over ``variables``."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(exps)
                if len(exps) != nv or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {self.variables}")
                if not isinstance(c, LaurentA):
                    c = Fraction(c)
                v = clean.get(exps)
                v = c if v is None else v + c
                if v:
                    clean[exps] = v
                else:
                    clean.pop(exps, None)
        self._terms = clean

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, variables=()):
        return cls._raw(tuple(variables), {})

    @classmethod
    def const(cls, c, variables=()):
        variables = tuple(variables)
        if not isinstance(c, LaurentA):
            c = Fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, name, variables=None):
        variables = tuple(variables) if variables is not None else (name,)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls._raw(variables, {exps: Fraction(1)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded lexicographic, descending) order."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, name) -> int:
        if name not in self.variables:
            return 0 if self._terms else -1
        i = self.variables.index(name)
        return max((e[i] for e in self._terms), default=-1)

    def coefficient(self, **exps):
        key = tuple(exps.get(v, 0) for v in self.variables)
        unknown = set(exps) - set(self.variables)
        if unknown and any(exps[u] for u in unknown):
            return Fraction(0)
        return self._terms.get(key, Fraction(0))

    def used_variables(self) -> tuple:
        return tuple(v for i, v in enumerate(self.variables) if any(e[i] for e in self._terms))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    # -- variable bookkeeping ----------------------------------------------

    def with_variables(self, variables) -> "MultiPoly":
        """Re-embed into a superset (or reordering) of the used variables."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        for i, v in enumerate(self.variables):
            if v not in pos and any(e[i] for e in self._terms):
                raise ValueError(f"variable {v} is used and cannot be dropped")
        idx = [(pos[v], i) for i, v in enumerate(self.variables) if v in pos]
        out = {}
        for exps, c in self._terms.items():
            new = [0] * len(variables)
            for j, i in idx:
                new[j] = exps[i]
            out[tuple(new)] = c
        return MultiPoly._raw(variables, out)

    def _align(self, other):
        if other.variables == self.variables:
            return self, other
        vs = canonical_vars(self.variables + other.variables)
        return self.with_variables(vs), other.with_variables(vs)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return self._align(other)
        if _is_scalar(other):
            return self, MultiPoly.const(other, self.variables)
        return None, None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        out = dict(a._terms)
        for e, c in b._terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not (isinstance(other, MultiPoly) or _is_scalar(other)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return MultiPoly._raw(self.variables, {})
            out = {}
            for e, c in self._terms.items():
                v = c * other
                if v:
                    out[e] = v
            return MultiPoly._raw(self.variables, out)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        out: dict = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e)
                p = c1 * c2
                out[e] = p if v is None else v + p
        return MultiPoly._raw(a.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            inv = Fraction(1) / Fraction(other)
            return self * inv
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            a, b = self._align(other)
            return a._terms == b._terms
        if _is_scalar(other):
            return self == MultiPoly.const(other, self.variables)
        return NotImplemented

    def __hash__(self):
        used = canonical_vars(self.used_variables())
        p = self.with_variables(used)
        return hash((used, frozenset(p._terms.items())))

    # -- algebra ------------------------------------------------------------

    def homogeneous_part(self, d: int, variables=None) -> "MultiPoly":
        """Terms of total degree exactly ``d`` (in ``variables``, default all)."""
        if variables is None:
            idx = range(len(self.variables))
        else:
            idx = [self.variables.index(v) for v in variables if v in self.variables]
        return MultiPoly._raw(
            self.variables,
            {e: c for e, c in self._terms.items() if sum(e[i] for i in idx) == d},
        )

    def map_coefficients(self, f) -> "MultiPoly":
        out = {}
        for e, c in self._terms.items():
            v = f(c)
            if v:
                out[e] = v
        return MultiPoly._raw(self.variables, out)

    def subs(self, values: dict):
        """Substitute values (scalars, LaurentA or MultiPoly) for variables.

        Variables not mentioned are kept. When nothing is kept and all
        values are scalars, a scalar is returned.
        """
        keep = tuple(v for v in self.variables if v not in values)
        keep_idx = [self.variables.index(v) for v in keep]
        sub_idx = [(i, values[v]) for i, v in enumerate(self.variables) if v in values]
        powers: dict = {}
        grouped: dict = {}
        poly_part = None
        for exps, c in self._terms.items():
            acc = c
            for i, val in sub_idx:
                k = exps[i]
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = val ** k
                    acc = acc * powers[key]
            mono = tuple(exps[i] for i in keep_idx)
            if isinstance(acc, MultiPoly):
                term = acc * MultiPoly._raw(keep, {mono: Fraction(1)})
                poly_part = term if poly_part is None else poly_part + term
            else:
                v = grouped.get(mono)
                grouped[mono] = acc if v is None else v + acc
        scalar_part = MultiPoly._raw(keep, {m: c for m, c in grouped.items() if c})
        if poly_part is not None:
            return poly_part + scalar_part
        if not keep:
            return scalar_part.constant_term()
        return scalar_part

    def evaluate(self, values: dict):
        """Full substitution returning a scalar."""
        missing = set(self.used_variables()) - set(values)
        if missing:
            raise ValueError(f"missing values for {sorted(missing)}")
        out = self.subs({v: values.get(v, 0) for v in self.variables})
        if isinstance(out, MultiPoly):
            return out.constant_term()
        return out

    def derivative(self, name) -> "MultiPoly":
        if name not in self.variables:
            return MultiPoly.zero(self.variables)
        i = self.variables.index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly._raw(self.variables, out)

    def is_symmetric_in(self, names) -> bool:
        """Invariant under every permutation of the given variables."""
        names = list(names)
        if len(names) < 2:
            return True
        idx = [self.variables.index(v) for v in names if v in self.variables]
        if len(idx) < len(names):
            return len(idx) == 0 or all(
                not any(e[i] for i in idx) for e in self._terms)
        # adjacent transpositions generate the symmetric group
        for a, b in zip(idx, idx[1:]):
            swapped = {}
            for e, c in self._terms.items():
                ne = list(e)
                ne[a], ne[b] = ne[b], ne[a]
                swapped[tuple(ne)] = c
            if swapped != self._terms:
                return False
        return True

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for exps, c in self.items():
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            neg, ctext = _fmt_coeff(c)
            if not factors:
                body = ctext or "1"
            elif ctext:
                body = ctext + "*" + "*".join(factors)
            else:
                body = "*".join(factors)
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {str(self)!r})"


# -- parsing --------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise ValueError(f"unexpected token {tok[1]!r} at position {self.i}")
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            f = self.factor()
            if op == "*":
                acc = acc * f
            else:
                if isinstance(f, MultiPoly):
                    if not f.is_constant():
                        raise ValueError("division by a polynomial")
                    f = f.constant_term()
                acc = acc / f
        return acc

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            k = self.take("num")[1]
            base = base ** (-k if neg else k)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return Fraction(val)
        if kind == "name":
            self.take()
            if val == "A":
                return LaurentA({1: 1})
            if self.variables is not None and val not in self.variables:
                raise ValueError(f"unknown variable {val!r}")
            vs = self.variables if self.variables is not None else (val,)
            return MultiPoly.var(val, vs)
        if (kind, val) == ("op", "("):
            self.take()
            e = self.expr()
            self.take("op", ")")
            return e
        raise ValueError(f"unexpected token {val!r}")


def parse_expression(text, variables=None):
    """Parse the canonical grammar; returns a Fraction, LaurentA or MultiPoly."""
    p = _Parser(text, tuple(variables) if variables is not None else None)
    out = p.expr()
    if p.i != len(p.tokens):
        raise ValueError(f"trailing input in {text!r}")
    return out


def parse_poly(text, variables=None) -> MultiPoly:
    """Parse text into a MultiPoly (variables default to the canonical order of those used)."""
    val = parse_expression(text, variables)
    if isinstance(val, MultiPoly):
        vs = tuple(variables) if variables is not None else canonical_vars(val.used_variables())
        return val.with_variables(vs)
    return MultiPoly.const(val, tuple(variables) if variables is not None else ())
