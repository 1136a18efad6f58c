"""Exact scalar tower: rationals, Laurent polynomials, rational functions, truncated series.

Every polynomial lives over one global, ordered variable universe so that objects
built in different modules compose without renaming.  Monomials are packed into a
single Python integer (fixed-width biased exponent fields), which keeps monomial
multiplication a single integer addition.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Rational = Fraction

VARIABLES: Tuple[str, ...] = ("z1", "z2", "z3", "z", "t", "u1", "u2", "u3", "s", "eps")
_INDEX = {name: k for k, name in enumerate(VARIABLES)}

_WIDTH = 24
_BIAS = 1 << (_WIDTH - 1)
_MASK = (1 << _WIDTH) - 1
_ZERO_KEY = sum(_BIAS << (_WIDTH * k) for k in range(len(VARIABLES)))

Coeff = Union[int, Fraction]


class StructuralError(ValueError):
    """Raised when operands are structurally incompatible."""


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for k, e in enumerate(exps):
        if not -_BIAS < e < _BIAS:
            raise OverflowError("exponent out of range")
        key |= (e + _BIAS) << (_WIDTH * k)
    return key


def _unpack(key: int) -> Tuple[int, ...]:
    return tuple(((key >> (_WIDTH * k)) & _MASK) - _BIAS for k in range(len(VARIABLES)))


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_rational(x) -> Fraction:
    """Parse ints, Fractions and 'p/q' strings into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


class MultiPoly:
    """Sparse Laurent polynomial with exact coefficients over VARIABLES.

    Negative exponents are allowed (spectral parameters and q-powers appear
    inverted); ``is_polynomial`` tells the two apart.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[key] = _norm_coeff(c)
        self._terms: Dict[int, Coeff] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, Coeff]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # construction
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = as_rational(c) if not isinstance(c, int) else c
        return cls._raw({_ZERO_KEY: _norm_coeff(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        return cls.monomial({name: power})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Coeff = 1) -> "MultiPoly":
        vec = [0] * len(VARIABLES)
        for name, e in exps.items():
            if name not in _INDEX:
                raise StructuralError(f"unknown variable {name!r}")
            vec[_INDEX[name]] += e
        return cls._raw({_pack(vec): _norm_coeff(coeff)} if coeff else {})

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[Mapping[str, int], Coeff]]) -> "MultiPoly":
        out = MultiPoly()
        for exps, c in items:
            out = out + cls.monomial(exps, c)
        return out

    # inspection
    @property
    def variables(self) -> Tuple[str, ...]:
        return VARIABLES

    def terms(self) -> Iterator[Tuple[Tuple[int, ...], Coeff]]:
        for key, c in self._terms.items():
            yield _unpack(key), c

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_KEY in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise StructuralError("not a constant")
        return Fraction(self._terms.get(_ZERO_KEY, 0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        return all(min(e) >= 0 for e, _ in self.terms())

    def used_variables(self) -> Tuple[str, ...]:
        used = set()
        for e, _ in self.terms():
            used.update(VARIABLES[k] for k, x in enumerate(e) if x)
        return tuple(v for v in VARIABLES if v in used)

    def degree(self, name: str) -> int:
        k = _INDEX[name]
        return max((e[k] for e, _ in self.terms()), default=0)

    def min_degree(self, name: str) -> int:
        k = _INDEX[name]
        return min((e[k] for e, _ in self.terms()), default=0)

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o._terms) > len(self._terms):
            big, small = o._terms, self._terms
        else:
            big, small = self._terms, o._terms
        out = dict(big)
        for key, c in small.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly()
            return MultiPoly._raw({k: _norm_coeff(c * other) for k, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[int, Coeff] = {}
        get = out.get
        zk = _ZERO_KEY
        for kb, cb in b.items():
            shift = kb - zk
            for ka, ca in a.items():
                key = ka + shift
                out[key] = get(key, 0) + ca * cb
        return MultiPoly._raw({k: _norm_coeff(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise StructuralError("negative power of a non-monomial")
            ((key, c),) = self._terms.items()
            inv = _pack([-x for x in _unpack(key)])
            return MultiPoly._raw({inv: _norm_coeff(Fraction(1) / c)}) ** (-n)
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, MultiPoly):
            if other.is_monomial():
                return self * other ** -1
            return RatFun(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # structure maps
    def leading(self) -> Tuple[Tuple[int, ...], Coeff]:
        """Lex-leading term with respect to the VARIABLES order."""
        if not self._terms:
            raise StructuralError("zero polynomial has no leading term")
        return max(self.terms(), key=lambda ec: ec[0])

    def divmod(self, divisor: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by a single divisor (lex order), polynomial inputs."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if not (self.is_polynomial() and divisor.is_polynomial()):
            raise StructuralError("divmod needs genuine polynomials; use exact_div")
        lead_e, lead_c = divisor.leading()
        lead_c = Fraction(lead_c)
        quot = MultiPoly()
        rem = MultiPoly()
        work = self
        while not work.is_zero():
            e, c = work.leading()
            diff = tuple(x - y for x, y in zip(e, lead_e))
            if min(diff) >= 0:
                factor = MultiPoly._raw({_pack(diff): _norm_coeff(c / lead_c)})
                quot = quot + factor
                work = work - factor * divisor
            else:
                lead_only = MultiPoly._raw({_pack(e): c})
                rem = rem + lead_only
                work = work - lead_only
        return quot, rem

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact quotient; Laurent inputs are shifted to polynomials first."""
        shift_a = self.monomial_content() ** -1
        shift_b = divisor.monomial_content() ** -1
        quot, rem = (self * shift_a).divmod(divisor * shift_b)
        if not rem.is_zero():
            raise StructuralError("division is not exact")
        return quot * shift_b * shift_a ** -1

    def subs(self, mapping: Mapping[str, Union["MultiPoly", int, Fraction]]) -> "MultiPoly":
        """Substitute variables by polynomials (negative powers need monomial images)."""
        images = {}
        for name, val in mapping.items():
            images[_INDEX[name]] = val if isinstance(val, MultiPoly) else MultiPoly.const(val)
        out = MultiPoly()
        cache: Dict[Tuple[int, int], MultiPoly] = {}
        for e, c in self.terms():
            keep = [0] * len(VARIABLES)
            term = MultiPoly.const(c)
            for k, x in enumerate(e):
                if x == 0:
                    continue
                if k in images:
                    if (k, x) not in cache:
                        cache[(k, x)] = images[k] ** x
                    term = term * cache[(k, x)]
                else:
                    keep[k] = x
            out = out + term * MultiPoly._raw({_pack(keep): 1})
        return out

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return self.subs({a: MultiPoly.var(b) for a, b in mapping.items()})

    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms():
            term = Fraction(c)
            for k, x in enumerate(e):
                if x:
                    name = VARIABLES[k]
                    if name not in point:
                        raise StructuralError(f"no value for {name}")
                    term *= Fraction(point[name]) ** x
            total += term
        return total

    def collect(self, name: str) -> Dict[int, "MultiPoly"]:
        """Split into {power of name: coefficient polynomial}."""
        k = _INDEX[name]
        shift_unit = 1 << (_WIDTH * k)
        out: Dict[int, Dict[int, Coeff]] = {}
        for key, c in self._terms.items():
            p = ((key >> (_WIDTH * k)) & _MASK) - _BIAS
            out.setdefault(p, {})[key - p * shift_unit] = c
        return {p: MultiPoly._raw(d) for p, d in out.items()}

    def monomial_content(self) -> "MultiPoly":
        """Largest monomial dividing every term (componentwise minimum exponent)."""
        if self.is_zero():
            return MultiPoly.const(1)
        mins = None
        for e, _ in self.terms():
            mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
        return MultiPoly._raw({_pack(mins): 1})

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms(), reverse=True):
            mon = "*".join(
                VARIABLES[k] if x == 1 else f"{VARIABLES[k]}^{x}" for k, x in enumerate(e) if x
            )
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if not isinstance(a, MultiPoly) or not isinstance(b, MultiPoly):
        raise StructuralError("poly_arith expects MultiPoly operands")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise StructuralError(f"unknown op {op!r}")


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def const(c) -> MultiPoly:
    return MultiPoly.const(c)


class RatFun:
    """Quotient of two MultiPolys.

    Equality is decided by cross-multiplication; no gcd is taken unless
    ``reduced()`` is called explicitly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = MultiPoly._coerce(num) if not isinstance(num, MultiPoly) else num
        if den is None:
            den = MultiPoly.const(1)
        elif not isinstance(den, MultiPoly):
            den = MultiPoly._coerce(den)
        if num is None or den is None:
            raise StructuralError("RatFun parts must be exact")
        if den.is_zero():
            raise StructuralError("zero denominator")
        if den.is_monomial():
            num = num * den ** -1
            den = MultiPoly.const(1)
        self.num: MultiPoly = num
        self.den: MultiPoly = den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (MultiPoly, int, Fraction)):
            return RatFun(other)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == 1

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFun(self.den ** (-n), self.num ** (-n))
        return RatFun(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def subs(self, mapping) -> "RatFun":
        return RatFun(self.num.subs(mapping), self.den.subs(mapping))

    def evaluate(self, point) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the sample point")
        return self.num.evaluate(point) / d

    def reduced(self) -> "RatFun":
        """Cancel the polynomial gcd of numerator and denominator."""
        from .linalg import poly_gcd

        g = poly_gcd(self.num, self.den)
        return RatFun(self.num.exact_div(g), self.den.exact_div(g))

    def __repr__(self):
        if self.den == 1:
            return f"RatFun({self.num})"
        return f"RatFun(({self.num})/({self.den}))"


def ratfun_eq(a: RatFun, b: RatFun) -> bool:
    return RatFun(a.num, a.den) == RatFun(b.num, b.den)


class TruncSeries:
    """Power series in a formal deformation variable, truncated modulo eps^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 1:
            raise StructuralError("truncation order must be positive")
        cs = list(coeffs)[:order]
        cs += [0] * (order - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls([c], order)

    @classmethod
    def epsilon(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    @classmethod
    def binomial(cls, power: int, order: int) -> "TruncSeries":
        """(1 + eps)**power for any integer power."""
        cs = []
        for k in range(order):
            num = 1
            for m in range(k):
                num *= power - m
            cs.append(Fraction(num, _factorial(k)))
        return cls(cs, order)

    def _check(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise StructuralError("expected TruncSeries")
        if other.order != self.order:
            raise StructuralError("truncation order mismatch")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([self.coeffs[0] + other] + list(self.coeffs[1:]), self.order)
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        out = [0] * self.order
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(out, self.order)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        a0 = self.coeffs[0]
        if isinstance(a0, (int, Fraction)):
            if a0 == 0:
                raise ZeroDivisionError("series with zero constant term")
            inv0 = Fraction(1) / Fraction(a0)
        else:
            raise StructuralError("inverse needs a rational constant term")
        out = [inv0]
        for k in range(1, self.order):
            acc = 0
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out.append(-acc * inv0)
        return TruncSeries(out, self.order)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)}, order={self.order})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    a._check(b)
    return a * b


def _factorial(k: int) -> int:
    out = 1
    for m in range(2, k + 1):
        out *= m
    return out


def expand_at_one(poly: MultiPoly, name: str, order: int) -> TruncSeries:
    """Substitute name -> 1 + eps and expand modulo eps^order.

    Coefficients of the result are MultiPolys in the remaining variables.
    """
    pieces = poly.collect(name)
    out = [MultiPoly() for _ in range(order)]
    for power, coeff in pieces.items():
        ser = TruncSeries.binomial(power, order)
        for k, b in enumerate(ser.coeffs):
            if b:
                out[k] = out[k] + coeff * b
    return TruncSeries(out, order)


def binomial(n: int, k: int) -> int:
    return comb(n, k)
