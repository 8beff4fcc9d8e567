"""Complex scalars with two backends: exact Gaussian rationals and tolerance-tagged floats.

Exact scalars store real and imaginary parts as `fractions.Fraction`, so field
arithmetic is bit-exact at arbitrary precision.  Float scalars store a pair of
doubles and compare under a relative tolerance.  Matrices built from these
scalars must never mix backends; every operation here raises
`BackendMismatchError` on a mixed pair.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


DEFAULT_EPS = 1e-9


class ScalarError(ValueError):
    pass


class BackendMismatchError(ScalarError):
    pass


class Tolerance:
    """Float-mode comparison tolerance.  Ignored by the exact backend."""

    __slots__ = ("eps",)

    def __init__(self, eps=DEFAULT_EPS):
        if not eps > 0:
            raise ScalarError("tolerance eps must be positive, got %r" % (eps,))
        self.eps = float(eps)

    def __repr__(self):
        return "Tolerance(%g)" % self.eps


_default_tolerance = Tolerance(DEFAULT_EPS)


def set_default_eps(eps):
    """Install a new global float tolerance (used by the CLI for TWINREP_EPS)."""
    global _default_tolerance
    _default_tolerance = Tolerance(eps)


def default_tolerance():
    return _default_tolerance


def _tol(tol):
    return _default_tolerance if tol is None else tol


class Scalar:
    """A complex number on one of the two backends.

    Immutable.  `re`/`im` are Fractions when `exact` is True, floats otherwise.
    """

    __slots__ = ("re", "im", "exact")

    def __init__(self, re, im, exact):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def from_rational(cls, re, im=0):
        return cls(Fraction(re), Fraction(im), True)

    @classmethod
    def from_float(cls, re, im=0.0):
        return cls(float(re), float(im), False)

    @classmethod
    def from_complex(cls, z):
        return cls(float(z.real), float(z.imag), False)

    @classmethod
    def zero(cls, exact=True):
        return cls.from_rational(0) if exact else cls.from_float(0.0)

    @classmethod
    def one(cls, exact=True):
        return cls.from_rational(1) if exact else cls.from_float(1.0)

    # -- backend helpers ----------------------------------------------

    @property
    def backend(self):
        return "exact" if self.exact else "float"

    def _check(self, other):
        if not isinstance(other, Scalar):
            raise TypeError("expected Scalar, got %r" % (other,))
        if self.exact != other.exact:
            raise BackendMismatchError(
                "cannot combine %s and %s scalars" % (self.backend, other.backend))

    def to_float(self):
        if not self.exact:
            return self
        return Scalar(float(self.re), float(self.im), False)

    def to_complex(self):
        return complex(self.re, self.im)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return Scalar(self.re + other.re, self.im + other.im, self.exact)

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.re - other.re, self.im - other.im, self.exact)

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.exact)

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re,
                      self.exact)

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by %s zero scalar" % other.backend)
        n = other.re * other.re + other.im * other.im
        return Scalar((self.re * other.re + self.im * other.im) / n,
                      (self.im * other.re - self.re * other.im) / n,
                      self.exact)

    def inv(self):
        return (Scalar.one(self.exact) if self.exact else
                Scalar.from_float(1.0)) / self

    def conj(self):
        return Scalar(self.re, -self.im, self.exact)

    def pow(self, k):
        """Integer power; negative exponents invert (nonzero base required)."""
        if k < 0:
            return self.inv().pow(-k)
        out = Scalar.one(self.exact) if self.exact else Scalar.from_float(1.0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    __pow__ = pow

    # -- predicates ---------------------------------------------------

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def magnitude(self):
        return math.hypot(float(self.re), float(self.im))

    def is_zero(self, tol=None):
        if self.exact:
            return self.re == 0 and self.im == 0
        return self.magnitude() <= _tol(tol).eps

    def eq(self, other, tol=None):
        self._check(other)
        if self.exact:
            return self.re == other.re and self.im == other.im
        d = math.hypot(self.re - other.re, self.im - other.im)
        return d <= _tol(tol).eps * max(1.0, self.magnitude(), other.magnitude())

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.eq(other)

    def __hash__(self):
        if not self.exact:
            raise TypeError("float-backend scalars are not hashable")
        return hash((self.re, self.im))

    # -- text and JSON ------------------------------------------------

    def __repr__(self):
        return "Scalar(%s)" % scalar_format(self)

    def to_json(self):
        if self.exact:
            return {"re": [str(self.re.numerator), str(self.re.denominator)],
                    "im": [str(self.im.numerator), str(self.im.denominator)]}
        return {"re": self.re, "im": self.im}

    @classmethod
    def from_json(cls, obj):
        re_, im_ = obj["re"], obj["im"]
        if isinstance(re_, list):
            return cls.from_rational(Fraction(int(re_[0]), int(re_[1])),
                                     Fraction(int(im_[0]), int(im_[1])))
        return cls.from_float(re_, im_)


_EXACT_RE = re.compile(
    r"^\s*([+-]?\d+)/(\d+)\s*([+-])\s*(\d+)/(\d+)\*i\s*$")
_DEC = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_FLOAT_RE = re.compile(r"^\s*([+-]?%s)\s*([+-]%s)i\s*$" % (_DEC, _DEC))


def scalar_parse(text):
    """Parse "p/q+r/s*i" (exact) or "x+yi" (float).

    Exact inputs stay exact; round-trips through scalar_format.
    """
    m = _EXACT_RE.match(text)
    if m:
        p, q, sign, r, s = m.groups()
        if int(q) == 0 or int(s) == 0:
            raise ScalarError("zero denominator in %r" % text)
        im = Fraction(int(r), int(s))
        if sign == "-":
            im = -im
        return Scalar.from_rational(Fraction(int(p), int(q)), im)
    m = _FLOAT_RE.match(text)
    if m:
        return Scalar.from_float(float(m.group(1)), float(m.group(2)))
    raise ScalarError("malformed scalar text %r" % text)


def scalar_format(x):
    if x.exact:
        sign = "-" if x.im < 0 else "+"
        im = -x.im if x.im < 0 else x.im
        return "%d/%d%s%d/%d*i" % (x.re.numerator, x.re.denominator,
                                   sign, im.numerator, im.denominator)
    sign = "-" if math.copysign(1.0, x.im) < 0 else "+"
    return "%r%s%ri" % (x.re, sign, abs(x.im))


def scalar_is_zero(x, tol=None):
    return x.is_zero(tol)


# Convenience constructors used throughout the package and tests.

def ex(re, im=0):
    """Exact scalar from ints/Fractions."""
    return Scalar.from_rational(re, im)


def fl(re, im=0.0):
    """Float scalar."""
    return Scalar.from_float(re, im)
