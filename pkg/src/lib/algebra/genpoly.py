from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numbers
import re

import numpy as np

from errors import DomainError, InvalidParam

DROP_TOL = 1e-14
EXPONENT_TOL = 1e-12

_NUMBER = r'(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?'
_TERM = re.compile(
  r'([+-]*)(?:(' + _NUMBER + r')(\*)?)?(u(?:\^(' + _NUMBER + r'))?)?')


def _canonicalize(terms, drop_tol):
  terms = sorted((float(p), float(c)) for c, p in terms)
  merged = []
  for p, c in terms:
    if p < 0:
      raise InvalidParam('negative exponent {} in generalized polynomial'
                         .format(p))
    if merged and abs(p - merged[-1][0]) <= EXPONENT_TOL:
      merged[-1][1] += c
    else:
      merged.append([p, c])
  return tuple((c, p) for p, c in merged if abs(c) >= drop_tol)


class GeneralizedPolynomial(object):
  """Sparse sum c_i * u^p_i with real coefficients and real exponents p_i >= 0.

  Terms are kept sorted by exponent; exponents closer than 1e-12 are merged
  and coefficients below ``drop_tol`` are discarded. Instances never change
  after construction.
  """
  __slots__ = ('_terms', '_drop_tol')

  def __init__(self, terms=(), drop_tol=DROP_TOL):
    object.__setattr__(self, '_drop_tol', float(drop_tol))
    object.__setattr__(self, '_terms', _canonicalize(terms, drop_tol))

  def __setattr__(self, name, value):
    raise AttributeError('GeneralizedPolynomial is immutable')

  @classmethod
  def constant(cls, c, drop_tol=DROP_TOL):
    return cls([(c, 0.)], drop_tol)

  @classmethod
  def monomial(cls, c, p, drop_tol=DROP_TOL):
    return cls([(c, p)], drop_tol)

  @classmethod
  def parse(cls, text, drop_tol=DROP_TOL):
    s = re.sub(r'\s+', '', text)
    if not s:
      raise InvalidParam('empty polynomial text')
    terms, pos = [], 0
    while pos < len(s):
      m = _TERM.match(s, pos)
      signs, num, star, var, exp = m.groups()
      if m.end() == pos or (num is None and var is None) \
         or (star and var is None) or (pos > 0 and not signs):
        raise InvalidParam('cannot parse polynomial near "{}"'.format(s[pos:]))
      c = float(num) if num is not None else 1.
      if signs.count('-') % 2:
        c = -c
      if var is None:
        p = 0.
      else:
        p = float(exp) if exp is not None else 1.
      terms.append((c, p))
      pos = m.end()
    return cls(terms, drop_tol)

  @property
  def terms(self):
    return self._terms

  @property
  def drop_tol(self):
    return self._drop_tol

  def exponents(self):
    return [p for _, p in self._terms]

  def coefficient(self, p):
    for c, q in self._terms:
      if abs(q - p) <= EXPONENT_TOL:
        return c
    return 0.

  def is_zero(self):
    return len(self._terms) == 0

  def degree(self):
    return self._terms[-1][1] if self._terms else 0.

  def has_fractional_exponents(self):
    return any(abs(p - round(p)) > EXPONENT_TOL for _, p in self._terms)

  def evaluate(self, u):
    x = np.asarray(u, dtype=np.float64)
    if self.has_fractional_exponents() and np.any(x < 0):
      raise DomainError('non-integer power of negative u in {}'.format(self))
    out = np.zeros_like(x)
    for c, p in self._terms:
      if p == 0:
        out = out + c
      else:
        out = out + c * np.power(x, p)
    if out.ndim == 0:
      return float(out)
    return out

  __call__ = evaluate

  def add(self, other):
    other = self._coerce(other)
    return GeneralizedPolynomial(self._terms + other._terms, self._drop_tol)

  def scale(self, c):
    return GeneralizedPolynomial(
      [(c * a, p) for a, p in self._terms], self._drop_tol)

  def multiply(self, other):
    if isinstance(other, numbers.Real):
      return self.scale(other)
    other = self._coerce(other)
    return GeneralizedPolynomial(
      [(a * b, p + q) for a, p in self._terms for b, q in other._terms],
      self._drop_tol)

  def derivative(self):
    terms = []
    for c, p in self._terms:
      if p == 0:
        continue
      if p < 1 - EXPONENT_TOL:
        raise DomainError(
          'd/du of u^{:.12g} has a negative exponent'.format(p))
      terms.append((c * p, max(p - 1, 0.)))
    return GeneralizedPolynomial(terms, self._drop_tol)

  def euler(self):
    """u * d/du, which keeps every exponent where it is."""
    return GeneralizedPolynomial(
      [(c * p, p) for c, p in self._terms if p != 0], self._drop_tol)

  def approx_equal(self, other, tol):
    """Same exponent sets and every coefficient within ``tol``."""
    other = self._coerce(other)
    if len(self._terms) != len(other._terms):
      return False
    mine = dict((p, c) for c, p in self._terms)
    for c, p in other._terms:
      q = _match_exponent(mine, p)
      if q is None or abs(mine.pop(q) - c) > tol:
        return False
    return True

  def max_difference(self, other):
    """Largest coefficient gap, a missing exponent counting as 0."""
    other = self._coerce(other)
    mine = dict((p, c) for c, p in self._terms)
    gap = 0.
    for c, p in other._terms:
      q = _match_exponent(mine, p)
      gap = max(gap, abs(c if q is None else mine.pop(q) - c))
    return max([gap] + [abs(c) for c in mine.values()])

  def _coerce(self, other):
    if isinstance(other, GeneralizedPolynomial):
      return other
    if isinstance(other, numbers.Real):
      return GeneralizedPolynomial.constant(other, self._drop_tol)
    raise TypeError('cannot combine GeneralizedPolynomial with {}'
                    .format(type(other).__name__))

  def __add__(self, other):
    return self.add(other)

  __radd__ = __add__

  def __neg__(self):
    return self.scale(-1.)

  def __sub__(self, other):
    return self.add(self._coerce(other).scale(-1.))

  def __rsub__(self, other):
    return self._coerce(other).add(self.scale(-1.))

  def __mul__(self, other):
    return self.multiply(other)

  __rmul__ = __mul__

  def __eq__(self, other):
    return isinstance(other, GeneralizedPolynomial) and \
      self._terms == other._terms

  def __ne__(self, other):
    return not self == other

  def __hash__(self):
    return hash(self._terms)

  def __str__(self):
    if not self._terms:
      return '0'
    parts = []
    for c, p in self._terms:
      if p == 0:
        parts.append('{:.17g}'.format(c))
      else:
        parts.append('{:.17g}*u^{:.12g}'.format(c, p))
    return ' + '.join(parts)

  def __repr__(self):
    return 'GeneralizedPolynomial({})'.format(self)


def _match_exponent(table, p):
  for q in table:
    if abs(q - p) <= EXPONENT_TOL:
      return q
  return None


U = GeneralizedPolynomial.monomial(1., 1.)


def evaluate(p, u):
  return p.evaluate(u)


def add(p, q):
  return p.add(q)


def multiply(p, q):
  return p.multiply(q)


def scale(p, c):
  return p.scale(c)


def derivative(p):
  return p.derivative()


def approx_equal(p, q, tol):
  return p.approx_equal(q, tol)


def parse(text):
  return GeneralizedPolynomial.parse(text)
