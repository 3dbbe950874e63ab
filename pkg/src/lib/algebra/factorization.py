from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import namedtuple

from errors import InvalidParam
from .genpoly import GeneralizedPolynomial, U


class FactorPair(namedtuple('FactorPair', ['phi1', 'phi2'])):
  """Ordered pair of the operator [D - phi2(u)][D - phi1(u)]u.

  phi1 is the inner factor: it alone fixes the compatible first order
  equation du/dtau = phi1(u) u.
  """
  __slots__ = ()

  def __new__(cls, phi1, phi2):
    for name, phi in (('phi1', phi1), ('phi2', phi2)):
      if not isinstance(phi, GeneralizedPolynomial):
        raise TypeError('{} must be a GeneralizedPolynomial'.format(name))
      if phi.is_zero():
        raise InvalidParam('{} of a factor pair must be nonzero'.format(name))
    return super(FactorPair, cls).__new__(cls, phi1, phi2)

  def __str__(self):
    return '[D - ({})][D - ({})]u'.format(self.phi2, self.phi1)


class LienardForm(namedtuple('LienardForm', ['g', 'F'])):
  """u'' + g(u) u' + F(u) = 0."""
  __slots__ = ()

  def __new__(cls, g, F):
    if abs(F.coefficient(0.)) > 0:
      raise InvalidParam('F must vanish at u = 0, got constant term {}'
                         .format(F.coefficient(0.)))
    return super(LienardForm, cls).__new__(cls, g, F)

  def perturbed(self, dg=0.):
    return LienardForm(self.g + dg, self.F)

  def residual(self, u, udot, uddot):
    return uddot + self.g(u) * udot + self.F(u)

  def __str__(self):
    return "u'' + ({})u' + {} = 0".format(self.g, self.F)


def compose(pair):
  phi1, phi2 = pair
  g = -(phi1 + phi2 + phi1.euler())
  F = phi1 * phi2 * U
  return LienardForm(g, F)


def verify_factorization(target, pair, tol):
  composed = compose(pair)
  return composed.g.approx_equal(target.g, tol) and \
    composed.F.approx_equal(target.F, tol)


def first_order_rhs(pair):
  return pair.phi1 * U


def swap(pair):
  return FactorPair(pair.phi2, pair.phi1)


def composition_gap(target, pair):
  """Largest coefficient mismatch between compose(pair) and target."""
  composed = compose(pair)
  return max(composed.g.max_difference(target.g),
             composed.F.max_difference(target.F))
