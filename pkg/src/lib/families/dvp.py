from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np

from algebra.genpoly import GeneralizedPolynomial as Poly
from algebra.factorization import FactorPair, LienardForm
from errors import InvalidParam
from .base_family import BaseFamily, BRANCH_LABELS
from .emden import emden_solution_case2
from .solution import ClosedFormSolution, side

CHANDRASEKAR_TOL = 1e-9


def dvp_form(G, E, A):
  return LienardForm(Poly([(G, 0.), (E, 2.)]), Poly([(A, 1.), (1., 3.)]))


def dvp_pair(A, a1):
  return FactorPair(Poly([(a1 * A, 0.), (a1, 2.)]), Poly.constant(1. / a1))


def dvp_fit(E, A):
  """a1 = -E/3 and G = (A E^2 + 9)/(3E)."""
  if E == 0:
    raise InvalidParam('dvp: E must be nonzero')
  a1 = -E / 3.
  G = (A * E * E + 9.) / (3. * E)
  return a1, G


def chandrasekar_case(E, A):
  """E = beta and A = 3/beta^2 for some beta."""
  return E != 0 and abs(A - 3. / (E * E)) <= CHANDRASEKAR_TOL


def dvp_solution(E, A, branch=1, tau0=0.):
  """u = +-(A e / (1 - e))^(1/2), e = exp(-(2/3) A E (tau - tau0))."""
  if A == 0:
    raise InvalidParam('dvp: A = 0 degenerates, use the emden case 2 '
                       'solution with beta = 1, a1 = -E/3')
  a1, G = dvp_fit(E, A)
  lam = 2. * a1 * A

  def profile(s):
    return branch * np.sqrt(A / np.expm1(-lam * s))

  # the radicand A / expm1(-lam s) is positive on one side of tau0 only
  sgn = -np.sign(lam) if A > 0 else np.sign(lam)
  notes = ()
  if chandrasekar_case(E, A):
    notes = ('Chandrasekar case E = beta = {:.12g}, A = 3/beta^2'.format(E),)
  return ClosedFormSolution(
    'dvp', 1, dvp_pair(A, a1), dvp_form(G, E, A), profile, tau0=tau0,
    domain=side(sgn), singularities=(0.,), sign=BRANCH_LABELS[branch],
    fitted={'a1': a1, 'G': G}, notes=notes)


class DVPFamily(BaseFamily):
  name = 'dvp'
  title = 'autonomous Duffing-van der Pol oscillator'
  equation = "u'' + (G + E u^2) u' + A u + u^3 = 0"
  params = ('E', 'A')
  constraints = ('E != 0', 'G = (A E^2 + 9)/(3E)')
  cases = (1,)
  branches = {1: 'sign plus|minus, A = 0 gives emden case 2'}

  def __init__(self, G=None, **kwargs):
    super(DVPFamily, self).__init__(**kwargs)
    self.G_given = None if G is None else float(G)

  @classmethod
  def optional_params(cls):
    return ('G',)

  def validate(self):
    if self.E == 0:
      raise InvalidParam('dvp: E must be nonzero')

  def target(self, case=1, branch=1):
    a1, G = dvp_fit(self.E, self.A)
    return dvp_form(G, self.E, self.A)

  def fit(self):
    a1, G = dvp_fit(self.E, self.A)
    record = {'case': 1, 'root': None, 'a1': a1, 'G': G, 'derived': False,
              'chandrasekar': chandrasekar_case(self.E, self.A)}
    if self.G_given is not None:
      record['G_given'] = self.G_given
      record['G_matches'] = abs(self.G_given - G) <= 1e-12 * max(1., abs(G))
    return [record]

  def instances(self, tau0):
    for sign in (1, -1):
      if self.A == 0:
        build = lambda s=sign: emden_solution_case2(
          1., -self.E / 3., tau0, s)
      else:
        build = lambda s=sign: dvp_solution(self.E, self.A, s, tau0)
      yield 1, None, BRANCH_LABELS[sign], build

  def roundtrip_errors(self, sol):
    a1, G = dvp_fit(self.E, self.A)
    return {'a1': abs(-3. * a1 - self.E),
            'G': abs(-(self.A * a1 + 1. / a1) - G)}
