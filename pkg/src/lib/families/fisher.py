from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np

from algebra.genpoly import GeneralizedPolynomial as Poly
from algebra.factorization import FactorPair, LienardForm, swap
from errors import InvalidParam
from .base_family import BaseFamily, BRANCH_LABELS
from .solution import ClosedFormSolution, INF, WHOLE_LINE

SQRT2 = math.sqrt(2.)


def _check_mu(mu):
  if not mu > 0:
    raise InvalidParam('fisher: mu = {} must be positive'.format(mu))


def fisher_form(mu, nu):
  """Traveling-wave form u'' + 2(nu - mu u) u' + 2u(1 - u) = 0."""
  return LienardForm(Poly([(2. * nu, 0.), (-2. * mu, 1.)]),
                     Poly([(2., 1.), (-2., 2.)]))


def fisher_pair_case1(a1):
  return FactorPair(Poly([(SQRT2 * a1, 0.), (-SQRT2 * a1, 1.)]),
                    Poly.constant(SQRT2 / a1))


def fisher_pair_case2(a1):
  return swap(fisher_pair_case1(a1))


def fisher_fit_case1(mu):
  _check_mu(mu)
  return -mu / SQRT2, 0.5 * mu + 1. / mu


def fisher_fit_case2(mu):
  """a1 = -sqrt(2) mu; nu follows from composing the swapped pair."""
  _check_mu(mu)
  a1 = -SQRT2 * mu
  # constant term of g is -(sqrt2/a1 + sqrt2 a1) = 2 nu
  nu = -0.5 * (SQRT2 / a1 + SQRT2 * a1)
  return a1, nu


def fisher_solution_case1(mu, branch=1, tau0=0.):
  """u = 1/(1 +- exp(mu (tau - tau0))): a kink for plus, a pole for minus."""
  a1, nu = fisher_fit_case1(mu)

  def profile(s):
    return 1. / (1. + branch * np.exp(mu * s))

  if branch > 0:
    domain, singularities = WHOLE_LINE, ()
  else:
    domain, singularities = ((-INF, 0.), (0., INF)), (0.,)
  return ClosedFormSolution(
    'fisher', 1, fisher_pair_case1(a1), fisher_form(mu, nu), profile,
    tau0=tau0, domain=domain, singularities=singularities,
    sign=BRANCH_LABELS[branch], fitted={'a1': a1, 'nu': nu})


def fisher_solution_case2(mu, branch=1, tau0=0.):
  a1, nu = fisher_fit_case2(mu)

  def profile(s):
    return branch * np.exp(-s / mu)

  return ClosedFormSolution(
    'fisher', 2, fisher_pair_case2(a1), fisher_form(mu, nu), profile,
    tau0=tau0, sign=BRANCH_LABELS[branch], fitted={'a1': a1, 'nu': nu},
    notes=('nu = {:.17g} derived by composition, not printed'.format(nu),))


class FisherFamily(BaseFamily):
  name = 'fisher'
  title = 'convective Fisher equation, traveling-wave form'
  equation = "u'' + 2(nu - mu u) u' + 2u(1 - u) = 0"
  params = ('mu',)
  constraints = ('mu > 0', 'nu = mu/2 + 1/mu (case 1)',
                 'nu = mu + 1/(2 mu) (case 2)')
  branches = {1: 'sign plus|minus', 2: 'sign plus|minus'}

  def validate(self):
    _check_mu(self.mu)

  def target(self, case, branch=1):
    fit = fisher_fit_case1 if case == 1 else fisher_fit_case2
    return fisher_form(self.mu, fit(self.mu)[1])

  def fit(self):
    a1, nu = fisher_fit_case1(self.mu)
    b1, nu2 = fisher_fit_case2(self.mu)
    return [{'case': 1, 'root': None, 'a1': a1, 'nu': nu, 'derived': False},
            {'case': 2, 'root': None, 'a1': b1, 'nu': nu2, 'derived': True}]

  def instances(self, tau0):
    for case, build in ((1, fisher_solution_case1), (2, fisher_solution_case2)):
      for sign in (1, -1):
        yield (case, None, BRANCH_LABELS[sign],
               lambda b=build, s=sign: b(self.mu, s, tau0))

  def roundtrip_errors(self, sol):
    a1, nu = sol.fitted['a1'], sol.fitted['nu']
    if sol.case == 1:
      return {'a1': abs(-SQRT2 * a1 - self.mu),
              'nu': abs(-(a1 + 1. / a1) / SQRT2 - nu)}
    return {'a1': abs(-a1 / SQRT2 - self.mu),
            'nu': abs(self.mu + 0.5 / self.mu - nu)}
