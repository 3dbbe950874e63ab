from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import functools
import math

import numpy as np

from algebra.genpoly import GeneralizedPolynomial as Poly
from algebra.factorization import FactorPair, LienardForm
from errors import InvalidParam
from numerics.roots import solve_quadratic
from .base_family import BaseFamily, BRANCH_LABELS
from .solution import (ClosedFormSolution, INF, WHOLE_LINE, is_odd_integer,
                       real_power, side)


def _check(beta, delta):
  if not beta > 0:
    raise InvalidParam('burgers-huxley: beta = {} must be positive'.format(beta))
  if not delta > 0:
    raise InvalidParam(
      'burgers-huxley: delta = {} must be positive'.format(delta))


def bh_form(alpha, beta, gamma, delta, nu):
  """u'' + (nu - alpha u^delta) u' + beta u (1 - u^delta)(u^delta - gamma) = 0."""
  g = Poly([(nu, 0.), (-alpha, delta)])
  F = Poly([(-beta * gamma, 1.), (beta * (1. + gamma), 1. + delta),
            (-beta, 1. + 2. * delta)])
  return LienardForm(g, F)


def bh_alpha_case1(beta, delta, a1):
  return -math.sqrt(beta) * (a1 * (1. + delta) - 1. / a1)


def bh_nu_case1(beta, a1, gamma):
  return -math.sqrt(beta) * (a1 - gamma / a1)


def bh_alpha_case2(beta, delta, e1):
  return math.sqrt(beta) * (e1 * (1. + delta) - 1. / e1)


def bh_nu_case2(beta, e1, gamma):
  return math.sqrt(beta) * (e1 * gamma - 1. / e1)


def bh_pair_case1(beta, gamma, delta, a1):
  sb = math.sqrt(beta)
  return FactorPair(Poly([(sb * a1, 0.), (-sb * a1, delta)]),
                    Poly([(-sb * gamma / a1, 0.), (sb / a1, delta)]))


def bh_pair_case2(beta, gamma, delta, e1):
  sb = math.sqrt(beta)
  return FactorPair(Poly([(-sb * gamma * e1, 0.), (sb * e1, delta)]),
                    Poly([(sb / e1, 0.), (-sb / e1, delta)]))


def bh_fit_case1(alpha, beta, delta):
  """a1 roots of sqrt(beta)(1 + delta) a1^2 + alpha a1 - sqrt(beta) = 0.

  Returns (a1_plus, a1_minus, nu) where nu(a1, gamma) is the wave speed.
  The discriminant alpha^2 + 4 beta (1 + delta) is always positive.
  """
  _check(beta, delta)
  sb = math.sqrt(beta)
  a_plus, a_minus = solve_quadratic(sb * (1. + delta), alpha, -sb)
  return a_plus, a_minus, functools.partial(bh_nu_case1, beta)


def bh_fit_case2(alpha, beta, gamma, delta):
  """e1 roots of sqrt(beta)(1 + delta) e1^2 - alpha e1 - sqrt(beta) = 0.

  Returns ((e1_plus, e1_minus), {e1: nu}).
  """
  _check(beta, delta)
  sb = math.sqrt(beta)
  roots = solve_quadratic(sb * (1. + delta), -alpha, -sb)
  return roots, dict((e1, bh_nu_case2(beta, e1, gamma)) for e1 in roots)


def bh_e1_delta1(alpha, beta):
  """Printed case-2 roots at delta = 1, plus root first."""
  r = math.sqrt(alpha * alpha + 8. * beta)
  sb4 = 4. * math.sqrt(beta)
  return (alpha + r) / sb4, (alpha - r) / sb4


def _minus_domain(primary_sign, odd):
  # pole at sigma = 0; the far side only exists through a real odd root
  if odd:
    return ((-INF, 0.), (0., INF))
  return side(primary_sign)


def bh_solution_case1(alpha, beta, gamma, delta, root_branch=1, sign_branch=1,
                      tau0=0.):
  """u = (1 +- exp(-a1 sqrt(beta) delta (tau - tau0)))^(-1/delta)."""
  a_plus, a_minus, nu_of = bh_fit_case1(alpha, beta, delta)
  a1 = a_plus if root_branch > 0 else a_minus
  nu = nu_of(a1, gamma)
  c = a1 * math.sqrt(beta) * delta
  odd = is_odd_integer(delta)

  def profile(s):
    return real_power(1. + sign_branch * np.exp(-c * s), -1. / delta, odd)

  if sign_branch > 0:
    domain, singularities = WHOLE_LINE, ()
  else:
    domain, singularities = _minus_domain(np.sign(c), odd), (0.,)
  return ClosedFormSolution(
    'burgers-huxley', 1, bh_pair_case1(beta, gamma, delta, a1),
    bh_form(alpha, beta, gamma, delta, nu), profile, tau0=tau0, domain=domain,
    singularities=singularities, root=BRANCH_LABELS[root_branch],
    sign=BRANCH_LABELS[sign_branch], fitted={'a1': a1, 'nu': nu})


def bh_solution_case2(alpha, beta, gamma, delta, root_branch=1, sign_branch=1,
                      tau0=0.):
  """u = (gamma / (1 +- exp(e1 sqrt(beta) gamma delta (tau - tau0))))^(1/delta)."""
  if gamma == 0:
    raise InvalidParam('burgers-huxley case 2: gamma = 0 gives u = 0 only')
  roots, nu_of = bh_fit_case2(alpha, beta, gamma, delta)
  e1 = roots[0] if root_branch > 0 else roots[-1]
  nu = nu_of[e1]
  d = e1 * math.sqrt(beta) * gamma * delta
  odd = is_odd_integer(delta)

  def profile(s):
    return real_power(gamma / (1. + sign_branch * np.exp(d * s)),
                      1. / delta, odd)

  if sign_branch > 0:
    domain = WHOLE_LINE if gamma > 0 or odd else ()
    singularities = ()
  else:
    # 1 - exp(d s) takes the sign of gamma on the side -sign(d gamma)
    domain = _minus_domain(-np.sign(d) * np.sign(gamma), odd)
    singularities = (0.,)
  return ClosedFormSolution(
    'burgers-huxley', 2, bh_pair_case2(beta, gamma, delta, e1),
    bh_form(alpha, beta, gamma, delta, nu), profile, tau0=tau0, domain=domain,
    singularities=singularities, root=BRANCH_LABELS[root_branch],
    sign=BRANCH_LABELS[sign_branch], fitted={'e1': e1, 'nu': nu},
    notes=('general-delta e1 quadratic derived by composition',))


class BurgersHuxleyFamily(BaseFamily):
  name = 'burgers-huxley'
  title = 'generalized Burgers-Huxley equation, traveling-wave form'
  equation = ("u'' + (nu - alpha u^delta) u' "
              "+ beta u (1 - u^delta)(u^delta - gamma) = 0")
  params = ('alpha', 'beta', 'gamma', 'delta')
  constraints = ('beta > 0', 'delta > 0', 'gamma != 0 (case 2)')
  branches = {1: 'root plus|minus x sign plus|minus',
              2: 'root plus|minus x sign plus|minus'}

  def validate(self):
    _check(self.beta, self.delta)

  def target(self, case, branch=1):
    if case == 1:
      a_plus, a_minus, nu_of = bh_fit_case1(self.alpha, self.beta, self.delta)
      nu = nu_of(a_plus if branch > 0 else a_minus, self.gamma)
    else:
      roots, nu_of = bh_fit_case2(self.alpha, self.beta, self.gamma,
                                  self.delta)
      nu = nu_of[roots[0] if branch > 0 else roots[-1]]
    return bh_form(self.alpha, self.beta, self.gamma, self.delta, nu)

  def fit(self):
    records = []
    a_plus, a_minus, nu_of = bh_fit_case1(self.alpha, self.beta, self.delta)
    for label, a1 in (('plus', a_plus), ('minus', a_minus)):
      records.append({'case': 1, 'root': label, 'a1': a1,
                      'nu': nu_of(a1, self.gamma), 'derived': False})
    roots, nus = bh_fit_case2(self.alpha, self.beta, self.gamma, self.delta)
    for label, e1 in zip(('plus', 'minus'), roots):
      records.append({'case': 2, 'root': label, 'e1': e1, 'nu': nus[e1],
                      'derived': self.delta != 1.})
    return records

  def instances(self, tau0):
    p = (self.alpha, self.beta, self.gamma, self.delta)
    for case, build in ((1, bh_solution_case1), (2, bh_solution_case2)):
      for root in (1, -1):
        for sign in (1, -1):
          yield (case, BRANCH_LABELS[root], BRANCH_LABELS[sign],
                 lambda b=build, r=root, s=sign: b(*p, root_branch=r,
                                                   sign_branch=s, tau0=tau0))

  def roundtrip_errors(self, sol):
    nu = sol.fitted['nu']
    if sol.case == 1:
      a1 = sol.fitted['a1']
      return {
        'alpha': abs(bh_alpha_case1(self.beta, self.delta, a1) - self.alpha),
        'nu': abs(bh_nu_case1(self.beta, a1, self.gamma) - nu)}
    e1 = sol.fitted['e1']
    return {
      'alpha': abs(bh_alpha_case2(self.beta, self.delta, e1) - self.alpha),
      'nu': abs(bh_nu_case2(self.beta, e1, self.gamma) - nu)}
