from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np

from algebra.genpoly import GeneralizedPolynomial as Poly, U
from algebra.factorization import FactorPair, LienardForm
from errors import ComplexRootsError, InvalidParam
from numerics.roots import DOUBLE_ROOT_TOL, solve_quadratic
from .base_family import BaseFamily, BRANCH_LABELS
from .solution import ClosedFormSolution, side, INF


def _check_beta(beta):
  if not beta > 0:
    raise InvalidParam('emden: beta = {} must be positive'.format(beta))


def emden_form(alpha, beta):
  return LienardForm(alpha * U, Poly.monomial(beta, 3.))


def emden_alpha(a1, beta):
  return -math.sqrt(beta) * (2. * a1 * a1 + 1.) / a1


def emden_fit(alpha, beta):
  """a1 roots of 2 sqrt(beta) a1^2 + alpha a1 + sqrt(beta) = 0, larger first.

  A single value is returned at alpha^2 = 8 beta.
  """
  _check_beta(beta)
  sb = math.sqrt(beta)
  roots = solve_quadratic(2. * sb, alpha, sb)
  if not roots:
    raise ComplexRootsError(
      'no real factorization (alpha^2 < 8 beta): alpha^2 = {:.6g}, '
      '8 beta = {:.6g}'.format(alpha * alpha, 8. * beta))
  return roots


def emden_pair_case1(beta, a1):
  sb = math.sqrt(beta)
  return FactorPair(a1 * sb * U, (sb / a1) * U)


def emden_pair_case2(beta, a1):
  sb = math.sqrt(beta)
  return FactorPair(Poly.monomial(a1 * sb, 2.), Poly.constant(sb / a1))


def emden_induced_dvp(beta, a1):
  """Duffing-van der Pol parameters solved by the case-2 factorization."""
  sb = math.sqrt(beta)
  return {'G': -sb / a1, 'E': -3. * a1 * sb, 'A': 0.}


def emden_case2_form(beta, a1):
  p = emden_induced_dvp(beta, a1)
  g = Poly([(p['G'], 0.), (p['E'], 2.)])
  return LienardForm(g, Poly.monomial(beta, 3.))


def _pick_root(roots, branch):
  if len(roots) == 1 or branch > 0:
    return roots[0]
  return roots[1]


def emden_solution_case1(alpha, beta, branch=1, tau0=0.):
  roots = emden_fit(alpha, beta)
  a1 = _pick_root(roots, branch)
  c = a1 * math.sqrt(beta)

  def profile(s):
    return -1. / (c * s)

  return ClosedFormSolution(
    'emden', 1, emden_pair_case1(beta, a1), emden_form(alpha, beta), profile,
    tau0=tau0, domain=((-INF, 0.), (0., INF)), singularities=(0.,),
    root=BRANCH_LABELS[branch], fitted={'a1': a1})


def emden_second_form(alpha, beta, branch=1, tau0=0.):
  """u = 4 / ((alpha -+ sqrt(alpha^2 - 8 beta)) (tau - tau0)).

  The plus root a1 corresponds to the minus sign inside the bracket.
  """
  disc = max(alpha * alpha - 8. * beta, 0.)
  denom = alpha - branch * math.sqrt(disc)

  def u(tau):
    return 4. / (denom * (np.asarray(tau, dtype=np.float64) - tau0))
  return u


def emden_solution_case2(beta, a1, tau0=0., sign=1):
  _check_beta(beta)
  if a1 == 0:
    raise InvalidParam('emden case 2: a1 must be nonzero')
  c = -2. * a1 * math.sqrt(beta)

  def profile(s):
    return sign * np.power(c * s, -0.5)

  induced = emden_induced_dvp(beta, a1)
  return ClosedFormSolution(
    'emden', 2, emden_pair_case2(beta, a1), emden_case2_form(beta, a1),
    profile, tau0=tau0, domain=side(np.sign(c)), singularities=(0.,),
    sign=BRANCH_LABELS[sign], fitted={'a1': a1},
    notes=('solves the Duffing-van der Pol case G = {:.12g}, E = {:.12g}, '
           'A = 0 (GE = 3 beta)'.format(induced['G'], induced['E']),))


class EmdenFamily(BaseFamily):
  name = 'emden'
  title = 'modified Emden equation with cubic nonlinearity'
  equation = "u'' + alpha u u' + beta u^3 = 0"
  params = ('alpha', 'beta')
  free_params = ('a1',)
  constraints = ('beta > 0', 'alpha^2 >= 8*beta (case 1)',
                 'a1 != 0 (case 2, free)')
  branches = {1: 'root plus|minus', 2: 'sign plus|minus'}

  def validate(self):
    _check_beta(self.beta)

  def target(self, case, branch=1):
    if case == 1:
      return emden_form(self.alpha, self.beta)
    return emden_case2_form(self.beta, self.a1)

  def fit(self):
    records = []
    roots = emden_fit(self.alpha, self.beta)
    for branch, a1 in zip((1, -1), roots):
      records.append({
        'case': 1, 'root': BRANCH_LABELS[branch], 'a1': a1,
        'alpha_check': emden_alpha(a1, self.beta), 'derived': False})
    induced = emden_induced_dvp(self.beta, self.a1)
    records.append({
      'case': 2, 'root': None, 'a1': self.a1, 'G': induced['G'],
      'E': induced['E'], 'A': induced['A'], 'derived': False})
    return records

  def instances(self, tau0):
    for branch in (1, -1):
      yield (1, BRANCH_LABELS[branch], None,
             lambda b=branch: emden_solution_case1(
               self.alpha, self.beta, b, tau0))
    for sign in (1, -1):
      yield (2, None, BRANCH_LABELS[sign],
             lambda s=sign: emden_solution_case2(self.beta, self.a1, tau0, s))

  def enumerate(self, tau0=0.):
    out = super(EmdenFamily, self).enumerate(tau0)
    # a double root gives one case-1 solution, not two
    disc = self.alpha * self.alpha - 8. * self.beta
    if disc <= DOUBLE_ROOT_TOL * max(self.alpha * self.alpha, 8. * self.beta):
      out = [b for b in out if not (b.case == 1 and b.root == 'minus')]
    return out

  def roundtrip_errors(self, sol):
    a1 = sol.fitted['a1']
    if sol.case == 1:
      return {'alpha': abs(emden_alpha(a1, self.beta) - self.alpha)}
    induced = emden_induced_dvp(self.beta, a1)
    return {'GE-3beta': abs(induced['G'] * induced['E'] - 3. * self.beta)}
