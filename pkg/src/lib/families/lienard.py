from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np

from algebra.genpoly import GeneralizedPolynomial as Poly
from algebra.factorization import FactorPair, LienardForm
from errors import DiscriminantError, InvalidParam
from numerics.roots import invert_implicit
from .base_family import BaseFamily, BRANCH_LABELS
from .solution import ClosedFormSolution, ImplicitRelation, INF, WHOLE_LINE

DEFAULT_SEED = 1.


def lienard_discriminant(A, B, C):
  d2 = B * B - 4. * A * C
  if not d2 > 0:
    raise DiscriminantError(
      'lienard: Delta^2 = B^2 - 4AC = {:.6g} must be positive'.format(d2))
  return math.sqrt(d2)


def lienard_F3(A, B, C):
  return Poly([(A, 1.), (B, 2.), (C, 3.)])


def _check(C, a1):
  if C == 0:
    raise InvalidParam('lienard: C must be nonzero')
  if a1 == 0:
    raise InvalidParam('lienard: a1 must be nonzero')


def lienard_pair_case1(A, B, C, a1, branch=1):
  delta = lienard_discriminant(A, B, C)
  _check(C, a1)
  k = 0.5 * (B + branch * delta)
  inner = Poly([(a1 * k, 0.), (a1 * C, 1.)])
  outer = Poly([((B - branch * delta) / (2. * C * a1), 0.), (1. / a1, 1.)])
  return FactorPair(inner, outer)


def lienard_g1(A, B, C, a1, branch=1):
  delta = lienard_discriminant(A, B, C)
  k = 0.5 * (B + branch * delta)
  return Poly([(-(k * a1 + (B - branch * delta) / (2. * C * a1)), 0.),
               (-(2. * C * a1 + 1. / a1), 1.)])


def lienard_pair_case2(A, B, C, a1):
  if a1 == 0:
    raise InvalidParam('lienard: a1 must be nonzero')
  return FactorPair(Poly([(a1 * A, 0.), (a1 * B, 1.), (a1 * C, 2.)]),
                    Poly.constant(1. / a1))


def lienard_g2(A, B, C, a1):
  return Poly([(-(a1 * A + 1. / a1), 0.), (-2. * a1 * B, 1.),
               (-3. * a1 * C, 2.)])


def lienard_solution_case1(A, B, C, a1, tau0=0., branch=1):
  """u = k / (exp(-a1 k (tau - tau0)) - C) with k = (B + Delta)/2.

  The minus branch takes k = (B - Delta)/2, the other factorization of
  F3/u into linear terms.
  """
  pair = lienard_pair_case1(A, B, C, a1, branch)
  delta = lienard_discriminant(A, B, C)
  k = 0.5 * (B + branch * delta)
  if k == 0:
    raise InvalidParam('lienard case 1: (B {} Delta)/2 vanishes'.format(
      '+' if branch > 0 else '-'))
  rate = a1 * k

  def profile(s):
    return k / (np.exp(-rate * s) - C)

  if C > 0:
    pole = -math.log(C) / rate
    domain = ((-INF, pole), (pole, INF))
    singularities = (pole,)
  else:
    domain, singularities = WHOLE_LINE, ()
  return ClosedFormSolution(
    'lienard', 1, pair, LienardForm(lienard_g1(A, B, C, a1, branch),
                                    lienard_F3(A, B, C)),
    profile, tau0=tau0, domain=domain, singularities=singularities,
    root=BRANCH_LABELS[branch], fitted={'a1': a1, 'k': k},
    notes=('g is induced by the factorization (a1 is free)',))


def lienard_implicit_case2(A, B, C, a1, tau0=0., seed=DEFAULT_SEED):
  return ImplicitRelation(A, B, C, a1, tau0, seed)


def lienard_solution_case2(A, B, C, a1, tau0=0., seed=DEFAULT_SEED):
  """Inverse of the implicit relation, evaluated by root finding."""
  rel = lienard_implicit_case2(A, B, C, a1, tau0, seed)
  invert = np.vectorize(lambda s: invert_implicit(rel, s + rel.tau0),
                        otypes=[np.float64])
  lo, hi = rel.image()
  sol = ClosedFormSolution(
    'lienard', 2, lienard_pair_case2(A, B, C, a1),
    LienardForm(lienard_g2(A, B, C, a1), lienard_F3(A, B, C)),
    invert, tau0=tau0, domain=((lo - rel.tau0, hi - rel.tau0),),
    fitted={'a1': a1, 'seed_u': seed},
    notes=('implicit: u in {} inverted numerically'.format(rel.bracket),))
  sol.relation = rel
  return sol


class LienardFamily(BaseFamily):
  name = 'lienard'
  title = 'generalized Lienard equation with cubic force'
  equation = "u'' + g(u) u' + A u + B u^2 + C u^3 = 0"
  params = ('A', 'B', 'C')
  free_params = ('a1',)
  constraints = ('B^2 - 4AC > 0', 'C != 0', 'a1 != 0 (free, g is induced)',
                 'A != 0 (case 2)')
  branches = {1: 'root plus|minus', 2: 'implicit, seed_u picks the bracket'}

  def __init__(self, seed_u=None, **kwargs):
    self.seed_u = DEFAULT_SEED if seed_u is None else float(seed_u)
    super(LienardFamily, self).__init__(**kwargs)

  @classmethod
  def optional_params(cls):
    return ('seed_u',)

  def validate(self):
    lienard_discriminant(self.A, self.B, self.C)
    _check(self.C, self.a1)

  def target(self, case, branch=1):
    F3 = lienard_F3(self.A, self.B, self.C)
    if case == 1:
      return LienardForm(lienard_g1(self.A, self.B, self.C, self.a1, branch), F3)
    return LienardForm(lienard_g2(self.A, self.B, self.C, self.a1), F3)

  def fit(self):
    delta = lienard_discriminant(self.A, self.B, self.C)
    records = []
    for branch in (1, -1):
      records.append({
        'case': 1, 'root': BRANCH_LABELS[branch], 'a1': self.a1,
        'Delta': delta, 'k': 0.5 * (self.B + branch * delta),
        'g': str(self.target(1, branch).g), 'derived': branch < 0})
    records.append({
      'case': 2, 'root': None, 'a1': self.a1, 'Delta': delta,
      'g': str(self.target(2).g), 'derived': False})
    return records

  def instances(self, tau0):
    p = (self.A, self.B, self.C, self.a1)
    for branch in (1, -1):
      yield (1, BRANCH_LABELS[branch], None,
             lambda b=branch: lienard_solution_case1(*p, tau0=tau0, branch=b))
    yield (2, None, None,
           lambda: lienard_solution_case2(*p, tau0=tau0, seed=self.seed_u))

  def roundtrip_errors(self, sol):
    # g is induced here, so the round trip is the F3 split
    if sol.case == 1:
      k = sol.fitted['k']
      s = 1. if sol.root == 'plus' else -1.
      other = 0.5 * (self.B - s * lienard_discriminant(self.A, self.B, self.C))
      return {'k+k\'': abs(k + other - self.B),
              'k*k\'': abs(k * other - self.A * self.C)}
    rel = sol.relation
    u = rel.seed
    tau = rel.tau0 + rel.tau_of(u)
    return {'u(tau(u0))': abs(invert_implicit(rel, tau) - u)}
