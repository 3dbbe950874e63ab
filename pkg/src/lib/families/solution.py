from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np

from algebra.factorization import first_order_rhs
from errors import DomainError, InvalidParam, NonMonotonicError

INF = float('inf')
WHOLE_LINE = ((-INF, INF),)


def is_odd_integer(x):
  r = round(x)
  return abs(x - r) <= 1e-12 and int(r) % 2 == 1


def real_power(x, q, odd_root=False):
  """x**q on the real line; negative x only when the root is an odd one."""
  x = np.asarray(x, dtype=np.float64)
  if odd_root:
    return np.sign(x) * np.power(np.abs(x), q)
  return np.power(x, q)


def side(sign):
  """Half line sigma > 0 (sign > 0) or sigma < 0 (sign < 0)."""
  return ((0., INF),) if sign > 0 else ((-INF, 0.),)


def shift(intervals, offset):
  return tuple((lo + offset, hi + offset) for lo, hi in intervals)


def format_domain(intervals):
  if not intervals:
    return 'empty'
  return ' U '.join('({:.12g}, {:.12g})'.format(lo, hi) for lo, hi in intervals)


class ClosedFormSolution(object):
  """Particular solution u(tau) of the compatible first order equation.

  ``profile`` maps sigma = tau - tau0 to u. The analytic derivatives come
  from du/dtau = phi1(u) u, so they only need u itself.
  """

  def __init__(self, family, case, pair, target, profile, tau0=0.,
               domain=WHOLE_LINE, singularities=(), root=None, sign=None,
               fitted=None, notes=()):
    self.family = family
    self.case = case
    self.pair = pair
    self.target = target
    self.profile = profile
    self.tau0 = float(tau0)
    self.domain = shift(domain, self.tau0)
    self.singularities = tuple(s + self.tau0 for s in singularities)
    self.root = root
    self.sign = sign
    self.fitted = dict(fitted or {})
    self.notes = tuple(notes)
    self.rhs = first_order_rhs(pair)
    self.rhs_prime = self.rhs.derivative()

  @property
  def tag(self):
    parts = [self.family, 'case{}'.format(self.case)]
    if self.root is not None:
      parts.append('root={}'.format(self.root))
    if self.sign is not None:
      parts.append('sign={}'.format(self.sign))
    return '/'.join(parts)

  def is_empty(self):
    return len(self.domain) == 0

  def in_domain(self, tau, standoff=0.):
    tau = np.asarray(tau, dtype=np.float64)
    inside = np.zeros(tau.shape, dtype=bool)
    for lo, hi in self.domain:
      inside |= (tau > lo + standoff) & (tau < hi - standoff)
    return inside

  def interval_containing(self, start, end, standoff=0.):
    for lo, hi in self.domain:
      if start > lo + standoff and end < hi - standoff:
        return (lo, hi)
    return None

  def evaluate(self, tau):
    tau = np.asarray(tau, dtype=np.float64)
    if not np.all(self.in_domain(tau)):
      raise DomainError('{}: tau outside the validity domain {}'.format(
        self.tag, format_domain(self.domain)))
    with np.errstate(over='ignore', divide='ignore', invalid='ignore'):
      u = np.asarray(self.profile(tau - self.tau0), dtype=np.float64)
    if not np.all(np.isfinite(u)):
      raise DomainError('{}: non-finite value inside {}'.format(
        self.tag, format_domain(self.domain)))
    return float(u) if u.ndim == 0 else u

  __call__ = evaluate

  def udot(self, tau):
    return self.rhs(self.evaluate(tau))

  def uddot(self, tau):
    u = self.evaluate(tau)
    return self.rhs_prime(u) * self.rhs(u)

  def windows(self, length, offset=0.):
    """One verification window [a, b] inside each domain interval."""
    out = []
    for lo, hi in self.domain:
      if np.isinf(lo) and np.isinf(hi):
        out.append((self.tau0 - 0.5 * length, self.tau0 + 0.5 * length))
      elif np.isinf(hi):
        out.append((lo + offset, lo + offset + length))
      elif np.isinf(lo):
        out.append((hi - offset - length, hi - offset))
      elif hi - lo > 2 * offset:
        out.append((lo + offset, min(hi - offset, lo + offset + length)))
    return out

  def describe(self):
    return {
      'tag': self.tag,
      'family': self.family,
      'case': self.case,
      'root': self.root,
      'sign': self.sign,
      'tau0': self.tau0,
      'fitted': self.fitted,
      'singularities': list(self.singularities),
      'domain': [[lo, hi] for lo, hi in self.domain],
      'first_order': 'du/dtau = {}'.format(self.rhs),
      'equation': str(self.target),
      'notes': list(self.notes),
    }


class ImplicitRelation(object):
  """a1 (tau - tau0) = ln(u^3/F3)^(1/2A) - ln((2Cu+B-D)/(2Cu+B+D))^(B/(2AD)).

  tau_of(u) is the right-hand side divided by a1, so tau = tau0 + tau_of(u).
  It is the antiderivative of 1 / (a1 F3(u)) on the bracket.
  """

  def __init__(self, A, B, C, a1, tau0=0., seed=1.):
    if A == 0:
      raise InvalidParam('A = 0: exponents 1/(2A) are undefined')
    if C == 0:
      raise InvalidParam('C = 0: the logarithm ratio is constant')
    if a1 == 0:
      raise InvalidParam('a1 must be nonzero')
    d2 = B * B - 4. * A * C
    if d2 <= 0:
      raise InvalidParam('Delta^2 = B^2 - 4AC = {} must be positive'.format(d2))
    self.A, self.B, self.C = float(A), float(B), float(C)
    self.a1 = float(a1)
    self.delta = math.sqrt(d2)
    self.tau0 = float(tau0)
    self.seed = float(seed)
    self.bracket = self._detect_bracket(self.seed)
    self.check_monotonic()

  def F3(self, u):
    return u * (self.A + u * (self.B + self.C * u))

  def log_arguments(self, u):
    u = np.asarray(u, dtype=np.float64)
    lin = 2. * self.C * u + self.B
    return u ** 3 / self.F3(u), (lin - self.delta) / (lin + self.delta)

  def tau_of(self, u):
    first, ratio = self.log_arguments(u)
    rhs = np.log(first) / (2. * self.A) \
      - self.B / (2. * self.A * self.delta) * np.log(ratio)
    rhs = rhs / self.a1
    return float(rhs) if np.ndim(rhs) == 0 else rhs

  def dtau_du(self, u):
    return 1. / (self.a1 * self.F3(u))

  def interior_point(self):
    return self.seed

  def _detect_bracket(self, seed):
    # both log arguments change sign only at u = 0 and the roots of F3/u
    breaks = [0., (-self.B - self.delta) / (2. * self.C),
              (-self.B + self.delta) / (2. * self.C)]
    if any(abs(seed - b) <= 1e-12 * max(1., abs(b)) for b in breaks):
      raise DomainError('seed u0 = {} sits on a branch point'.format(seed))
    first, ratio = self.log_arguments(seed)
    if not (first > 0 and ratio > 0):
      raise DomainError(
        'log arguments are not both positive around u0 = {} '
        '(u^3/F3 = {:.6g}, ratio = {:.6g})'.format(seed, first, ratio))
    lo = max([b for b in breaks if b < seed] or [-INF])
    hi = min([b for b in breaks if b > seed] or [INF])
    return (lo, hi)

  def sample_points(self, count=1000):
    # geometric clustering toward the ends, endpoints excluded
    lo, hi = self.bracket
    if np.isinf(hi):
      return lo + (self.seed - lo) * np.logspace(-12., 6., count)
    if np.isinf(lo):
      return hi - (hi - self.seed) * np.logspace(-12., 6., count)
    t = np.linspace(-27., 27., count)
    return lo + (hi - lo) / (1. + np.exp(-t))

  def check_monotonic(self, count=1000):
    with np.errstate(all='ignore'):
      slope = self.dtau_du(self.sample_points(count))
    if not np.all(np.isfinite(slope)) or \
       not (np.all(slope > 0) or np.all(slope < 0)):
      raise NonMonotonicError(
        'tau_of is not monotonic on u in {}'.format(self.bracket))

  def limit(self, end, toward_hi):
    """tau_of at a bracket end: a finite end is a zero of F3, where the
    integral of 1/(a1 F3) diverges; at infinity both logs settle."""
    if np.isinf(end):
      return -math.log(self.C) / (2. * self.A * self.a1)
    direction = np.sign(self.dtau_du(self.seed))
    return direction * INF if toward_hi else -direction * INF

  def image(self):
    lo, hi = self.bracket
    ends = sorted((self.limit(lo, False), self.limit(hi, True)))
    return (self.tau0 + ends[0], self.tau0 + ends[1])
