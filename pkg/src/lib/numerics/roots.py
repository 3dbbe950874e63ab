from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np

from errors import InvalidParam, NonMonotonicError, OutOfRangeError

DOUBLE_ROOT_TOL = 1e-12


def solve_quadratic(a, b, c):
  """Real roots of a x^2 + b x + c, largest first.

  The larger-magnitude root comes from -(b + sign(b) sqrt(disc)) / 2a and
  the other from c / (a r1), so neither suffers cancellation. A discriminant
  within 1e-12 (relative) of zero is a double root and is returned once.
  """
  if a == 0:
    raise InvalidParam('leading coefficient of the quadratic is zero')
  disc = b * b - 4. * a * c
  if abs(disc) <= DOUBLE_ROOT_TOL * max(b * b, abs(4. * a * c)):
    return (-b / (2. * a),)
  if disc < 0:
    return ()
  q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
  return tuple(sorted((q / a, c / q), reverse=True))


def _probes(start, end, limit=1e15):
  if np.isfinite(end):
    # stops by itself once the probe reaches the end or tau_of overflows
    for k in range(1, 1100):
      yield end + (start - end) * 2. ** -k
  else:
    step = max(1., abs(start))
    for k in range(0, 64):
      x = start + math.copysign(step * 2. ** k, end)
      if abs(x) > limit:
        return
      yield x


def _rtsafe(f, df, x1, x2, tol, max_iter=200):
  # Newton steps kept inside a shrinking bracket, bisection otherwise
  f1 = f(x1)
  lo, hi = (x1, x2) if f1 < 0 else (x2, x1)
  x = 0.5 * (x1 + x2)
  dxold = dx = abs(x2 - x1)
  fx, dfx = f(x), df(x)
  for _ in range(max_iter):
    if fx == 0:
      return x
    if ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx) > 0 \
       or abs(2. * fx) > abs(dxold * dfx):
      dxold, dx = dx, 0.5 * (hi - lo)
      x = lo + dx
    else:
      dxold, dx = dx, fx / dfx
      x = x - dx
    fx, dfx = f(x), df(x)
    if abs(fx) <= tol and abs(dx) <= 1e-14 * max(1., abs(x)):
      return x
    if fx < 0:
      lo = x
    else:
      hi = x
  if abs(fx) <= tol:
    return x
  raise NonMonotonicError(
    'inversion did not converge: residual {:.3e} at u = {!r}'.format(fx, x))


def invert_implicit(rel, tau, tol=1e-10):
  """u with rel.tau0 + rel.tau_of(u) = tau inside the relation's bracket."""
  target = tau - rel.tau0

  def f(u):
    return rel.tau_of(u) - target

  start = rel.interior_point()
  direction = np.sign(rel.dtau_du(start))
  f_start = f(start)
  if f_start == 0:
    return start
  lo, hi = rel.bracket
  larger = (f_start < 0) == (direction > 0)
  prev = start
  with np.errstate(all='ignore'):
    for probe in _probes(start, hi if larger else lo):
      f_probe = f(probe)
      if not np.isfinite(f_probe):
        break
      if f_probe == 0:
        return probe
      if (f_probe > 0) != (f_start > 0):
        return _rtsafe(f, rel.dtau_du, prev, probe, tol)
      prev = probe
  raise OutOfRangeError(
    'tau = {!r} is outside the image {} of the relation on u in {}'.format(
      tau, rel.image(), rel.bracket))
