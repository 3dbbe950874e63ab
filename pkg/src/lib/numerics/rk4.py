from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np
import numba

from errors import BlowUpError, DomainError, InvalidParam

BLOWUP_LIMIT = 1e12

_OK, _BLOWUP, _NAN = 0, 1, 2


@numba.jit(nopython=True, nogil=True)
def _poly(coeffs, exps, u):
  total = 0.
  for i in range(coeffs.shape[0]):
    if exps[i] == 0.:
      total += coeffs[i]
    else:
      total += coeffs[i] * u ** exps[i]
  return total


@numba.jit(nopython=True, nogil=True)
def _accel(gc, ge, fc, fe, u, v):
  return -_poly(gc, ge, u) * v - _poly(fc, fe, u)


@numba.jit(nopython=True, nogil=True)
def _rk4_loop(gc, ge, fc, fe, u0, v0, t0, h, n, limit, fractional):
  # out rows: tau, u, v
  out = np.zeros((n + 1, 3))
  out[0, 0] = t0
  out[0, 1] = u0
  out[0, 2] = v0
  u, v = u0, v0
  for i in range(n):
    k1u = v
    k1v = _accel(gc, ge, fc, fe, u, v)
    k2u = v + 0.5 * h * k1v
    k2v = _accel(gc, ge, fc, fe, u + 0.5 * h * k1u, v + 0.5 * h * k1v)
    k3u = v + 0.5 * h * k2v
    k3v = _accel(gc, ge, fc, fe, u + 0.5 * h * k2u, v + 0.5 * h * k2v)
    k4u = v + h * k3v
    k4v = _accel(gc, ge, fc, fe, u + h * k3u, v + h * k3v)
    u = u + h / 6. * (k1u + 2. * k2u + 2. * k3u + k4u)
    v = v + h / 6. * (k1v + 2. * k2v + 2. * k3v + k4v)
    if not (np.isfinite(u) and np.isfinite(v)):
      return out, (_NAN if fractional else _BLOWUP), i
    if abs(u) > limit or abs(v) > limit:
      return out, _BLOWUP, i
    out[i + 1, 0] = t0 + (i + 1) * h
    out[i + 1, 1] = u
    out[i + 1, 2] = v
  return out, _OK, n


def _arrays(p):
  terms = p.terms
  return (np.array([c for c, _ in terms], dtype=np.float64),
          np.array([e for _, e in terms], dtype=np.float64))


class Trajectory(object):
  """Uniformly sampled (tau, u, udot) from a fixed-step integration."""

  def __init__(self, taus, us, vs, h):
    self.taus = taus
    self.us = us
    self.vs = vs
    self.h = h

  @property
  def samples(self):
    return list(zip(self.taus.tolist(), self.us.tolist(), self.vs.tolist()))

  def __len__(self):
    return len(self.taus)

  def max_deviation(self, sol):
    return float(np.max(np.abs(self.us - sol.evaluate(self.taus))))


def integrate_rk4(g, F, u0, v0, tau_span, h):
  """Classical RK4 for u' = v, v' = -g(u) v - F(u) on tau_span.

  The step is shrunk to span / ceil(span / h) so the last sample lands on
  the end of the span.
  """
  t0, t1 = float(tau_span[0]), float(tau_span[1])
  if not h > 0:
    raise InvalidParam('rk4: step h = {} must be positive'.format(h))
  if not t1 > t0:
    raise InvalidParam('rk4: empty span [{}, {}]'.format(t0, t1))
  # raises DomainError for a fractional power of a negative start
  g.evaluate(u0)
  F.evaluate(u0)
  span = t1 - t0
  n = max(1, int(math.ceil(span / h - 1e-9)))
  step = span / n
  gc, ge = _arrays(g)
  fc, fe = _arrays(F)
  fractional = g.has_fractional_exponents() or F.has_fractional_exponents()
  out, status, steps = _rk4_loop(gc, ge, fc, fe, float(u0), float(v0), t0,
                                 step, n, BLOWUP_LIMIT, fractional)
  if status == _BLOWUP:
    raise BlowUpError('rk4: |u| or |udot| exceeded {:g} at tau = {:.12g}'
                      .format(BLOWUP_LIMIT, t0 + (steps + 1) * step))
  if status == _NAN:
    raise DomainError('rk4: fractional power of a negative u at tau = {:.12g}'
                      .format(t0 + (steps + 1) * step))
  return Trajectory(out[:, 0], out[:, 1], out[:, 2], step)
