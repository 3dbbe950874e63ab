from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np

from algebra.factorization import LienardForm
from errors import DomainError, InvalidParam
from families.solution import format_domain

DEFAULT_TOL = 1e-9
DEFAULT_STANDOFF = 1e-3


def make_grid(grid_spec):
  """(start, end, count) to a linspace; an explicit sequence passes through."""
  if isinstance(grid_spec, tuple) and len(grid_spec) == 3:
    start, end, count = grid_spec
    if int(count) < 2:
      raise InvalidParam('grid count {} must be at least 2'.format(count))
    return np.linspace(float(start), float(end), int(count))
  return np.asarray(grid_spec, dtype=np.float64)


def residual_values(g, F, sol, taus):
  """Absolute and relative residual of u'' + g(u) u' + F(u) along sol.

  u' and u'' come from the compatible first order equation, no finite
  differences are taken.
  """
  form = LienardForm(g, F)
  u = np.asarray(sol.evaluate(taus), dtype=np.float64)
  rhs = sol.rhs(u)
  r = form.residual(u, rhs, sol.rhs_prime(u) * rhs)
  return r, np.abs(r) / (1. + np.abs(F(u)))


class ResidualReport(object):

  def __init__(self, grid, residuals, tolerance_used):
    self.grid = np.asarray(grid, dtype=np.float64)
    self.residuals = np.asarray(residuals, dtype=np.float64)
    self.max_abs_relative = float(np.max(self.residuals)) \
      if self.residuals.size else 0.
    self.tolerance_used = float(tolerance_used)
    self.passed = self.max_abs_relative <= self.tolerance_used

  def to_dict(self):
    return {
      'points': int(self.grid.size),
      'start': float(self.grid[0]) if self.grid.size else None,
      'end': float(self.grid[-1]) if self.grid.size else None,
      'max_abs_relative': self.max_abs_relative,
      'tolerance_used': self.tolerance_used,
      'pass': bool(self.passed),
    }


def residual_scan(g, F, sol, grid_spec, tol=DEFAULT_TOL,
                  standoff=DEFAULT_STANDOFF):
  if not tol > 0:
    raise InvalidParam('residual tolerance must be positive')
  taus = make_grid(grid_spec)
  inside = sol.in_domain(taus, standoff)
  if not np.all(inside):
    bad = taus[~inside][0]
    raise DomainError(
      '{}: grid point tau = {:.12g} is within {:g} of a singularity or '
      'outside the validity domain {}'.format(
        sol.tag, bad, standoff, format_domain(sol.domain)))
  _, rel = residual_values(g, F, sol, taus)
  return ResidualReport(taus, rel, tol)
