from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io

import numpy as np

from errors import DomainError
from families.base_family import branch_tag
from families.solution import format_domain
from numerics.residual import make_grid, residual_values
from utils.plotter import Plotter
from utils.writers import branch_path, to_json, write_csv
from .base_command import BaseCommand

DEFAULT_WINDOW = 10.
DEFAULT_COUNT = 401


class SolveCommand(BaseCommand):

  def feasible_solutions(self):
    opt = self.opt
    keep, reasons = [], []
    for branch in self.family.select(opt.tau0, opt.case, opt.roots, opt.signs):
      if branch.solution is None:
        reasons.append('{}: {}'.format(
          branch_tag(self.family.name, branch), branch.error))
        self.status('skipping {}'.format(reasons[-1]))
      else:
        keep.append(branch.solution)
    if not keep:
      raise DomainError('no selected branch has a real validity domain:\n  '
                        + '\n  '.join(reasons))
    return keep

  def grid_for(self, sol):
    if self.opt.grid_spec is not None:
      return make_grid(self.opt.grid_spec)
    windows = sol.windows(DEFAULT_WINDOW, 1.) or \
      sol.windows(DEFAULT_WINDOW, 2. * self.opt.standoff)
    if not windows:
      raise DomainError('{}: validity domain {} is too narrow for a default '
                        'grid, pass --grid'.format(sol.tag,
                                                   format_domain(sol.domain)))
    start, end = windows[0]
    return make_grid((start, end, DEFAULT_COUNT))

  def columns(self, sol, taus):
    target = sol.target.perturbed(self.opt.perturb_g)
    u = np.asarray(sol.evaluate(taus), dtype=np.float64)
    _, rel = residual_values(target.g, target.F, sol, taus)
    return u, sol.rhs(u), rel

  def curve(self, sol, taus):
    start, end = taus[0], taus[-1]
    if sol.interval_containing(start, end, self.opt.standoff) is None:
      raise DomainError(
        '{}: grid [{:.12g}, {:.12g}] is not inside one interval of the '
        'validity domain {} (standoff {:g}); re-grid'.format(
          sol.tag, start, end, format_domain(sol.domain), self.opt.standoff))
    return self.columns(sol, taus)

  def curves(self, sols):
    """(sol, taus, u, udot, residual) for every branch the grid fits.

    A single branch must fit; among several, the ones that do not are
    skipped.
    """
    if len(sols) == 1:
      taus = self.grid_for(sols[0])
      return [(sols[0], taus) + tuple(self.curve(sols[0], taus))]
    out, reasons = [], []
    for sol in sols:
      try:
        taus = self.grid_for(sol)
        out.append((sol, taus) + tuple(self.curve(sol, taus)))
      except DomainError as e:
        reasons.append(str(e))
        self.status('skipping {}'.format(reasons[-1]))
    if not out:
      raise DomainError('no selected branch can be drawn on this grid:\n  '
                        + '\n  '.join(reasons))
    return out

  def run(self):
    opt = self.opt
    sols = self.feasible_solutions()
    if opt.format == 'svg':
      return self.run_svg(sols)
    curves = self.curves(sols)
    if opt.format == 'json':
      out = []
      for sol, taus, u, udot, res in curves:
        entry = sol.describe()
        entry['rows'] = [{'tau': t, 'u': a, 'udot': b, 'residual': r}
                         for t, a, b, r in zip(taus, u, udot, res)]
        out.append(entry)
      self.emit(to_json({'family': self.family.name,
                         'params': self.family.parameters(),
                         'branches': out}))
      return 0

    blocks = []
    for sol, taus, u, udot, res in curves:
      buf = io.StringIO()
      write_csv(buf, ['tau', 'u', 'udot', 'residual'],
                zip(taus, u, udot, res))
      blocks.append((sol.tag, buf.getvalue()))
    if len(blocks) == 1:
      self.emit(blocks[0][1])
    elif opt.out:
      for tag, text in blocks:
        self.emit(text, branch_path(opt.out, tag))
    else:
      self.emit(''.join('# {}\n{}'.format(tag, text) for tag, text in blocks))
    return 0

  def run_svg(self, sols):
    plotter = Plotter(title='{} {}'.format(self.family.name,
                                           self.family.equation))
    for sol in sols:
      taus = self.grid_for(sol)
      inside = sol.in_domain(taus, self.opt.standoff)
      u = np.full(taus.shape, np.nan)
      if np.any(inside):
        u[inside] = sol.evaluate(taus[inside])
      plotter.add_curve(taus, u, label=sol.tag,
                        singularities=sol.singularities)
    if self.opt.out:
      plotter.save_svg(self.opt.out)
      self.status('wrote {}'.format(self.opt.out))
    else:
      buf = io.StringIO()
      plotter.save_svg(buf)
      self.emit(buf.getvalue())
    return 0
