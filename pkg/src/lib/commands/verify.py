from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from progress.bar import Bar

from algebra.factorization import composition_gap
from errors import FactorizationError
from families.base_family import branch_tag
from logger import Logger
from numerics.residual import residual_scan
from numerics.rk4 import integrate_rk4
from utils.utils import AverageMeter, Timer
from utils.writers import format_float, to_json
from .base_command import BaseCommand

CHECKS = ['roundtrip', 'compose', 'residual', 'rk4']
RESIDUAL_WINDOW = 10.
RK4_OFFSET = 1.


class VerifyCommand(BaseCommand):
  """Round trip, composition, residual and RK4 checks for every branch."""

  def plan(self, sol):
    opt = self.opt
    steps = [('roundtrip', None), ('compose', None)]
    for w in sol.windows(RESIDUAL_WINDOW, 2. * opt.standoff):
      steps.append(('residual', w))
    for w in sol.windows(opt.rk4_span, RK4_OFFSET):
      steps.append(('rk4', w))
    return steps

  def check(self, kind, sol, window):
    opt = self.opt
    target = sol.target.perturbed(opt.perturb_g)
    if kind == 'roundtrip':
      errs = self.family.roundtrip_errors(sol)
      scale = max([1.] + [abs(v) for v in self.family.parameters().values()])
      return max(errs.values()), opt.fit_tol * scale, {'errors': errs}
    if kind == 'compose':
      return composition_gap(target, sol.pair), opt.fit_tol, {}
    if kind == 'residual':
      report = residual_scan(target.g, target.F, sol,
                             (window[0], window[1], opt.count),
                             tol=opt.tol, standoff=opt.standoff)
      return report.max_abs_relative, report.tolerance_used, {}
    start = window[0]
    traj = integrate_rk4(target.g, target.F, sol.evaluate(start),
                         sol.udot(start), window, opt.rk4_h)
    return traj.max_deviation(sol), opt.rk4_tol, {'steps': len(traj) - 1,
                                                   'h': traj.h}

  def run(self):
    opt, fam = self.opt, self.family
    logger = Logger(opt)
    report = {'family': fam.name, 'params': fam.parameters(),
              'perturb_g': opt.perturb_g,
              'tolerances': {'tol': opt.tol, 'fit_tol': opt.fit_tol,
                             'rk4_tol': opt.rk4_tol, 'rk4_h': opt.rk4_h,
                             'standoff': opt.standoff}}
    try:
      report['fit'] = fam.fit()
    except FactorizationError as err:
      report['fit'] = []
      report['fit_error'] = str(err)
    if fam.name == 'dvp':
      report['chandrasekar'] = report['fit'][0]['chandrasekar']

    branches, work = [], []
    for branch in fam.select(opt.tau0, opt.case, opt.roots, opt.signs):
      tag = branch_tag(fam.name, branch)
      if branch.solution is None:
        branches.append({'tag': tag, 'status': 'skipped',
                         'reason': branch.error, 'checks': []})
        continue
      entry = {'tag': tag, 'status': 'checked',
               'domain': [list(iv) for iv in branch.solution.domain],
               'notes': list(branch.solution.notes), 'checks': []}
      branches.append(entry)
      work.extend((entry, branch.solution, kind, w)
                  for kind, w in self.plan(branch.solution))

    meters = dict((k, AverageMeter()) for k in CHECKS)
    bar = Bar('verify/{}'.format(fam.name), max=max(1, len(work)))
    for step, (entry, sol, kind, window) in enumerate(work):
      with Timer(meters[kind]):
        try:
          metric, tol, extra = self.check(kind, sol, window)
          ok = bool(metric <= tol)
        except FactorizationError as err:
          metric, tol, extra, ok = float('inf'), None, {'error': str(err)}, False
      check = {'check': kind, 'metric': metric, 'tolerance': tol, 'pass': ok}
      if window is not None:
        check['window'] = list(window)
      check.update(extra)
      entry['checks'].append(check)

      line = '{} {} {}{} {}'.format(
        entry['tag'], kind, format_float(metric),
        '' if window is None else ' on [{:.6g}, {:.6g}]'.format(*window),
        'pass' if ok else 'FAIL')
      logger.write(line + '\n')
      logger.scalar_summary('{}/{}'.format(entry['tag'], kind), metric, step)
      if opt.debug > 0:
        self.status(line)
      Bar.suffix = '[{0}/{1}]|Tot: {total:} |ETA: {eta:} '.format(
        step + 1, len(work), total=bar.elapsed_td, eta=bar.eta_td)
      for k in CHECKS:
        if meters[k].count:
          Bar.suffix += '|{} {:.4f}s '.format(k, meters[k].avg)
      bar.next()
    bar.finish()

    checked = [b for b in branches if b['status'] == 'checked']
    passed = bool(checked) and all(c['pass'] for b in checked
                                   for c in b['checks'])
    report['branches'] = branches
    report['timing'] = dict((k, m.avg) for k, m in meters.items() if m.count)
    report['pass'] = passed
    logger.write('{} branches checked, {} skipped, pass = {}\n'.format(
      len(checked), len(branches) - len(checked), passed))
    logger.close()

    if opt.format == 'json':
      self.emit(to_json(report))
    else:
      self.emit(self.render(report))
    self.status('verify {}: {}'.format(fam.name, 'PASS' if passed else 'FAIL'))
    return 0 if passed else 1

  def render(self, report):
    lines = ['{}: {}'.format(report['family'], ' '.join(
      '{}={}'.format(k, format_float(v))
      for k, v in sorted(report['params'].items())))]
    if 'fit_error' in report:
      lines.append('  fit: {}'.format(report['fit_error']))
    if report.get('chandrasekar'):
      lines.append('  Chandrasekar case: E = beta, A = 3/beta^2')
    for b in report['branches']:
      if b['status'] == 'skipped':
        lines.append('  {}: skipped ({})'.format(b['tag'], b['reason']))
        continue
      ok = all(c['pass'] for c in b['checks'])
      lines.append('  {}: {}'.format(b['tag'], 'pass' if ok else 'FAIL'))
      for c in b['checks']:
        where = '' if 'window' not in c else \
          ' on [{:.6g}, {:.6g}]'.format(*c['window'])
        lines.append('    {:<9s} {:.3e}{} {}'.format(
          c['check'], c['metric'], where, 'pass' if c['pass'] else 'FAIL'))
    lines.append('pass: {}'.format(str(report['pass']).lower()))
    return '\n'.join(lines)
