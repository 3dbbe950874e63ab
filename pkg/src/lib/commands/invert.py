from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io

from errors import OutOfRangeError
from families.lienard import lienard_implicit_case2
from families.solution import format_domain
from numerics.residual import make_grid
from numerics.roots import invert_implicit
from utils.writers import to_json, write_csv
from .base_command import BaseCommand


class InvertCommand(BaseCommand):

  def rows(self, rel, taus):
    out = []
    for tau in taus:
      try:
        u = invert_implicit(rel, tau)
      except OutOfRangeError:
        out.append((tau, float('nan'), float('nan'), 'out_of_range'))
        continue
      out.append((tau, u, abs(rel.tau0 + rel.tau_of(u) - tau), 'ok'))
    return out

  def run(self):
    opt, fam = self.opt, self.family
    rel = lienard_implicit_case2(fam.A, fam.B, fam.C, fam.a1, opt.tau0,
                                 fam.seed_u)
    image = rel.image()
    self.status('bracket u in {}, image tau in {}'.format(
      format_domain([rel.bracket]), format_domain([image])))
    taus = opt.tau_list or list(make_grid(opt.grid_spec))
    rows = self.rows(rel, [float(t) for t in taus])
    refused = sum(1 for r in rows if r[3] != 'ok')
    if refused:
      self.status('{} of {} taus lie outside the image'.format(
        refused, len(rows)))
    if opt.format == 'json':
      self.emit(to_json({
        'params': fam.parameters(), 'tau0': rel.tau0, 'seed_u': rel.seed,
        'bracket': list(rel.bracket), 'image': list(image),
        'rows': [dict(zip(('tau', 'u', 'roundtrip', 'status'), r))
                 for r in rows]}))
      return 0
    buf = io.StringIO()
    write_csv(buf, ['tau', 'u', 'roundtrip', 'status'], rows)
    self.emit(buf.getvalue())
    return 0
