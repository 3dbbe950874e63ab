from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from families.family_factory import family_factory
from utils.writers import to_json
from .base_command import BaseCommand


class ListCommand(BaseCommand):
  needs_family = False

  def run(self):
    entries = [cls.describe() for cls in family_factory.values()]
    if self.opt.format == 'json':
      self.emit(to_json({'families': entries}))
      return 0
    lines = []
    for e in entries:
      lines.append('{}: {}'.format(e['family'], e['title']))
      lines.append('  equation: {}'.format(e['equation']))
      lines.append('  params: {}'.format(' '.join(e['params'])))
      if e['free_params']:
        lines.append('  free params: {}'.format(' '.join(e['free_params'])))
      for c in e['constraints']:
        lines.append('  {}: requires {}'.format(e['family'], c))
      lines.append('  cases: {}'.format(e['cases']))
      for case, desc in sorted(e['branches'].items()):
        lines.append('    case {}: {}'.format(case, desc))
    self.emit('\n'.join(lines))
    return 0
