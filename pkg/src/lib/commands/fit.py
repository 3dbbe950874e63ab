from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from utils.writers import format_float, to_json
from .base_command import BaseCommand


def _value(v):
  if isinstance(v, float):
    return format_float(v)
  return str(v)


class FitCommand(BaseCommand):

  def run(self):
    fam = self.family
    records = fam.fit()
    if self.opt.format == 'json':
      self.emit(to_json({'family': fam.name, 'params': fam.parameters(),
                         'records': records}))
      return 0
    lines = ['{}: {}'.format(fam.name, fam.equation),
             '  params: {}'.format(' '.join(
               '{}={}'.format(k, _value(v))
               for k, v in sorted(fam.parameters().items())))]
    for rec in records:
      head = 'case {}'.format(rec['case'])
      if rec.get('root'):
        head += ' root={}'.format(rec['root'])
      fields = ', '.join('{}={}'.format(k, _value(v))
                         for k, v in sorted(rec.items())
                         if k not in ('case', 'root', 'derived'))
      origin = 'derived by composition' if rec['derived'] else 'printed'
      lines.append('  {}: {} [{}]'.format(head, fields, origin))
    self.emit('\n'.join(lines))
    return 0
