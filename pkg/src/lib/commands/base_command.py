from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import sys

from families.family_factory import family_factory
from utils.writers import open_output


class BaseCommand(object):
  needs_family = True

  def __init__(self, opt):
    self.opt = opt
    self.family = None
    if self.needs_family:
      self.family = family_factory[opt.family].from_opt(opt)

  def status(self, txt):
    # stdout carries data only
    print(txt, file=sys.stderr)

  def emit(self, text, path=None):
    path = self.opt.out if path is None else path
    with open_output(path) as f:
      f.write(text)
      if text and not text.endswith('\n'):
        f.write('\n')
    if path:
      self.status('wrote {}'.format(path))

  def run(self):
    """Returns the process exit code."""
    raise NotImplementedError
