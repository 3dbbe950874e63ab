from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from .listing import ListCommand
from .fit import FitCommand
from .solve import SolveCommand
from .verify import VerifyCommand
from .invert import InvertCommand

command_factory = {
  'list': ListCommand,
  'fit': FitCommand,
  'solve': SolveCommand,
  'verify': VerifyCommand,
  'invert': InvertCommand,
}
