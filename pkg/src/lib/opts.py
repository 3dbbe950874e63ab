from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import os

COMMANDS = ['list', 'fit', 'solve', 'verify', 'invert']
FAMILIES = ['emden', 'lienard', 'dvp', 'fisher', 'burgers-huxley']
FORMATS = ['text', 'csv', 'json', 'svg']
FAMILY_PARAMS = ['alpha', 'beta', 'gamma', 'delta', 'mu',
                 'A', 'B', 'C', 'E', 'G', 'a1']


class opts(object):
  def __init__(self):
    self.parser = argparse.ArgumentParser(
      prog='main.py', allow_abbrev=False,
      description='operator factorization of u\'\' + g(u) u\' + F(u) = 0: '
                  'fit, solve and verify particular solutions.')
    # basic experiment setting
    self.parser.add_argument('command', choices=COMMANDS,
                             help='list | fit | solve | verify | invert')
    self.parser.add_argument('family', nargs='?', default='',
                             help='emden | lienard | dvp | fisher | '
                                  'burgers-huxley')
    self.parser.add_argument('--exp_id', '--exp-id', dest='exp_id',
                             default='default')
    self.parser.add_argument('--exp_dir', '--exp-dir', dest='exp_dir',
                             default='',
                             help='root of the run logs, default <repo>/exp')
    self.parser.add_argument('--debug', type=int, default=0,
                             help='level of reporting.'
                                  '0: status lines only'
                                  '1: one stderr line per check')

    # family parameters
    for name in FAMILY_PARAMS:
      self.parser.add_argument('--{}'.format(name), type=float, default=None)
    self.parser.add_argument('--seed_u', '--seed-u', dest='seed_u',
                             type=float, default=None,
                             help='lienard case 2: u0 inside the bracket '
                                  'of the implicit relation.')

    # branch selection
    self.parser.add_argument('--case', type=int, default=0, choices=[0, 1, 2],
                             help='0 for every case of the family.')
    self.parser.add_argument('--root', default='', choices=['', 'plus', 'minus'],
                             help='root of the fitting quadratic.')
    self.parser.add_argument('--sign', default='', choices=['', 'plus', 'minus'],
                             help='sign printed in the solution.')
    self.parser.add_argument('--tau0', type=float, default=0.,
                             help='integration constant.')

    # grid and output
    self.parser.add_argument('--grid', default='',
                             help='start:end:count, e.g. --grid=-10:10:401. '
                                  'default: a window of length 10 inside '
                                  'the validity domain.')
    self.parser.add_argument('--taus', default='',
                             help='comma separated tau list for invert.')
    self.parser.add_argument('--format', default='', choices=[''] + FORMATS,
                             help='text | csv | json | svg. default: from the '
                                  'extension of --out, else per command.')
    self.parser.add_argument('--json', action='store_true',
                             help='same as --format json.')
    self.parser.add_argument('--out', default='',
                             help='output path, stdout when empty.')

    # tolerances
    self.parser.add_argument('--tol', type=float, default=1e-9,
                             help='relative residual tolerance.')
    self.parser.add_argument('--fit_tol', '--fit-tol', dest='fit_tol',
                             type=float, default=1e-12,
                             help='identification and composition tolerance.')
    self.parser.add_argument('--rk4_tol', '--rk4-tol', dest='rk4_tol',
                             type=float, default=1e-6,
                             help='max |u_rk4 - u| along the check window.')
    self.parser.add_argument('--rk4_h', '--rk4-h', dest='rk4_h',
                             type=float, default=1e-3)
    self.parser.add_argument('--rk4_span', '--rk4-span', dest='rk4_span',
                             type=float, default=5.)
    self.parser.add_argument('--standoff', type=float, default=1e-3,
                             help='distance kept from poles and domain ends.')
    self.parser.add_argument('--count', type=int, default=200,
                             help='residual grid points per window.')
    self.parser.add_argument('--perturb_g', '--perturb-g', dest='perturb_g',
                             type=float, default=0.,
                             help='constant added to the target g before '
                                  'checking, to exercise the checks.')

  def parse(self, args=''):
    if args == '':
      opt = self.parser.parse_args()
    else:
      opt = self.parser.parse_args(args)

    if opt.command != 'list':
      if not opt.family:
        self.parser.error('{} needs a family: {}'.format(
          opt.command, ' | '.join(FAMILIES)))
      if opt.family not in FAMILIES:
        self.parser.error('unknown family {!r}, choose from {}'.format(
          opt.family, ' | '.join(FAMILIES)))
    if opt.command == 'invert' and opt.family != 'lienard':
      self.parser.error('invert only applies to the lienard family')

    for name in ['tol', 'fit_tol', 'rk4_tol', 'rk4_h', 'rk4_span', 'standoff']:
      if not getattr(opt, name) > 0:
        self.parser.error('--{} must be positive'.format(name))
    if opt.count < 2:
      self.parser.error('--count must be at least 2')

    opt.grid_spec = None
    if opt.grid:
      try:
        start, end, count = opt.grid.split(':')
        opt.grid_spec = (float(start), float(end), int(count))
      except ValueError:
        self.parser.error('--grid expects start:end:count, got {!r}'.format(
          opt.grid))
      if opt.grid_spec[2] < 2:
        self.parser.error('grid count must be at least 2')
      if not opt.grid_spec[1] > opt.grid_spec[0]:
        self.parser.error('grid end must exceed grid start')

    opt.tau_list = []
    if opt.taus:
      try:
        opt.tau_list = [float(t) for t in opt.taus.split(',')]
      except ValueError:
        self.parser.error('--taus expects a comma separated list of numbers')
    if opt.command == 'invert' and not opt.tau_list and opt.grid_spec is None:
      self.parser.error('invert needs --taus or --grid')

    if opt.json:
      opt.format = 'json'
    if not opt.format and opt.out:
      ext = os.path.splitext(opt.out)[1].lstrip('.').lower()
      opt.format = ext if ext in FORMATS else ''
    if not opt.format:
      opt.format = 'csv' if opt.command in ['solve', 'invert'] else 'text'
    if opt.format == 'svg' and opt.command != 'solve':
      self.parser.error('svg output is only available for solve')

    opt.roots = [opt.root] if opt.root else None
    opt.signs = [opt.sign] if opt.sign else None

    opt.root_dir = os.path.join(os.path.dirname(__file__), '..', '..')
    if not opt.exp_dir:
      opt.exp_dir = os.path.join(opt.root_dir, 'exp')
    opt.save_dir = os.path.join(opt.exp_dir, opt.command, opt.exp_id)
    return opt

  def fill_family_defaults(self, opt, info):
    for k, v in info.items():
      if getattr(opt, k, None) is None:
        setattr(opt, k, v)
    return opt

  def init(self, args=''):
    default_family_info = {
      'emden': {'alpha': 3., 'beta': 1., 'a1': -1.},
      'lienard': {'A': 2., 'B': 3., 'C': 1., 'a1': -1.},
      'dvp': {'E': 3., 'A': 1. / 3.},
      'fisher': {'mu': 2.},
      'burgers-huxley': {'alpha': 1., 'beta': 1., 'gamma': 0.3, 'delta': 1.},
    }
    opt = self.parse(args)
    if opt.family:
      opt = self.fill_family_defaults(opt, default_family_info[opt.family])
    return opt
