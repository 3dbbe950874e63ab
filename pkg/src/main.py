from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import _init_paths

import sys
import traceback

from opts import opts
from errors import exit_code
from commands.command_factory import command_factory


def main(argv=None):
  try:
    opt = opts().init('' if argv is None else argv)
  except SystemExit as err:
    # argparse reports usage errors with exit status 2
    return err.code if isinstance(err.code, int) else 2

  try:
    command = command_factory[opt.command](opt)
    return command.run()
  except Exception as err:
    code = exit_code(err)
    if code == 1 or opt.debug > 0:
      traceback.print_exc(file=sys.stderr)
    print('error: {}'.format(err), file=sys.stderr)
    return code


if __name__ == '__main__':
  sys.exit(main())
