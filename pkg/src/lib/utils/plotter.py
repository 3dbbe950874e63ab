from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np

color_list = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd',
              '#ff7f0e', '#8c564b', '#e377c2', '#17becf']


class Plotter(object):
  """u(tau) curves rendered to SVG; NaN samples leave gaps in the line."""

  def __init__(self, theme='white', title=''):
    plt.rcParams['svg.hashsalt'] = 'lienard-factorization'
    plt.rcParams['svg.fonttype'] = 'none'
    self.fig, self.ax = plt.subplots(figsize=(8, 5))
    self.theme = theme
    if self.theme == 'black':
      self.fig.patch.set_facecolor('black')
      self.ax.set_facecolor('black')
    self.ax.set_xlabel('tau')
    self.ax.set_ylabel('u')
    if title:
      self.ax.set_title(title)
    self.num_curves = 0

  def add_curve(self, taus, us, label='', singularities=()):
    color = color_list[self.num_curves % len(color_list)]
    self.ax.plot(taus, us, color=color, linewidth=1.2, label=label)
    lo, hi = np.min(taus), np.max(taus)
    for s in singularities:
      if lo <= s <= hi:
        self.ax.axvline(s, color=color, linestyle=':', linewidth=0.8)
    self.num_curves += 1

  def save_svg(self, target):
    if self.num_curves > 1:
      self.ax.legend(loc='best', fontsize='small')
    self.ax.grid(True, linewidth=0.3)
    self.fig.savefig(target, format='svg', metadata={'Date': None})
    plt.close(self.fig)
