#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Figures of the Laguerre cosine and sine.

Reads the table written by ``peocalc plot-trig -20 20 0.05 --out trig.csv``
and draws the parametric curve (lc, ls) and ls against x with its first
negative and positive zeros marked.
"""

# standard imports
import sys
from pathlib import Path

import numpy as np

# matplotlib
import matplotlib.pyplot as plt
import matplotlib as mpl
from matplotlib import gridspec

# peocalc
sys.path.append(str(Path(__file__).resolve().parents[1]))
import peocalc.arraymanip as am
import peocalc.filemanip as fm
from peocalc.cli import ls_zeros, trig_table

plt.ion()

# %% ============================= Data =======================================
filepath = Path('trig.csv')
if filepath.exists():
    table = fm.load_data(filepath)
else:
    table = trig_table(-20, 20, 0.05)
    fm.save_data(table, filepath)
x, lc, ls = table['x'], table['lc'], table['ls']

negative, positive = ls_zeros(table)
print(f'first negative zero of ls: {negative}')
print(f'first positive zero of ls: {positive}')

# region around the zeros
x_zoom, ls_zoom = am.extract(x, ls, (negative - 2, positive + 2))

# %% ============================ Figure ======================================
plt.close('all')
mpl.rcParams['mathtext.fontset'] = 'cm'
mpl.rcParams['svg.fonttype'] = 'none'

# size on paper in cm (full page width)
width = 17.7
height = 7
fig = plt.figure(figsize=(width/2.54, height/2.54))
gs = gridspec.GridSpec(1, 2, width_ratios=[1, 1.4], wspace=.35)
ax = [fig.add_subplot(gs[i]) for i in range(2)]

# %% ================================ Plot ====================================
ax[0].plot(lc, ls, color='black', linewidth=1)
i0 = am.index(x, 0)
ax[0].plot(lc[i0], ls[i0], marker='o', color='red', markersize=3)
ax[0].set_xlabel(r'$_l c(x)$')
ax[0].set_ylabel(r'$_l s(x)$')

ax[1].plot(x, ls, color='black', linewidth=1, label=r'$_l s(x)$')
ax[1].plot(x_zoom, ls_zoom, color='red', linewidth=1.5)
for zero in (negative, positive):
    if zero is not None:
        ax[1].axvline(zero, linestyle='dotted', linewidth=1, color='red')
ax[1].axhline(0, linestyle='-', linewidth=.5, color='gray')
ax[1].set_xlabel(r'$x$')
ax[1].set_ylim(np.percentile(ls, 1), np.percentile(ls, 99))
ax[1].legend(frameon=False)

for a in ax:
    a.tick_params(which='major', direction='in', top=True, right=True)

# %% =============================== Save =====================================
fig.subplots_adjust(left=0.1, bottom=0.18, right=0.98, top=0.96)
plt.savefig('laguerre_trig.svg', transparent=True)
plt.savefig('laguerre_trig.png', dpi=300)
