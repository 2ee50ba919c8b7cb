"""
:Purpose:
    Sample plots read back from run directories: the norm history of a
    run on a log scale with the activation time marked, a space-time
    view of its snapshots, and decay rate against the swept value of a
    sweep.

:Dependencies:
    #. os
    #. numpy
    #. pandas
    #. matplotlib
"""
import os

import numpy as np
import pandas as pd
import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt


def read_norms(run_dir):
    return pd.read_csv(os.path.join(run_dir, 'norms.csv'))


def read_snapshots(run_dir):
    """(x, t, values) from snapshots.csv."""
    raw = np.loadtxt(os.path.join(run_dir, 'snapshots.csv'), delimiter=',',
                     dtype=str)
    x = raw[0, 1:].astype(float)
    t = raw[1:, 0].astype(float)
    return x, t, raw[1:, 1:].astype(float)


def plot_norms(run_dir, out_file=None):
    """
    Plot ||u||_L2 and ||u_x||_L2 against time.

    Arguments
        :run_dir (*str*): Directory holding norms.csv.

    Keyword Arguments
        :out_file (*str*): Image path; defaults to run_dir/norms.png.

    Returns
        :out_file (*str*): Path of the written image.
    """
    norms = read_norms(run_dir)
    if out_file is None:
        out_file = os.path.join(run_dir, 'norms.png')

    fig, ax = plt.subplots(figsize=(7, 4))
    for column, style in (('l2', 'k-'), ('h1_semi', 'b--')):
        series = norms[column].where(norms[column] > 0.0)
        ax.semilogy(norms['t'], series, style, lw=1, label=column)
    active = norms['control_active'].astype(bool)
    if active.any() and not active.all():
        ax.axvline(norms['t'][active.idxmax()], color='r', lw=0.8,
                   dashes=[6, 3], label='control on')
    ax.set_xlabel('t')
    ax.set_ylabel('norm')
    ax.legend(loc='best')
    fig.tight_layout()
    fig.savefig(out_file, dpi=150)
    plt.close(fig)
    return out_file


def plot_snapshots(run_dir, out_file=None):
    x, t, values = read_snapshots(run_dir)
    if out_file is None:
        out_file = os.path.join(run_dir, 'snapshots.png')

    fig, ax = plt.subplots(figsize=(6, 5))
    mesh = ax.pcolormesh(x, t, values, shading='auto', cmap='RdBu_r')
    fig.colorbar(mesh, ax=ax, label='u')
    ax.set_xlabel('x')
    ax.set_ylabel('t')
    fig.tight_layout()
    fig.savefig(out_file, dpi=150)
    plt.close(fig)
    return out_file


def plot_sweep(sweep_dir, out_file=None):
    """Decay rate against the swept value; failed runs are marked x."""
    table = pd.read_csv(os.path.join(sweep_dir, 'sweep.csv'))
    if out_file is None:
        out_file = os.path.join(sweep_dir, 'sweep.png')

    value = pd.to_numeric(table['value'], errors='coerce')
    ok = table['status'] != 'failed'
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(value[ok], table['decay_rate'][ok], 'ko-', lw=1)
    if (~ok).any():
        ax.plot(value[~ok], np.zeros((~ok).sum()), 'rx', label='failed')
        ax.legend(loc='best')
    ax.axhline(0.0, color='0.6', lw=0.8)
    ax.set_xlabel(str(table['key'].iloc[0]))
    ax.set_ylabel('fitted decay rate')
    fig.tight_layout()
    fig.savefig(out_file, dpi=150)
    plt.close(fig)
    return out_file


if __name__ == '__main__':
    ### BEGIN USER INPUT
    run_dirs = ['../../output/fig5', '../../output/fig9']
    ### END USER INPUT
    for run_dir in run_dirs:
        if os.path.isfile(os.path.join(run_dir, 'norms.csv')):
            print('Plot written to: ' + plot_norms(run_dir))
        if os.path.isfile(os.path.join(run_dir, 'snapshots.csv')):
            print('Plot written to: ' + plot_snapshots(run_dir))
