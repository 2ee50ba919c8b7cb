"""
:Purpose:
    Functions relating to writing the per-run output files: the norm
    series, strided snapshots, stability verdicts and the run summary.

:Dependencies:
    #. os
    #. numpy
"""
import os
import logging

import numpy as np

logger = logging.getLogger(__name__)

NORMS_HEADER = "t,l2,h1_semi,max_abs,mean,control_active"


def write_norms_series(diagnostics, out_file):
    """
    This writes the norm series with columns: time, L2 norm, H1
    seminorm, max norm, spatial mean, control flag (0/1).

    Arguments
        :diagnostics (*RunDiagnostics*): Recorded series.
        :out_file (*str*): Output file name, including path.
    """
    format_str = ('%.17g,' * 5 + '%d' + '%s')
    with open(out_file, 'w') as f:
        f.write(NORMS_HEADER + '\n')
        for n in range(len(diagnostics)):
            f.write(format_str % (
                diagnostics.t[n],
                diagnostics.l2[n],
                diagnostics.h1_semi[n],
                diagnostics.max_abs[n],
                diagnostics.mean[n],
                int(diagnostics.control_active[n]),
                '\n'))

    logger.info('\tNorms written to: %s', out_file)
    return out_file


def write_snapshot_series(traj, out_file):
    """
    This writes the stored fields: the first row is 'x' followed by the
    grid, each further row is a time followed by the field values.

    Arguments
        :traj (*Trajectory*): Run whose snapshots are written.
        :out_file (*str*): Output file name, including path.
    """
    with open(out_file, 'w') as f:
        f.write('x,' + ','.join('%.17g' % x for x in traj.grid.x) + '\n')
        for t, row in zip(traj.times, traj.snapshots):
            f.write('%.17g,' % t + ','.join('%.17g' % v for v in row)
                    + '\n')

    logger.info('\tSnapshots written to: %s', out_file)
    return out_file


def write_verdicts(verdicts, out_file):
    """
    Arguments
        :verdicts (*list*): ConditionVerdict instances.
        :out_file (*str*): Output file name, including path.
    """
    with open(out_file, 'w') as f:
        if not verdicts:
            f.write('No stability condition applies to this run.\n')
        for verdict in verdicts:
            f.write(verdict.report() + '\n\n')

    logger.info('\tVerdicts written to: %s', out_file)
    return out_file


def _format_value(value):
    if isinstance(value, (float, np.floating)):
        return '%.10g' % value
    return str(value)


def write_summary(summary, out_file):
    """
    Arguments
        :summary (*dict*): Flat key/value results of the run. A nested
            'history' dict from write_history_dict is written as its own
            block at the end.
        :out_file (*str*): Output file name, including path.
    """
    history = summary.get('history')
    npad = max([len(key) for key in summary] + [1]) + 1
    with open(out_file, 'w') as f:
        for key, value in summary.items():
            if key == 'history':
                continue
            f.write(key.ljust(npad) + '= ' + _format_value(value) + '\n')
        if history:
            f.write('\nProcessing history\n')
            hpad = max(len(key) for key in history) + 1
            for key, value in history.items():
                f.write('    ' + key.ljust(hpad) + '= ' + str(value) + '\n')

    logger.info('\tSummary written to: %s', out_file)
    return out_file


func_typ = {'NORMS': (write_norms_series, 'norms.csv'),
            'SNAPSHOTS': (write_snapshot_series, 'snapshots.csv'),
            'VERDICTS': (write_verdicts, 'verdicts.txt'),
            'SUMMARY': (write_summary, 'summary.txt')}


def write_output_files(records, outdir):
    """
    Write every record to its file in outdir.

    Arguments
        :records (*dict*): Maps 'NORMS', 'SNAPSHOTS', 'VERDICTS' or
                           'SUMMARY' to the object that file is written
                           from. Missing or None entries are skipped.
        :outdir (*str*): Run directory, created if needed.

    Returns
        :outfiles (*dict*): File type to written path.
    """
    os.makedirs(outdir, exist_ok=True)
    outfiles = {}
    for filtyp, obj in records.items():
        if obj is None:
            continue
        if filtyp not in func_typ:
            raise TypeError('invalid record type for write_output_files: '
                            + str(filtyp))
        writer, name = func_typ[filtyp]
        outfiles[filtyp] = writer(obj, os.path.join(outdir, name))
    return outfiles
