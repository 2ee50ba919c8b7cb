"""
Purpose: Provide all inputs to batch run, to be imported by scenario_batch.py
"""

### Batch inputs
scenarios = ['fig1', 'fig2', 'fig3', 'fig4', 'fig5', 'fig6', 'fig7',
             'fig8', 'fig9', 'fig9_nodal', 'fig10', 'twin',
             'energy_check']        # Presets to run, in order
outpath = '../output/'              # Parent of the per-scenario directories

### Global inputs
verbose = False                     # Log processing steps to terminal
snapshot_stride = None              # Steps between stored fields
                                    #       (None keeps each preset's value)
overrides = []                      # key=value strings applied to every run

### Plots
make_plots = True                   # Write norms.png next to each norms.csv
