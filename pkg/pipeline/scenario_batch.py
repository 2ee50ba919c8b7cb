import scenario_batch_args as args
import sys
sys.path.append('../')
import pde_nudging as pdn
from pde_nudging.plotting_scripts.norm_plots import plot_norms
from pde_nudging.tools import write_history_dict
sys.path.remove('../')
import logging
import traceback
import time

if args.verbose:
    logging.basicConfig(level=logging.INFO)

# Create new error file
err_file = sys.argv[0].split('.')[0] + time.strftime("_%Y%m%d-%H%M%S") + '.err'
fail_file = open(args.outpath + err_file, 'w')
history = write_history_dict({"scenarios": args.scenarios},
                             {"overrides": args.overrides}, __file__,
                             machine_info=True)
for key, value in history.items():
    fail_file.write(key + ": " + str(value) + "\n")

nscen = len(args.scenarios)
init_time = time.time()

for ind in range(nscen):

    print('\nn='+str(ind))
    name = args.scenarios[ind]

    try:
        st = time.time()

        print(name)
        config = pdn.scenarios.resolve_config(name, overrides=args.overrides)
        report = pdn.scenarios.run_scenario(config, args.outpath + name,
                snapshot_stride=args.snapshot_stride,
                overrides=args.overrides)
        print('Status: ' + report.summary['status'] + ', stabilized: '
                + str(report.summary['stabilized']))

        if args.make_plots and 'NORMS' in report.outfiles:
            plot_norms(args.outpath + name)

        et = time.time()
        run_time = str((et-st)/60.)
        print('Scenario processing time (min): ' + str(run_time))
    except KeyboardInterrupt:
        sys.exit()
    except:
        tb = traceback.format_exc()
        fail_file.write('-'*48+'\n')
        print(tb)
        fail_file.write('  '+name+'\n'+'-'*36+'\n\n'+ 'n='+
                         str(ind)+'\n'+ tb+'\n')


final_time = time.time()
total_batch_time = (final_time - init_time)/60.
print('Total processing time (min): ' + str(total_batch_time))
fail_file.close()
