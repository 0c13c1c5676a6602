"""
A full experiment run
=====================

Drive the whole pipeline from a config string and look at the conjugacy
matrix. Pass a path as the first argument to write the CSV tables there.
"""

import sys

from braidforge.experiment import ExperimentConfig, run_experiment

config = """
n = 4
A = 1
B = 3
k_min = -3
k_max = 3
"""
cfg = ExperimentConfig.from_text(config)
report = run_experiment(cfg)

print(report.rows_csv())
print(report.matrix_csv())
print("checks:", report.checks)

same = report.pairs("conjugate")
print("conjugate off-diagonal pairs:", same)

if len(sys.argv) > 1:
    for p in report.write(sys.argv[1]):
        print("wrote", p)
