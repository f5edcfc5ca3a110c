# desk-scale experiment runner: configs, experiments, CSV provenance, plot scripts
