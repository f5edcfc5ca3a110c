# long desk-scale acceptance runs, kept out of the unit suite
