# executable query lower-bound games: traces, strategies, graph models
