# s-t path search through the query oracle: full BFS, bidirectional BFS, BFS + random walks
