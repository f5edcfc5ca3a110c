# graph storage, metered query access and graph file formats
