# graph store routes for the fastAPI app
