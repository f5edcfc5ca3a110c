# the core lifespan and dependencies for app
