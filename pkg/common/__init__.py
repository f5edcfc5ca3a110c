# shared types and utils
