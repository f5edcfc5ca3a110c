# seeded random and deterministic graph constructions
