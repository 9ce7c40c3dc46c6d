"""Seeded simulations: adversaries, protocol campaigns, FRS roundtrips and sweeps."""
