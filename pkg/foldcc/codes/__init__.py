"""Folded Reed-Solomon codec, subspace pruning and pruning success bounds."""
