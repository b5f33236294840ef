"""
Number-theoretic cores: prime and factor sieves, the Kempner function,
zeta constants and trial-division oracles.

Submodules are imported explicitly by their users.
"""
