"""Exact construction of the Tits group inside compact E6.

The package builds the five 27x27 unitary generator matrices over Q(zeta20),
replays the mod-41 basis-finding pipeline, enumerates the 2304- and
1755-point actions, certifies the group order with a stabilizer chain, and
generates and verifies the 45-term invariant cubic form.
"""

__version__ = "0.1.0"
