"""Deterministic random streams.

Every random decision in a session draws from a sub-stream derived from the
session seed and a purpose label, so adding a new consumer never shifts the
values another consumer sees.
"""

import hashlib
import random


def substream(seed: int, purpose: str, *qualifiers: object) -> random.Random:
    """Return a PRNG keyed by (seed, purpose, qualifiers).

    The key is hashed with SHA-256 so the derivation is stable across
    processes and platforms (unlike the salted builtin ``hash``).
    """
    key = ":".join([str(seed), purpose, *[str(q) for q in qualifiers]])
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))
