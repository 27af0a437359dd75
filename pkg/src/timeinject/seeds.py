"""Stable derivation of named child seeds from one master seed.

Hash-based so that streams are independent of call order and of how many
other streams exist, and stable across Python versions (unlike ``hash``).
"""

import hashlib


def derive_seed(base_seed, *labels):
    """Map (base_seed, labels...) to a 64-bit child seed deterministically."""
    material = ":".join([str(int(base_seed))] + [str(label) for label in labels])
    digest = hashlib.sha256(material.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")
