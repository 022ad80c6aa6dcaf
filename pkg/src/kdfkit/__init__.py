"""NIST/IEEE MACs (HMAC, CMAC, KMAC), the KDFs built on them, and a timing
harness for comparing their cost.

The construction functions live in submodules named after them (import from
``kdfkit.hmac``, ``kdfkit.cmac``, ``kdfkit.kmac``, ``kdfkit.kdf``); the
top-level namespace is deliberately left empty so those submodule names stay
unambiguous.
"""

__version__ = "0.1.0"
