"""
Berger Sphere Eta Invariants - exact computation package

Package layout:
- core: Settings, dependencies, exceptions
- algebra: Exact rationals, truncated power series, Bernoulli polynomials
- services: Eta coefficient routes, reference tables, verification
- workers: Per-n fan-out
- cli: Command line front end
"""

__version__ = "1.0.0"
