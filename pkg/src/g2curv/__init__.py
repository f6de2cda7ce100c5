"""Numerical laboratory for zero-curvature planes on the octonion
automorphism group and the rank-two quotient it fibers over.

Subpackage map:

- ``octonion``  -- arithmetic in the eight-dimensional normed algebra
- ``group``     -- the 7x7 automorphism group, its subgroups, sampling
- ``algebra``   -- the 14-dimensional derivation algebra and its splitting
- ``canonical`` -- two-angle canonical forms and orbit reduction
- ``metric``    -- deformed metrics, curvature certificates, minimization
- ``locus``     -- zero-plane classification and grid scans
- ``topology``  -- sphere/Grassmannian/flag maps between the quotients
- ``cli``       -- command-line entry points
"""

__version__ = "0.1.0"
