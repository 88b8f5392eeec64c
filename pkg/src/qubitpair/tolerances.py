"""Central tolerance table.

Every numerical gate in the library reads from here so that the
tolerance policy can be audited (and tightened) in one place.
"""

# Matrix-level gates
HERMITICITY = 1e-10
UNITARITY = 1e-10
EIG_RESIDUAL = 1e-10
TRACE = 1e-10

# Density matrices may sit exactly on the PSD boundary (rank-deficient
# model states), so the floor is looser than the Hermiticity gate.
PSD_FLOOR = -1e-9

# Triplet-support test (singlet population / coherence leakage).
SYMMETRY = 1e-10

# Exchange constraints checked at the Bloch level (r = s, T = T^T, tr T = 1).
SYMMETRIC_CONSTRAINTS = 1e-8

# Off-pattern leakage allowed when reading off the special four-parameter form.
XFORM_PATTERN = 1e-10

# Sign criteria are strict inequalities; values inside the band count as zero.
SIGN_ZERO_BAND = 1e-10

# Local-unitary invariance gate: relative with an absolute floor.
INVARIANCE_REL = 1e-9
INVARIANCE_ABS = 1e-12

# Crossover for the relative-vs-absolute comparison rule used in checks:
# compare relatively when the reference magnitude exceeds this, absolutely
# otherwise.
REL_SWITCH = 1e-6


def matches(value: float, reference: float, tol: float) -> bool:
    """Compare `value` to `reference` relatively above REL_SWITCH, absolutely below."""
    scale = max(abs(value), abs(reference))
    if scale > REL_SWITCH:
        return abs(value - reference) <= tol * scale
    return abs(value - reference) <= tol
