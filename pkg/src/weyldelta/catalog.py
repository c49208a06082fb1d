"""Built-in weight lists for the sl(4) scan and the test profiles."""

# The 26 bracket weights of the full A3 scan, in the canonical row order.
SL4_SCAN_WEIGHTS = (
    "[6,4,2,0]",
    "[5,3,1,0]",
    "[4,2,0,0]",
    "[5,3,2,0]",
    "[4,2,1,0]",
    "[3,1,0,0]",
    "[4,2,2,0]",
    "[3,1,1,0]",
    "[2,0,0,0]",
    "[5,4,2,0]",
    "[4,3,1,0]",
    "[3,2,0,0]",
    "[4,3,2,0]",
    "[3,2,1,0]",
    "[2,1,0,0]",
    "[3,2,2,0]",
    "[2,1,1,0]",
    "[1,0,0,0]",
    "[4,4,2,0]",
    "[3,3,1,0]",
    "[2,2,0,0]",
    "[3,3,2,0]",
    "[2,2,1,0]",
    "[1,1,0,0]",
    "[2,2,2,0]",
    "[1,1,1,0]",
)

# Reduced scan for continuous-integration runs: 5 cheap, structurally varied weights.
CI_PROFILE_WEIGHTS = (
    "[1,0,0,0]",
    "[1,1,0,0]",
    "[2,1,0,0]",
    "[1,1,1,0]",
    "[2,0,0,0]",
)

# Weights used by the invariance property suite.
INVARIANCE_TEST_WEIGHTS = (
    "[2,1,0,0]",
    "[1,1,0,0]",
    "[3,1,1,0]",
)
